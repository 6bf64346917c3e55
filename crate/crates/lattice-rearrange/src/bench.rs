//! Seeded simulation experiments with tabulated means and spreads.
//!
//! Every trial draws its instance from `derive_seed(seed, [size, trial, ..])`
//! and trials run in parallel, but samples are aggregated in trial order so a
//! report depends only on its spec.

use std::fmt;
use std::fs;
use std::io;
use std::path::Path;
use std::str::FromStr;

use lattice_rearrange_core::gen::{
    derive_seed, gen_block_random, gen_column_random, gen_typed, gen_uniform_permutation, gen_x_random,
};
use lattice_rearrange_core::graphs::permutation_cycles;
use lattice_rearrange_core::lattice2d::{
    cycle_distance_statistic, cycle_edge_length, greedy_2d, plan_ptr, sweep_cycles_ltr, switch_cycles_ltr, GoalPattern,
};
use lattice_rearrange_core::lor::{opt_plan_lor, sweep_cycles_lor};
use lattice_rearrange_core::por::{greedy_por, opt_plan_por, PorOptions};
use lattice_rearrange_core::{
    simulate, CostModel, GenError, Instance, LabeledInstance, LatticeDims, Metric, Plan, PlanCost, SolveError,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formats::FORMAT_VERSION;

pub const DEFAULT_TRIALS: usize = 100;

/// Type counts swept by `por_ratios`.
pub const POR_TYPE_COUNTS: [u32; 5] = [2, 4, 6, 8, 10];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Experiment {
    /// Optimal LOR travel divided by `m²`.
    LorRatio,
    /// LOR sweep travel over optimal travel.
    LorGreedyVsOpt,
    /// The cycle distance statistic on an `m × m` lattice.
    LtrCycleDist,
    /// LTR planner travel over the summed cycle edge length on `m × m`.
    LtrTotalVsCycles,
    /// Greedy over optimal POR travel and picks for several type counts.
    PorRatios,
    /// Greedy over MST-merged PTR travel and picks on a `k × k` lattice with
    /// `k` types, goal patterns A and B.
    PtrRatios,
    /// LOR pick, cycle, and travel counts with their expected values.
    CycleStats,
}

impl Experiment {
    pub const ALL: [Self; 7] = [
        Self::LorRatio,
        Self::LorGreedyVsOpt,
        Self::LtrCycleDist,
        Self::LtrTotalVsCycles,
        Self::PorRatios,
        Self::PtrRatios,
        Self::CycleStats,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::LorRatio => "lor_ratio",
            Self::LorGreedyVsOpt => "lor_greedy_vs_opt",
            Self::LtrCycleDist => "ltr_cycle_dist",
            Self::LtrTotalVsCycles => "ltr_total_vs_cycles",
            Self::PorRatios => "por_ratios",
            Self::PtrRatios => "ptr_ratios",
            Self::CycleStats => "cycle_stats",
        }
    }

    fn is_two_dimensional(self) -> bool {
        matches!(self, Self::LtrCycleDist | Self::LtrTotalVsCycles)
    }

    fn accepts(self, distribution: Distribution) -> bool {
        use Distribution::*;
        match self {
            Self::LorRatio | Self::LorGreedyVsOpt | Self::CycleStats => {
                matches!(distribution, Uniform | XRandom(_) | SqrtRandom)
            }
            Self::LtrCycleDist | Self::LtrTotalVsCycles => {
                matches!(distribution, Uniform | ColumnRandom | BlockRandom)
            }
            Self::PorRatios | Self::PtrRatios => distribution == Uniform,
        }
    }
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Experiment {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| BenchError::InvalidSpec(format!("unknown experiment `{s}`")))
    }
}

/// How labels are scrambled for labeled experiments. Typed experiments use
/// [`Distribution::Uniform`] starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Distribution {
    #[default]
    Uniform,
    /// Shuffled within consecutive blocks of `x` cells.
    XRandom(u32),
    /// Shuffled within consecutive blocks of `⌊√m⌋` cells.
    SqrtRandom,
    ColumnRandom,
    BlockRandom,
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Uniform => f.write_str("uniform"),
            Self::XRandom(x) => write!(f, "x-random:{x}"),
            Self::SqrtRandom => f.write_str("sqrt-random"),
            Self::ColumnRandom => f.write_str("column-random"),
            Self::BlockRandom => f.write_str("block-random"),
        }
    }
}

impl FromStr for Distribution {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || BenchError::InvalidSpec(format!("unknown distribution `{s}`"));
        Ok(match s {
            "uniform" => Self::Uniform,
            "sqrt-random" => Self::SqrtRandom,
            "column-random" => Self::ColumnRandom,
            "block-random" => Self::BlockRandom,
            _ => {
                let x = s.strip_prefix("x-random:").ok_or_else(bad)?;
                Self::XRandom(x.parse().ok().filter(|&x| x > 0).ok_or_else(bad)?)
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentSpec {
    pub experiment: Experiment,
    pub sizes: Vec<u32>,
    pub trials: usize,
    pub distribution: Distribution,
    pub seed: u64,
}

impl ExperimentSpec {
    pub fn new(experiment: Experiment, sizes: Vec<u32>, seed: u64) -> Self {
        Self {
            experiment,
            sizes,
            trials: DEFAULT_TRIALS,
            distribution: Distribution::Uniform,
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        let invalid = |msg: String| Err(BenchError::InvalidSpec(msg));
        if self.trials == 0 {
            return invalid("trials must be at least 1".into());
        }
        if self.sizes.is_empty() || self.sizes.contains(&0) {
            return invalid("sizes must be a nonempty list of positive integers".into());
        }
        if !self.experiment.accepts(self.distribution) {
            return invalid(format!(
                "{} does not support the {} distribution",
                self.experiment, self.distribution
            ));
        }
        for &m in &self.sizes {
            let cells = if self.experiment.is_two_dimensional() || self.experiment == Experiment::PtrRatios {
                u64::from(m) * u64::from(m)
            } else {
                u64::from(m)
            };
            if cells > u64::from(u32::MAX) {
                return invalid(format!("size {m} is too large"));
            }
            if self.distribution == Distribution::BlockRandom && isqrt(m).pow(2) != m {
                return invalid(format!("block-random needs perfect-square sizes, got {m}"));
            }
            if self.experiment == Experiment::PorRatios && m < 3 {
                return invalid("por_ratios needs sizes of at least 3".into());
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid experiment: {0}")]
    InvalidSpec(String),
    #[error("cannot parse report: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Error)]
enum TrialError {
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("planner produced an invalid plan: {0}")]
    Plan(String),
}

/// Samples of one statistic, in trial order.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub statistic: String,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SizeSamples {
    pub size: u32,
    pub series: Vec<Series>,
    /// Indices of trials whose generator or planner failed.
    pub failed_trials: Vec<usize>,
}

impl SizeSamples {
    pub fn get(&self, statistic: &str) -> Option<&[f64]> {
        self.series
            .iter()
            .find(|s| s.statistic == statistic)
            .map(|s| s.values.as_slice())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub size: u32,
    pub statistic: String,
    pub mean: f64,
    pub std: f64,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub format_version: u32,
    pub experiment: String,
    pub distribution: String,
    pub rows: Vec<ReportRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            _ => Err(BenchError::InvalidSpec(format!("unknown report format `{s}`"))),
        }
    }
}

pub fn harmonic(m: u32) -> f64 {
    (1..=m).map(|i| 1.0 / f64::from(i)).sum()
}

fn isqrt(m: u32) -> u32 {
    let mut r = f64::from(m).sqrt() as u32;
    while r * r > m {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= m {
        r += 1;
    }
    r
}

fn ratio(num: f64, den: f64) -> f64 {
    if den <= 0.0 {
        1.0
    } else {
        num / den
    }
}

fn cost(instance: &Instance, plan: &Plan) -> Result<PlanCost, TrialError> {
    let exec = simulate(instance, plan, &CostModel::default()).map_err(|e| TrialError::Plan(e.to_string()))?;
    if !instance.is_solved(&exec.configuration) {
        return Err(TrialError::Plan("plan leaves the instance unsolved".into()));
    }
    Ok(exec.cost)
}

fn labeled_1d(distribution: Distribution, m: u32, seed: u64) -> Result<LabeledInstance, GenError> {
    match distribution {
        Distribution::XRandom(x) => gen_x_random(m, x, seed),
        Distribution::SqrtRandom => gen_x_random(m, isqrt(m).max(1), seed),
        _ => gen_uniform_permutation(m, seed),
    }
}

fn labeled_2d(distribution: Distribution, m: u32, seed: u64) -> Result<LabeledInstance, GenError> {
    match distribution {
        Distribution::ColumnRandom => gen_column_random(m, m, seed),
        Distribution::BlockRandom => gen_block_random(m, seed),
        _ => {
            let line = gen_uniform_permutation(m * m, seed)?;
            Ok(LabeledInstance::new(LatticeDims::new(m, m)?, line.pi().to_vec())?)
        }
    }
}

type Sample = Vec<(String, f64)>;

fn run_trial(spec: &ExperimentSpec, m: u32, seed: u64) -> Result<Sample, TrialError> {
    let metric = Metric::Euclidean;
    let mut out: Sample = Vec::new();
    let mut put = |name: &str, value: f64| out.push((name.to_owned(), value));
    match spec.experiment {
        Experiment::LorRatio => {
            let li = labeled_1d(spec.distribution, m, seed)?;
            let opt = cost(&li.clone().into(), &opt_plan_lor(&li)?)?;
            put("opt_travel_over_m2", opt.travel / f64::from(m).powi(2));
        }
        Experiment::LorGreedyVsOpt => {
            let li = labeled_1d(spec.distribution, m, seed)?;
            let inst = Instance::from(li.clone());
            let opt = cost(&inst, &opt_plan_lor(&li)?)?;
            let sweep = cost(&inst, &sweep_cycles_lor(&li)?)?;
            put("sweep_over_opt_travel", ratio(sweep.travel, opt.travel));
        }
        Experiment::CycleStats => {
            let li = labeled_1d(spec.distribution, m, seed)?;
            let cycles = permutation_cycles(li.pi()).expect("generated permutations are valid");
            let opt = cost(&li.clone().into(), &opt_plan_lor(&li)?)?;
            put("picks", opt.picks as f64);
            put("cycles", (cycles.cycles.len() + cycles.fixed_points.len()) as f64);
            put("travel", opt.travel);
        }
        Experiment::LtrCycleDist => {
            let li = labeled_2d(spec.distribution, m, seed)?;
            put("cycle_distance", cycle_distance_statistic(&li));
        }
        Experiment::LtrTotalVsCycles => {
            let li = labeled_2d(spec.distribution, m, seed)?;
            let inst = Instance::from(li.clone());
            let edges = cycle_edge_length(&li, metric);
            let sweep = cost(&inst, &sweep_cycles_ltr(&li))?;
            let switch = cost(&inst, &switch_cycles_ltr(&li, metric))?;
            put("sweep_over_cycle_travel", ratio(sweep.travel, edges));
            put("switch_over_cycle_travel", ratio(switch.travel, edges));
        }
        Experiment::PorRatios => {
            let dims = LatticeDims::line(m).map_err(GenError::from)?;
            for k in POR_TYPE_COUNTS.into_iter().filter(|&k| k < m) {
                let s = derive_seed(seed, &[u64::from(k)]);
                let ti = gen_typed(dims, k, None, &GoalPattern::Aggregated, s)?.instance;
                let inst = Instance::from(ti.clone());
                let opt = cost(&inst, &opt_plan_por(&ti, &CostModel::default(), PorOptions::default())?)?;
                let greedy = cost(&inst, &greedy_por(&ti, metric)?)?;
                put(&format!("k{k}_travel_ratio"), ratio(greedy.travel, opt.travel));
                put(
                    &format!("k{k}_picks_ratio"),
                    ratio(greedy.picks as f64, opt.picks as f64),
                );
            }
        }
        Experiment::PtrRatios => {
            let dims = LatticeDims::new(m, m).map_err(GenError::from)?;
            for (tag, pattern) in [("a", GoalPattern::PatternA), ("b", GoalPattern::PatternB)] {
                let s = derive_seed(seed, &[u64::from(tag.as_bytes()[0])]);
                let ti = gen_typed(dims, m, None, &pattern, s)?.instance;
                let inst = Instance::from(ti.clone());
                let mst = cost(&inst, &plan_ptr(&ti, metric))?;
                let greedy = cost(&inst, &greedy_2d(&inst, metric))?;
                put(&format!("pattern_{tag}_travel_ratio"), ratio(greedy.travel, mst.travel));
                put(
                    &format!("pattern_{tag}_picks_ratio"),
                    ratio(greedy.picks as f64, mst.picks as f64),
                );
            }
        }
    }
    Ok(out)
}

/// Runs every trial and returns the raw per-trial samples.
pub fn run_samples(spec: &ExperimentSpec) -> Result<Vec<SizeSamples>, BenchError> {
    spec.validate()?;
    Ok(spec
        .sizes
        .iter()
        .map(|&m| {
            let results: Vec<Result<Sample, TrialError>> = (0..spec.trials)
                .into_par_iter()
                .map(|t| run_trial(spec, m, derive_seed(spec.seed, &[u64::from(m), t as u64])))
                .collect();
            let mut series: Vec<Series> = Vec::new();
            let mut failed_trials = Vec::new();
            for (t, result) in results.into_iter().enumerate() {
                let Ok(sample) = result else {
                    failed_trials.push(t);
                    continue;
                };
                for (name, value) in sample {
                    match series.iter_mut().find(|s| s.statistic == name) {
                        Some(s) => s.values.push(value),
                        None => series.push(Series {
                            statistic: name,
                            values: vec![value],
                        }),
                    }
                }
            }
            SizeSamples {
                size: m,
                series,
                failed_trials,
            }
        })
        .collect())
}

/// Mean and sample standard deviation.
pub fn mean_std(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (0.0, 0.0);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() == 1 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

fn reference_rows(spec: &ExperimentSpec, m: u32) -> Vec<(&'static str, f64)> {
    match spec.experiment {
        Experiment::CycleStats => {
            let h = harmonic(m);
            let m = f64::from(m);
            vec![
                ("picks_expected", m + h - 2.0),
                ("cycles_expected", h),
                ("travel_expected", m * m / 3.0),
            ]
        }
        _ => Vec::new(),
    }
}

pub fn summarize(spec: &ExperimentSpec, samples: &[SizeSamples]) -> ExperimentReport {
    let mut rows = Vec::new();
    for s in samples {
        let row = |statistic: &str, mean: f64, std: f64, trials: usize| ReportRow {
            size: s.size,
            statistic: statistic.to_owned(),
            mean,
            std,
            trials,
            seed: spec.seed,
        };
        for series in &s.series {
            let (mean, std) = mean_std(&series.values);
            rows.push(row(&series.statistic, mean, std, series.values.len()));
        }
        for (name, value) in reference_rows(spec, s.size) {
            rows.push(row(name, value, 0.0, 0));
        }
        if !s.failed_trials.is_empty() {
            rows.push(row("failed_trials", s.failed_trials.len() as f64, 0.0, spec.trials));
        }
    }
    ExperimentReport {
        format_version: FORMAT_VERSION,
        experiment: spec.experiment.name().to_owned(),
        distribution: spec.distribution.to_string(),
        rows,
    }
}

pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentReport, BenchError> {
    Ok(summarize(spec, &run_samples(spec)?))
}

impl ExperimentReport {
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .has_headers(false)
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(["size", "statistic", "mean", "std", "trials", "seed"])
            .expect("in-memory write");
        for row in &self.rows {
            w.serialize(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV output is UTF-8")
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, BenchError> {
        serde_json::from_str(text).map_err(|e| BenchError::Parse(e.to_string()))
    }

    /// Parses the rows of a CSV report.
    pub fn rows_from_csv(text: &str) -> Result<Vec<ReportRow>, BenchError> {
        csv::Reader::from_reader(text.as_bytes())
            .deserialize()
            .collect::<Result<_, _>>()
            .map_err(|e| BenchError::Parse(e.to_string()))
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Csv => self.to_csv(),
            ReportFormat::Json => self.to_json(),
        }
    }
}

pub fn emit_report(report: &ExperimentReport, format: ReportFormat, path: &Path) -> Result<(), BenchError> {
    fs::write(path, report.render(format))?;
    Ok(())
}
