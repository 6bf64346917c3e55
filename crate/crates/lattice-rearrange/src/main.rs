use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lattice_rearrange::bench::{run_experiment, Distribution, Experiment, ExperimentSpec, ReportFormat};
use lattice_rearrange::formats::{self, ErrorFile};
use lattice_rearrange_core::gen::{
    gen_block_random, gen_column_random, gen_tsp_clusters, gen_typed, gen_uniform_permutation, gen_x_random,
    random_interior_points,
};
use lattice_rearrange_core::lattice2d::{greedy_2d, plan_ptr, sweep_cycles_ltr, switch_cycles_ltr, GoalPattern};
use lattice_rearrange_core::lor::{opt_plan_lor, sweep_cycles_lor};
use lattice_rearrange_core::oracle::{oracle_optimal, Objective, DEFAULT_STATE_CAP};
use lattice_rearrange_core::por::{greedy_por, opt_plan_por, PorOptions};
use lattice_rearrange_core::{
    plan_cost, simulate, CostModel, Instance, LabeledInstance, LatticeDims, Metric, Plan, PlanCost,
};

const SEED_ENV: &str = "LATTICE_REARRANGE_SEED";

const EXPERIMENTS_HELP: &str = "Experiments:
  lor_ratio            optimal 1D travel / m^2
  lor_greedy_vs_opt    1D sweep travel / optimal travel
  ltr_cycle_dist       cycle edge length / (n * m) on an m x m lattice
  ltr_total_vs_cycles  2D sweep and switch travel / cycle edge length on m x m
  por_ratios           greedy / optimal 1D typed travel and picks, k in {2,4,6,8,10}
  ptr_ratios           greedy / MST 2D typed travel and picks on k x k, patterns A and B
  cycle_stats          1D picks, cycles, and travel against their expectations

Distributions: uniform, x-random:<x>, sqrt-random, column-random, block-random";

/// Pick-n-swap rearrangement planner for items on 1D and 2D lattices.
#[derive(Debug, Parser)]
#[command(name = "lattice-rearrange", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a random instance.
    Gen(GenArgs),
    /// Plan a rearrangement with one of the solvers.
    Solve(SolveArgs),
    /// Check a plan against an instance and print its cost.
    Validate(ValidateArgs),
    /// Find an exactly optimal plan for a small instance.
    Oracle(OracleArgs),
    /// Run a seeded simulation experiment.
    #[command(after_help = EXPERIMENTS_HELP)]
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenKind {
    /// Uniform labels on a line (--m) or grid (--m1, --m2).
    Uniform,
    /// Labels shuffled within blocks of --x cells on a line of --m.
    XRandom,
    /// Labels shuffled within each column of an --m1 x --m2 grid.
    ColumnRandom,
    /// Labels shuffled within sqrt(m) x sqrt(m) blocks of an --m x --m grid.
    BlockRandom,
    /// --k item types with goals laid out by --pattern.
    Typed,
    /// Identity with --q random swapped adjacent pairs on an --m1 x --m2 grid.
    Tsp,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PatternArg {
    Aggregated,
    A,
    B,
    Shuffled,
}

#[derive(Debug, Args)]
struct GenArgs {
    distribution: GenKind,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    m1: Option<u32>,
    #[arg(long)]
    m2: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    x: Option<u32>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long, value_enum, default_value = "aggregated")]
    pattern: PatternArg,
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MetricArg {
    Euclidean,
    Manhattan,
}

#[derive(Debug, Args)]
struct CostArgs {
    /// Cost of one pick-n-swap.
    #[arg(long, default_value_t = 1.0)]
    cp: f64,
    /// Cost per unit of travel.
    #[arg(long, default_value_t = 1.0)]
    ct: f64,
    #[arg(long, value_enum, default_value = "euclidean")]
    metric: MetricArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Solver {
    /// 1D labeled, cycles swept left to right.
    SweepLor,
    /// 1D labeled, optimal.
    OptLor,
    /// 1D typed, minimum picks then travel.
    OptPor,
    /// 1D typed, nearest-first baseline.
    GreedyPor,
    /// 2D labeled, cycles in column-major order.
    SweepLtr,
    /// 2D labeled, cycles joined by switching.
    SwitchLtr,
    /// 2D typed, matched and MST-merged cycles.
    PlanPtr,
    /// Any lattice, nearest-first baseline.
    #[value(name = "greedy-2d")]
    Greedy2d,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    solver: Solver,
    #[command(flatten)]
    cost: CostArgs,
    /// opt-por: keep overlapping cycles apart when merging costs more than it saves.
    #[arg(long)]
    skip_costly_merges: bool,
    /// Instance file; stdin when absent or `-`.
    input: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ValidateArgs {
    instance: PathBuf,
    plan: PathBuf,
    #[command(flatten)]
    cost: CostArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    /// Fewest picks, then least travel.
    Lex,
    /// Least weighted total cost.
    Total,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long, value_enum, default_value = "lex")]
    objective: ObjectiveArg,
    /// Give up when the estimated state count exceeds this.
    #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
    cap: u64,
    #[command(flatten)]
    cost: CostArgs,
    input: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long)]
    experiment: Experiment,
    /// Comma-separated sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<u32>,
    #[arg(long, default_value_t = lattice_rearrange::bench::DEFAULT_TRIALS)]
    trials: usize,
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "uniform")]
    distribution: Distribution,
    #[arg(long, default_value = "csv")]
    format: ReportFormat,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug)]
struct Failure {
    kind: &'static str,
    message: String,
}

impl Failure {
    fn new(kind: &'static str, message: impl ToString) -> Self {
        Self {
            kind,
            message: message.to_string(),
        }
    }
}

macro_rules! failure_from {
    ($($ty:ty => $kind:literal),* $(,)?) => {
        $(impl From<$ty> for Failure {
            fn from(e: $ty) -> Self {
                Self::new($kind, e)
            }
        })*
    };
}

failure_from! {
    io::Error => "io",
    formats::FormatError => "format",
    lattice_rearrange_core::GenError => "generate",
    lattice_rearrange_core::SolveError => "solve",
    lattice_rearrange_core::PlanError => "plan",
    lattice_rearrange_core::OracleError => "oracle",
    lattice_rearrange_core::InstanceError => "instance",
    lattice_rearrange::bench::BenchError => "bench",
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| Failure::new("io", format!("{}: {e}", p.display())))
        }
        _ => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::new("io", format!("{}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn cost_model(args: &CostArgs) -> Result<CostModel, Failure> {
    let metric = match args.metric {
        MetricArg::Euclidean => Metric::Euclidean,
        MetricArg::Manhattan => Metric::Manhattan,
    };
    CostModel::new(args.cp, args.ct, metric)
        .ok_or_else(|| Failure::new("cost_model", "--cp and --ct must be finite and nonnegative"))
}

fn summary(cost: &PlanCost) {
    eprintln!("picks {} travel {:.6} total {:.6}", cost.picks, cost.travel, cost.total);
}

fn need(value: Option<u32>, flag: &str) -> Result<u32, Failure> {
    value.ok_or_else(|| Failure::new("missing_parameter", format!("this distribution needs {flag}")))
}

fn dims_from(args: &GenArgs) -> Result<LatticeDims, Failure> {
    Ok(match (args.m, args.m1, args.m2) {
        (Some(m), None, None) => LatticeDims::line(m)?,
        (None, Some(m1), Some(m2)) => LatticeDims::new(m1, m2)?,
        _ => {
            return Err(Failure::new(
                "missing_parameter",
                "give either --m or both --m1 and --m2",
            ))
        }
    })
}

fn generate(args: &GenArgs) -> Result<(), Failure> {
    let instance: Instance = match args.distribution {
        GenKind::Uniform => {
            let dims = dims_from(args)?;
            let n = u32::try_from(dims.len()).map_err(|_| Failure::new("generate", "lattice too large"))?;
            let line = gen_uniform_permutation(n, args.seed)?;
            LabeledInstance::new(dims, line.pi().to_vec())?.into()
        }
        GenKind::XRandom => gen_x_random(need(args.m, "--m")?, need(args.x, "--x")?, args.seed)?.into(),
        GenKind::ColumnRandom => gen_column_random(need(args.m1, "--m1")?, need(args.m2, "--m2")?, args.seed)?.into(),
        GenKind::BlockRandom => gen_block_random(need(args.m, "--m")?, args.seed)?.into(),
        GenKind::Typed => {
            let pattern = match args.pattern {
                PatternArg::Aggregated => GoalPattern::Aggregated,
                PatternArg::A => GoalPattern::PatternA,
                PatternArg::B => GoalPattern::PatternB,
                PatternArg::Shuffled => GoalPattern::Shuffled,
            };
            let generated = gen_typed(dims_from(args)?, need(args.k, "--k")?, None, &pattern, args.seed)?;
            if generated.row_major_fallback {
                eprintln!("pattern A blocks do not tile this lattice; goals use row-major type runs");
            }
            generated.instance.into()
        }
        GenKind::Tsp => {
            let dims = LatticeDims::new(need(args.m1, "--m1")?, need(args.m2, "--m2")?)?;
            let q = args
                .q
                .ok_or_else(|| Failure::new("missing_parameter", "this distribution needs --q"))?;
            let points = random_interior_points(dims, q, args.seed)?;
            gen_tsp_clusters(&points, dims)?.into()
        }
    };
    write_output(args.output.as_deref(), &formats::instance_to_json(&instance))
}

fn labeled(instance: &Instance, solver: Solver) -> Result<&LabeledInstance, Failure> {
    match instance {
        Instance::Labeled(li) => Ok(li),
        Instance::Typed(_) => Err(Failure::new(
            "instance_kind",
            format!("{} needs a labeled instance", solver_name(solver)),
        )),
    }
}

fn solver_name(solver: Solver) -> String {
    solver
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_owned()
}

fn run_solver(instance: &Instance, solver: Solver, model: &CostModel, skip: bool) -> Result<Plan, Failure> {
    let metric = model.metric();
    let typed = || match instance {
        Instance::Typed(ti) => Ok(ti),
        Instance::Labeled(_) => Err(Failure::new(
            "instance_kind",
            format!("{} needs a typed instance", solver_name(solver)),
        )),
    };
    Ok(match solver {
        Solver::SweepLor => sweep_cycles_lor(labeled(instance, solver)?)?,
        Solver::OptLor => opt_plan_lor(labeled(instance, solver)?)?,
        Solver::OptPor => opt_plan_por(
            typed()?,
            model,
            PorOptions {
                skip_costly_merges: skip,
            },
        )?,
        Solver::GreedyPor => greedy_por(typed()?, metric)?,
        Solver::SweepLtr => sweep_cycles_ltr(labeled(instance, solver)?),
        Solver::SwitchLtr => switch_cycles_ltr(labeled(instance, solver)?, metric),
        Solver::PlanPtr => plan_ptr(typed()?, metric),
        Solver::Greedy2d => greedy_2d(instance, metric),
    })
}

fn solve(args: &SolveArgs) -> Result<(), Failure> {
    let instance = formats::parse_instance(&read_input(args.input.as_deref())?)?;
    let model = cost_model(&args.cost)?;
    let plan = run_solver(&instance, args.solver, &model, args.skip_costly_merges)?;
    let cost = plan_cost(&instance, &plan, &model)?;
    let name = solver_name(args.solver);
    write_output(
        args.output.as_deref(),
        &formats::plan_to_json(&plan, Some(&name), Some(cost)),
    )?;
    summary(&cost);
    Ok(())
}

fn validate(args: &ValidateArgs) -> Result<(), Failure> {
    let instance = formats::parse_instance(&read_input(Some(&args.instance))?)?;
    let plan = formats::parse_plan(&read_input(Some(&args.plan))?)?;
    let model = cost_model(&args.cost)?;
    let exec = simulate(&instance, &plan, &model)?;
    if !instance.is_solved(&exec.configuration) {
        return Err(Failure::new(
            "unsolved",
            format!(
                "plan is legal but does not reach the goal (picks {}, travel {})",
                exec.cost.picks, exec.cost.travel
            ),
        ));
    }
    write_output(None, &formats::to_json(&formats::CostEntry::from(exec.cost)))?;
    summary(&exec.cost);
    Ok(())
}

fn oracle(args: &OracleArgs) -> Result<(), Failure> {
    let instance = formats::parse_instance(&read_input(args.input.as_deref())?)?;
    let model = cost_model(&args.cost)?;
    let objective = match args.objective {
        ObjectiveArg::Lex => Objective::Lexicographic,
        ObjectiveArg::Total => Objective::WeightedTotal,
    };
    let solution = oracle_optimal(&instance, &model, objective, args.cap)?;
    let cost = plan_cost(&instance, &solution.plan, &model)?;
    write_output(
        args.output.as_deref(),
        &formats::plan_to_json(&solution.plan, Some("oracle"), Some(cost)),
    )?;
    summary(&cost);
    eprintln!("expanded {} states", solution.expanded);
    Ok(())
}

fn bench(args: &BenchArgs) -> Result<(), Failure> {
    let spec = ExperimentSpec {
        experiment: args.experiment,
        sizes: args.sizes.clone(),
        trials: args.trials,
        distribution: args.distribution,
        seed: args.seed,
    };
    let started = Instant::now();
    let report = run_experiment(&spec)?;
    eprintln!(
        "{} finished in {:.3} s",
        spec.experiment,
        started.elapsed().as_secs_f64()
    );
    write_output(args.output.as_deref(), &report.render(args.format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gen(a) => generate(a),
        Command::Solve(a) => solve(a),
        Command::Validate(a) => validate(a),
        Command::Oracle(a) => oracle(a),
        Command::Bench(a) => bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let record = ErrorFile {
                error: f.kind.to_owned(),
                message: f.message,
            };
            eprint!("{}", formats::to_json(&record));
            ExitCode::from(1)
        }
    }
}
