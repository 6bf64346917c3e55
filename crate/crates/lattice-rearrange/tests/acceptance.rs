//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each, and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use lattice_rearrange::bench::{
    harmonic, run_experiment, run_samples, Distribution, Experiment, ExperimentSpec, SizeSamples,
};
use lattice_rearrange::formats::{instance_to_json, plan_to_json};
use lattice_rearrange_core::gen::{
    derive_seed, gen_block_random, gen_column_random, gen_tsp_clusters, gen_typed, gen_uniform_permutation,
    gen_x_random, random_interior_points, SeededRng,
};
use lattice_rearrange_core::graphs::permutation_cycles;
use lattice_rearrange_core::lattice2d::{
    form_cycles_ptr, greedy_2d, merge_cycles_ptr, pattern_a_block, plan_ptr, sweep_cycles_ltr, switch_cycles_ltr,
    GoalPattern,
};
use lattice_rearrange_core::lor::{opt_plan_lor, sweep_cycles_lor};
use lattice_rearrange_core::oracle::{oracle_min_picks, oracle_optimal, Objective, DEFAULT_STATE_CAP};
use lattice_rearrange_core::por::{form_cycles, greedy_por, merge_cycles, opt_plan_por, PorOptions};
use lattice_rearrange_core::{
    reverse_plan, simulate, CostModel, Instance, LabeledInstance, LatticeDims, Metric, Plan, PlanCost, TypedInstance,
};
use rayon::prelude::*;

/// Absolute tolerance on travel comparisons.
const TRAVEL_TOL: f64 = 1e-9;
/// Slack on ratios that must not fall below one.
const RATIO_TOL: f64 = 1e-9;
const LOR_RATIO_RANGE: (f64, f64) = (0.33, 0.345);
const PICKS_REL_TOL: f64 = 0.01;
const TRAVEL_REL_TOL: f64 = 0.02;
const CYCLES_REL_TOL: f64 = 0.05;
const UNIFORM_D: f64 = 0.5214;
const COLUMN_D: f64 = 1.0 / 3.0;
const D_TOL: f64 = 0.02;
const SEED: u64 = 20_240_601;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Cost of a plan that is legal and reaches the goal.
fn solved_cost(instance: &Instance, plan: &Plan) -> Option<PlanCost> {
    let exec = simulate(instance, plan, &CostModel::default()).ok()?;
    instance.is_solved(&exec.configuration).then_some(exec.cost)
}

fn oracle_lex(instance: &Instance) -> (usize, f64) {
    let sol = oracle_optimal(
        instance,
        &CostModel::default(),
        Objective::Lexicographic,
        DEFAULT_STATE_CAP,
    )
    .expect("instance fits the oracle cap");
    (sol.cost.picks, sol.cost.travel)
}

fn permutations(n: u32) -> Vec<Vec<u32>> {
    fn go(k: usize, xs: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k <= 1 {
            out.push(xs.clone());
            return;
        }
        for i in 0..k {
            go(k - 1, xs, out);
            xs.swap(if k % 2 == 0 { i } else { 0 }, k - 1);
        }
    }
    let mut out = Vec::new();
    go(n as usize, &mut (0..n).collect(), &mut out);
    out
}

fn matches_oracle(instance: &Instance, plan: &Plan) -> bool {
    let (picks, travel) = oracle_lex(instance);
    solved_cost(instance, plan).is_some_and(|c| c.picks == picks && (c.travel - travel).abs() <= TRAVEL_TOL)
}

fn lor_oracle_equivalence() -> Outcome {
    let dims = LatticeDims::line(6).unwrap();
    let mut cases: Vec<LabeledInstance> = permutations(6)
        .into_iter()
        .map(|pi| LabeledInstance::new(dims, pi).unwrap())
        .collect();
    cases.extend((0..200).map(|i| gen_uniform_permutation(7, derive_seed(SEED, &[1, i])).unwrap()));
    let bad = cases
        .par_iter()
        .filter(|li| !matches_oracle(&(*li).clone().into(), &opt_plan_lor(li).unwrap()))
        .count();
    outcome(
        bad == 0,
        format!("{} instances (720 at m=6, 200 at m=7), {bad} mismatches", cases.len()),
    )
}

fn pick_formula() -> Outcome {
    let failures = (0..1000u64)
        .into_par_iter()
        .filter(|&i| {
            let mut rng = SeededRng::new(derive_seed(SEED, &[2, i]));
            let li = if i % 2 == 0 {
                let m = 1 + rng.below(1000) as u32;
                gen_uniform_permutation(m, rng.next_u64()).unwrap()
            } else {
                let m1 = 1 + rng.below(40) as u32;
                let m2 = 1 + rng.below(u64::from(1000 / m1).min(40)) as u32;
                let dims = LatticeDims::new(m1, m2).unwrap();
                let line = gen_uniform_permutation(m1 * m2, rng.next_u64()).unwrap();
                LabeledInstance::new(dims, line.pi().to_vec()).unwrap()
            };
            let expected = li.misplaced() + permutation_cycles(li.pi()).unwrap().cycles.len();
            let inst = Instance::from(li.clone());
            let mut plans = vec![sweep_cycles_ltr(&li), switch_cycles_ltr(&li, Metric::Euclidean)];
            if li.dims().cols() == 1 {
                plans.push(sweep_cycles_lor(&li).unwrap());
                plans.push(opt_plan_lor(&li).unwrap());
            }
            !plans
                .iter()
                .all(|p| solved_cost(&inst, p).is_some_and(|c| c.picks == expected))
        })
        .count();
    outcome(
        failures == 0,
        format!("1000 instances (500 lines, 500 grids, up to 1000 cells), {failures} failures"),
    )
}

fn samples(experiment: Experiment, sizes: Vec<u32>, trials: usize, distribution: Distribution) -> Vec<SizeSamples> {
    let spec = ExperimentSpec {
        trials,
        distribution,
        ..ExperimentSpec::new(experiment, sizes, SEED)
    };
    run_samples(&spec).expect("valid spec")
}

fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

fn lor_travel_ratio() -> Outcome {
    let runs = samples(
        Experiment::LorRatio,
        vec![100, 1000, 10_000],
        100,
        Distribution::Uniform,
    );
    let mut pass = true;
    let mut parts = Vec::new();
    for s in &runs {
        let m = mean(s.get("opt_travel_over_m2").unwrap());
        pass &= s.failed_trials.is_empty() && (LOR_RATIO_RANGE.0..=LOR_RATIO_RANGE.1).contains(&m);
        parts.push(format!("m={} {m:.4}", s.size));
    }
    outcome(
        pass,
        format!(
            "opt travel / m^2 in [{}, {}]: {}",
            LOR_RATIO_RANGE.0,
            LOR_RATIO_RANGE.1,
            parts.join(", ")
        ),
    )
}

fn expected_cost() -> Outcome {
    let runs = samples(Experiment::CycleStats, vec![1000], 100, Distribution::Uniform);
    let s = &runs[0];
    let m = 1000.0;
    let picks = mean(s.get("picks").unwrap());
    let travel = mean(s.get("travel").unwrap());
    let want_picks = m + harmonic(1000) - 2.0;
    let want_travel = m * m / 3.0;
    let pass = (picks - want_picks).abs() <= PICKS_REL_TOL * want_picks
        && (travel - want_travel).abs() <= TRAVEL_REL_TOL * want_travel;
    outcome(
        pass,
        format!(
            "m=1000: picks {picks:.2} vs {want_picks:.2} (tol 1%), travel {travel:.0} vs {want_travel:.0} (tol 2%)"
        ),
    )
}

fn cycle_count() -> Outcome {
    let trials = 1000;
    let runs = samples(Experiment::CycleStats, vec![1000], trials, Distribution::Uniform);
    let cycles = mean(runs[0].get("cycles").unwrap());
    let h = harmonic(1000);
    outcome(
        (cycles - h).abs() <= CYCLES_REL_TOL * h,
        format!("m=1000, {trials} trials: mean cycles {cycles:.3} vs H_m {h:.3} (tol 5%)"),
    )
}

fn por_oracle_equivalence() -> Outcome {
    let results: Vec<(bool, bool)> = (0..500u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = SeededRng::new(derive_seed(SEED, &[6, i]));
            let k = 2 + (i % 2) as u32;
            let m = k + 1 + rng.below(u64::from(6 - k)) as u32;
            let aggregated = (i / 2) % 2 == 0;
            let pattern = if aggregated {
                GoalPattern::Aggregated
            } else {
                GoalPattern::Shuffled
            };
            let ti = gen_typed(LatticeDims::line(m).unwrap(), k, None, &pattern, rng.next_u64())
                .unwrap()
                .instance;
            let plan = opt_plan_por(&ti, &CostModel::default(), PorOptions::default()).unwrap();
            let optimal = matches_oracle(&ti.clone().into(), &plan);
            let bounded = !aggregated || merge_cycles(form_cycles(&ti).unwrap()).len() < k as usize;
            (optimal, bounded)
        })
        .collect();
    let mismatches = results.iter().filter(|r| !r.0).count();
    let unbounded = results.iter().filter(|r| !r.1).count();
    outcome(
        mismatches == 0 && unbounded == 0,
        format!("500 instances (m<=6, k in {{2,3}}): {mismatches} mismatches, {unbounded} aggregated samples over k-1 cycles"),
    )
}

fn cycle_distance() -> Outcome {
    let uniform = mean(
        samples(Experiment::LtrCycleDist, vec![100], 100, Distribution::Uniform)[0]
            .get("cycle_distance")
            .unwrap(),
    );
    let column = mean(
        samples(Experiment::LtrCycleDist, vec![100], 100, Distribution::ColumnRandom)[0]
            .get("cycle_distance")
            .unwrap(),
    );
    let local = (0..20u64).all(|i| {
        let seed = derive_seed(SEED, &[7, i]);
        let col = gen_column_random(10, 7, seed).unwrap();
        let dims = col.dims();
        let in_column = col.pi().iter().enumerate().all(|(c, &l)| {
            dims.coords(lattice_rearrange_core::Cell::new(c)).1
                == dims.coords(lattice_rearrange_core::Cell::new(l as usize)).1
        });
        let block = gen_block_random(16, seed).unwrap();
        let bd = block.dims();
        let in_block = block.pi().iter().enumerate().all(|(c, &l)| {
            let (r1, c1) = bd.coords(lattice_rearrange_core::Cell::new(c));
            let (r2, c2) = bd.coords(lattice_rearrange_core::Cell::new(l as usize));
            (r1 / 4, c1 / 4) == (r2 / 4, c2 / 4)
        });
        in_column && in_block
    });
    outcome(
        (uniform - UNIFORM_D).abs() <= D_TOL && (column - COLUMN_D).abs() <= D_TOL && local,
        format!(
            "100x100: uniform {uniform:.4} (target {UNIFORM_D} +/- {D_TOL}), column-random {column:.4} (target 1/3 +/- {D_TOL}), locality {}",
            if local { "holds" } else { "violated" }
        ),
    )
}

fn ltr_dominance() -> Outcome {
    let dims = LatticeDims::new(2, 3).unwrap();
    let bad = permutations(6)
        .into_par_iter()
        .filter(|pi| {
            let li = LabeledInstance::new(dims, pi.clone()).unwrap();
            let inst = Instance::from(li.clone());
            let (picks, travel) = oracle_lex(&inst);
            let sweep = solved_cost(&inst, &sweep_cycles_ltr(&li));
            let switch = solved_cost(&inst, &switch_cycles_ltr(&li, Metric::Euclidean));
            let (Some(sweep), Some(switch)) = (sweep, switch) else {
                return true;
            };
            sweep.picks != picks
                || switch.picks != picks
                || switch.travel > sweep.travel + TRAVEL_TOL
                || switch.travel < travel - TRAVEL_TOL
        })
        .count();
    outcome(bad == 0, format!("720 permutations of 2x3: {bad} violations"))
}

fn ptr_validity() -> Outcome {
    let shapes = [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 2)];
    let tiny_bad = (0..500u64)
        .into_par_iter()
        .filter(|&i| {
            let mut rng = SeededRng::new(derive_seed(SEED, &[9, i]));
            let (m1, m2) = shapes[rng.below(shapes.len() as u64) as usize];
            let dims = LatticeDims::new(m1, m2).unwrap();
            let k = 2 + rng.below(2) as u32;
            let ti = gen_typed(dims, k, None, &GoalPattern::Shuffled, rng.next_u64())
                .unwrap()
                .instance;
            let inst = Instance::from(ti.clone());
            let picks = oracle_lex(&inst).0;
            solved_cost(&inst, &plan_ptr(&ti, Metric::Euclidean)).is_none_or(|c| c.picks != picks)
        })
        .count();
    let dims = LatticeDims::new(16, 16).unwrap();
    let large_bad = (0..200u64)
        .into_par_iter()
        .filter(|&i| {
            let pattern_a = i % 2 == 0;
            let pattern = if pattern_a {
                GoalPattern::PatternA
            } else {
                GoalPattern::PatternB
            };
            let ti = gen_typed(dims, 16, None, &pattern, derive_seed(SEED, &[9, 1, i]))
                .unwrap()
                .instance;
            let inst = Instance::from(ti.clone());
            let merged = merge_cycles_ptr(dims, form_cycles_ptr(&ti, Metric::Euclidean), Metric::Euclidean);
            let local = !pattern_a
                || merged
                    .swaps
                    .iter()
                    .all(|s| pattern_a_block(dims, 16, s.goals.0) == pattern_a_block(dims, 16, s.goals.1));
            let valid = solved_cost(&inst, &plan_ptr(&ti, Metric::Euclidean))
                .is_some_and(|c| c.picks == oracle_min_picks(&inst));
            !(local && valid)
        })
        .count();
    outcome(
        tiny_bad == 0 && large_bad == 0,
        format!(
            "500 tiny grids: {tiny_bad} pick mismatches; 100 pattern-A + 100 pattern-B 16x16: {large_bad} failures"
        ),
    )
}

fn min_of(runs: &[SizeSamples], statistic: &str) -> f64 {
    runs.iter()
        .filter_map(|s| s.get(statistic))
        .flatten()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

fn ratio_direction() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    let mut lor_min = f64::INFINITY;
    for dist in [
        Distribution::Uniform,
        Distribution::XRandom(10),
        Distribution::SqrtRandom,
    ] {
        let runs = samples(Experiment::LorGreedyVsOpt, vec![10, 100, 1000], 100, dist);
        lor_min = lor_min.min(min_of(&runs, "sweep_over_opt_travel"));
    }
    pass &= lor_min >= 1.0 - RATIO_TOL;
    notes.push(format!("LOR sweep/opt min {lor_min:.4}"));

    let ten = samples(Experiment::LorGreedyVsOpt, vec![100], 100, Distribution::XRandom(10));
    let ten_mean = mean(ten[0].get("sweep_over_opt_travel").unwrap());
    pass &= ten_mean > 1.0;
    notes.push(format!("10-random m=100 mean {ten_mean:.4}"));

    let mut ltr_worst = f64::NEG_INFINITY;
    for dist in [
        Distribution::Uniform,
        Distribution::ColumnRandom,
        Distribution::BlockRandom,
    ] {
        for s in samples(Experiment::LtrTotalVsCycles, vec![4, 9, 16], 100, dist) {
            let (sweep, switch) = (
                s.get("sweep_over_cycle_travel").unwrap(),
                s.get("switch_over_cycle_travel").unwrap(),
            );
            for (a, b) in sweep.iter().zip(switch) {
                ltr_worst = ltr_worst.max(b - a);
            }
        }
    }
    pass &= ltr_worst <= RATIO_TOL;
    notes.push(format!("LTR switch-sweep max {ltr_worst:.2e}"));

    let por = samples(Experiment::PorRatios, vec![20, 100], 100, Distribution::Uniform);
    let mut por_picks = f64::INFINITY;
    let mut por_travel = f64::INFINITY;
    for k in [2, 4, 6, 8, 10] {
        por_picks = por_picks.min(min_of(&por, &format!("k{k}_picks_ratio")));
        por_travel = por_travel.min(min_of(&por, &format!("k{k}_travel_ratio")));
    }
    pass &= por_picks >= 1.0 - RATIO_TOL;
    notes.push(format!(
        "POR picks min {por_picks:.4} (travel min {por_travel:.4}, informational)"
    ));

    let ptr = samples(Experiment::PtrRatios, vec![4, 9, 16], 100, Distribution::Uniform);
    let ptr_picks = min_of(&ptr, "pattern_a_picks_ratio").min(min_of(&ptr, "pattern_b_picks_ratio"));
    let ptr_travel = min_of(&ptr, "pattern_a_travel_ratio").min(min_of(&ptr, "pattern_b_travel_ratio"));
    pass &= ptr_picks >= 1.0 - RATIO_TOL;
    notes.push(format!(
        "PTR picks min {ptr_picks:.4} (travel min {ptr_travel:.4}, informational)"
    ));
    outcome(pass, notes.join("; "))
}

fn random_instance(i: u64) -> (Instance, Vec<Plan>) {
    let mut rng = SeededRng::new(derive_seed(SEED, &[11, i]));
    let seed = rng.next_u64();
    let metric = Metric::Euclidean;
    match i % 4 {
        0 => {
            let li = gen_uniform_permutation(1 + rng.below(60) as u32, seed).unwrap();
            let plans = vec![opt_plan_lor(&li).unwrap(), sweep_cycles_lor(&li).unwrap()];
            (li.into(), plans)
        }
        1 => {
            let dims = LatticeDims::new(1 + rng.below(8) as u32, 1 + rng.below(8) as u32).unwrap();
            let line = gen_uniform_permutation(dims.len() as u32, seed).unwrap();
            let li = LabeledInstance::new(dims, line.pi().to_vec()).unwrap();
            let inst = Instance::from(li.clone());
            let plans = vec![
                sweep_cycles_ltr(&li),
                switch_cycles_ltr(&li, metric),
                greedy_2d(&inst, metric),
            ];
            (inst, plans)
        }
        2 => {
            let m = 2 + rng.below(60) as u32;
            let k = 2 + rng.below(u64::from(m.min(8) - 1)) as u32;
            let ti = gen_typed(
                LatticeDims::line(m).unwrap(),
                k.min(m),
                None,
                &GoalPattern::Shuffled,
                seed,
            )
            .unwrap()
            .instance;
            let plans = vec![
                opt_plan_por(&ti, &CostModel::default(), PorOptions::default()).unwrap(),
                greedy_por(&ti, metric).unwrap(),
            ];
            (ti.into(), plans)
        }
        _ => {
            let dims = LatticeDims::new(2 + rng.below(7) as u32, 2 + rng.below(7) as u32).unwrap();
            let k = 2 + rng.below((dims.len() as u64 - 2).min(4)) as u32;
            let ti: TypedInstance = gen_typed(dims, k, None, &GoalPattern::Shuffled, seed).unwrap().instance;
            let inst = Instance::from(ti.clone());
            let plans = vec![plan_ptr(&ti, metric), greedy_2d(&inst, metric)];
            (inst, plans)
        }
    }
}

fn reversibility() -> Outcome {
    let bad = (0..1000u64)
        .into_par_iter()
        .map(|i| {
            let (inst, plans) = random_instance(i);
            let reversed = inst.reversed();
            plans
                .iter()
                .filter(|p| {
                    let fwd = solved_cost(&inst, p);
                    let back = solved_cost(&reversed, &reverse_plan(p));
                    !matches!((fwd, back), (Some(f), Some(b)) if f.picks == b.picks && (f.travel - b.travel).abs() <= TRAVEL_TOL)
                })
                .count()
        })
        .sum::<usize>();
    outcome(
        bad == 0,
        format!("1000 instances (1D/2D, labeled/typed), every solver: {bad} failures"),
    )
}

fn tsp_gadget() -> Outcome {
    let dims = LatticeDims::new(12, 12).unwrap();
    let mut bad = 0;
    for q in 1..=8usize {
        for rep in 0..5u64 {
            let points = random_interior_points(dims, q, derive_seed(SEED, &[12, q as u64, rep])).unwrap();
            let li = gen_tsp_clusters(&points, dims).unwrap();
            let ok = solved_cost(&li.clone().into(), &switch_cycles_ltr(&li, Metric::Euclidean))
                .is_some_and(|c| c.picks == 3 * q);
            bad += usize::from(!ok);
        }
    }
    outcome(
        bad == 0,
        format!("q=1..8, 5 point sets each on 12x12: {bad} instances with picks != 3q"),
    )
}

fn solver_outputs(i: u64) -> Vec<String> {
    let (inst, plans) = random_instance(i);
    let mut out = vec![instance_to_json(&inst)];
    out.extend(plans.iter().map(|p| plan_to_json(p, None, None)));
    out
}

fn determinism() -> Outcome {
    let solvers_ok = (0..200).all(|i| solver_outputs(i) == solver_outputs(i));
    let gen = |seed: u64| {
        let dims = LatticeDims::new(6, 6).unwrap();
        [
            instance_to_json(&gen_uniform_permutation(40, seed).unwrap().into()),
            instance_to_json(&gen_x_random(40, 7, seed).unwrap().into()),
            instance_to_json(&gen_column_random(5, 6, seed).unwrap().into()),
            instance_to_json(&gen_block_random(9, seed).unwrap().into()),
            instance_to_json(
                &gen_typed(dims, 6, None, &GoalPattern::PatternB, seed)
                    .unwrap()
                    .instance
                    .into(),
            ),
            instance_to_json(
                &gen_typed(dims, 4, None, &GoalPattern::PatternA, seed)
                    .unwrap()
                    .instance
                    .into(),
            ),
            instance_to_json(
                &gen_tsp_clusters(&random_interior_points(dims, 3, seed).unwrap(), dims)
                    .unwrap()
                    .into(),
            ),
        ]
    };
    let gens_ok = (0..50).all(|s| gen(s) == gen(s));
    let serial = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let bench_ok = Experiment::ALL.iter().all(|&e| {
        let sizes = match e {
            Experiment::LtrCycleDist | Experiment::LtrTotalVsCycles | Experiment::PtrRatios => vec![4, 9],
            _ => vec![12, 40],
        };
        let spec = ExperimentSpec {
            trials: 20,
            ..ExperimentSpec::new(e, sizes, SEED)
        };
        let a = run_experiment(&spec).unwrap().to_csv();
        let b = run_experiment(&spec).unwrap().to_json();
        let c = serial.install(|| run_experiment(&spec)).unwrap();
        a == c.to_csv() && b == c.to_json()
    });
    outcome(
        solvers_ok && gens_ok && bench_ok,
        format!(
            "solvers {}, generators {}, bench (parallel vs single-thread) {}",
            if solvers_ok { "stable" } else { "differ" },
            if gens_ok { "stable" } else { "differ" },
            if bench_ok { "stable" } else { "differ" }
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("LOR optimal plans match the oracle", lor_oracle_equivalence),
        ("pick count equals misplaced plus cycles", pick_formula),
        ("optimal LOR travel over m^2", lor_travel_ratio),
        ("expected LOR picks and travel", expected_cost),
        ("mean cycle count tracks H_m", cycle_count),
        ("POR optimal plans match the oracle", por_oracle_equivalence),
        ("cycle distance statistic", cycle_distance),
        ("LTR pick minimality and switch dominance", ltr_dominance),
        ("PTR validity and pick minimality", ptr_validity),
        ("greedy over optimized ratios", ratio_direction),
        ("reversed plans solve reversed instances", reversibility),
        ("TSP gadget picks", tsp_gadget),
        ("seeded determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let result = check();
        failed += usize::from(!result.pass);
        println!(
            "criterion {:>2} {} {name}: {} [{:.1} s]",
            i + 1,
            if result.pass { "PASS" } else { "FAIL" },
            result.detail,
            started.elapsed().as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
