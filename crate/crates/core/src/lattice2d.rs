//! Planners for two-dimensional lattices.

use alloc::vec;
use alloc::vec::Vec;

use crate::connect::{connect, ArcRule};
use crate::error::GenError;
use crate::graphs::{min_cost_assignment, mst_undirected, permutation_cycles, DisjointSets, WeightedGraph, UNMAPPED};
use crate::greedy;
use crate::instance::{Instance, LabeledInstance, TypedInstance};
use crate::lattice::{Cell, LatticeDims, Metric};
use crate::plan::Plan;
use crate::por::{MoveCycle, MoveMap};
use crate::sweep;

/// Goal layout for typed instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GoalPattern {
    /// Contiguous runs of each type in column-major order (the 1D layout).
    Aggregated,
    /// Each type fills a square block; `√k × √k` blocks tile the lattice.
    PatternA,
    /// Type `j` fills column `j`.
    PatternB,
    /// A random arrangement drawn by the generator.
    Shuffled,
    /// Goal type per cell, given directly.
    Explicit(Vec<u32>),
}

/// A goal layout and whether [`GoalPattern::PatternA`] fell back to
/// row-major runs because square blocks do not tile the lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoalLayout {
    pub goal: Vec<u32>,
    pub row_major_fallback: bool,
}

fn isqrt(x: u32) -> Option<u32> {
    let r = libm::sqrt(f64::from(x)) as u32;
    (r.saturating_sub(1)..=r + 1).find(|&s| s * s == x)
}

/// Block index of `cell` under pattern A, or `None` if blocks do not tile.
pub fn pattern_a_block(dims: LatticeDims, k: u32, cell: Cell) -> Option<usize> {
    let s = isqrt(k)?;
    if dims.rows() % s != 0 || dims.cols() % s != 0 {
        return None;
    }
    let (r, c) = dims.coords(cell);
    let (bh, bw) = (dims.rows() / s, dims.cols() / s);
    Some(((c / bw) * s + r / bh) as usize)
}

/// Lays out goal types for a deterministic pattern. `counts[t]` is the number
/// of type-`t` items. [`GoalPattern::Shuffled`] needs randomness and is handled
/// by the generator.
pub fn goal_layout(dims: LatticeDims, counts: &[usize], pattern: &GoalPattern) -> Result<GoalLayout, GenError> {
    let n = dims.len();
    let k = counts.len() as u32;
    if counts.is_empty() || counts.iter().sum::<usize>() != n || counts.contains(&0) {
        return Err(GenError::BadCounts { expected: n });
    }
    let runs = |order: &mut dyn Iterator<Item = Cell>| {
        let mut goal = vec![0; n];
        let mut t = 0;
        let mut left = counts[0];
        for cell in order {
            while left == 0 {
                t += 1;
                left = counts[t];
            }
            goal[cell.index()] = t as u32;
            left -= 1;
        }
        goal
    };
    let plain = |goal| GoalLayout {
        goal,
        row_major_fallback: false,
    };
    match pattern {
        GoalPattern::Aggregated => Ok(plain(runs(&mut dims.cells()))),
        GoalPattern::PatternA => {
            let equal = counts.iter().all(|&c| c * counts.len() == n);
            match dims
                .cells()
                .map(|c| pattern_a_block(dims, k, c))
                .collect::<Option<Vec<_>>>()
            {
                Some(blocks) if equal => Ok(plain(blocks.into_iter().map(|b| b as u32).collect())),
                _ => {
                    let mut row_major = (0..dims.rows())
                        .flat_map(|r| (0..dims.cols()).map(move |c| (r, c)))
                        .map(|(r, c)| dims.cell_at(r, c));
                    Ok(GoalLayout {
                        goal: runs(&mut row_major),
                        row_major_fallback: true,
                    })
                }
            }
        }
        GoalPattern::PatternB => {
            if k != dims.cols() || counts.iter().any(|&c| c != dims.rows() as usize) {
                return Err(GenError::PatternInfeasible(
                    "pattern B needs k equal to the column count and full columns",
                ));
            }
            Ok(plain(dims.cells().map(|c| dims.coords(c).1).collect()))
        }
        GoalPattern::Shuffled => Err(GenError::PatternInfeasible("a shuffled layout needs a seed")),
        GoalPattern::Explicit(goal) => {
            let mut seen = vec![0usize; counts.len()];
            for &t in goal {
                *seen
                    .get_mut(t as usize)
                    .ok_or(GenError::PatternInfeasible("explicit goal type out of range"))? += 1;
            }
            if goal.len() != n || seen != counts {
                return Err(GenError::PatternInfeasible(
                    "explicit goal does not match the type counts",
                ));
            }
            Ok(plain(goal.clone()))
        }
    }
}

fn labeled_cycles(instance: &LabeledInstance) -> Vec<Vec<usize>> {
    permutation_cycles(instance.pi())
        .expect("instance holds a valid permutation")
        .cycles
        .into_iter()
        .map(|c| c.into_iter().map(Cell::index).collect())
        .collect()
}

/// Cycles in column-major order of their minimum cell, each to completion.
pub fn sweep_cycles_ltr(instance: &LabeledInstance) -> Plan {
    sweep::sweep_sequential(&labeled_cycles(instance))
}

/// Cycles nested along a minimum arborescence of insertion detours, falling
/// back to [`sweep_cycles_ltr`] whenever that travels less.
pub fn switch_cycles_ltr(instance: &LabeledInstance, metric: Metric) -> Plan {
    let cycles = labeled_cycles(instance);
    let (dims, rest) = (instance.dims(), instance.rest());
    let switched = connect(dims, metric, rest, &cycles, ArcRule::Insertion).plan;
    let swept = sweep::sweep_sequential(&cycles);
    if switched.travel(dims, rest, metric) <= swept.travel(dims, rest, metric) {
        switched
    } else {
        swept
    }
}

/// Summed length of the displacement edges `i → π_i`.
pub fn cycle_edge_length(instance: &LabeledInstance, metric: Metric) -> f64 {
    let dims = instance.dims();
    instance
        .pi()
        .iter()
        .enumerate()
        .map(|(i, &p)| dims.distance(Cell::new(i), Cell::new(p as usize), metric))
        .sum()
}

/// Euclidean cycle edge length normalised by `n · max(m1, m2)`.
pub fn cycle_distance_statistic(instance: &LabeledInstance) -> f64 {
    let dims = instance.dims();
    let scale = dims.len() as f64 * f64::from(dims.rows().max(dims.cols()));
    cycle_edge_length(instance, Metric::Euclidean) / scale
}

/// Per type, a minimum-cost matching of misplaced items to unfilled goals.
pub fn form_cycles_ptr(instance: &TypedInstance, metric: Metric) -> Vec<MoveCycle> {
    let dims = instance.dims();
    let n = dims.len();
    let (start, goal) = (instance.start(), instance.goal());
    let k = instance.k() as usize;
    let mut sources: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut slots: Vec<Vec<usize>> = vec![Vec::new(); k];
    for c in (0..n).filter(|&c| start[c] != goal[c]) {
        sources[start[c] as usize].push(c);
        slots[goal[c] as usize].push(c);
    }
    let mut map = MoveMap {
        dest: vec![UNMAPPED; n],
        kind: start.to_vec(),
    };
    for (src, dst) in sources.iter().zip(&slots) {
        let s = src.len();
        let mut cost = Vec::with_capacity(s * s);
        for &a in src {
            cost.extend(dst.iter().map(|&b| dims.distance(Cell::new(a), Cell::new(b), metric)));
        }
        let assignment = min_cost_assignment(&cost, s);
        for (i, &j) in assignment.columns.iter().enumerate() {
            map.dest[src[i]] = dst[j];
        }
    }
    map.cycles()
}

/// A destination exchange between two same-type moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoalSwap {
    pub kind: u32,
    pub sources: (Cell, Cell),
    /// Destinations before the exchange: `sources.0` was bound for `goals.0`.
    pub goals: (Cell, Cell),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PtrMerge {
    pub cycles: Vec<MoveCycle>,
    pub swaps: Vec<GoalSwap>,
    pub added_travel: f64,
}

/// Cheapest same-type destination exchange between two sets of sources.
fn best_exchange(
    dims: LatticeDims,
    metric: Metric,
    map: &MoveMap,
    left: &[usize],
    right: &[usize],
) -> Option<(usize, usize, f64)> {
    let d = |a: usize, b: usize| dims.distance(Cell::new(a), Cell::new(b), metric);
    let mut best: Option<(usize, usize, f64)> = None;
    for &s1 in left {
        let d1 = map.dest[s1];
        for &s2 in right.iter().filter(|&&s2| map.kind[s2] == map.kind[s1]) {
            let d2 = map.dest[s2];
            let delta = (d(s1, d2) + d(s2, d1) - d(s1, d1) - d(s2, d2)).max(0.0);
            if best.is_none_or(|(_, _, bd)| delta < bd) {
                best = Some((s1, s2, delta));
            }
        }
    }
    best
}

/// Merges cycles along a minimum spanning forest whose edge weights are the
/// cheapest single goal exchange between two cycles.
pub fn merge_cycles_ptr(dims: LatticeDims, cycles: Vec<MoveCycle>, metric: Metric) -> PtrMerge {
    let mut map = MoveMap::from_cycles(&cycles);
    let mut members: Vec<Vec<usize>> = cycles.iter().map(MoveCycle::cell_indices).collect();
    let mut graph = WeightedGraph::undirected(cycles.len());
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if let Some((_, _, w)) = best_exchange(dims, metric, &map, &members[i], &members[j]) {
                graph.add_edge(i, j, w).expect("valid edge");
            }
        }
    }
    let mut sets = DisjointSets::new(cycles.len());
    let mut swaps = Vec::new();
    let mut added = 0.0;
    for edge in mst_undirected(&graph) {
        let (ra, rb) = (sets.find(edge.from), sets.find(edge.to));
        let (s1, s2, delta) = best_exchange(dims, metric, &map, &members[ra], &members[rb])
            .expect("forest edges join cycles sharing a type");
        swaps.push(GoalSwap {
            kind: map.kind[s1],
            sources: (Cell::new(s1), Cell::new(s2)),
            goals: (Cell::new(map.dest[s1]), Cell::new(map.dest[s2])),
        });
        map.dest.swap(s1, s2);
        added += delta;
        sets.union(ra, rb);
        let root = sets.find(ra);
        let moved = core::mem::take(&mut members[if root == ra { rb } else { ra }]);
        members[root].extend(moved);
    }
    PtrMerge {
        cycles: map.cycles(),
        swaps,
        added_travel: added,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PtrSweep {
    pub plan: Plan,
    /// Total weight of the nearest-vertex arborescence.
    pub arborescence_weight: f64,
}

/// Visits cycles along a minimum arborescence of nearest-vertex distances.
pub fn sweep_cycles_ptr(dims: LatticeDims, cycles: &[MoveCycle], rest: Cell, metric: Metric) -> PtrSweep {
    let indexed: Vec<Vec<usize>> = cycles.iter().map(MoveCycle::cell_indices).collect();
    let joined = connect(dims, metric, rest, &indexed, ArcRule::NearestVertex);
    PtrSweep {
        plan: joined.plan,
        arborescence_weight: joined.weight,
    }
}

pub fn plan_ptr(instance: &TypedInstance, metric: Metric) -> Plan {
    let dims = instance.dims();
    let formed = form_cycles_ptr(instance, metric);
    let merged = merge_cycles_ptr(dims, formed, metric);
    sweep_cycles_ptr(dims, &merged.cycles, instance.rest(), metric).plan
}

/// Best-first baseline on any lattice.
pub fn greedy_2d(instance: &Instance, metric: Metric) -> Plan {
    greedy::best_first(instance, metric)
}
