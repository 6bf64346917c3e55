//! Partially labeled rearrangement on a line, and the move cycles shared with 2D.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::SolveError;
use crate::graphs::{mst_undirected, orbits, DisjointSets, WeightedGraph, UNMAPPED};
use crate::greedy;
use crate::instance::{Instance, TypedInstance};
use crate::lattice::{Cell, CostModel, LatticeDims, Metric};
use crate::lor::require_line;
use crate::plan::Plan;
use crate::sweep;

/// One item displacement: the item of type `kind` at `src` goes to `dst`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MoveEdge {
    pub src: Cell,
    pub dst: Cell,
    pub kind: u32,
}

/// A closed chain of moves; each edge's `dst` is the next edge's `src`.
/// The first edge starts at the cycle's minimum cell.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MoveCycle {
    edges: Vec<MoveEdge>,
}

impl MoveCycle {
    pub fn edges(&self) -> &[MoveEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Sorted distinct type ids carried along the cycle.
    pub fn kinds(&self) -> Vec<u32> {
        let mut kinds: Vec<u32> = self.edges.iter().map(|e| e.kind).collect();
        kinds.sort_unstable();
        kinds.dedup();
        kinds
    }

    pub fn min_cell(&self) -> Cell {
        self.edges[0].src
    }

    pub fn max_cell(&self) -> Cell {
        self.edges.iter().map(|e| e.src).max().unwrap()
    }

    /// Summed edge length.
    pub fn length(&self, dims: LatticeDims, metric: Metric) -> f64 {
        self.edges.iter().map(|e| dims.distance(e.src, e.dst, metric)).sum()
    }

    pub(crate) fn cell_indices(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.src.index()).collect()
    }
}

/// Destination map over cells plus the type of the item at each source.
pub(crate) struct MoveMap {
    pub(crate) dest: Vec<usize>,
    pub(crate) kind: Vec<u32>,
}

impl MoveMap {
    pub(crate) fn from_cycles(cycles: &[MoveCycle]) -> Self {
        let n = cycles
            .iter()
            .flat_map(|c| c.edges.iter())
            .map(|e| e.src.index().max(e.dst.index()) + 1)
            .max()
            .unwrap_or(0);
        let mut map = Self {
            dest: vec![UNMAPPED; n],
            kind: vec![0; n],
        };
        for e in cycles.iter().flat_map(|c| c.edges.iter()) {
            map.dest[e.src.index()] = e.dst.index();
            map.kind[e.src.index()] = e.kind;
        }
        map
    }

    pub(crate) fn cycles(&self) -> Vec<MoveCycle> {
        orbits(&self.dest)
            .into_iter()
            .map(|orbit| MoveCycle {
                edges: orbit
                    .iter()
                    .map(|&s| MoveEdge {
                        src: Cell::new(s),
                        dst: Cell::new(self.dest[s]),
                        kind: self.kind[s],
                    })
                    .collect(),
            })
            .collect()
    }
}

/// Phase 1: per type, the k-th misplaced item (left to right) goes to the
/// k-th goal cell of its type that it does not already fill.
pub fn form_cycles(instance: &TypedInstance) -> Result<Vec<MoveCycle>, SolveError> {
    require_line(instance.dims())?;
    let n = instance.dims().len();
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
        for (&s, &d) in src.iter().zip(dst) {
            map.dest[s] = d;
        }
    }
    Ok(map.cycles())
}

/// Phase 2: joins cycles through pairs of same-type, same-direction edges
/// whose spans intersect, by exchanging their destinations. Total edge length
/// is unchanged.
pub fn merge_cycles(cycles: Vec<MoveCycle>) -> Vec<MoveCycle> {
    if cycles.len() < 2 {
        return cycles;
    }
    let mut map = MoveMap::from_cycles(&cycles);
    let mut owner = vec![usize::MAX; map.dest.len()];
    let mut classes: BTreeMap<(u32, bool), Vec<usize>> = BTreeMap::new();
    for (i, c) in cycles.iter().enumerate() {
        for e in &c.edges {
            owner[e.src.index()] = i;
            classes.entry((e.kind, e.dst > e.src)).or_default().push(e.src.index());
        }
    }
    let mut sets = DisjointSets::new(cycles.len());
    for ((_, rightward), mut srcs) in classes {
        // Mirror leftward edges so every edge in the class points right.
        let pos = |x: usize| if rightward { x as i64 } else { -(x as i64) };
        srcs.sort_by_key(|&s| pos(s));
        let mut rep: Option<usize> = None;
        let mut reach = i64::MIN;
        for s in srcs {
            match rep {
                Some(r) if pos(s) <= reach => {
                    if sets.union(owner[r], owner[s]) {
                        map.dest.swap(r, s);
                    }
                    if pos(map.dest[s]) > pos(map.dest[r]) {
                        rep = Some(s);
                    }
                    reach = pos(map.dest[rep.unwrap()]);
                }
                _ => {
                    rep = Some(s);
                    reach = pos(map.dest[s]);
                }
            }
        }
    }
    map.cycles()
}

fn span(e: &MoveEdge) -> (usize, usize) {
    let (a, b) = (e.src.index(), e.dst.index());
    (a.min(b), a.max(b))
}

/// Smallest gap between same-type edge spans of the two cycles, in cells;
/// `None` when they share no type. Merging across a gap `g` adds `2g` travel.
pub fn cycle_distance(a: &MoveCycle, b: &MoveCycle) -> Option<usize> {
    let mut best: Option<usize> = None;
    for ea in &a.edges {
        let (l1, r1) = span(ea);
        for eb in b.edges.iter().filter(|eb| eb.kind == ea.kind) {
            let (l2, r2) = span(eb);
            let gap = l1.max(l2).saturating_sub(r1.min(r2));
            best = Some(best.map_or(gap, |g| g.min(gap)));
        }
    }
    best
}

/// Outcome of the spanning-forest merge phase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MstMerge {
    pub cycles: Vec<MoveCycle>,
    /// Increase in summed edge length, in cells.
    pub added_travel: usize,
    pub merges: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PorOptions {
    /// Skip a merge of range-overlapping cycles when `2·gap·c_t ≥ c_p`.
    pub skip_costly_merges: bool,
}

/// Phase 3: merges cycles along a minimum spanning forest of the
/// [`cycle_distance`] graph.
pub fn merge_cycles_mst(cycles: Vec<MoveCycle>) -> MstMerge {
    merge_cycles_mst_with(cycles, &CostModel::default(), PorOptions::default())
}

pub fn merge_cycles_mst_with(cycles: Vec<MoveCycle>, model: &CostModel, options: PorOptions) -> MstMerge {
    let mut graph = WeightedGraph::undirected(cycles.len());
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if let Some(gap) = cycle_distance(&cycles[i], &cycles[j]) {
                graph
                    .add_edge(i, j, gap as f64)
                    .expect("distinct vertices, finite weight");
            }
        }
    }
    let forest = mst_undirected(&graph);
    let mut map = MoveMap::from_cycles(&cycles);
    let mut members: Vec<Vec<usize>> = cycles.iter().map(MoveCycle::cell_indices).collect();
    let mut sets = DisjointSets::new(cycles.len());
    let mut added = 0;
    let mut merges = 0;
    let d = |a: usize, b: usize| a.abs_diff(b) as i64;
    for edge in forest {
        let (a, b) = (&cycles[edge.from], &cycles[edge.to]);
        if options.skip_costly_merges {
            let overlap = a.min_cell() <= b.max_cell() && b.min_cell() <= a.max_cell();
            if overlap && 2.0 * edge.weight * model.travel_cost() >= model.pick_cost() {
                continue;
            }
        }
        let (ra, rb) = (sets.find(edge.from), sets.find(edge.to));
        let mut best: Option<(usize, usize, i64)> = None;
        for &s1 in &members[ra] {
            let d1 = map.dest[s1];
            for &s2 in members[rb].iter().filter(|&&s2| map.kind[s2] == map.kind[s1]) {
                let d2 = map.dest[s2];
                let delta = d(s1, d2) + d(s2, d1) - d(s1, d1) - d(s2, d2);
                if best.is_none_or(|(_, _, bd)| delta < bd) {
                    best = Some((s1, s2, delta));
                }
            }
        }
        let (s1, s2, delta) = best.expect("forest edges join cycles sharing a type");
        debug_assert!(delta >= 0);
        map.dest.swap(s1, s2);
        added += delta.max(0) as usize;
        merges += 1;
        sets.union(ra, rb);
        let moved = core::mem::take(&mut members[if sets.find(ra) == ra { rb } else { ra }]);
        let root = sets.find(ra);
        members[root].extend(moved);
    }
    MstMerge {
        cycles: map.cycles(),
        added_travel: added,
        merges,
    }
}

/// Phase 4: group-wise sweep with cycle switching over merged cycles.
pub fn group_sweep_cycles_por(cycles: &[MoveCycle]) -> Plan {
    let indexed: Vec<Vec<usize>> = cycles.iter().map(MoveCycle::cell_indices).collect();
    sweep::sweep_switching(&indexed)
}

pub fn opt_plan_por(instance: &TypedInstance, model: &CostModel, options: PorOptions) -> Result<Plan, SolveError> {
    let formed = form_cycles(instance)?;
    let merged = merge_cycles_mst_with(merge_cycles(formed), model, options);
    Ok(group_sweep_cycles_por(&merged.cycles))
}

/// Best-first baseline used as a benchmark denominator.
pub fn greedy_por(instance: &TypedInstance, metric: Metric) -> Result<Plan, SolveError> {
    require_line(instance.dims())?;
    Ok(greedy::best_first(&Instance::Typed(instance.clone()), metric))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plan::simulate;

    fn typed(start: &[u32], goal: &[u32], k: u32) -> TypedInstance {
        let dims = LatticeDims::line(start.len() as u32).unwrap();
        let z = |v: &[u32]| v.iter().map(|t| t - 1).collect();
        TypedInstance::new(dims, k, z(start), z(goal)).unwrap()
    }

    fn run(inst: &TypedInstance, plan: &Plan) -> (usize, f64) {
        let inst = Instance::Typed(inst.clone());
        let r = simulate(&inst, plan, &CostModel::default()).unwrap();
        assert!(inst.is_solved(&r.configuration));
        (r.cost.picks, r.cost.travel)
    }

    fn total_length(cycles: &[MoveCycle]) -> usize {
        cycles
            .iter()
            .flat_map(|c| c.edges.iter())
            .map(|e| e.src.index().abs_diff(e.dst.index()))
            .sum()
    }

    #[test]
    fn solved_instance_needs_nothing() {
        let inst = typed(&[1, 2, 1], &[1, 2, 1], 2);
        assert!(form_cycles(&inst).unwrap().is_empty());
        let plan = opt_plan_por(&inst, &CostModel::default(), PorOptions::default()).unwrap();
        assert!(plan.is_empty());
        assert!(greedy_por(&inst, Metric::Euclidean).unwrap().is_empty());
    }

    #[test]
    fn two_cell_swap() {
        let inst = typed(&[2, 1], &[1, 2], 2);
        let cycles = form_cycles(&inst).unwrap();
        assert_eq!(cycles.len(), 1);
        let e: Vec<(usize, usize)> = cycles[0]
            .edges()
            .iter()
            .map(|e| (e.src.index(), e.dst.index()))
            .collect();
        assert_eq!(e, [(0, 1), (1, 0)]);
        let plan = opt_plan_por(&inst, &CostModel::default(), PorOptions::default()).unwrap();
        assert_eq!(run(&inst, &plan), (3, 2.0));
    }

    #[test]
    fn phase_two_preserves_length() {
        // Two type-2 items both travel right into the type-2 block.
        let inst = typed(&[2, 2, 1, 1, 3, 3], &[1, 1, 2, 2, 3, 3], 3);
        let formed = form_cycles(&inst).unwrap();
        assert_eq!(formed.len(), 2);
        let before = total_length(&formed);
        let merged = merge_cycles(formed);
        assert_eq!(merged.len(), 1);
        assert_eq!(total_length(&merged), before);
    }

    #[test]
    fn distance_between_cycles() {
        let edge = |s: usize, d: usize, kind: u32| MoveEdge {
            src: Cell::new(s),
            dst: Cell::new(d),
            kind,
        };
        let a = MoveCycle {
            edges: vec![edge(0, 1, 0), edge(1, 0, 1)],
        };
        let b = MoveCycle {
            edges: vec![edge(2, 3, 2), edge(3, 2, 3)],
        };
        assert_eq!(cycle_distance(&a, &b), None);
        let c = MoveCycle {
            edges: vec![edge(2, 3, 0), edge(3, 2, 4)],
        };
        assert_eq!(cycle_distance(&a, &c), Some(1));
        let touching = MoveCycle {
            edges: vec![edge(1, 2, 0), edge(2, 1, 4)],
        };
        assert_eq!(cycle_distance(&a, &touching), Some(0));
    }

    #[test]
    fn forest_merge_takes_the_two_short_gaps() {
        // Three 2-cycles, all sharing type 0, spaced with gaps 1, 2, and 3 apart.
        let edge = |s: usize, d: usize, kind: u32| MoveEdge {
            src: Cell::new(s),
            dst: Cell::new(d),
            kind,
        };
        let pair = |s: usize, other: u32| MoveCycle {
            edges: vec![edge(s, s + 1, 0), edge(s + 1, s, other)],
        };
        let cycles = vec![pair(0, 1), pair(2, 2), pair(5, 3)];
        assert_eq!(cycle_distance(&cycles[0], &cycles[1]), Some(1));
        assert_eq!(cycle_distance(&cycles[1], &cycles[2]), Some(2));
        assert_eq!(cycle_distance(&cycles[0], &cycles[2]), Some(4));
        let merged = merge_cycles_mst(cycles);
        assert_eq!(merged.cycles.len(), 1);
        assert_eq!(merged.merges, 2);
        assert_eq!(merged.added_travel, 6);
    }

    #[test]
    fn unmergeable_cycles_stay_apart() {
        let inst = typed(&[2, 1, 4, 3], &[1, 2, 3, 4], 4);
        let out = merge_cycles_mst(merge_cycles(form_cycles(&inst).unwrap()));
        assert_eq!(out.cycles.len(), 2);
        assert_eq!(out.added_travel, 0);
    }
}
