//! Permutation cycles, spanning forests, arborescences, and assignment.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{GraphError, InstanceError};
use crate::instance::check_permutation;
use crate::lattice::Cell;

/// Cycle decomposition of a permutation over cells.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CycleSet {
    pub cycles: Vec<Vec<Cell>>,
    pub fixed_points: Vec<Cell>,
}

/// Each cycle is the orbit of its minimum cell under `i ↦ π_i`, listed from
/// that minimum. Cycles are ordered by minimum cell.
pub fn permutation_cycles(pi: &[u32]) -> Result<CycleSet, InstanceError> {
    check_permutation(pi)?;
    let dest: Vec<usize> = pi.iter().map(|&p| p as usize).collect();
    let mut set = CycleSet::default();
    for orbit in orbits(&dest) {
        if orbit.len() == 1 {
            set.fixed_points.push(Cell::new(orbit[0]));
        } else {
            set.cycles.push(orbit.into_iter().map(Cell::new).collect());
        }
    }
    Ok(set)
}

pub(crate) const UNMAPPED: usize = usize::MAX;

/// Orbits of a partial injective map (`UNMAPPED` entries are skipped), each
/// listed from its minimum, in order of minimum.
pub(crate) fn orbits(dest: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; dest.len()];
    let mut out = Vec::new();
    for start in 0..dest.len() {
        if seen[start] || dest[start] == UNMAPPED {
            continue;
        }
        let mut orbit = Vec::new();
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            orbit.push(at);
            at = dest[at];
        }
        debug_assert_eq!(at, start);
        out.push(orbit);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedEdge {
    pub from: usize,
    pub to: usize,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    vertices: usize,
    directed: bool,
    edges: Vec<WeightedEdge>,
}

impl WeightedGraph {
    pub fn undirected(vertices: usize) -> Self {
        Self {
            vertices,
            directed: false,
            edges: Vec::new(),
        }
    }

    pub fn directed(vertices: usize) -> Self {
        Self {
            vertices,
            directed: true,
            edges: Vec::new(),
        }
    }

    pub fn add_edge(&mut self, from: usize, to: usize, weight: f64) -> Result<(), GraphError> {
        for v in [from, to] {
            if v >= self.vertices {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    count: self.vertices,
                });
            }
        }
        if from == to {
            return Err(GraphError::SelfLoop(from));
        }
        if !(weight.is_finite() && weight >= 0.0) {
            return Err(GraphError::InvalidWeight);
        }
        self.edges.push(WeightedEdge { from, to, weight });
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn edges(&self) -> &[WeightedEdge] {
        &self.edges
    }
}

pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            core::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// Minimum spanning forest by Kruskal's algorithm. Edge direction is ignored.
/// Equal weights resolve toward the lexicographically smaller vertex pair.
/// Edges come back in the order they were accepted.
pub fn mst_undirected(graph: &WeightedGraph) -> Vec<WeightedEdge> {
    let key = |e: &WeightedEdge| (e.from.min(e.to), e.from.max(e.to));
    let mut order: Vec<&WeightedEdge> = graph.edges.iter().collect();
    order.sort_by(|a, b| a.weight.total_cmp(&b.weight).then(key(a).cmp(&key(b))));
    let mut sets = DisjointSets::new(graph.vertices);
    order
        .into_iter()
        .filter(|e| sets.union(e.from, e.to))
        .copied()
        .collect()
}

#[derive(Clone, Copy)]
struct Arc {
    from: usize,
    to: usize,
    weight: f64,
}

/// Minimum spanning arborescence rooted at `root` (Chu-Liu/Edmonds).
/// Equal-weight candidates resolve toward the smaller edge id.
pub fn min_arborescence(graph: &WeightedGraph, root: usize) -> Result<Vec<WeightedEdge>, GraphError> {
    let n = graph.vertices;
    if root >= n {
        return Err(GraphError::VertexOutOfRange { vertex: root, count: n });
    }
    let mut reach = vec![false; n];
    let mut stack = vec![root];
    reach[root] = true;
    let mut out_arcs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in &graph.edges {
        out_arcs[e.from].push(e.to);
        if !graph.directed {
            out_arcs[e.to].push(e.from);
        }
    }
    while let Some(v) = stack.pop() {
        for &w in &out_arcs[v] {
            if !reach[w] {
                reach[w] = true;
                stack.push(w);
            }
        }
    }
    if let Some(v) = reach.iter().position(|r| !r) {
        return Err(GraphError::Unreachable(v));
    }

    let mut arcs: Vec<Arc> = Vec::with_capacity(graph.edges.len());
    let mut ids: Vec<usize> = Vec::with_capacity(graph.edges.len());
    for (id, e) in graph.edges.iter().enumerate() {
        arcs.push(Arc {
            from: e.from,
            to: e.to,
            weight: e.weight,
        });
        ids.push(id);
        if !graph.directed {
            arcs.push(Arc {
                from: e.to,
                to: e.from,
                weight: e.weight,
            });
            ids.push(id);
        }
    }
    let chosen = contract(n, root, &arcs);
    Ok(chosen
        .into_iter()
        .map(|a| {
            let e = graph.edges[ids[a]];
            let arc = arcs[a];
            WeightedEdge {
                from: arc.from,
                to: arc.to,
                weight: e.weight,
            }
        })
        .collect())
}

/// One level of the contraction. Returns indices into `arcs`.
fn contract(n: usize, root: usize, arcs: &[Arc]) -> Vec<usize> {
    let mut best: Vec<Option<usize>> = vec![None; n];
    for (i, a) in arcs.iter().enumerate() {
        if a.to == root || a.from == a.to {
            continue;
        }
        match best[a.to] {
            Some(b) if arcs[b].weight <= a.weight => {}
            _ => best[a.to] = Some(i),
        }
    }

    // Find cycles among the chosen in-arcs.
    let mut cycle_of = vec![usize::MAX; n];
    let mut stamp = vec![usize::MAX; n];
    let mut cycles = 0;
    for start in 0..n {
        let mut v = start;
        while v != root && stamp[v] == usize::MAX && cycle_of[v] == usize::MAX {
            stamp[v] = start;
            v = arcs[best[v].expect("reachable vertex has an in-arc")].from;
        }
        if v != root && stamp[v] == start && cycle_of[v] == usize::MAX {
            let mut u = v;
            loop {
                cycle_of[u] = cycles;
                u = arcs[best[u].unwrap()].from;
                if u == v {
                    break;
                }
            }
            cycles += 1;
        }
    }
    if cycles == 0 {
        return (0..n).filter(|&v| v != root).map(|v| best[v].unwrap()).collect();
    }

    let mut node = vec![usize::MAX; n];
    let mut next = cycles;
    for v in 0..n {
        node[v] = if cycle_of[v] == usize::MAX {
            next += 1;
            next - 1
        } else {
            cycle_of[v]
        };
    }
    let mut sub_arcs = Vec::new();
    let mut origin = Vec::new();
    for (i, a) in arcs.iter().enumerate() {
        let (u, v) = (node[a.from], node[a.to]);
        if u == v {
            continue;
        }
        let mut weight = a.weight;
        if cycle_of[a.to] != usize::MAX {
            weight -= arcs[best[a.to].unwrap()].weight;
        }
        sub_arcs.push(Arc { from: u, to: v, weight });
        origin.push(i);
    }
    let picked: Vec<usize> = contract(next, node[root], &sub_arcs)
        .into_iter()
        .map(|j| origin[j])
        .collect();

    let mut entered = vec![false; n];
    for &i in &picked {
        if cycle_of[arcs[i].to] != usize::MAX {
            entered[arcs[i].to] = true;
        }
    }
    let mut result = picked;
    for v in 0..n {
        if cycle_of[v] != usize::MAX && !entered[v] {
            result.push(best[v].unwrap());
        }
    }
    result
}

/// Result of [`min_cost_assignment`]: row `i` is matched to `columns[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Assignment {
    pub columns: Vec<usize>,
    pub cost: f64,
}

/// Minimum-cost perfect matching on a square `n × n` row-major cost matrix
/// (Hungarian method with potentials, O(n³)).
pub fn min_cost_assignment(cost: &[f64], n: usize) -> Assignment {
    assert_eq!(cost.len(), n * n, "cost matrix must be n × n");
    let at = |i: usize, j: usize| cost[(i - 1) * n + (j - 1)];
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut row_of = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        row_of[0] = i;
        let mut j0 = 0;
        let mut min_v = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let reduced = at(i0, j) - u[i0] - v[j];
                if reduced < min_v[j] {
                    min_v[j] = reduced;
                    way[j] = j0;
                }
                if min_v[j] < delta {
                    delta = min_v[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[row_of[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_v[j] -= delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        while j0 != 0 {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
        }
    }
    let mut columns = vec![0; n];
    for j in 1..=n {
        columns[row_of[j] - 1] = j - 1;
    }
    let total = columns.iter().enumerate().map(|(i, &j)| cost[i * n + j]).sum();
    Assignment { columns, cost: total }
}
