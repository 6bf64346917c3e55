//! Joins cycles into one plan along a minimum arborescence rooted at rest.
//!
//! A child cycle is entered at one of its vertices while its parent is being
//! followed. The parent's held item is parked at the child's entry cell and
//! collected again by the child's closing Swap.

use alloc::vec;
use alloc::vec::Vec;

use crate::graphs::{min_arborescence, WeightedGraph};
use crate::lattice::{Cell, LatticeDims, Metric};
use crate::plan::{Action, Plan};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ArcRule {
    /// Extra travel to visit the entry vertex between two consecutive
    /// vertices of the parent.
    Insertion,
    /// Distance from a parent vertex to the entry vertex.
    NearestVertex,
}

pub(crate) struct Connection {
    pub(crate) plan: Plan,
    pub(crate) weight: f64,
}

struct Frame {
    node: usize,
    entry: usize,
    step: usize,
    child: usize,
    parked: bool,
}

/// `cycles[i]` lists cells in traversal order: the item at `c[j]` belongs at
/// `c[j + 1]`, cyclically.
pub(crate) fn connect(
    dims: LatticeDims,
    metric: Metric,
    rest: Cell,
    cycles: &[Vec<usize>],
    rule: ArcRule,
) -> Connection {
    let k = cycles.len();
    if k == 0 {
        return Connection {
            plan: Plan::default(),
            weight: 0.0,
        };
    }
    let dist = |a: usize, b: usize| dims.distance(Cell::new(a), Cell::new(b), metric);
    let nodes = k + 1;
    // attach[from * nodes + to] = (departure vertex in `from`, entry vertex in `to`)
    let mut attach = vec![(0usize, 0usize); nodes * nodes];
    let mut graph = WeightedGraph::directed(nodes);
    for b in 0..k {
        let mut best = (f64::INFINITY, 0);
        for (e, &w) in cycles[b].iter().enumerate() {
            let d = dist(rest.index(), w);
            let cost = match rule {
                ArcRule::Insertion => 2.0 * d,
                ArcRule::NearestVertex => d,
            };
            if cost < best.0 {
                best = (cost, e);
            }
        }
        graph.add_edge(0, b + 1, best.0).expect("valid arc");
        attach[b + 1] = (0, best.1);

        for a in (0..k).filter(|&a| a != b) {
            let from = &cycles[a];
            let mut best = (f64::INFINITY, 0, 0);
            for (j, &u) in from.iter().enumerate() {
                let v = from[(j + 1) % from.len()];
                let base = dist(u, v);
                for (e, &w) in cycles[b].iter().enumerate() {
                    let cost = match rule {
                        ArcRule::Insertion => (dist(u, w) + dist(w, v) - base).max(0.0),
                        ArcRule::NearestVertex => dist(u, w),
                    };
                    if cost < best.0 {
                        best = (cost, j, e);
                    }
                }
            }
            graph.add_edge(a + 1, b + 1, best.0).expect("valid arc");
            attach[(a + 1) * nodes + b + 1] = (best.1, best.2);
        }
    }

    let tree = min_arborescence(&graph, 0).expect("complete digraph");
    let weight = tree.iter().map(|e| e.weight).sum();
    let mut children: Vec<Vec<Vec<(usize, usize)>>> = Vec::with_capacity(nodes);
    children.push(vec![Vec::new()]);
    children.extend(cycles.iter().map(|c| vec![Vec::new(); c.len()]));
    for e in &tree {
        let (depart, entry) = attach[e.from * nodes + e.to];
        children[e.from][depart].push((e.to - 1, entry));
    }
    for (node, slots) in children.iter_mut().enumerate() {
        for (depart, kids) in slots.iter_mut().enumerate() {
            let origin = if node == 0 {
                rest
            } else {
                Cell::new(cycles[node - 1][depart])
            };
            kids.sort_by_key(|&(c, e)| (dims.distance_key(origin, Cell::new(cycles[c][e]), metric), c));
        }
    }

    let mut plan = Plan::default();
    let mut stack: Vec<Frame> = Vec::new();
    for &(root_child, entry) in &children[0][0] {
        plan.push(Cell::new(cycles[root_child][entry]), Action::Pick);
        stack.push(Frame {
            node: root_child,
            entry,
            step: 0,
            child: 0,
            parked: false,
        });
        while let Some(top) = stack.last_mut() {
            let cycle = &cycles[top.node];
            let vertex = (top.entry + top.step) % cycle.len();
            let kids = &children[top.node + 1][vertex];
            if let Some(&(c, e)) = kids.get(top.child) {
                top.child += 1;
                plan.push(Cell::new(cycles[c][e]), Action::Swap);
                stack.push(Frame {
                    node: c,
                    entry: e,
                    step: 0,
                    child: 0,
                    parked: true,
                });
                continue;
            }
            top.step += 1;
            top.child = 0;
            if top.step == cycle.len() {
                let close = if top.parked { Action::Swap } else { Action::Place };
                plan.push(Cell::new(cycle[top.entry]), close);
                stack.pop();
            } else {
                let next = cycle[(top.entry + top.step) % cycle.len()];
                plan.push(Cell::new(next), Action::Swap);
            }
        }
    }
    Connection { plan, weight }
}
