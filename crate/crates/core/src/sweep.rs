//! One-dimensional cycle sweeping over cell-index cycles.
//!
//! A cycle is a list of cells starting at its minimum; the item at `c[j]`
//! belongs at `c[j + 1]` (cyclically).

use alloc::vec;
use alloc::vec::Vec;

use crate::lattice::Cell;
use crate::plan::{Action, Plan};

/// Indices of `cycles` grouped by chain-overlapping ranges, left to right.
/// Members of a group are ordered by minimum cell.
pub(crate) fn group_indices(cycles: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..cycles.len()).collect();
    order.sort_by_key(|&i| cycles[i][0]);
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut reach = 0;
    for i in order {
        let (lo, hi) = range(&cycles[i]);
        match groups.last_mut() {
            Some(g) if lo < reach => {
                g.push(i);
                reach = reach.max(hi);
            }
            _ => {
                groups.push(vec![i]);
                reach = hi;
            }
        }
    }
    groups
}

pub(crate) fn range(cycle: &[usize]) -> (usize, usize) {
    (cycle[0], cycle.iter().copied().max().unwrap_or(cycle[0]))
}

/// Resolves cycles one at a time in order of their minimum cell.
pub(crate) fn sweep_sequential(cycles: &[Vec<usize>]) -> Plan {
    let mut order: Vec<usize> = (0..cycles.len()).collect();
    order.sort_by_key(|&i| cycles[i][0]);
    let mut plan = Plan::default();
    for i in order {
        let c = &cycles[i];
        plan.push(Cell::new(c[0]), Action::Pick);
        for &cell in &c[1..] {
            plan.push(Cell::new(cell), Action::Swap);
        }
        plan.push(Cell::new(c[0]), Action::Place);
    }
    plan
}

struct Frame {
    cycle: usize,
    next: usize,
    parked: bool,
}

/// Group-wise sweep with cycle switching.
///
/// While following a cycle toward target `g`, the leftmost unstarted cycle of
/// the same group is entered as soon as `g` lies past its minimum: the held
/// item is parked there with a Swap and retrieved by that cycle's closing Swap.
/// On reaching the right end of a group the next group is entered the same way.
pub(crate) fn sweep_switching(cycles: &[Vec<usize>]) -> Plan {
    let groups = group_indices(cycles);
    let mut plan = Plan::default();
    let Some(first) = groups.first() else {
        return plan;
    };
    let mut group_of = vec![0; cycles.len()];
    let mut group_max = Vec::with_capacity(groups.len());
    for (g, members) in groups.iter().enumerate() {
        for &i in members {
            group_of[i] = g;
        }
        group_max.push(members.iter().map(|&i| range(&cycles[i]).1).max().unwrap());
    }
    let mut cursor = vec![0usize; groups.len()];
    let mut switched = vec![false; groups.len()];

    let mut stack = vec![Frame {
        cycle: first[0],
        next: 1,
        parked: false,
    }];
    cursor[0] = 1;
    plan.push(Cell::new(cycles[first[0]][0]), Action::Pick);

    while let Some(top) = stack.last_mut() {
        let cycle = &cycles[top.cycle];
        if top.next == cycle.len() {
            let close = if top.parked { Action::Swap } else { Action::Place };
            plan.push(Cell::new(cycle[0]), close);
            stack.pop();
            continue;
        }
        let target = cycle[top.next];
        let g = group_of[top.cycle];
        let pending = groups[g].get(cursor[g]).copied();
        let enter = match pending {
            Some(c) if target > cycles[c][0] => {
                cursor[g] += 1;
                Some(c)
            }
            _ if target == group_max[g] && !switched[g] && g + 1 < groups.len() => {
                switched[g] = true;
                cursor[g + 1] = 1;
                Some(groups[g + 1][0])
            }
            _ => None,
        };
        match enter {
            Some(c) => {
                plan.push(Cell::new(cycles[c][0]), Action::Swap);
                stack.push(Frame {
                    cycle: c,
                    next: 1,
                    parked: true,
                });
            }
            None => {
                plan.push(Cell::new(target), Action::Swap);
                top.next += 1;
            }
        }
    }
    plan
}
