use alloc::vec::Vec;

use crate::instance::Instance;
use crate::lattice::{Cell, Metric};
use crate::plan::{Action, Plan};

/// Best-first baseline.
///
/// With an empty hand, pick the nearest misplaced item. While holding an item,
/// go to the nearest cell that wants its token and does not already hold one
/// (the hole counts), then place or swap. Ties go to the smaller cell index.
pub(crate) fn best_first(instance: &Instance, metric: Metric) -> Plan {
    let dims = instance.dims();
    let goal = instance.goal_tokens();
    let mut slots: Vec<Option<u32>> = instance.start_tokens().iter().map(|&t| Some(t)).collect();
    let mut hand: Option<u32> = None;
    let mut at = instance.rest();
    let mut plan = Plan::default();

    let nearest = |at: Cell, wanted: &dyn Fn(usize) -> bool| {
        (0..goal.len())
            .filter(|&c| wanted(c))
            .min_by_key(|&c| (dims.distance_key(at, Cell::new(c), metric), c))
    };

    loop {
        let target = match hand {
            None => nearest(at, &|c| slots[c].is_some_and(|t| t != goal[c])),
            Some(t) => nearest(at, &|c| goal[c] == t && slots[c] != Some(t)),
        };
        let Some(c) = target else {
            break;
        };
        let cell = Cell::new(c);
        match hand {
            None => {
                hand = slots[c].take();
                plan.push(cell, Action::Pick);
            }
            Some(t) => match slots[c].replace(t) {
                None => {
                    hand = None;
                    plan.push(cell, Action::Place);
                }
                Some(other) => {
                    hand = Some(other);
                    plan.push(cell, Action::Swap);
                }
            },
        }
        at = cell;
    }
    plan
}
