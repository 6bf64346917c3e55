//! Exhaustive optimum for small instances.
//!
//! A* over states (configuration, held item, end-effector cell). Each
//! transition flies to a cell and performs one action there. The heuristic
//! counts cells still holding the wrong token and the distance back to rest;
//! both parts are consistent, so the first goal popped is optimal.

use alloc::collections::{BTreeMap, BinaryHeap};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};

use crate::error::OracleError;
use crate::graphs::DisjointSets;
use crate::instance::Instance;
use crate::lattice::{Cell, CostModel};
use crate::plan::{Action, Plan, PlanStep};

pub const DEFAULT_STATE_CAP: u64 = 50_000_000;

/// Largest lattice the packed state encoding supports.
pub const MAX_CELLS: usize = 23;

const TRAVEL_QUANTUM: f64 = 1e-9;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Objective {
    /// Fewest picks, then least travel.
    #[default]
    Lexicographic,
    /// Least `picks·c_p + travel·c_t`.
    WeightedTotal,
}

/// Pick count and travel, ordered lexicographically with a travel tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LexCost {
    pub picks: usize,
    pub travel: f64,
}

impl LexCost {
    pub fn compare(&self, other: &Self, tolerance: f64) -> Ordering {
        self.picks.cmp(&other.picks).then_with(|| {
            if (self.travel - other.travel).abs() <= tolerance {
                Ordering::Equal
            } else {
                self.travel.total_cmp(&other.travel)
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleSolution {
    pub plan: Plan,
    pub cost: LexCost,
    pub expanded: usize,
}

/// `(number of start arrangements) × (n + 1) × n`, saturating.
pub fn estimated_states(instance: &Instance) -> u128 {
    let n = instance.dims().len() as u128;
    let mut counts = vec![0u128; instance.token_count()];
    for &t in instance.start_tokens() {
        counts[t as usize] += 1;
    }
    // Multinomial n! / Π c_t!, built incrementally to stay exact.
    let mut arrangements: u128 = 1;
    let mut placed: u128 = 0;
    for c in counts {
        for i in 1..=c {
            placed += 1;
            arrangements = arrangements.saturating_mul(placed) / i;
        }
    }
    arrangements.saturating_mul(n + 1).saturating_mul(n)
}

struct Node {
    key: u128,
    parent: u32,
    step: Option<PlanStep>,
    picks: u32,
    travel: f64,
}

const TERMINAL: u128 = u128::MAX;
const BITS: u32 = 5;
const MASK: u128 = (1 << BITS) - 1;

struct Codec {
    n: usize,
}

impl Codec {
    fn encode(&self, slots: &[u8], hand: u8, at: usize) -> u128 {
        let mut key = 0u128;
        for (i, &s) in slots.iter().enumerate() {
            key |= u128::from(s) << (BITS * i as u32);
        }
        let base = BITS * self.n as u32;
        key | u128::from(hand) << base | (at as u128) << (base + BITS)
    }

    fn decode(&self, key: u128, slots: &mut [u8]) -> (u8, usize) {
        for (i, s) in slots.iter_mut().enumerate() {
            *s = ((key >> (BITS * i as u32)) & MASK) as u8;
        }
        let base = BITS * self.n as u32;
        (((key >> base) & MASK) as u8, ((key >> (base + BITS)) & MASK) as usize)
    }
}

/// Provably optimal plan under `objective`, or `TooLarge` past `cap` states.
pub fn oracle_optimal(
    instance: &Instance,
    model: &CostModel,
    objective: Objective,
    cap: u64,
) -> Result<OracleSolution, OracleError> {
    let dims = instance.dims();
    let n = dims.len();
    let estimated = estimated_states(instance);
    if n > MAX_CELLS || estimated > u128::from(cap) {
        return Err(OracleError::TooLarge { estimated, cap });
    }
    let codec = Codec { n };
    // Slot values are token + 1; zero marks the hole.
    let goal: Vec<u8> = dims.cells().map(|c| instance.goal_token(c) as u8 + 1).collect();
    let start: Vec<u8> = instance.start_tokens().iter().map(|&t| t as u8 + 1).collect();
    let rest = instance.rest();
    let dist = |a: usize, b: usize| dims.distance(Cell::new(a), Cell::new(b), model.metric());
    let quantize = |x: f64| libm::round(x / TRAVEL_QUANTUM) as i64;
    let score = |picks: u32, travel: f64| -> (u64, i64) {
        match objective {
            Objective::Lexicographic => (u64::from(picks), quantize(travel)),
            Objective::WeightedTotal => (
                0,
                quantize(f64::from(picks) * model.pick_cost() + travel * model.travel_cost()),
            ),
        }
    };
    let heuristic = |slots: &[u8], hand: u8, at: usize| -> (u32, f64) {
        let wrong = slots.iter().zip(&goal).filter(|(s, g)| s != g).count() as u32;
        let extra = u32::from(hand == 0 && wrong > 0);
        (wrong + extra, dist(at, rest.index()))
    };

    let mut nodes = vec![Node {
        key: codec.encode(&start, 0, rest.index()),
        parent: u32::MAX,
        step: None,
        picks: 0,
        travel: 0.0,
    }];
    let mut best: BTreeMap<u128, u32> = BTreeMap::new();
    best.insert(nodes[0].key, 0);
    let mut closed = vec![false];
    let mut heap = BinaryHeap::new();
    let (hp, ht) = heuristic(&start, 0, rest.index());
    let (p, t) = score(hp, ht);
    heap.push(Reverse((p, t, nodes[0].key, 0u32)));

    let mut slots = vec![0u8; n];
    let mut expanded = 0;
    while let Some(Reverse((_, _, key, idx))) = heap.pop() {
        if closed[idx as usize] || best.get(&key) != Some(&idx) {
            continue;
        }
        closed[idx as usize] = true;
        if key == TERMINAL {
            return Ok(reconstruct(&nodes, idx, expanded));
        }
        expanded += 1;
        let (picks, travel) = (nodes[idx as usize].picks, nodes[idx as usize].travel);
        let (hand, at) = codec.decode(key, &mut slots);

        let mut relax = |next_key: u128, step: Option<PlanStep>, picks: u32, travel: f64, h: (u32, f64)| {
            let g = score(picks, travel);
            if let Some(&old) = best.get(&next_key) {
                let o = &nodes[old as usize];
                if closed[old as usize] || score(o.picks, o.travel) <= g {
                    return;
                }
            }
            let id = nodes.len() as u32;
            nodes.push(Node {
                key: next_key,
                parent: idx,
                step,
                picks,
                travel,
            });
            closed.push(false);
            best.insert(next_key, id);
            let f = score(picks + h.0, travel + h.1);
            heap.push(Reverse((f.0, f.1, next_key, id)));
        };

        if hand == 0 && slots == goal {
            relax(TERMINAL, None, picks, travel + dist(at, rest.index()), (0, 0.0));
            continue;
        }
        for c in 0..n {
            let here = slots[c];
            let action = match (hand, here) {
                (0, 0) => continue,
                (0, _) => Action::Pick,
                (_, 0) => Action::Place,
                (h, s) if h == s => continue,
                _ => Action::Swap,
            };
            slots[c] = hand;
            let next_key = codec.encode(&slots, here, c);
            let h = heuristic(&slots, here, c);
            slots[c] = here;
            relax(
                next_key,
                Some(PlanStep::new(Cell::new(c), action)),
                picks + 1,
                travel + dist(at, c),
                h,
            );
        }
    }
    unreachable!("the goal configuration is always reachable")
}

fn reconstruct(nodes: &[Node], terminal: u32, expanded: usize) -> OracleSolution {
    let end = &nodes[terminal as usize];
    let mut steps = Vec::new();
    let mut at = end.parent;
    while at != u32::MAX {
        let node = &nodes[at as usize];
        steps.extend(node.step);
        at = node.parent;
    }
    steps.reverse();
    OracleSolution {
        plan: Plan::new(steps),
        cost: LexCost {
            picks: end.picks as usize,
            travel: end.travel,
        },
        expanded,
    }
}

/// Minimum pick count in closed form: every misplaced item once, plus one per
/// connected component of the start-token → goal-token graph over misplaced
/// cells. For labeled instances the components are the permutation's cycles.
pub fn oracle_min_picks(instance: &Instance) -> usize {
    let tokens = instance.start_tokens();
    let mut sets = DisjointSets::new(instance.token_count());
    let mut touched = vec![false; instance.token_count()];
    let mut misplaced = 0;
    for c in instance.dims().cells() {
        let (s, g) = (tokens[c.index()] as usize, instance.goal_token(c) as usize);
        if s != g {
            misplaced += 1;
            touched[s] = true;
            touched[g] = true;
            sets.union(s, g);
        }
    }
    let components = (0..touched.len()).filter(|&t| touched[t] && sets.find(t) == t).count();
    misplaced + components
}
