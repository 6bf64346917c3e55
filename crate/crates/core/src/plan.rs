//! Plans, the cost functional, and the simulator every planner is checked against.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{PlanError, StepViolation};
use crate::instance::Instance;
use crate::lattice::{Cell, CostModel, LatticeDims, Metric};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    /// Pick up the item at the cell with an empty hand.
    Pick,
    /// Exchange the held item with the item at the cell.
    Swap,
    /// Put the held item into the empty cell.
    Place,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PlanStep {
    pub cell: Cell,
    pub action: Action,
}

impl PlanStep {
    pub const fn new(cell: Cell, action: Action) -> Self {
        Self { cell, action }
    }
}

/// Ordered pick-n-swap steps. The end-effector starts and ends at the rest cell.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Plan {
    steps: Vec<PlanStep>,
}

impl Plan {
    pub fn new(steps: Vec<PlanStep>) -> Self {
        Self { steps }
    }

    pub fn steps(&self) -> &[PlanStep] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<PlanStep> {
        self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, cell: Cell, action: Action) {
        self.steps.push(PlanStep::new(cell, action));
    }

    /// `self` followed by `other`, joined at the rest cell.
    pub fn concat(&self, other: &Plan) -> Plan {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Plan { steps }
    }

    /// Travel along rest → steps → rest, without checking legality.
    pub fn travel(&self, dims: LatticeDims, rest: Cell, metric: Metric) -> f64 {
        let mut at = rest;
        let mut total = 0.0;
        for step in &self.steps {
            total += dims.distance(at, step.cell, metric);
            at = step.cell;
        }
        total + dims.distance(at, rest, metric)
    }
}

impl FromIterator<PlanStep> for Plan {
    fn from_iter<I: IntoIterator<Item = PlanStep>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

/// Cost of a plan: `total = picks·c_p + travel·c_t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanCost {
    pub picks: usize,
    pub travel: f64,
    pub total: f64,
}

impl PlanCost {
    pub fn new(picks: usize, travel: f64, model: &CostModel) -> Self {
        Self {
            picks,
            travel,
            total: picks as f64 * model.pick_cost() + travel * model.travel_cost(),
        }
    }
}

/// Outcome of a successful simulation.
#[derive(Debug, Clone, PartialEq)]
pub struct Execution {
    /// Token at each cell after the last step.
    pub configuration: Vec<u32>,
    pub cost: PlanCost,
    /// Distance each item was carried, indexed by the cell it started in.
    pub carried: Vec<f64>,
}

/// Executes `plan` on `instance` from an empty hand at the rest cell.
pub fn simulate(instance: &Instance, plan: &Plan, model: &CostModel) -> Result<Execution, PlanError> {
    let dims = instance.dims();
    let tokens = instance.start_tokens();
    // Items are tracked by the cell they start in so typed tokens stay distinct.
    let mut slots: Vec<Option<u32>> = (0..dims.len() as u32).map(Some).collect();
    let mut carried = vec![0.0; dims.len()];
    let mut hand: Option<u32> = None;
    let mut at = instance.rest();
    let mut travel = 0.0;

    for (step, &PlanStep { cell, action }) in plan.steps().iter().enumerate() {
        let fail = |reason| PlanError::IllegalStep { step, cell, reason };
        if !dims.contains(cell) {
            return Err(fail(StepViolation::CellOutOfRange));
        }
        let leg = dims.distance(at, cell, model.metric());
        travel += leg;
        if let Some(item) = hand {
            carried[item as usize] += leg;
        }
        at = cell;
        let slot = &mut slots[cell.index()];
        match action {
            Action::Pick => {
                if hand.is_some() {
                    return Err(fail(StepViolation::PickWhileHolding));
                }
                hand = Some(slot.take().ok_or(fail(StepViolation::PickFromEmptyCell))?);
            }
            Action::Swap => {
                let held = hand.ok_or(fail(StepViolation::SwapWithEmptyHand))?;
                hand = Some(slot.replace(held).ok_or(fail(StepViolation::SwapAtEmptyCell))?);
            }
            Action::Place => {
                let held = hand.take().ok_or(fail(StepViolation::PlaceWithEmptyHand))?;
                if slot.is_some() {
                    return Err(fail(StepViolation::PlaceOnOccupiedCell));
                }
                *slot = Some(held);
            }
        }
    }
    if hand.is_some() {
        return Err(PlanError::HandNotEmptyAtEnd);
    }
    travel += dims.distance(at, instance.rest(), model.metric());
    let configuration = slots
        .iter()
        .map(|s| tokens[s.expect("empty hand implies full lattice") as usize])
        .collect();
    Ok(Execution {
        configuration,
        cost: PlanCost::new(plan.len(), travel, model),
        carried,
    })
}

pub fn plan_cost(instance: &Instance, plan: &Plan, model: &CostModel) -> Result<PlanCost, PlanError> {
    simulate(instance, plan, model).map(|e| e.cost)
}

/// Whether `plan` is legal on `instance` and leaves it solved.
pub fn solves(instance: &Instance, plan: &Plan, model: &CostModel) -> bool {
    simulate(instance, plan, model).is_ok_and(|e| instance.is_solved(&e.configuration))
}

/// The plan run backwards: valid on the start/goal-swapped instance at equal cost.
pub fn reverse_plan(plan: &Plan) -> Plan {
    plan.steps()
        .iter()
        .rev()
        .map(|s| {
            let action = match s.action {
                Action::Pick => Action::Place,
                Action::Place => Action::Pick,
                Action::Swap => Action::Swap,
            };
            PlanStep::new(s.cell, action)
        })
        .collect()
}
