//! Pick-n-swap rearrangement planning for items stored on 1D and 2D lattices.
//!
//! A single end-effector starts at a rest cell, moves between cells, and at
//! each visited cell picks, swaps, or places one item. Plans are priced as
//! `picks·c_p + travel·c_t`.
//!
//! - [`lor`] and [`por`] plan on a line: fully labeled items (exactly optimal)
//!   and typed, interchangeable items.
//! - [`lattice2d`] plans on grids.
//! - [`oracle`] finds exact optima of small instances by state-space search.
//! - [`gen`] produces seeded random instances.
//!
//! Everything is `no_std` with `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod connect;
pub mod error;
pub mod gen;
pub mod graphs;
mod greedy;
pub mod instance;
pub mod lattice;
pub mod lattice2d;
pub mod lor;
pub mod oracle;
pub mod plan;
pub mod por;
mod sweep;

pub use error::{GenError, GraphError, InstanceError, OracleError, PlanError, SolveError, StepViolation};
pub use instance::{Instance, LabeledInstance, TypedInstance};
pub use lattice::{Cell, CostModel, LatticeDims, Metric};
pub use plan::{plan_cost, reverse_plan, simulate, solves, Action, Execution, Plan, PlanCost, PlanStep};
