//! Fully labeled rearrangement on a line.

use alloc::vec::Vec;

use crate::error::SolveError;
use crate::graphs::{permutation_cycles, CycleSet};
use crate::instance::LabeledInstance;
use crate::lattice::{Cell, LatticeDims};
use crate::plan::Plan;
use crate::sweep;

/// Cycles whose index ranges chain-overlap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleGroup {
    /// Ordered by minimum cell.
    pub cycles: Vec<Vec<Cell>>,
    pub range: (Cell, Cell),
}

pub(crate) fn require_line(dims: LatticeDims) -> Result<(), SolveError> {
    if dims.is_line() {
        Ok(())
    } else {
        Err(SolveError::NotOneDimensional {
            rows: dims.rows(),
            cols: dims.cols(),
        })
    }
}

fn index_cycles(instance: &LabeledInstance) -> Vec<Vec<usize>> {
    permutation_cycles(instance.pi())
        .expect("instance holds a valid permutation")
        .cycles
        .into_iter()
        .map(|c| c.into_iter().map(Cell::index).collect())
        .collect()
}

/// Resolves cycles left to right, each to completion before the next.
pub fn sweep_cycles_lor(instance: &LabeledInstance) -> Result<Plan, SolveError> {
    require_line(instance.dims())?;
    Ok(sweep::sweep_sequential(&index_cycles(instance)))
}

pub fn group_cycles(cycles: &CycleSet) -> Vec<CycleGroup> {
    let indexed: Vec<Vec<usize>> = cycles
        .cycles
        .iter()
        .map(|c| c.iter().map(|x| x.index()).collect())
        .collect();
    sweep::group_indices(&indexed)
        .into_iter()
        .map(|members| {
            let lo = members.iter().map(|&i| indexed[i][0]).min().unwrap();
            let hi = members.iter().map(|&i| sweep::range(&indexed[i]).1).max().unwrap();
            CycleGroup {
                cycles: members.iter().map(|&i| cycles.cycles[i].clone()).collect(),
                range: (Cell::new(lo), Cell::new(hi)),
            }
        })
        .collect()
}

/// Travel- and pick-optimal plan: cycle grouping plus cycle switching.
pub fn opt_plan_lor(instance: &LabeledInstance) -> Result<Plan, SolveError> {
    require_line(instance.dims())?;
    Ok(sweep::sweep_switching(&index_cycles(instance)))
}
