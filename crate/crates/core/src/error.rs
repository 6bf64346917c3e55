use thiserror::Error;

use crate::lattice::Cell;

/// Reasons an instance fails validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("lattice dimensions must be positive, got {rows}x{cols}")]
    EmptyLattice { rows: u32, cols: u32 },
    #[error("expected {expected} entries, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("label {label} is out of range for {len} cells")]
    LabelOutOfRange { label: u32, len: usize },
    #[error("label {label} appears more than once")]
    DuplicateLabel { label: u32 },
    #[error("a typed instance needs at least one type")]
    NoTypes,
    #[error("type {id} is out of range for k = {k}")]
    TypeOutOfRange { id: u32, k: u32 },
    #[error("start and goal type multisets differ")]
    TypeMismatch,
    #[error("rest {0} lies outside the lattice")]
    RestOutOfRange(Cell),
}

/// The precondition a plan step violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepViolation {
    CellOutOfRange,
    PickWhileHolding,
    PickFromEmptyCell,
    SwapWithEmptyHand,
    SwapAtEmptyCell,
    PlaceWithEmptyHand,
    PlaceOnOccupiedCell,
}

impl core::fmt::Display for StepViolation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let text = match self {
            Self::CellOutOfRange => "cell is outside the lattice",
            Self::PickWhileHolding => "pick while already holding an item",
            Self::PickFromEmptyCell => "pick from an empty cell",
            Self::SwapWithEmptyHand => "swap with an empty hand",
            Self::SwapAtEmptyCell => "swap at an empty cell",
            Self::PlaceWithEmptyHand => "place with an empty hand",
            Self::PlaceOnOccupiedCell => "place on an occupied cell",
        };
        f.write_str(text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanError {
    #[error("step {step} at {cell}: {reason}")]
    IllegalStep {
        step: usize,
        cell: Cell,
        reason: StepViolation,
    },
    #[error("plan ends while still holding an item")]
    HandNotEmptyAtEnd,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("solver needs a one-dimensional lattice, got {rows}x{cols}")]
    NotOneDimensional { rows: u32, cols: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} is not reachable from the root")]
    Unreachable(usize),
    #[error("vertex {vertex} is out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge weights must be finite and nonnegative")]
    InvalidWeight,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("state space too large: about {estimated} states exceed the cap of {cap}")]
    TooLarge { estimated: u128, cap: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("{0} is not a perfect square")]
    NotPerfectSquare(u32),
    #[error("block size must be positive")]
    ZeroBlock,
    #[error("type counts must be positive, one per type, and sum to {expected}")]
    BadCounts { expected: usize },
    #[error("goal pattern is infeasible: {0}")]
    PatternInfeasible(&'static str),
    #[error("point ({row}, {col}) is not strictly inside the lattice")]
    PointOnBoundary { row: u32, col: u32 },
    #[error("clusters around points {0} and {1} overlap")]
    ClusterOverlap(usize, usize),
    #[error("cannot place {requested} non-overlapping clusters")]
    TooManyPoints { requested: usize },
    #[error(transparent)]
    Instance(#[from] InstanceError),
}
