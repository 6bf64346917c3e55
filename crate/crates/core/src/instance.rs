//! Start/goal pairs on a lattice.
//!
//! Labels and type ids are zero-based here. The JSON formats shift them by one.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::InstanceError;
use crate::lattice::{Cell, LatticeDims};

/// Fully labeled instance: `pi[i]` is the label of the item starting at cell
/// `i`, and item `j` belongs at cell `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledInstance {
    dims: LatticeDims,
    pi: Vec<u32>,
    rest: Cell,
}

impl LabeledInstance {
    pub fn new(dims: LatticeDims, pi: Vec<u32>) -> Result<Self, InstanceError> {
        check_permutation(&pi)?;
        if pi.len() != dims.len() {
            return Err(InstanceError::LengthMismatch {
                expected: dims.len(),
                actual: pi.len(),
            });
        }
        Ok(Self {
            dims,
            pi,
            rest: Cell::new(0),
        })
    }

    /// The identity instance.
    pub fn identity(dims: LatticeDims) -> Self {
        Self {
            dims,
            pi: (0..dims.len() as u32).collect(),
            rest: Cell::new(0),
        }
    }

    pub fn with_rest(mut self, rest: Cell) -> Result<Self, InstanceError> {
        if !self.dims.contains(rest) {
            return Err(InstanceError::RestOutOfRange(rest));
        }
        self.rest = rest;
        Ok(self)
    }

    pub fn dims(&self) -> LatticeDims {
        self.dims
    }

    pub fn pi(&self) -> &[u32] {
        &self.pi
    }

    pub fn rest(&self) -> Cell {
        self.rest
    }

    /// `inverse()[j]` is the cell where item `j` starts.
    pub fn inverse(&self) -> Vec<u32> {
        let mut inv = vec![0; self.pi.len()];
        for (cell, &label) in self.pi.iter().enumerate() {
            inv[label as usize] = cell as u32;
        }
        inv
    }

    pub fn misplaced(&self) -> usize {
        self.pi.iter().enumerate().filter(|&(i, &p)| p as usize != i).count()
    }

    /// Start and goal exchanged: the instance given by `π⁻¹`.
    pub fn reversed(&self) -> Self {
        Self {
            dims: self.dims,
            pi: self.inverse(),
            rest: self.rest,
        }
    }
}

/// Partially labeled instance over `k` interchangeable item types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedInstance {
    dims: LatticeDims,
    k: u32,
    start: Vec<u32>,
    goal: Vec<u32>,
    rest: Cell,
}

impl TypedInstance {
    pub fn new(dims: LatticeDims, k: u32, start: Vec<u32>, goal: Vec<u32>) -> Result<Self, InstanceError> {
        if k == 0 {
            return Err(InstanceError::NoTypes);
        }
        for tokens in [&start, &goal] {
            if tokens.len() != dims.len() {
                return Err(InstanceError::LengthMismatch {
                    expected: dims.len(),
                    actual: tokens.len(),
                });
            }
            if let Some(&id) = tokens.iter().find(|&&t| t >= k) {
                return Err(InstanceError::TypeOutOfRange { id, k });
            }
        }
        if type_counts(&start, k) != type_counts(&goal, k) {
            return Err(InstanceError::TypeMismatch);
        }
        Ok(Self {
            dims,
            k,
            start,
            goal,
            rest: Cell::new(0),
        })
    }

    pub fn with_rest(mut self, rest: Cell) -> Result<Self, InstanceError> {
        if !self.dims.contains(rest) {
            return Err(InstanceError::RestOutOfRange(rest));
        }
        self.rest = rest;
        Ok(self)
    }

    pub fn dims(&self) -> LatticeDims {
        self.dims
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn start(&self) -> &[u32] {
        &self.start
    }

    pub fn goal(&self) -> &[u32] {
        &self.goal
    }

    pub fn rest(&self) -> Cell {
        self.rest
    }

    pub fn counts(&self) -> Vec<usize> {
        type_counts(&self.start, self.k)
    }

    pub fn misplaced(&self) -> usize {
        self.start.iter().zip(&self.goal).filter(|(s, g)| s != g).count()
    }

    pub fn reversed(&self) -> Self {
        Self {
            dims: self.dims,
            k: self.k,
            start: self.goal.clone(),
            goal: self.start.clone(),
            rest: self.rest,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Labeled(LabeledInstance),
    Typed(TypedInstance),
}

impl Instance {
    pub fn dims(&self) -> LatticeDims {
        match self {
            Self::Labeled(i) => i.dims(),
            Self::Typed(i) => i.dims(),
        }
    }

    pub fn rest(&self) -> Cell {
        match self {
            Self::Labeled(i) => i.rest(),
            Self::Typed(i) => i.rest(),
        }
    }

    /// Token at each cell of the start configuration: a label or a type id.
    pub fn start_tokens(&self) -> &[u32] {
        match self {
            Self::Labeled(i) => i.pi(),
            Self::Typed(i) => i.start(),
        }
    }

    /// Token that belongs at `cell` in the goal configuration.
    pub fn goal_token(&self, cell: Cell) -> u32 {
        match self {
            Self::Labeled(_) => cell.index() as u32,
            Self::Typed(i) => i.goal()[cell.index()],
        }
    }

    pub fn goal_tokens(&self) -> Vec<u32> {
        self.dims().cells().map(|c| self.goal_token(c)).collect()
    }

    /// Number of distinct tokens.
    pub fn token_count(&self) -> usize {
        match self {
            Self::Labeled(i) => i.dims().len(),
            Self::Typed(i) => i.k() as usize,
        }
    }

    pub fn misplaced(&self) -> usize {
        match self {
            Self::Labeled(i) => i.misplaced(),
            Self::Typed(i) => i.misplaced(),
        }
    }

    pub fn reversed(&self) -> Self {
        match self {
            Self::Labeled(i) => Self::Labeled(i.reversed()),
            Self::Typed(i) => Self::Typed(i.reversed()),
        }
    }

    /// Whether `configuration` (one token per cell) matches the goal.
    pub fn is_solved(&self, configuration: &[u32]) -> bool {
        configuration.len() == self.dims().len()
            && self
                .dims()
                .cells()
                .all(|c| configuration[c.index()] == self.goal_token(c))
    }
}

impl From<LabeledInstance> for Instance {
    fn from(i: LabeledInstance) -> Self {
        Self::Labeled(i)
    }
}

impl From<TypedInstance> for Instance {
    fn from(i: TypedInstance) -> Self {
        Self::Typed(i)
    }
}

pub(crate) fn check_permutation(pi: &[u32]) -> Result<(), InstanceError> {
    let mut seen = vec![false; pi.len()];
    for &label in pi {
        let slot = seen
            .get_mut(label as usize)
            .ok_or(InstanceError::LabelOutOfRange { label, len: pi.len() })?;
        if *slot {
            return Err(InstanceError::DuplicateLabel { label });
        }
        *slot = true;
    }
    Ok(())
}

fn type_counts(tokens: &[u32], k: u32) -> Vec<usize> {
    let mut counts = vec![0; k as usize];
    for &t in tokens {
        counts[t as usize] += 1;
    }
    counts
}
