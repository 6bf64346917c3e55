//! Lattice geometry and the cost model.

use core::fmt;

use crate::error::InstanceError;

/// Shape of an `rows × cols` lattice. A 1D lattice has a single column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeDims {
    rows: u32,
    cols: u32,
}

impl LatticeDims {
    pub fn new(rows: u32, cols: u32) -> Result<Self, InstanceError> {
        if rows == 0 || cols == 0 {
            return Err(InstanceError::EmptyLattice { rows, cols });
        }
        Ok(Self { rows, cols })
    }

    /// A 1D lattice of `len` cells.
    pub fn line(len: u32) -> Result<Self, InstanceError> {
        Self::new(len, 1)
    }

    pub const fn rows(self) -> u32 {
        self.rows
    }

    pub const fn cols(self) -> u32 {
        self.cols
    }

    /// Number of cells.
    pub const fn len(self) -> usize {
        self.rows as usize * self.cols as usize
    }

    pub const fn is_empty(self) -> bool {
        false
    }

    /// True when every cell lies on one line, so the cell index is a coordinate.
    pub const fn is_line(self) -> bool {
        self.rows == 1 || self.cols == 1
    }

    pub fn contains(self, cell: Cell) -> bool {
        cell.index() < self.len()
    }

    /// Cell at zero-based `row` and `col`.
    pub fn cell_at(self, row: u32, col: u32) -> Cell {
        debug_assert!(row < self.rows && col < self.cols);
        Cell(col * self.rows + row)
    }

    /// Zero-based `(row, col)` of a cell.
    pub fn coords(self, cell: Cell) -> (u32, u32) {
        (cell.0 % self.rows, cell.0 / self.rows)
    }

    pub fn cells(self) -> impl Iterator<Item = Cell> {
        (0..self.len() as u32).map(Cell)
    }

    pub fn distance(self, a: Cell, b: Cell, metric: Metric) -> f64 {
        match metric {
            Metric::Manhattan => self.distance_key(a, b, metric) as f64,
            Metric::Euclidean => libm::sqrt(self.distance_key(a, b, metric) as f64),
        }
    }

    /// Exact integer proxy for distance: squared length for Euclidean, length
    /// for Manhattan. Orders pairs the same way [`LatticeDims::distance`] does.
    pub fn distance_key(self, a: Cell, b: Cell, metric: Metric) -> u64 {
        let (ra, ca) = self.coords(a);
        let (rb, cb) = self.coords(b);
        let dr = u64::from(ra.abs_diff(rb));
        let dc = u64::from(ca.abs_diff(cb));
        match metric {
            Metric::Euclidean => dr * dr + dc * dc,
            Metric::Manhattan => dr + dc,
        }
    }
}

/// A lattice cell, stored as a zero-based column-major index.
///
/// External formats number cells from 1; `Display` follows that convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell(u32);

impl Cell {
    pub const fn new(index: usize) -> Self {
        Self(index as u32)
    }

    /// Cell from a one-based index; `None` for zero.
    pub const fn from_one_based(index: u32) -> Option<Self> {
        match index {
            0 => None,
            i => Some(Self(i - 1)),
        }
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn one_based(self) -> u32 {
        self.0 + 1
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cell {}", self.one_based())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Metric {
    #[default]
    Euclidean,
    Manhattan,
}

/// Pick cost `c_p`, unit-travel cost `c_t`, and the distance metric.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostModel {
    pick_cost: f64,
    travel_cost: f64,
    metric: Metric,
}

impl CostModel {
    /// Returns `None` unless both costs are finite and nonnegative.
    pub fn new(pick_cost: f64, travel_cost: f64, metric: Metric) -> Option<Self> {
        let ok = |c: f64| c.is_finite() && c >= 0.0;
        (ok(pick_cost) && ok(travel_cost)).then_some(Self {
            pick_cost,
            travel_cost,
            metric,
        })
    }

    pub const fn pick_cost(&self) -> f64 {
        self.pick_cost
    }

    pub const fn travel_cost(&self) -> f64 {
        self.travel_cost
    }

    pub const fn metric(&self) -> Metric {
        self.metric
    }

    pub fn with_metric(self, metric: Metric) -> Self {
        Self { metric, ..self }
    }
}

impl Default for CostModel {
    fn default() -> Self {
        Self {
            pick_cost: 1.0,
            travel_cost: 1.0,
            metric: Metric::Euclidean,
        }
    }
}
