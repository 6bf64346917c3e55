//! Seeded instance generators.
//!
//! Randomness comes from xoshiro256++ seeded through SplitMix64
//! (`Xoshiro256PlusPlus::seed_from_u64`). Bounded draws use Lemire's
//! widening-multiply rejection method and shuffles are Fisher–Yates from the
//! last index down. These three pieces are fixed so that a seed always yields
//! the same instance.

use alloc::vec;
use alloc::vec::Vec;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::{SplitMix64, Xoshiro256PlusPlus};

use crate::error::GenError;
use crate::instance::{LabeledInstance, TypedInstance};
use crate::lattice::{Cell, LatticeDims};
use crate::lattice2d::{goal_layout, GoalPattern};

/// Deterministic random source for the generators.
#[derive(Debug, Clone)]
pub struct SeededRng(Xoshiro256PlusPlus);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self(Xoshiro256PlusPlus::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform draw from `0..bound`. `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let mut m = u128::from(self.next_u64()) * u128::from(bound);
        if (m as u64) < bound {
            let threshold = bound.wrapping_neg() % bound;
            while (m as u64) < threshold {
                m = u128::from(self.next_u64()) * u128::from(bound);
            }
        }
        (m >> 64) as u64
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

/// Mixes `parts` into `base` to give independent per-trial seeds.
pub fn derive_seed(base: u64, parts: &[u64]) -> u64 {
    parts.iter().fold(base, |acc, &p| {
        SplitMix64::seed_from_u64(acc ^ p.rotate_left(32)).next_u64()
    })
}

/// Uniformly random permutation of a 1D lattice of `m` cells.
pub fn gen_uniform_permutation(m: u32, seed: u64) -> Result<LabeledInstance, GenError> {
    let dims = LatticeDims::line(m)?;
    let mut pi: Vec<u32> = (0..m).collect();
    SeededRng::new(seed).shuffle(&mut pi);
    Ok(LabeledInstance::new(dims, pi)?)
}

/// Labels shuffled within consecutive blocks of `x` cells; a short final
/// block is shuffled within itself.
pub fn gen_x_random(m: u32, x: u32, seed: u64) -> Result<LabeledInstance, GenError> {
    if x == 0 {
        return Err(GenError::ZeroBlock);
    }
    let dims = LatticeDims::line(m)?;
    let mut pi: Vec<u32> = (0..m).collect();
    let mut rng = SeededRng::new(seed);
    for block in pi.chunks_mut(x as usize) {
        rng.shuffle(block);
    }
    Ok(LabeledInstance::new(dims, pi)?)
}

/// Each column's labels shuffled within that column.
pub fn gen_column_random(m1: u32, m2: u32, seed: u64) -> Result<LabeledInstance, GenError> {
    let dims = LatticeDims::new(m1, m2)?;
    let mut pi: Vec<u32> = (0..dims.len() as u32).collect();
    let mut rng = SeededRng::new(seed);
    for column in pi.chunks_mut(m1 as usize) {
        rng.shuffle(column);
    }
    Ok(LabeledInstance::new(dims, pi)?)
}

/// An `m × m` lattice whose labels are shuffled within `√m × √m` blocks.
/// Blocks are visited column-major.
pub fn gen_block_random(m: u32, seed: u64) -> Result<LabeledInstance, GenError> {
    let side = (0..=m).find(|s| s * s >= m).filter(|s| s * s == m);
    let Some(side) = side else {
        return Err(GenError::NotPerfectSquare(m));
    };
    let dims = LatticeDims::new(m, m)?;
    let mut pi: Vec<u32> = (0..dims.len() as u32).collect();
    let mut rng = SeededRng::new(seed);
    for bc in 0..side {
        for br in 0..side {
            let cells: Vec<usize> = (0..side)
                .flat_map(|c| (0..side).map(move |r| (br * side + r, bc * side + c)))
                .map(|(r, c)| dims.cell_at(r, c).index())
                .collect();
            let mut labels: Vec<u32> = cells.iter().map(|&c| pi[c]).collect();
            rng.shuffle(&mut labels);
            for (&c, l) in cells.iter().zip(labels) {
                pi[c] = l;
            }
        }
    }
    Ok(LabeledInstance::new(dims, pi)?)
}

/// `n` items split as evenly as possible over `k` types, earlier types first.
pub fn even_counts(n: usize, k: u32) -> Vec<usize> {
    let k = k as usize;
    (0..k).map(|t| n / k + usize::from(t < n % k)).collect()
}

/// A generated typed instance and layout metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedTyped {
    pub instance: TypedInstance,
    /// Pattern A fell back to row-major type runs.
    pub row_major_fallback: bool,
}

/// Goal laid out by `pattern`; start is a uniform shuffle of the goal.
/// `counts` defaults to [`even_counts`].
pub fn gen_typed(
    dims: LatticeDims,
    k: u32,
    counts: Option<&[usize]>,
    pattern: &GoalPattern,
    seed: u64,
) -> Result<GeneratedTyped, GenError> {
    let n = dims.len();
    let counts = match counts {
        Some(c) => c.to_vec(),
        None => match pattern {
            GoalPattern::Explicit(goal) => {
                let mut c = vec![0; k as usize];
                for &t in goal {
                    *c.get_mut(t as usize).ok_or(GenError::BadCounts { expected: n })? += 1;
                }
                c
            }
            _ => even_counts(n, k),
        },
    };
    if k == 0 || counts.len() != k as usize {
        return Err(GenError::BadCounts { expected: n });
    }
    let mut rng = SeededRng::new(seed);
    let layout = match pattern {
        GoalPattern::Shuffled => {
            let mut layout = goal_layout(dims, &counts, &GoalPattern::Aggregated)?;
            rng.shuffle(&mut layout.goal);
            layout
        }
        other => goal_layout(dims, &counts, other)?,
    };
    let mut start = layout.goal.clone();
    rng.shuffle(&mut start);
    Ok(GeneratedTyped {
        instance: TypedInstance::new(dims, k, start, layout.goal)?,
        row_major_fallback: layout.row_major_fallback,
    })
}

/// Zero-based cells swapped for the interior point at one-based `(row, col)`:
/// the point's own cell and the cell one column to its left.
pub fn tsp_cluster_cells(dims: LatticeDims, row: u32, col: u32) -> (Cell, Cell) {
    (dims.cell_at(row - 1, col - 1), dims.cell_at(row - 1, col - 2))
}

/// Identity permutation except that each point's cluster of two horizontally
/// adjacent cells swaps labels. Points are one-based `(row, col)` and must lie
/// strictly inside the lattice.
pub fn gen_tsp_clusters(points: &[(u32, u32)], dims: LatticeDims) -> Result<LabeledInstance, GenError> {
    let mut pi: Vec<u32> = (0..dims.len() as u32).collect();
    let mut owner = vec![usize::MAX; dims.len()];
    for (p, &(row, col)) in points.iter().enumerate() {
        if !(1 < row && row < dims.rows() && 1 < col && col < dims.cols()) {
            return Err(GenError::PointOnBoundary { row, col });
        }
        let (a, b) = tsp_cluster_cells(dims, row, col);
        for c in [a, b] {
            if owner[c.index()] != usize::MAX {
                return Err(GenError::ClusterOverlap(owner[c.index()], p));
            }
            owner[c.index()] = p;
        }
        pi.swap(a.index(), b.index());
    }
    Ok(LabeledInstance::new(dims, pi)?)
}

/// `q` distinct interior points whose clusters do not overlap, in draw order.
pub fn random_interior_points(dims: LatticeDims, q: usize, seed: u64) -> Result<Vec<(u32, u32)>, GenError> {
    if dims.rows() < 3 || dims.cols() < 3 {
        return if q == 0 {
            Ok(Vec::new())
        } else {
            Err(GenError::TooManyPoints { requested: q })
        };
    }
    let mut candidates: Vec<(u32, u32)> = (2..dims.cols())
        .flat_map(|col| (2..dims.rows()).map(move |row| (row, col)))
        .collect();
    SeededRng::new(seed).shuffle(&mut candidates);
    let mut used = vec![false; dims.len()];
    let mut points = Vec::with_capacity(q);
    for (row, col) in candidates {
        if points.len() == q {
            break;
        }
        let (a, b) = tsp_cluster_cells(dims, row, col);
        if used[a.index()] || used[b.index()] {
            continue;
        }
        used[a.index()] = true;
        used[b.index()] = true;
        points.push((row, col));
    }
    if points.len() < q {
        return Err(GenError::TooManyPoints { requested: q });
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::permutation_cycles;

    #[test]
    fn bounded_draws_stay_in_range() {
        let mut rng = SeededRng::new(3);
        for bound in [1, 2, 3, 7, 1000] {
            for _ in 0..200 {
                assert!(rng.below(bound) < bound);
            }
        }
    }

    #[test]
    fn trivial_generators() {
        assert_eq!(gen_uniform_permutation(1, 5).unwrap().pi(), &[0]);
        assert!(gen_x_random(10, 1, 5).unwrap().misplaced() == 0);
        assert!(gen_block_random(3, 1).is_err());
        assert_eq!(gen_block_random(1, 1).unwrap().pi(), &[0]);
    }

    #[test]
    fn x_random_stays_in_block() {
        let inst = gen_x_random(100, 10, 42).unwrap();
        for (i, &p) in inst.pi().iter().enumerate() {
            assert_eq!(i / 10, p as usize / 10);
        }
        let ragged = gen_x_random(7, 3, 1).unwrap();
        assert_eq!(ragged.pi()[6], 6);
    }

    #[test]
    fn column_and_block_locality() {
        let inst = gen_column_random(5, 4, 9).unwrap();
        let dims = inst.dims();
        for (i, &p) in inst.pi().iter().enumerate() {
            assert_eq!(dims.coords(Cell::new(i)).1, dims.coords(Cell::new(p as usize)).1);
        }
        let inst = gen_block_random(9, 9).unwrap();
        let dims = inst.dims();
        let block = |c: usize| {
            let (r, c) = dims.coords(Cell::new(c));
            (r / 3, c / 3)
        };
        for (i, &p) in inst.pi().iter().enumerate() {
            assert_eq!(block(i), block(p as usize));
        }
    }

    #[test]
    fn typed_patterns() {
        let dims = LatticeDims::new(4, 4).unwrap();
        let g = gen_typed(dims, 1, None, &GoalPattern::Aggregated, 1).unwrap();
        assert_eq!(g.instance.misplaced(), 0);
        let g = gen_typed(dims, 4, None, &GoalPattern::PatternB, 1).unwrap();
        for c in dims.cells() {
            assert_eq!(g.instance.goal()[c.index()], dims.coords(c).1);
        }
        let g = gen_typed(dims, 4, None, &GoalPattern::PatternA, 1).unwrap();
        for c in dims.cells() {
            let (r, col) = dims.coords(c);
            assert_eq!(g.instance.goal()[c.index()], (col / 2) * 2 + r / 2);
        }
        assert!(matches!(
            gen_typed(dims, 3, Some(&[5, 5, 5]), &GoalPattern::Aggregated, 1),
            Err(GenError::BadCounts { .. })
        ));
    }

    #[test]
    fn tsp_gadget() {
        let dims = LatticeDims::new(5, 5).unwrap();
        assert_eq!(gen_tsp_clusters(&[], dims).unwrap().misplaced(), 0);
        let one = gen_tsp_clusters(&[(3, 3)], dims).unwrap();
        let cycles = permutation_cycles(one.pi()).unwrap().cycles;
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 2);
        assert_eq!(
            gen_tsp_clusters(&[(1, 3)], dims),
            Err(GenError::PointOnBoundary { row: 1, col: 3 })
        );
        assert_eq!(
            gen_tsp_clusters(&[(3, 3), (3, 4)], dims),
            Err(GenError::ClusterOverlap(0, 1))
        );
        let points = random_interior_points(dims, 4, 11).unwrap();
        assert_eq!(points.len(), 4);
        assert!(gen_tsp_clusters(&points, dims).is_ok());
    }
}
