//! Brute-force lattice path counts by dynamic programming, independent of
//! any determinant.

use num_traits::{One, Zero};

use crate::boundary::BoundaryPair;
use crate::error::{Error, Result};
use crate::num::Integer;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathModel {
    BoundarySteps,
    BelowLine { m: u64, r: u64, n: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCount {
    pub value: Integer,
    pub model: PathModel,
}

/// Paths from `(0, b_1)` to `(n, a_n)` whose `i`-th east step runs at a
/// height in `[b_i, a_i]`.
///
/// `ways[h]` holds the number of admissible prefixes whose latest east step
/// ran at height `h`; moving to the next step takes a prefix sum since the
/// path may only climb in between.
pub fn count_boundary_paths(bp: &BoundaryPair) -> Result<PathCount> {
    if bp.is_empty() {
        return Err(Error::EmptyBoundary);
    }
    let (a, b) = (bp.upper(), bp.lower());
    let base = b[0];
    let top = a[a.len() - 1];
    let width = (top - base + 1) as usize;
    let idx = |h: i64| (h - base) as usize;

    let mut ways = vec![Integer::zero(); width];
    for h in b[0]..=a[0] {
        ways[idx(h)] = Integer::one();
    }
    for i in 1..bp.len() {
        let mut next = vec![Integer::zero(); width];
        let mut running = Integer::zero();
        for h in base..=a[i] {
            running += &ways[idx(h)];
            if h >= b[i] {
                next[idx(h)] = running.clone();
            }
        }
        ways = next;
    }
    let value = ways.into_iter().sum();
    Ok(PathCount {
        value,
        model: PathModel::BoundarySteps,
    })
}

/// Monotone east/north paths from `(0,0)` to `(mn, rn)` visiting only points
/// with `m * y <= r * x`.
pub fn count_below_line(m: u64, r: u64, n: u64) -> Result<PathCount> {
    if m == 0 || r == 0 {
        return Err(Error::InvalidParameter("m and r must be positive".into()));
    }
    let model = PathModel::BelowLine { m, r, n };
    let (width, height) = (m * n, r * n);
    let allowed = |x: u64, y: u64| (m as u128) * (y as u128) <= (r as u128) * (x as u128);

    let mut column = vec![Integer::zero(); height as usize + 1];
    column[0] = Integer::one();
    for x in 0..=width {
        if x > 0 {
            // east step keeps the height; a forbidden point kills its paths
            for y in 0..=height {
                if !allowed(x, y) {
                    column[y as usize] = Integer::zero();
                }
            }
        }
        for y in 1..=height {
            if allowed(x, y) {
                let below = column[y as usize - 1].clone();
                column[y as usize] += below;
            }
        }
    }
    Ok(PathCount {
        value: column[height as usize].clone(),
        model,
    })
}
