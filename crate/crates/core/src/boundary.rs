//! Boundary sequences `a`, `b` bounding the height of each horizontal step.

use std::fmt;

use crate::error::{Error, Result};
use crate::num::gcd_u64;

/// Validated pair of nondecreasing height sequences with `a[i] >= b[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundaryPair {
    a: Vec<i64>,
    b: Vec<i64>,
}

impl BoundaryPair {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                a: a.len(),
                b: b.len(),
            });
        }
        for (which, seq) in [('a', &a), ('b', &b)] {
            if let Some(index) = seq.windows(2).position(|w| w[0] > w[1]) {
                return Err(Error::NotNondecreasing {
                    which,
                    index: index + 2,
                });
            }
        }
        if let Some(index) = a.iter().zip(&b).position(|(x, y)| x < y) {
            return Err(Error::CrossedBoundary { index: index + 1 });
        }
        Ok(Self { a, b })
    }

    pub fn upper(&self) -> &[i64] {
        &self.a
    }

    pub fn lower(&self) -> &[i64] {
        &self.b
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }
}

/// `a_i = k(i - 1)`, `b = 0`, for `i = 1..=n`.
pub fn fuss_boundary(k: u64, n: usize) -> Result<BoundaryPair> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let k = to_height(k)?;
    let a = (0..n as i64).map(|i| k * i).collect();
    BoundaryPair::new(a, vec![0; n])
}

/// Boundary of length `m * n` for paths weakly below `y = (r/m) x`.
///
/// `a_i = r * floor((i-1)/m) + floor(r * (i - 1 - m * floor((i-1)/m)) / m)`,
/// which equals `floor(r (i-1) / m)`.
pub fn rational_boundary(m: u64, r: u64, n: usize) -> Result<BoundaryPair> {
    if m == 0 || r == 0 {
        return Err(Error::InvalidParameter("m and r must be positive".into()));
    }
    if gcd_u64(m, r) != 1 {
        return Err(Error::NotCoprime { m, r });
    }
    let (mi, ri) = (to_height(m)?, to_height(r)?);
    let len = (m as usize)
        .checked_mul(n)
        .ok_or_else(|| Error::InvalidParameter("m * n overflows".into()))?;
    let a = (1..=len as i64)
        .map(|i| {
            let block = (i - 1).div_euclid(mi);
            ri * block + (ri * (i - mi * block - 1)).div_euclid(mi)
        })
        .collect();
    BoundaryPair::new(a, vec![0; len])
}

pub fn custom_boundary(a: Vec<i64>, b: Vec<i64>) -> Result<BoundaryPair> {
    BoundaryPair::new(a, b)
}

fn to_height(v: u64) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::InvalidParameter(format!("{v} is too large")))
}

/// The named lattice-path families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Catalan,
    Fuss { k: u64 },
    Rational { m: u64, r: u64 },
}

impl Family {
    /// Checks the family parameters without building anything.
    pub fn validate(self) -> Result<Self> {
        match self {
            Family::Catalan => Ok(self),
            Family::Fuss { k: 0 } => Err(Error::InvalidParameter("k must be positive".into())),
            Family::Fuss { .. } => Ok(self),
            Family::Rational { m, r } if m == 0 || r == 0 => {
                Err(Error::InvalidParameter("m and r must be positive".into()))
            }
            Family::Rational { m, r } if gcd_u64(m, r) != 1 => Err(Error::NotCoprime { m, r }),
            Family::Rational { .. } => Ok(self),
        }
    }

    /// `(m, r)` with the family's line being `y = (r/m) x`.
    pub fn slope(self) -> (u64, u64) {
        match self {
            Family::Catalan => (1, 1),
            Family::Fuss { k } => (1, k),
            Family::Rational { m, r } => (m, r),
        }
    }

    pub fn boundary(self, n: usize) -> Result<BoundaryPair> {
        match self {
            Family::Catalan => fuss_boundary(1, n),
            Family::Fuss { k } => fuss_boundary(k, n),
            Family::Rational { m, r } => rational_boundary(m, r, n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Catalan => write!(f, "catalan"),
            Family::Fuss { k } => write!(f, "fuss(k={k})"),
            Family::Rational { m, r } => write!(f, "rational(m={m}, r={r})"),
        }
    }
}
