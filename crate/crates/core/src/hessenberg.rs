//! Dense integer matrices and the binomial path matrix built from a boundary.

use std::ops::Deref;

use num_traits::{One, Zero};

use crate::boundary::BoundaryPair;
use crate::error::{Error, Result};
use crate::num::{binomial, Integer};

/// Square matrix of exact integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<Integer>,
}

impl SquareMatrix {
    pub fn from_rows(rows: Vec<Vec<Integer>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|row| row.len() != n) {
            return Err(Error::NotSquare);
        }
        Ok(Self {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Integer) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// 0-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &Integer {
        &self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Integer] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Integer]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    /// True iff everything below the subdiagonal is zero and the subdiagonal
    /// is all ones.
    pub fn is_normalized_hessenberg(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                if i == j + 1 {
                    self.get(i, j).is_one()
                } else if i > j + 1 {
                    self.get(i, j).is_zero()
                } else {
                    true
                }
            })
        })
    }
}

/// `h[i][j] = C(a_i - b_j + 1, j - i + 1)` together with its boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialHessenberg {
    matrix: SquareMatrix,
    source: BoundaryPair,
}

impl BinomialHessenberg {
    pub fn source(&self) -> &BoundaryPair {
        &self.source
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> SquareMatrix {
        self.matrix
    }
}

impl Deref for BinomialHessenberg {
    type Target = SquareMatrix;

    fn deref(&self) -> &SquareMatrix {
        &self.matrix
    }
}

pub fn build_path_matrix(bp: &BoundaryPair) -> BinomialHessenberg {
    let (a, b) = (bp.upper(), bp.lower());
    let matrix = SquareMatrix::from_fn(bp.len(), |i, j| {
        binomial(a[i] - b[j] + 1, j as i64 - i as i64 + 1)
    });
    BinomialHessenberg {
        matrix,
        source: bp.clone(),
    }
}

pub fn is_normalized_hessenberg(m: &SquareMatrix) -> bool {
    m.is_normalized_hessenberg()
}
