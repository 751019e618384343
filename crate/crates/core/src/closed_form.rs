//! Closed forms: Catalan, k-Fuss-Catalan, and Bizley's partition sum for
//! lattice paths under a line of rational slope.

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::num::{binomial, factorial, gcd_u64, Integer, Rational};

/// Multiplicities `(a_1, a_2, ..)` of a partition: `a_i` parts of size `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionMultiset {
    multiplicities: Vec<u64>,
}

impl PartitionMultiset {
    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    /// Multiplicity of parts of size `i` (1-based); zero past the end.
    pub fn count(&self, i: usize) -> u64 {
        i.checked_sub(1)
            .and_then(|idx| self.multiplicities.get(idx))
            .copied()
            .unwrap_or(0)
    }

    /// `sum_i i * a_i`.
    pub fn weight(&self) -> u64 {
        self.multiplicities
            .iter()
            .enumerate()
            .map(|(idx, &a)| (idx as u64 + 1) * a)
            .sum()
    }
}

pub fn catalan(n: u64) -> Integer {
    fuss_unchecked(1, n)
}

pub fn fuss_catalan(k: u64, n: u64) -> Result<Integer> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    Ok(fuss_unchecked(k, n))
}

fn fuss_unchecked(k: u64, n: u64) -> Integer {
    let top = binomial(((k + 1) * n) as i64, n as i64);
    let (q, rem) = top.div_rem(&Integer::from(k * n + 1));
    assert!(
        rem.is_zero(),
        "kn + 1 does not divide C((k+1)n, n) for k={k}, n={n}"
    );
    q
}

/// `C(j(m+r), jm) / (j(m+r))`.
pub fn bizley_phi(j: u64, m: u64, r: u64) -> Rational {
    let total = j * (m + r);
    Rational::new(binomial(total as i64, (j * m) as i64), Integer::from(total))
}

/// All partitions of `n` as multiplicity vectors of length `n`, largest
/// part descending.
pub fn enumerate_partitions(n: u64) -> Vec<PartitionMultiset> {
    let mut out = Vec::new();
    let mut mult = vec![0u64; n as usize];
    descend(n, n, &mut mult, &mut out);
    out
}

fn descend(remaining: u64, max_part: u64, mult: &mut Vec<u64>, out: &mut Vec<PartitionMultiset>) {
    if remaining == 0 {
        out.push(PartitionMultiset {
            multiplicities: mult.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        mult[part as usize - 1] += 1;
        descend(remaining - part, part, mult, out);
        mult[part as usize - 1] -= 1;
    }
}

/// Number of paths from `(0,0)` to `(mn, rn)` weakly below `y = (r/m) x`,
/// as `sum over partitions of prod_i phi_i^(a_i) / a_i!`.
pub fn bizley_count(m: u64, r: u64, n: u64) -> Result<Integer> {
    if m == 0 || r == 0 {
        return Err(Error::InvalidParameter("m and r must be positive".into()));
    }
    if gcd_u64(m, r) != 1 {
        return Err(Error::NotCoprime { m, r });
    }
    let phis: Vec<Rational> = (1..=n).map(|j| bizley_phi(j, m, r)).collect();
    let mut sum = Rational::zero();
    for p in enumerate_partitions(n) {
        let mut term = Rational::one();
        for (idx, &a) in p.multiplicities().iter().enumerate() {
            if a == 0 {
                continue;
            }
            term *= num_traits::pow(phis[idx].clone(), a as usize);
            term /= Rational::from_integer(factorial(a));
        }
        sum += term;
    }
    if !sum.is_integer() {
        return Err(Error::NonIntegerResult(sum.to_string()));
    }
    Ok(sum.to_integer())
}
