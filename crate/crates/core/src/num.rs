//! Exact scalars and the binomial kernel.
//!
//! [`Integer`] and [`Rational`] are arbitrary precision. `BigRational` keeps
//! itself in lowest terms with a positive denominator, so derived equality is
//! canonical equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// `C(n, k)` with the path-counting convention: zero whenever `k < 0`,
/// `k > n` or `n < 0`.
///
/// Evaluated as the running product of `(n - k + i) / i`; every prefix is
/// itself a binomial coefficient, so each division is exact.
pub fn binomial(n: i64, k: i64) -> Integer {
    if n < 0 || k < 0 || k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * i)
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn parse_integer(s: &str) -> Result<Integer> {
    s.trim()
        .parse::<Integer>()
        .map_err(|_| Error::ParseNumber(s.to_string()))
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseNumber(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = p.trim().parse::<Integer>().map_err(|_| bad())?;
            let q = q.trim().parse::<Integer>().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(
            s.parse::<Integer>().map_err(|_| bad())?,
        )),
    }
}

/// Renders `p/q`, or `p` alone when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}
