//! Exact determinant engines for normalized upper Hessenberg matrices.
//!
//! * [`det_recurrence`]: division-free expansion along the last column,
//!   `d_t = sum_k (-1)^(t-k) h[k][t] d_(k-1)`, O(n^2) integer operations.
//! * [`det_elimination`]: forward elimination over rationals, each row minus
//!   `1/pivot` times the row above; the determinant is the product of the
//!   resulting diagonal, which is returned alongside the value.
//! * [`det_fraction_free`]: one-step fraction-free (Bareiss) elimination with
//!   row pivoting; ignores structure and serves as referee.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hessenberg::SquareMatrix;
use crate::num::{Integer, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Recurrence,
    Elimination,
    FractionFree,
}

impl Engine {
    pub const ALL: [Engine; 3] = [
        Engine::Recurrence,
        Engine::Elimination,
        Engine::FractionFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Recurrence => "recurrence",
            Engine::Elimination => "elimination",
            Engine::FractionFree => "fraction-free",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recurrence" => Ok(Engine::Recurrence),
            "elimination" => Ok(Engine::Elimination),
            "fraction-free" | "fraction_free" => Ok(Engine::FractionFree),
            other => Err(Error::InvalidParameter(format!("unknown engine `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetReport {
    pub value: Integer,
    pub engine: Engine,
    /// Elimination pivots in lowest terms; their product is `value`.
    pub diagonal: Option<Vec<Rational>>,
    pub elapsed: Duration,
    /// Set when elimination hit a zero pivot and `value` came from the
    /// recurrence instead.
    pub fallback: Option<usize>,
}

impl DetReport {
    fn new(engine: Engine, value: Integer, elapsed: Duration) -> Self {
        Self {
            value,
            engine,
            diagonal: None,
            elapsed,
            fallback: None,
        }
    }
}

pub fn det_recurrence(m: &SquareMatrix) -> Result<DetReport> {
    if !m.is_normalized_hessenberg() {
        return Err(Error::NotHessenberg);
    }
    let start = Instant::now();
    let n = m.dim();
    // minors[t] = det of the leading t x t block
    let mut minors: Vec<Integer> = Vec::with_capacity(n + 1);
    minors.push(Integer::one());
    for t in 0..n {
        let mut acc = Integer::zero();
        for (k, minor) in minors.iter().enumerate() {
            let h = m.get(k, t);
            if h.is_zero() {
                continue;
            }
            let term = h * minor;
            if (t - k) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        minors.push(acc);
    }
    let value = minors.pop().unwrap_or_else(Integer::one);
    Ok(DetReport::new(Engine::Recurrence, value, start.elapsed()))
}

pub fn det_elimination(m: &SquareMatrix) -> Result<DetReport> {
    if !m.is_normalized_hessenberg() {
        return Err(Error::NotHessenberg);
    }
    let start = Instant::now();
    let n = m.dim();
    // Only the current row is needed: row i+1 is touched once, by row i.
    let mut current: Vec<Rational> = match n {
        0 => Vec::new(),
        _ => m
            .row(0)
            .iter()
            .cloned()
            .map(Rational::from_integer)
            .collect(),
    };
    let mut diagonal = Vec::with_capacity(n);
    for i in 0..n {
        let pivot = current[i].clone();
        diagonal.push(pivot.clone());
        if i + 1 == n {
            break;
        }
        if pivot.is_zero() {
            return Err(Error::ZeroPivot(i + 1));
        }
        let mut next: Vec<Rational> = m
            .row(i + 1)
            .iter()
            .cloned()
            .map(Rational::from_integer)
            .collect();
        let factor = &next[i] / &pivot;
        for j in i..n {
            if !current[j].is_zero() {
                let delta = &factor * &current[j];
                next[j] -= delta;
            }
        }
        current = next;
    }
    let product = diagonal.iter().fold(Rational::one(), |acc, d| acc * d);
    debug_assert!(product.is_integer());
    let mut report = DetReport::new(Engine::Elimination, product.to_integer(), start.elapsed());
    report.diagonal = Some(diagonal);
    Ok(report)
}

pub fn det_fraction_free(m: &SquareMatrix) -> DetReport {
    let start = Instant::now();
    let n = m.dim();
    let mut w: Vec<Vec<Integer>> = m.rows().map(|r| r.to_vec()).collect();
    let mut negate = false;
    let mut prev = Integer::one();
    let mut value = None;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !w[r][k].is_zero()) else {
            value = Some(Integer::zero());
            break;
        };
        if p != k {
            w.swap(p, k);
            negate = !negate;
        }
        let (upper, lower) = w.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        for row in lower.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let mut x = &pivot_row[k] * &row[j];
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    x -= &lead * &pivot_row[j];
                }
                row[j] = if prev.is_one() { x } else { x / &prev };
            }
        }
        prev = w[k][k].clone();
    }
    let mut value = value.unwrap_or_else(|| if n == 0 { Integer::one() } else { prev });
    if negate {
        value = -value;
    }
    DetReport::new(Engine::FractionFree, value, start.elapsed())
}

/// Runs one engine; elimination falls back to the recurrence on a zero pivot.
pub fn det_with(engine: Engine, m: &SquareMatrix) -> Result<DetReport> {
    match engine {
        Engine::Recurrence => det_recurrence(m),
        Engine::FractionFree => {
            if !m.is_normalized_hessenberg() {
                return Err(Error::NotHessenberg);
            }
            Ok(det_fraction_free(m))
        }
        Engine::Elimination => match det_elimination(m) {
            Err(Error::ZeroPivot(row)) => {
                let mut report = det_recurrence(m)?;
                report.engine = Engine::Elimination;
                report.fallback = Some(row);
                Ok(report)
            }
            other => other,
        },
    }
}

#[derive(Debug, Clone)]
pub struct DetAll {
    pub reports: Vec<DetReport>,
    pub agree: bool,
}

impl DetAll {
    pub fn value(&self) -> &Integer {
        &self.reports[0].value
    }

    pub fn report(&self, engine: Engine) -> Option<&DetReport> {
        self.reports.iter().find(|r| r.engine == engine)
    }
}

pub fn det_all(m: &SquareMatrix) -> Result<DetAll> {
    let reports = Engine::ALL
        .iter()
        .map(|&e| det_with(e, m))
        .collect::<Result<Vec<_>>>()?;
    let agree = reports.windows(2).all(|w| w[0].value == w[1].value);
    Ok(DetAll { reports, agree })
}
