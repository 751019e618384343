//! Repeated timing of determinant engines on one matrix.

use std::time::Duration;

use crate::det::{det_with, Engine};
use crate::error::{Error, Result};
use crate::hessenberg::SquareMatrix;
use crate::num::Integer;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub engine: Engine,
    pub repetitions: usize,
    pub min: Duration,
    pub median: Duration,
    pub value: Integer,
    pub fallback: bool,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub agree: bool,
}

impl BenchReport {
    /// The common value, when all engines agree.
    pub fn value(&self) -> Option<&Integer> {
        self.agree.then(|| &self.rows[0].value)
    }
}

pub fn run(m: &SquareMatrix, engines: &[Engine], repetitions: usize) -> Result<BenchReport> {
    if engines.is_empty() || repetitions == 0 {
        return Err(Error::InvalidParameter(
            "bench needs at least one engine and one repetition".into(),
        ));
    }
    let mut rows = Vec::with_capacity(engines.len());
    for &engine in engines {
        let mut times = Vec::with_capacity(repetitions);
        let mut last = None;
        for _ in 0..repetitions {
            let report = det_with(engine, m)?;
            times.push(report.elapsed);
            last = Some(report);
        }
        times.sort();
        let last = last.expect("at least one repetition");
        rows.push(BenchRow {
            engine,
            repetitions,
            min: times[0],
            median: times[times.len() / 2],
            value: last.value,
            fallback: last.fallback.is_some(),
        });
    }
    let agree = rows.windows(2).all(|w| w[0].value == w[1].value);
    Ok(BenchReport { rows, agree })
}
