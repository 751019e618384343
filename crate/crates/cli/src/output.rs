//! Plain, CSV and JSON renderings. Every exact value is written as a decimal
//! string (`p/q` for rationals).

use serde::{Deserialize, Serialize};

use hessenberg_catalan::num::format_rational;
use hessenberg_catalan::{BinomialHessenberg, DetReport};

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MatrixJson {
    pub n: usize,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub entries: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn new(h: &BinomialHessenberg) -> Self {
        Self {
            n: h.dim(),
            a: h.source().upper().to_vec(),
            b: h.source().lower().to_vec(),
            entries: h
                .rows()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DetJson {
    pub engine: &'static str,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagonal: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero_pivot_row: Option<usize>,
    pub elapsed_ns: u128,
}

impl DetJson {
    pub fn new(r: &DetReport) -> Self {
        Self {
            engine: r.engine.name(),
            value: r.value.to_string(),
            diagonal: r
                .diagonal
                .as_ref()
                .map(|d| d.iter().map(format_rational).collect()),
            zero_pivot_row: r.fallback,
            elapsed_ns: r.elapsed.as_nanos(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DetAllJson {
    pub reports: Vec<DetJson>,
    pub agree: bool,
}

#[derive(Debug, Serialize)]
pub struct BenchJson {
    pub engine: &'static str,
    pub repetitions: usize,
    pub min_ns: u128,
    pub median_ns: u128,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct VerifyRow {
    pub n: u64,
    pub determinant: Option<String>,
    pub closed_form: String,
    /// `None` when the oracle was skipped by the cost guard.
    pub oracle: Option<String>,
    pub pass: bool,
}

pub fn diagonal_line(r: &DetReport) -> Option<String> {
    r.diagonal
        .as_ref()
        .map(|d| d.iter().map(format_rational).collect::<Vec<_>>().join(" "))
}

pub fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}
