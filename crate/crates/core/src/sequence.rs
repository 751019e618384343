//! Batch sequence generation over the three independent routes, plus OEIS
//! b-file parsing and comparison.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::boundary::Family;
use crate::closed_form::{bizley_count, catalan, fuss_catalan};
use crate::det::det_recurrence;
use crate::error::{Error, Result};
use crate::hessenberg::build_path_matrix;
use crate::num::{parse_integer, Integer};
use crate::paths::count_below_line;

/// Largest `m * n` the path oracle route will take on.
pub const ORACLE_COLUMN_LIMIT: u64 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Determinant,
    ClosedForm,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceSpec {
    kind: Family,
    from: u64,
    to: u64,
}

impl SequenceSpec {
    pub fn new(kind: Family, from: u64, to: u64) -> Result<Self> {
        if from > to {
            return Err(Error::InvalidParameter(format!(
                "empty range {from}..={to}"
            )));
        }
        Ok(Self {
            kind: kind.validate()?,
            from,
            to,
        })
    }

    pub fn kind(&self) -> Family {
        self.kind
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<u64> {
        self.from..=self.to
    }
}

/// Checks the oracle cost guard for index `n` of `kind`.
pub fn oracle_within_guard(kind: Family, n: u64) -> Result<()> {
    let (m, _) = kind.slope();
    let requested = m.saturating_mul(n);
    if requested > ORACLE_COLUMN_LIMIT {
        return Err(Error::CostGuard {
            limit: ORACLE_COLUMN_LIMIT,
            requested,
        });
    }
    Ok(())
}

/// One term of `kind` at index `n` by the chosen route.
pub fn term(kind: Family, n: u64, route: Route) -> Result<Integer> {
    match route {
        Route::Determinant => {
            let bp = kind.boundary(n as usize)?;
            Ok(det_recurrence(&build_path_matrix(&bp))?.value)
        }
        Route::ClosedForm => match kind {
            Family::Catalan => Ok(catalan(n)),
            Family::Fuss { k } => fuss_catalan(k, n),
            Family::Rational { m, r } => bizley_count(m, r, n),
        },
        Route::Oracle => {
            oracle_within_guard(kind, n)?;
            let (m, r) = kind.slope();
            Ok(count_below_line(m, r, n)?.value)
        }
    }
}

/// Values for every index of `spec`, in index order. Indices are evaluated
/// in parallel.
pub fn generate(spec: &SequenceSpec, route: Route) -> Result<Vec<Integer>> {
    if route == Route::Oracle {
        oracle_within_guard(spec.kind, spec.to)?;
    }
    spec.indices()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| term(spec.kind, n, route))
        .collect()
}

/// Contiguous `(index, value)` pairs from an OEIS b-file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BFile {
    entries: Vec<(i64, Integer)>,
}

impl BFile {
    pub fn from_entries(entries: Vec<(i64, Integer)>) -> Result<Self> {
        for (pos, w) in entries.windows(2).enumerate() {
            if w[1].0 != w[0].0 + 1 {
                return Err(Error::NonContiguousIndex(pos + 2));
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[(i64, Integer)] {
        &self.entries
    }

    pub fn first_index(&self) -> Option<i64> {
        self.entries.first().map(|e| e.0)
    }

    pub fn last_index(&self) -> Option<i64> {
        self.entries.last().map(|e| e.0)
    }

    pub fn get(&self, index: i64) -> Option<&Integer> {
        let first = self.first_index()?;
        let pos = usize::try_from(index.checked_sub(first)?).ok()?;
        self.entries.get(pos).map(|e| &e.1)
    }
}

pub fn parse_bfile(bytes: &[u8]) -> Result<BFile> {
    let text = String::from_utf8_lossy(bytes);
    let mut entries: Vec<(i64, Integer)> = Vec::new();
    for (lineno, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::MalformedLine(lineno));
        };
        let index: i64 = index.parse().map_err(|_| Error::MalformedLine(lineno))?;
        let value = parse_integer(value).map_err(|_| Error::MalformedLine(lineno))?;
        if let Some(&(prev, _)) = entries.last() {
            if index != prev + 1 {
                return Err(Error::NonContiguousIndex(lineno));
            }
        }
        entries.push((index, value));
    }
    Ok(BFile { entries })
}

pub fn render_bfile(bfile: &BFile) -> String {
    let mut out = String::new();
    for (index, value) in &bfile.entries {
        let _ = writeln!(out, "{index} {value}");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: u64,
    pub expected: Integer,
    pub actual: Integer,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub matched: usize,
    pub mismatches: Vec<Mismatch>,
}

impl Comparison {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the closed-form values of `spec` against `bfile`, pairing spec
/// index `n` with b-file index `n + align`.
pub fn compare(spec: &SequenceSpec, bfile: &BFile, align: i64) -> Result<Comparison> {
    compare_route(spec, Route::ClosedForm, bfile, align)
}

pub fn compare_route(
    spec: &SequenceSpec,
    route: Route,
    bfile: &BFile,
    align: i64,
) -> Result<Comparison> {
    let overlap: Vec<(u64, &Integer)> = spec
        .indices()
        .filter_map(|n| {
            let at = i64::try_from(n).ok()?.checked_add(align)?;
            bfile.get(at).map(|v| (n, v))
        })
        .collect();
    if overlap.is_empty() {
        return Err(Error::EmptyOverlap);
    }
    let actual: Vec<Integer> = overlap
        .par_iter()
        .map(|&(n, _)| term(spec.kind, n, route))
        .collect::<Result<_>>()?;
    let mut matched = 0;
    let mut mismatches = Vec::new();
    for ((n, expected), actual) in overlap.into_iter().zip(actual) {
        if *expected == actual {
            matched += 1;
        } else {
            mismatches.push(Mismatch {
                index: n,
                expected: expected.clone(),
                actual,
            });
        }
    }
    Ok(Comparison {
        matched,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[u64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    const CATALAN_0_10: [u64; 11] = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];

    #[test]
    fn generate_examples() {
        let k3 = SequenceSpec::new(Family::Fuss { k: 3 }, 1, 10).unwrap();
        assert_eq!(
            generate(&k3, Route::ClosedForm).unwrap(),
            ints(&[1, 4, 22, 140, 969, 7084, 53820, 420732, 3362260, 27343888])
        );
        let k2 = SequenceSpec::new(Family::Fuss { k: 2 }, 1, 10).unwrap();
        assert_eq!(
            generate(&k2, Route::Determinant).unwrap(),
            ints(&[1, 3, 12, 55, 273, 1428, 7752, 43263, 246675, 1430715])
        );
        let c0 = SequenceSpec::new(Family::Catalan, 0, 0).unwrap();
        for route in [Route::Determinant, Route::ClosedForm, Route::Oracle] {
            assert_eq!(generate(&c0, route).unwrap(), ints(&[1]));
        }
    }

    #[test]
    fn oracle_cost_guard() {
        let spec = SequenceSpec::new(Family::Rational { m: 5, r: 2 }, 0, 5).unwrap();
        assert_eq!(
            generate(&spec, Route::Oracle),
            Err(Error::CostGuard {
                limit: 24,
                requested: 25
            })
        );
        let spec = SequenceSpec::new(Family::Rational { m: 4, r: 3 }, 0, 6).unwrap();
        assert!(generate(&spec, Route::Oracle).is_ok());
    }

    #[test]
    fn spec_validation() {
        assert!(SequenceSpec::new(Family::Catalan, 3, 2).is_err());
        assert!(SequenceSpec::new(Family::Fuss { k: 0 }, 0, 2).is_err());
        assert!(SequenceSpec::new(Family::Rational { m: 2, r: 2 }, 0, 2).is_err());
    }

    #[test]
    fn routes_agree_within_desk_bounds() {
        for k in 1..=5 {
            let spec = SequenceSpec::new(Family::Fuss { k }, 0, 12).unwrap();
            let det = generate(&spec, Route::Determinant).unwrap();
            assert_eq!(det, generate(&spec, Route::ClosedForm).unwrap());
            assert_eq!(det, generate(&spec, Route::Oracle).unwrap());
        }
        for (m, r) in [(2u64, 1u64), (2, 3), (3, 2), (3, 4), (5, 2), (4, 3)] {
            let spec = SequenceSpec::new(Family::Rational { m, r }, 0, 18 / m).unwrap();
            let det = generate(&spec, Route::Determinant).unwrap();
            assert_eq!(det, generate(&spec, Route::ClosedForm).unwrap());
            assert_eq!(det, generate(&spec, Route::Oracle).unwrap());
        }
    }

    #[test]
    fn parse_examples() {
        let b = parse_bfile(b"0 1\n1 1\n2 2\n").unwrap();
        assert_eq!(b.entries(), &[(0, 1.into()), (1, 1.into()), (2, 2.into())]);
        let b = parse_bfile(b"# comment\n1 1\n2 3\n").unwrap();
        assert_eq!(b.entries(), &[(1, 1.into()), (2, 3.into())]);
        assert_eq!(
            parse_bfile(b"1 1\n3 12\n"),
            Err(Error::NonContiguousIndex(2))
        );
    }

    #[test]
    fn parse_whitespace_and_errors() {
        let b = parse_bfile(b"\n  # A000108\n\n0\t1\r\n1    1\n\n2 2").unwrap();
        assert_eq!(b.entries().len(), 3);
        assert_eq!(parse_bfile(b"0 1\n1\n"), Err(Error::MalformedLine(2)));
        assert_eq!(parse_bfile(b"0 1 2\n"), Err(Error::MalformedLine(1)));
        assert_eq!(parse_bfile(b"x 1\n"), Err(Error::MalformedLine(1)));
        assert_eq!(parse_bfile(b"0 1.5\n"), Err(Error::MalformedLine(1)));
        let big = parse_bfile(b"60 53470962442047684069940839612458981003750826735568\n").unwrap();
        assert_eq!(big.get(60).unwrap().to_string().len(), 50);
        assert!(parse_bfile(b"").unwrap().entries().is_empty());
    }

    fn bfile_of(values: &[u64], first: i64) -> BFile {
        BFile::from_entries(
            values
                .iter()
                .enumerate()
                .map(|(i, &v)| (first + i as i64, v.into()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn compare_examples() {
        let spec = SequenceSpec::new(Family::Catalan, 0, 10).unwrap();
        let cmp = compare(&spec, &bfile_of(&CATALAN_0_10, 0), 0).unwrap();
        assert_eq!((cmp.matched, cmp.mismatches.len()), (11, 0));

        let spec = SequenceSpec::new(Family::Fuss { k: 3 }, 1, 10).unwrap();
        let dump: Vec<(i64, Integer)> = spec
            .indices()
            .zip(generate(&spec, Route::ClosedForm).unwrap())
            .map(|(n, v)| (n as i64, v))
            .collect();
        let cmp = compare(&spec, &BFile::from_entries(dump).unwrap(), 0).unwrap();
        assert_eq!(cmp.matched, 10);
        assert!(cmp.is_clean());

        let mut corrupted = CATALAN_0_10;
        corrupted[3] = 6;
        let spec = SequenceSpec::new(Family::Catalan, 0, 5).unwrap();
        let cmp = compare(&spec, &bfile_of(&corrupted, 0), 0).unwrap();
        assert_eq!(cmp.matched, 5);
        assert_eq!(
            cmp.mismatches,
            vec![Mismatch {
                index: 3,
                expected: 6.into(),
                actual: 5.into()
            }]
        );
    }

    #[test]
    fn compare_alignment_and_overlap() {
        // b-file starting at 1 holding C_0, C_1, ...
        let shifted = bfile_of(&CATALAN_0_10, 1);
        let spec = SequenceSpec::new(Family::Catalan, 0, 10).unwrap();
        assert!(compare(&spec, &shifted, 1).unwrap().is_clean());
        assert!(!compare(&spec, &shifted, 0).unwrap().is_clean());
        let far = SequenceSpec::new(Family::Catalan, 50, 60).unwrap();
        assert_eq!(compare(&far, &shifted, 0), Err(Error::EmptyOverlap));
        let partial = SequenceSpec::new(Family::Catalan, 8, 20).unwrap();
        assert_eq!(
            compare(&partial, &bfile_of(&CATALAN_0_10, 0), 0)
                .unwrap()
                .matched,
            3
        );
    }

    #[test]
    fn from_entries_rejects_gaps() {
        assert_eq!(
            BFile::from_entries(vec![(0, 1.into()), (2, 1.into())]),
            Err(Error::NonContiguousIndex(2))
        );
    }

    proptest! {
        #[test]
        fn bfile_render_parse_identity(
            first in -5i64..100,
            values in proptest::collection::vec("-?[0-9]{1,40}", 0..30),
        ) {
            let entries = values
                .iter()
                .enumerate()
                .map(|(i, v)| (first + i as i64, v.parse::<Integer>().unwrap()))
                .collect();
            let bfile = BFile::from_entries(entries).unwrap();
            prop_assert_eq!(parse_bfile(render_bfile(&bfile).as_bytes()).unwrap(), bfile);
        }
    }
}
