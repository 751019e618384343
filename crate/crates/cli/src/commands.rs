use std::process::ExitCode;

use rayon::prelude::*;

use hessenberg_catalan::sequence::{self, oracle_within_guard, Route};
use hessenberg_catalan::{
    bench, build_path_matrix, det_all, det_with, parse_bfile, Engine, Error, Family, SequenceSpec,
};

use crate::output::{
    diagonal_line, json_line, BenchJson, DetAllJson, DetJson, MatrixJson, VerifyRow,
};
use crate::{BenchEngine, Command, EngineChoice, Format, RouteChoice, UsageError};

type CmdResult = Result<ExitCode, UsageError>;

const DISAGREE: u8 = 1;

pub fn run(command: Command) -> CmdResult {
    match command {
        Command::Gen { instance, format } => {
            let h = build_path_matrix(&instance.boundary()?);
            gen(&h, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Det {
            instance,
            engine,
            format,
        } => {
            let h = build_path_matrix(&instance.boundary()?);
            det(&h, engine, format)
        }
        Command::Verify {
            family,
            n_min,
            n_max,
            format,
        } => verify(family.family()?, n_min, n_max, format),
        Command::Bench {
            instance,
            engines,
            reps,
            format,
        } => {
            let h = build_path_matrix(&instance.boundary()?);
            let engines: Vec<Engine> = engines.into_iter().map(engine_of).collect();
            bench_cmd(&h, &engines, reps, format)
        }
        Command::OeisCheck {
            family,
            bfile,
            from,
            to,
            align,
            route,
        } => oeis_check(family.family()?, &bfile, from, to, align, route),
    }
}

fn engine_of(e: BenchEngine) -> Engine {
    match e {
        BenchEngine::Recurrence => Engine::Recurrence,
        BenchEngine::Elimination => Engine::Elimination,
        BenchEngine::FractionFree => Engine::FractionFree,
    }
}

fn gen(h: &hessenberg_catalan::BinomialHessenberg, format: Format) {
    match format {
        Format::Json => println!("{}", json_line(&MatrixJson::new(h))),
        Format::Plain | Format::Csv => {
            let sep = if format == Format::Csv { "," } else { " " };
            for row in h.rows() {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                println!("{}", cells.join(sep));
            }
        }
    }
}

fn warn_fallback(r: &hessenberg_catalan::DetReport) {
    if let Some(row) = r.fallback {
        eprintln!("warning: zero pivot at row {row}; elimination fell back to the recurrence");
    }
}

fn det(
    h: &hessenberg_catalan::BinomialHessenberg,
    choice: EngineChoice,
    format: Format,
) -> CmdResult {
    let engine = match choice {
        EngineChoice::Recurrence => Engine::Recurrence,
        EngineChoice::Elimination => Engine::Elimination,
        EngineChoice::FractionFree => Engine::FractionFree,
        EngineChoice::All => return det_every_engine(h, format),
    };
    let report = det_with(engine, h)?;
    warn_fallback(&report);
    match format {
        Format::Json => println!("{}", json_line(&DetJson::new(&report))),
        Format::Csv => {
            println!("engine,value,diagonal");
            println!(
                "{},{},{}",
                report.engine,
                report.value,
                diagonal_line(&report).unwrap_or_default()
            );
        }
        Format::Plain => {
            println!("{}", report.value);
            if let Some(diag) = diagonal_line(&report) {
                println!("diagonal: {diag}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn det_every_engine(h: &hessenberg_catalan::BinomialHessenberg, format: Format) -> CmdResult {
    let all = det_all(h)?;
    all.reports.iter().for_each(warn_fallback);
    let verdict = if all.agree { "AGREE" } else { "DISAGREE" };
    match format {
        Format::Json => {
            let out = DetAllJson {
                reports: all.reports.iter().map(DetJson::new).collect(),
                agree: all.agree,
            };
            println!("{}", json_line(&out));
        }
        Format::Csv => {
            println!("engine,value,diagonal");
            for r in &all.reports {
                println!(
                    "{},{},{}",
                    r.engine,
                    r.value,
                    diagonal_line(r).unwrap_or_default()
                );
            }
            println!("verdict,{verdict},");
        }
        Format::Plain => {
            for r in &all.reports {
                println!("{}: {}", r.engine, r.value);
            }
            println!("{verdict}");
        }
    }
    Ok(if all.agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(DISAGREE)
    })
}

fn verify_row(family: Family, n: u64) -> Result<VerifyRow, Error> {
    let h = build_path_matrix(&family.boundary(n as usize)?);
    let all = det_all(&h)?;
    let closed = sequence::term(family, n, Route::ClosedForm)?;
    let oracle = match oracle_within_guard(family, n) {
        Ok(()) => Some(sequence::term(family, n, Route::Oracle)?),
        Err(Error::CostGuard { .. }) => None,
        Err(e) => return Err(e),
    };
    let det = all.agree.then(|| all.value().clone());
    let pass = det.as_ref() == Some(&closed) && oracle.as_ref().is_none_or(|o| o == &closed);
    Ok(VerifyRow {
        n,
        determinant: det.map(|d| d.to_string()),
        closed_form: closed.to_string(),
        oracle: oracle.map(|o| o.to_string()),
        pass,
    })
}

fn verify(family: Family, n_min: u64, n_max: u64, format: Format) -> CmdResult {
    if n_min > n_max {
        return Err(UsageError(format!(
            "--n-min {n_min} exceeds --n-max {n_max}"
        )));
    }
    let rows: Vec<VerifyRow> = (n_min..=n_max)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| verify_row(family, n))
        .collect::<Result<_, _>>()?;
    let failed = rows.iter().filter(|r| !r.pass).count();
    let cell = |v: &Option<String>, none: &str| v.clone().unwrap_or_else(|| none.to_string());
    let status = |r: &VerifyRow| if r.pass { "PASS" } else { "FAIL" };
    match format {
        Format::Json => println!("{}", json_line(&rows)),
        Format::Csv => {
            println!("n,determinant,closed_form,oracle,status");
            for r in &rows {
                println!(
                    "{},{},{},{},{}",
                    r.n,
                    cell(&r.determinant, "DISAGREE"),
                    r.closed_form,
                    cell(&r.oracle, "SKIPPED-ORACLE"),
                    status(r)
                );
            }
        }
        Format::Plain => {
            println!("# {family}");
            println!("n\tdeterminant\tclosed_form\toracle\tstatus");
            for r in &rows {
                println!(
                    "{}\t{}\t{}\t{}\t{}",
                    r.n,
                    cell(&r.determinant, "DISAGREE"),
                    r.closed_form,
                    cell(&r.oracle, "SKIPPED-ORACLE"),
                    status(r)
                );
            }
            println!("{} passed, {failed} failed", rows.len() - failed);
        }
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(DISAGREE)
    })
}

fn bench_cmd(
    h: &hessenberg_catalan::BinomialHessenberg,
    engines: &[Engine],
    reps: usize,
    format: Format,
) -> CmdResult {
    let report = bench::run(h, engines, reps)?;
    match format {
        Format::Json => {
            let rows: Vec<BenchJson> = report
                .rows
                .iter()
                .map(|r| BenchJson {
                    engine: r.engine.name(),
                    repetitions: r.repetitions,
                    min_ns: r.min.as_nanos(),
                    median_ns: r.median.as_nanos(),
                    value: r.value.to_string(),
                })
                .collect();
            println!("{}", json_line(&rows));
        }
        Format::Csv => {
            println!("engine,repetitions,min_ns,median_ns,value");
            for r in &report.rows {
                println!(
                    "{},{},{},{},{}",
                    r.engine,
                    r.repetitions,
                    r.min.as_nanos(),
                    r.median.as_nanos(),
                    r.value
                );
            }
        }
        Format::Plain => {
            println!(
                "{:<14} {:>5} {:>14} {:>14}",
                "engine", "reps", "min", "median"
            );
            for r in &report.rows {
                println!(
                    "{:<14} {:>5} {:>14} {:>14}",
                    r.engine.name(),
                    r.repetitions,
                    format!("{:.3?}", r.min),
                    format!("{:.3?}", r.median)
                );
            }
            match report.value() {
                Some(v) => println!("value: {v}"),
                None => {
                    for r in &report.rows {
                        println!("{}: {}", r.engine, r.value);
                    }
                }
            }
        }
    }
    if report.agree {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("error: engines disagree");
        Ok(ExitCode::from(DISAGREE))
    }
}

fn oeis_check(
    family: Family,
    path: &std::path::Path,
    from: Option<u64>,
    to: Option<u64>,
    align: i64,
    route: RouteChoice,
) -> CmdResult {
    let bytes = std::fs::read(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    let bfile = parse_bfile(&bytes)?;
    let (Some(first), Some(last)) = (bfile.first_index(), bfile.last_index()) else {
        return Err(UsageError(format!("{} holds no terms", path.display())));
    };
    let from = from.unwrap_or_else(|| (first - align).max(0) as u64);
    let to = match to {
        Some(t) => t,
        None if last - align < 0 => return Err(Error::EmptyOverlap.into()),
        None => (last - align) as u64,
    };
    let spec = SequenceSpec::new(family, from, to)?;
    let route = match route {
        RouteChoice::Determinant => Route::Determinant,
        RouteChoice::ClosedForm => Route::ClosedForm,
        RouteChoice::Oracle => Route::Oracle,
    };
    let cmp = sequence::compare_route(&spec, route, &bfile, align)?;
    println!("matched: {}", cmp.matched);
    println!("mismatches: {}", cmp.mismatches.len());
    for m in &cmp.mismatches {
        println!(
            "mismatch n={} b-file={} computed={}",
            m.index, m.expected, m.actual
        );
    }
    Ok(if cmp.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(DISAGREE)
    })
}
