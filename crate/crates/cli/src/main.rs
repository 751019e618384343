//! `hesscat`: build the binomial Hessenberg matrices, evaluate their
//! determinants, and check them against closed forms, path oracles and
//! OEIS b-files.
//!
//! Exit codes: 0 success or agreement, 1 disagreement or mismatch, 2 usage
//! or input error.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hessenberg_catalan::{custom_boundary, BoundaryPair, Family};

#[derive(Debug, Parser)]
#[command(
    name = "hesscat",
    version,
    about = "Hessenberg determinants of lattice path counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the binomial path matrix
    Gen {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Evaluate the determinant with one engine or all of them
    Det {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value_t = EngineChoice::Recurrence)]
        engine: EngineChoice,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Compare determinant, closed form and path oracle over a range of n
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 1)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Time determinant engines on one instance
    Bench {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [
            BenchEngine::Recurrence, BenchEngine::Elimination, BenchEngine::FractionFree
        ])]
        engines: Vec<BenchEngine>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Check a sequence against an OEIS b-file
    OeisCheck {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        bfile: std::path::PathBuf,
        #[arg(long)]
        from: Option<u64>,
        #[arg(long)]
        to: Option<u64>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        align: i64,
        #[arg(long, value_enum, default_value_t = RouteChoice::ClosedForm)]
        route: RouteChoice,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Catalan,
    Fuss,
    Rational,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    Recurrence,
    Elimination,
    FractionFree,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchEngine {
    Recurrence,
    Elimination,
    FractionFree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteChoice {
    Determinant,
    ClosedForm,
    Oracle,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    r: Option<u64>,
}

#[derive(Debug, Args)]
struct InstanceArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    n: Option<usize>,
    /// Upper boundary for --kind custom, comma separated
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    a: Option<Vec<i64>>,
    /// Lower boundary for --kind custom, comma separated (defaults to zeros)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    b: Option<Vec<i64>>,
}

/// Input problems; reported on stderr with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn missing(flag: &str, kind: &str) -> UsageError {
    UsageError(format!("--{flag} is required for --kind {kind}"))
}

impl FamilyArgs {
    fn family(&self) -> Result<Family, UsageError> {
        let family = match self.kind {
            Kind::Catalan => Family::Catalan,
            Kind::Fuss => Family::Fuss {
                k: self.k.ok_or_else(|| missing("k", "fuss"))?,
            },
            Kind::Rational => Family::Rational {
                m: self.m.ok_or_else(|| missing("m", "rational"))?,
                r: self.r.ok_or_else(|| missing("r", "rational"))?,
            },
            Kind::Custom => {
                return Err(UsageError(
                    "--kind custom only applies to gen, det and bench".into(),
                ))
            }
        };
        Ok(family.validate()?)
    }
}

impl InstanceArgs {
    fn boundary(&self) -> Result<BoundaryPair, UsageError> {
        if self.family.kind == Kind::Custom {
            let a = self.a.clone().ok_or_else(|| missing("a", "custom"))?;
            let b = self.b.clone().unwrap_or_else(|| vec![0; a.len()]);
            return Ok(custom_boundary(a, b)?);
        }
        let n = self.n.ok_or_else(|| UsageError("--n is required".into()))?;
        Ok(self.family.family()?.boundary(n)?)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
