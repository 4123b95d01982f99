//! `zelisko`: linear equations over R/mR, Zelisko groups and Smith forms
//! from the command line.

mod commands;
mod golden;
mod input;
mod probe;
mod report;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use zelisko_core::{Integers, PolysOverFp, RingCtx};

use crate::report::{CliError, Report};

#[derive(Debug, Parser)]
#[command(name = "zelisko", version, about = "Linear equations in R/mR, Zelisko groups and Smith forms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Base domain: `int` or `fpx:<p>` for polynomials over F_p.
    #[arg(long, global = true, default_value = "int")]
    pub ring: String,

    /// Modulus m of R_m; polynomials as ascending coefficient arrays.
    #[arg(long = "mod", global = true, allow_hyphen_values = true)]
    pub modulus: Option<String>,

    /// Emit `{"status", "data", "diagnostics"}` JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Cap on enumerated sets.
    #[arg(long, global = true)]
    pub bound: Option<u64>,
}

#[derive(Debug, Args)]
pub struct Equation {
    /// Coefficient a of `a x = b`.
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    /// Right-hand side b.
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
}

#[derive(Debug, Args)]
pub struct MatrixSource {
    /// Matrix as nested arrays, e.g. `[[1,0],[2,1]]`.
    #[arg(long, conflicts_with = "matrix_file")]
    pub matrix: Option<String>,
    /// File holding the matrix in the same format.
    #[arg(long)]
    pub matrix_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OtherMatrixSource {
    /// Second matrix B.
    #[arg(long, conflicts_with = "other_file")]
    pub other: Option<String>,
    #[arg(long)]
    pub other_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve `a x = b` in R_m.
    Solve {
        #[command(flatten)]
        eq: Equation,
        /// List every solution.
        #[arg(long)]
        all: bool,
        /// List the generating solutions.
        #[arg(long)]
        generating: bool,
    },
    /// Generating solutions of `a x = b`.
    Generating {
        #[command(flatten)]
        eq: Equation,
    },
    /// The least generating solution in enumeration order.
    MinGen {
        #[command(flatten)]
        eq: Equation,
    },
    /// Generator of the annihilator of a.
    Ann {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Associate test with a unit witness.
    Assoc {
        #[command(flatten)]
        eq: Equation,
    },
    /// Decomposition `a = mu * e` with e a unit.
    UnitPart {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// The table of equations `phi_i = phi_j x` for a divisibility chain.
    Chain {
        /// Chain `phi_1 | ... | phi_n`, e.g. `4,8,24`.
        #[arg(long)]
        phi: String,
    },
    /// Compares the descent and ascent products of psi over a permutation.
    PermCheck {
        #[arg(long)]
        phi: String,
        /// Permutation in one-line notation on 1..n, e.g. `3,1,2`.
        #[arg(long)]
        sigma: String,
    },
    /// Decides membership of H in the Zelisko group of diag(phi).
    ZeliskoCheck {
        #[arg(long)]
        phi: String,
        #[command(flatten)]
        h: MatrixSource,
    },
    /// An invertible S with `H Phi = Phi S`.
    ZeliskoWitness {
        #[arg(long)]
        phi: String,
        #[command(flatten)]
        h: MatrixSource,
    },
    /// Draws a member of the Zelisko group.
    ZeliskoSample {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        seed: u64,
    },
    /// Compares the determinants of the psi-scaled lower and upper matrices.
    Lemma10 {
        #[arg(long)]
        phi: String,
        #[command(flatten)]
        h: MatrixSource,
    },
    /// Smith normal form with transforming matrices, over the domain.
    Smith {
        #[command(flatten)]
        a: MatrixSource,
    },
    /// Decides whether `A = B U` for an invertible U.
    Fact1 {
        #[command(flatten)]
        a: MatrixSource,
        #[command(flatten)]
        b: OtherMatrixSource,
    },
    /// Completes a unimodular row to a determinant-one matrix.
    CompleteRow {
        /// Row entries, e.g. `2,3,5`.
        #[arg(long, allow_hyphen_values = true)]
        row: String,
    },
    /// Reports equations whose solutions have a gcd that is not a solution.
    Probe {
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Range of moduli, `lo..hi` or `lo..=hi`.
        #[arg(long, conflicts_with = "modulus")]
        mod_range: Option<String>,
    },
    /// Checks the worked examples and reports each claim.
    Golden,
}

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    if let Command::Golden = cli.command {
        return Ok(golden::run());
    }
    let ring: RingCtx = cli.ring.parse().map_err(CliError::Core)?;
    match ring {
        RingCtx::Integers => commands::run(Integers, cli),
        RingCtx::PolynomialsOverFp { p } => {
            commands::run(PolysOverFp::new(p).map_err(CliError::Core)?, cli)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, code) = match dispatch(&cli) {
        Ok(report) => {
            let code = if report.ok { 0 } else { 1 };
            (report, code)
        }
        Err(e) => {
            let code = e.exit_code();
            (Report::from_error(&e), code)
        }
    };
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    // a closed pipe downstream is not an error worth reporting
    let _ = if cli.json {
        writeln!(out, "{}", report.to_json())
    } else {
        write!(out, "{}", report.human).and_then(|_| {
            report.diagnostics.iter().try_for_each(|d| {
                if report.ok {
                    writeln!(out, "note: {d}")
                } else {
                    writeln!(err, "note: {d}")
                }
            })
        })
    };
    ExitCode::from(code)
}
