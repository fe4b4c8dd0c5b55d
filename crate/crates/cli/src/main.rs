//! `subproj`: queries on chain complexes described in a JSON document.
//!
//! Exit codes: 0 success, 1 the queried property is false, 2 input error,
//! 3 internal invariant breach.

mod commands;
mod failure;
mod text;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "subproj", version, about = "Subprojectivity of chain complexes over Z and Z/m")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Definition,
    Homk,
    Kernel,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Homology of a complex, as invariant factors per degree.
    Homology {
        file: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long, allow_hyphen_values = true)]
        degree: Option<i64>,
    },
    /// Whether a complex is exact. Exit code 1 when it is not.
    Exact {
        file: PathBuf,
        #[arg(long)]
        object: String,
        /// Cross-check through membership for all shifts of sphere(R, 0).
        #[arg(long)]
        via_subproj: bool,
    },
    /// Decide whether a chain map is null-homotopic; prints the witness.
    Nullhomotopy {
        file: PathBuf,
        #[arg(long)]
        map: String,
        /// Write the witness document here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hom in the homotopy category, `H_n` of the Hom complex.
    Homk {
        file: PathBuf,
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        degree: i64,
    },
    /// Decide whether N lies in the subprojectivity domain of M.
    Subproj {
        file: PathBuf,
        #[arg(long)]
        m: String,
        #[arg(long)]
        n: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Definition)]
        route: RouteArg,
        /// Write the certificate (or, for `all`, the list of certificates) here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mapping cone of `g: M[-1] → K` and its short exact sequence.
    Cone {
        file: PathBuf,
        #[arg(long)]
        map: String,
    },
    /// Pullback of `g: C → B` along `f: A → B`.
    Pullback {
        file: PathBuf,
        #[arg(long)]
        g: String,
        #[arg(long)]
        f: String,
    },
    /// Run a verification suite and print its report.
    Verify {
        suite: String,
        #[arg(long, default_value = "Z")]
        ring: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run trials on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Shift a complex: `X[n]_k = X_{k-n}`.
    Shift {
        file: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long, allow_hyphen_values = true)]
        by: i64,
    },
    /// Re-validate a certificate, witness, suite report or document.
    Check { file: PathBuf },
    /// List the available suites.
    Suites,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
