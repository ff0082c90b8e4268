//! `vertex`: enumerate tuple pairs, print truncated Schur coefficients of the
//! vertex operator, evaluate matrix elements and run the identity suite.
//!
//! Exit codes: 0 success, 1 identity failure, 2 usage or configuration error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "vertex", version, about = "Exact Laurent expansion of bosonic vertex operators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Mode cutoff K
    #[arg(long, global = true, default_value_t = 2)]
    pub modes: u32,

    /// Degree cutoff D
    #[arg(long, global = true, default_value_t = 3)]
    pub degree: u32,

    /// Expansion order cutoff M
    #[arg(long, global = true, default_value_t = 4)]
    pub order: u32,

    /// Basis systems {f_n}, {g_n}: inline JSON or a path to a JSON file
    #[arg(long, global = true)]
    pub basis: Option<String>,

    /// Seed for randomized verification inputs
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,

    /// Number of randomized verification trials
    #[arg(long, global = true, default_value_t = 5)]
    pub trials: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output here instead of stdout
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the truncated Schur coefficient S_w
    SchurTerms {
        #[arg(long, allow_negative_numbers = true)]
        w: i64,
    },
    /// List the tuple pairs of total degree m and net weight w
    Enumerate {
        #[arg(long)]
        m: u32,
        #[arg(long, allow_negative_numbers = true)]
        w: i64,
    },
    /// Closed-form matrix element <e^u, V(z) e^v> as a Laurent polynomial
    MatrixElement {
        /// One-particle vector u (inline JSON or path)
        #[arg(long)]
        u: String,
        /// One-particle vector v (inline JSON or path)
        #[arg(long)]
        v: String,
    },
    /// Classical Schur polynomial S_m(x_1..x_K)
    ElementarySchur {
        #[arg(long)]
        m: u32,
    },
    /// Run every identity check on seeded random inputs
    Verify,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Latex,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            if let Err(e) = commands::emit(&cli, &outcome.rendered) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
