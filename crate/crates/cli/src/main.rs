//! `qdisc`: command-line front end for the quantum disc symmetry kernel.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qdisc_core::{InvolutionForm, SeriesTag};

const AFTER_HELP: &str = "\
Expressions:
  Disc elements use the tokens z, zs (the adjoint z*), y (= 1 - z*zs), q, i,
  integers, + - * / ^ and parentheses. `zs` keeps expressions shell-safe.
  U_q elements use e, f, k, kinv, q, i with the same operators.
  Products are written explicitly with `*`; juxtaposition is an error.

Action files:
  Either the full form {\"images\": {\"k\": {\"z\": .., \"zs\": ..}, \"kinv\": .., \"e\": .., \"f\": ..}}
  or a series shorthand {\"series\": \"1a\", \"b0\": \"1\", \"b1\": \"0\"}. Both accept
  optional \"q_mode\" (symbolic, real:<rat>, imaginary:<rat>) and \"label\".
  A file argument of `-` reads standard input.

Exit status: 0 on success, 1 when a check or search reports a failure, 2 on
invalid input.";

#[derive(Parser, Debug)]
#[command(name = "qdisc", version, about = "Symmetries of the quantum disc under U_q(sl2)", after_help = AFTER_HELP)]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Degree bound for monomial checks.
    #[arg(long, global = true, env = "QDISC_DEGREE_BOUND", default_value_t = 8)]
    degree: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that an action makes the disc a module algebra.
    Verify { file: String },
    /// Find the classification rows matching an action.
    Classify { file: String },
    /// Apply a U_q element to a disc element.
    Act {
        file: String,
        /// U_q expression, e.g. "e*f - f*e".
        uq: String,
        /// Disc expression, e.g. "z^2*zs".
        disc: String,
    },
    /// Check compatibility with an involution of U_q.
    Involution {
        file: String,
        /// One of A, B, C, D, E.
        #[arg(long)]
        form: InvolutionForm,
        /// Specialize q, e.g. 1/2, -3, i/2 or i1/2. Defaults to the file's q_mode.
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },
    /// Certify that no symmetries with grading jump 2..=NMAX exist.
    Scan {
        #[arg(long, default_value_t = 100)]
        nmax: u32,
    },
    /// Emit the action file of a classification series.
    Series {
        /// One of 0+, 0-, 1a, 1b, -1a, -1b.
        #[arg(allow_hyphen_values = true)]
        tag: SeriesTag,
        #[arg(long, allow_hyphen_values = true)]
        b0: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b1: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a0: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a1: Option<String>,
        /// Draw random admissible parameters from this seed.
        #[arg(long, conflicts_with_all = ["b0", "b1", "a0", "a1"])]
        seed: Option<u64>,
    },
    /// Decide whether two actions differ by a rescaling of z.
    Iso { first: String, second: String },
    /// Verify a random member of every series and run a small scan.
    Selftest {
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("report serializes"));
            } else {
                println!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
