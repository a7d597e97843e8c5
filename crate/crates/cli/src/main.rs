//! `spancalc`: evaluate, compare, factor and rewrite diagrams from the
//! command line.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0    | success (`eq`: equal) |
//! | 1    | the input does not parse |
//! | 2    | type or fragment error |
//! | 3    | semantics not applicable to the fragment |
//! | 4    | budget refused |
//! | 5    | `verify-rules`: some rule failed |
//! | 10   | `eq`: unequal |
//! | 64   | bad command line |
//! | 66   | input file unreadable |
//! | 70   | internal invariant violated |

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "spancalc", version, about = "Span semantics for phase-free ZX fragments")]
pub struct Cli {
    /// Fragment the input must lie in, e.g. SPAN_CB2.
    #[arg(long, global = true)]
    pub fragment: Option<String>,
    /// Semantics to use: path, f2, linspan, affspan, counting, bool, partial.
    #[arg(long, global = true)]
    pub semantics: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Accepted for symmetry with the test tools; nothing here is random.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads for rule verification and the probe.
    #[arg(long, global = true, env = "SPANCALC_JOBS")]
    pub jobs: Option<usize>,
    /// Instantiation bound for parameterized rule families.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FactorMode {
    Rank,
    Pariso,
    Split,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a diagram file.
    Eval { file: PathBuf },
    /// Decide whether two diagram files denote the same morphism.
    Eq { a: PathBuf, b: PathBuf },
    /// Factor the semantics of a diagram.
    Factor {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: FactorMode,
    },
    /// Check every catalog rule under all applicable semantics.
    VerifyRules {
        /// Only rules whose name starts with this.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Compare semantic and rewrite classes of generalized CNOT circuits.
    ProbeConjecture {
        #[arg(long)]
        wires: usize,
        #[arg(long)]
        depth: usize,
        /// Extra gates a rewrite path may use beyond the depth.
        #[arg(long)]
        slack: Option<usize>,
    },
    /// Convert between truth tables and algebraic normal form.
    Anf {
        /// Bits `f(0) f(1) ...` with wire 1 as the most significant bit.
        #[arg(long, conflicts_with = "poly", required_unless_present = "poly")]
        table: Option<String>,
        #[arg(long)]
        poly: Option<String>,
        /// Variable count for --poly; defaults to the largest index used.
        #[arg(long, requires = "poly")]
        vars: Option<usize>,
    },
    /// Replace a diagram denoting the empty span by the zero normal form.
    Normalize { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
