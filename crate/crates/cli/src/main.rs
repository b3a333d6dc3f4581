//! `hooklen`: t-core codings, exploded tableaux and identity verification
//! from the command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on a usage or
//! input error.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hooklen", version, about = "t-core codings, exploded tableaux and hook length identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProfileArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Bijection,
    MultisetFormula,
    Geometry,
    NekrasovOkounkov,
    PartitionGeneratingFunction,
    SinFamily,
    PolySFamily,
    Jacobi,
    JacobiSinConsistency,
    Macdonald,
    TcoreLemmas,
    Multiplication,
    HookContent,
    SinLemma,
    CoreEnumeration,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// W, V, W†, C, M, m of a partition and its conjugate, or the partition of a coding.
    CoreMap {
        /// Parts separated by commas; `-` for the empty partition.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "coding")]
        partition: Option<String>,
        /// A V_t-coding such as `21/2,13/2,-1/2,-7/2,-9/2,-17/2`.
        #[arg(long, allow_hyphen_values = true)]
        coding: Option<String>,
        #[arg(long)]
        t: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Render the exploded tableau window of a partition.
    Explode {
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        #[arg(long)]
        t: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the t-cores up to a size with their codings.
    Enumerate {
        #[arg(long)]
        t: u64,
        #[arg(long, default_value_t = 10)]
        max_size: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run one identity verifier.
    Verify {
        #[arg(value_enum)]
        identity: Identity,
        /// Integer t for combinatorial checks; `re` or `re,im` for the sine family.
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long)]
        r: Option<u64>,
        /// Truncation order N.
        #[arg(long)]
        trunc: Option<usize>,
        /// Complex sample `re,im`.
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        /// Complex value `re,im` at which the s-polynomial identity is also evaluated.
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        #[arg(long)]
        max_size: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification battery.
    Suite {
        #[arg(long, value_enum, default_value = "quick")]
        profile: ProfileArg,
        /// Draw the complex sample panel from this seed instead of the default panel.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
