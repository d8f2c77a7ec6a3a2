//! `ghk`: generalized Hilbert-Kunz invariants of monomial ideals in
//! two-dimensional normal toric rings.

mod commands;
mod error;
mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::commands::{run, Command};
use crate::error::CliError;
use crate::input::InputDocument;

#[derive(Debug, Parser)]
#[command(name = "ghk", version, about = "Exact generalized Hilbert-Kunz invariants of toric monomial ideals")]
struct Cli {
    /// JSON input document.
    #[arg(long, global = true, value_name = "PATH", conflicts_with = "family")]
    file: Option<PathBuf>,
    /// Built-in instance, e.g. `veronese:3,1`, `a:3,1`, `quadrant:(2,0);(0,3)`.
    #[arg(long, global = true, value_name = "SPEC")]
    family: Option<String>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// The generalized Hilbert-Kunz multiplicity.
    Eghk,
    /// The counts F(n) = l(H^0(R/I^[p^n])) and their normalizations.
    Function {
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
    },
    /// Splits l(H^0(R/I^[q])) into symbolic-vs-ordinary and ordinary-vs-Frobenius parts.
    Split {
        #[arg(long)]
        q: u64,
    },
    /// l(H^0(R/I^n)) for ordinary powers, with optional quasi-polynomial fit.
    Powers {
        #[arg(long)]
        max_n: u64,
        #[arg(long)]
        period: Option<usize>,
        /// Largest class-group order tried in the torsion factorization.
        #[arg(long)]
        max_order: Option<u64>,
    },
    /// e_gHK from a stable Cohen-Macaulay type and Tor table.
    Reptype,
    /// Runs every invariant check on the input.
    Verify,
    /// Writes an SVG picture of the region between LC_I and W_I.
    Plot {
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
        /// Split the region with the q-th ordinary power.
        #[arg(long)]
        q_mark: Option<u64>,
    },
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Eghk => Command::Eghk,
            Cmd::Function { prime, max_n } => Command::Function { prime, max_n },
            Cmd::Split { q } => Command::Split { q },
            Cmd::Powers { max_n, period, max_order } => Command::Powers { max_n, period, max_order },
            Cmd::Reptype => Command::Reptype,
            Cmd::Verify => Command::Verify,
            Cmd::Plot { out, q_mark } => Command::Plot { out, q_mark },
        }
    }
}

fn load(cli: &Cli) -> Result<InputDocument, CliError> {
    match (&cli.file, &cli.family) {
        (Some(path), None) => InputDocument::from_path(path),
        (None, Some(spec)) => Ok(InputDocument::from_family(spec)),
        _ => Err(CliError::Input("give one of --file PATH or --family SPEC".into())),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = load(&cli).and_then(|input| run(&cli.command.into(), &input));
    match outcome {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{}", out.report.to_json());
            eprint!("{}", out.summary);
            match out.failure {
                None => ExitCode::SUCCESS,
                Some(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(e.exit_code())
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
