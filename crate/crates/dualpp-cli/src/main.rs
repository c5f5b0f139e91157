use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dualpp_cli::commands::{self, Options, Status};

/// Exact-rational workbench for dual pre-Poisson algebras.
///
/// Exit status: 0 pass, 1 verification failure, 2 input error.
#[derive(Parser)]
#[command(name = "dualpp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a fixture against a structure kind or a compound target
    /// (rep, form, coalgebra, bialgebra, matched-pair, manin, o-operator,
    /// rota-baxter, deformation, averaging).
    Verify {
        #[arg(long)]
        kind: String,
        /// Print every witness instead of the first 20.
        #[arg(long)]
        all_witnesses: bool,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Build an algebra from fixtures; the result is re-verified before it is written.
    Construct {
        /// tensor, perm-poisson, average, derivations, poisson-semidirect,
        /// semidirect, coregular-double, matched-glue, semiclassical,
        /// predpp-subadjacent
        what: String,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(short)]
        o: Option<PathBuf>,
        #[arg(long)]
        all_witnesses: bool,
    },
    /// Yang-Baxter pipeline: residual, bialgebra, canonical, dual-products, closed-form.
    Ybe {
        what: String,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(short)]
        o: Option<PathBuf>,
        #[arg(long)]
        all_witnesses: bool,
    },
    /// Operad generating series, the functional-equation residual and n*n!.
    Series {
        #[arg(long)]
        order: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Verify {
            kind,
            all_witnesses,
            inputs,
        } => commands::verify(
            &kind,
            &inputs,
            &Options {
                all_witnesses,
                output: None,
            },
        ),
        Command::Construct {
            what,
            inputs,
            o,
            all_witnesses,
        } => commands::construct(&what, &inputs, &Options { all_witnesses, output: o }),
        Command::Ybe {
            what,
            inputs,
            o,
            all_witnesses,
        } => commands::ybe(&what, &inputs, &Options { all_witnesses, output: o }),
        Command::Series { order } => commands::series(order),
    };
    match result {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            ExitCode::from(outcome.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Status::InputError as u8)
        }
    }
}
