mod args;
mod commands;
mod error;
mod manifest;

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use nodal_core::{FieldDescriptor, Fp, Rational};

use crate::args::{Cli, Command};
use crate::error::CliError;
use crate::manifest::{RunManifest, CSV_PREFIX};

/// Prime fields the binary is compiled for.
const PRIMES: [u64; 14] = [2, 3, 5, 7, 11, 13, 31, 101, 257, 1009, 7919, 10007, 32003, 65521];

macro_rules! with_field {
    ($field:expr, $f:ident => $body:expr) => {
        match $field {
            FieldDescriptor::Rational => {
                type $f = Rational;
                $body
            }
            FieldDescriptor::Prime(p) => with_field!(@prime p, $f => $body;
                2, 3, 5, 7, 11, 13, 31, 101, 257, 1009, 7919, 10007, 32003, 65521),
        }
    };
    (@prime $p:ident, $f:ident => $body:expr; $($q:literal),*) => {
        match $p {
            $($q => {
                type $f = Fp<$q>;
                $body
            })*
            other => Err(CliError::Input(format!(
                "fp:{other} is not among the supported primes {PRIMES:?}"
            ))),
        }
    };
}

fn run_parsed(cli: &Cli, manifest: &RunManifest) -> Result<String, CliError> {
    with_field!(cli.common.field, F => commands::execute::<F>(cli, manifest))
}

fn read_manifest(path: &Path) -> Result<(RunManifest, String), CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let manifest = if let Some(rest) = text.strip_prefix(CSV_PREFIX) {
        let line = rest.lines().next().unwrap_or("");
        serde_json::from_str(line)
    } else {
        serde_json::from_str::<serde_json::Value>(&text)
            .and_then(|v| serde_json::from_value(v.get("manifest").cloned().unwrap_or_default()))
    }
    .map_err(|e| CliError::Input(format!("{}: no manifest: {e}", path.display())))?;
    Ok((manifest, text))
}

fn replay(path: &Path) -> Result<String, CliError> {
    let (original, text) = read_manifest(path)?;
    let cli = Cli::try_parse_from(original.replay_arguments())
        .map_err(|e| CliError::Input(format!("recorded arguments no longer parse: {e}")))?;
    if matches!(cli.command, Command::Replay { .. }) {
        return Err(CliError::Input("a replay report cannot be replayed".into()));
    }
    let rerun = run_parsed(&cli, &original)?;
    if rerun == text {
        Ok(format!("identical: {}\n", path.display()))
    } else {
        Err(CliError::CrossCheck(format!("replaying {} produced a different report", path.display())))
    }
}

fn run(cli: &Cli, parameters: Vec<String>) -> Result<(), CliError> {
    let output = match &cli.command {
        Command::Replay { report } => replay(report)?,
        _ => run_parsed(cli, &RunManifest::new(cli, parameters))?,
    };
    match &cli.common.out {
        Some(path) => fs::write(path, output).map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{output}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let parameters: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    match run(&cli, parameters) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("nodal: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
