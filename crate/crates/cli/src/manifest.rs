use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::args::{Cli, Command};

/// What produced a report, with enough detail to run it again.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub command: String,
    /// Arguments after the program name, as given.
    pub parameters: Vec<String>,
    pub seed: u64,
    pub field: String,
    pub input: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub timestamp: u64,
}

pub const CSV_PREFIX: &str = "# manifest: ";

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Independence { .. } => "independence",
        Command::Certify { .. } => "certify",
        Command::StarCheck { .. } => "star-check",
        Command::GenExample { .. } => "gen-example",
        Command::GenGrid { .. } => "gen-grid",
        Command::GenStar { .. } => "gen-star",
        Command::CbCheck { .. } => "cb-check",
        Command::Sweep { .. } => "sweep",
        Command::Replay { .. } => "replay",
    }
}

fn input_of(c: &Command) -> Option<PathBuf> {
    match c {
        Command::Independence { input, .. }
        | Command::Certify { input, .. }
        | Command::StarCheck { input, .. }
        | Command::CbCheck { input, .. } => Some(input.clone()),
        Command::Replay { report } => Some(report.clone()),
        _ => None,
    }
}

pub fn resolve_timestamp(flag: Option<u64>) -> u64 {
    flag.or_else(|| std::env::var("SOURCE_DATE_EPOCH").ok().and_then(|s| s.trim().parse().ok()))
        .unwrap_or_else(|| SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()))
}

impl RunManifest {
    pub fn new(cli: &Cli, parameters: Vec<String>) -> Self {
        RunManifest {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command_name(&cli.command).to_string(),
            parameters,
            seed: cli.common.seed,
            field: cli.common.field.to_string(),
            input: input_of(&cli.command),
            output: cli.common.out.clone(),
            timestamp: resolve_timestamp(cli.common.timestamp),
        }
    }

    /// Arguments that rerun this manifest with the same timestamp and no
    /// output file.
    pub fn replay_arguments(&self) -> Vec<String> {
        let mut out = vec!["nodal".to_string()];
        let mut skip = false;
        for a in &self.parameters {
            if skip {
                skip = false;
                continue;
            }
            if a == "--out" || a == "--timestamp" {
                skip = true;
                continue;
            }
            if a.starts_with("--out=") || a.starts_with("--timestamp=") {
                continue;
            }
            out.push(a.clone());
        }
        out.push("--timestamp".into());
        out.push(self.timestamp.to_string());
        out
    }
}
