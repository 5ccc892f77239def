use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nodal_core::FieldDescriptor;

#[derive(Debug, Parser)]
#[command(name = "nodal", version, about = "Independent-conditions checks for nodes of complete intersection threefolds")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Coefficient field: `rational` or `fp:<p>`.
    #[arg(long, global = true, default_value = "fp:1009")]
    pub field: FieldDescriptor,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Plane searches over at most this many points are exhaustive.
    #[arg(long, global = true, default_value_t = 25)]
    pub exact_threshold: usize,
    /// Unix time recorded in the manifest; defaults to SOURCE_DATE_EPOCH,
    /// then the clock.
    #[arg(long, global = true)]
    pub timestamp: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank of the evaluation map and per-point separating forms.
    Independence {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        degree: u32,
    },
    /// Separate every node in degree 2n+k−6.
    Certify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Dimension of the intermediate projection for n ≥ 5.
        #[arg(long, default_value_t = 3)]
        intermediate_dim: usize,
        /// Projection document replacing the sampled projection to the plane.
        #[arg(long)]
        projection: Option<PathBuf>,
        /// Skip the independent ambient solve.
        #[arg(long)]
        no_cross_check: bool,
    },
    /// At most `coefficient·t` points on any curve of degree t ≤ t-max.
    StarCheck {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        coefficient: usize,
        #[arg(long)]
        t_max: u32,
    },
    /// Sample the example family and count its nodes.
    GenExample {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// The a×a grid complete intersection in the plane.
    GenGrid {
        #[arg(long)]
        a: u32,
    },
    /// Random points with property ★ for (n, k).
    GenStar {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 5)]
        ambient_dim: usize,
        #[arg(long, default_value_t = 32)]
        max_retries: u32,
    },
    /// Compare the Cayley–Bacharach prediction with a rank computation.
    CbCheck {
        #[arg(long)]
        input: PathBuf,
        /// Hypersurface degrees, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
    },
    /// Certify random ★-configurations over a range of parameters.
    Sweep {
        #[command(flatten)]
        range: SweepRange,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Re-run the command recorded in a report and compare the output.
    Replay {
        #[arg(long)]
        report: PathBuf,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SweepRange {
    #[arg(long, default_value_t = 2)]
    pub n_min: u32,
    #[arg(long, default_value_t = 4)]
    pub n_max: u32,
    /// Samples per (n, k).
    #[arg(long, default_value_t = 5)]
    pub samples: u32,
    /// Points per sample; defaults to the node bound.
    #[arg(long)]
    pub size: Option<usize>,
    /// Use (n+k−2)² − 1 points and test independence directly.
    #[arg(long)]
    pub conjecture: bool,
}
