use std::fs;
use std::path::Path;

use nodal_core::algebra::Field;
use nodal_core::conditions::{full_certificate, impose_independent};
use nodal_core::error::{DocumentError, GeneratorError, IncidenceError, TheoremError};
use nodal_core::generators::{gen_example, gen_grid_ci, gen_random_config, gen_star_config};
use nodal_core::geom::PointConfig;
use nodal_core::incidence::{property_star, SearchOptions};
use nodal_core::io::{
    BundleDocument, ConditionsDocument, ExampleDocument, GridDocument, PointSetDocument, ProjectionRecord, StarDocument,
};
use nodal_core::theorems::{cb_check, certify_main, CIParams, CertifyOptions};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::args::{Cli, Command, Format, SweepRange};
use crate::error::CliError;
use crate::manifest::{RunManifest, CSV_PREFIX};

#[derive(Serialize)]
struct Report<'a, T> {
    manifest: &'a RunManifest,
    report: T,
}

fn render<T: Serialize>(manifest: &RunManifest, report: T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(&Report { manifest, report }).map_err(|e| CliError::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Reads a point set from a bare document or from the `report` of one of
/// this tool's outputs.
pub fn load_points<F: Field>(path: &Path) -> Result<PointConfig<F>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let mut value: Value =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    if let Some(r) = value.get_mut("report") {
        value = r.take();
    }
    if value.get("points").is_some_and(Value::is_object) {
        value = value["points"].take();
    }
    let doc: PointSetDocument =
        serde_json::from_value(value).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(doc.to_config()?)
}

fn load_projection<F: Field>(path: &Path) -> Result<nodal_core::geom::LinearProjection<F>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let rec: ProjectionRecord =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(rec.to_projection()?)
}

fn params(n: u32, k: u32) -> Result<CIParams, CliError> {
    CIParams::new(n, k).map_err(|e| CliError::Input(e.to_string()))
}

pub fn execute<F: Field>(cli: &Cli, manifest: &RunManifest) -> Result<String, CliError> {
    let search = SearchOptions { exact_threshold: cli.common.exact_threshold, ..SearchOptions::default() }
        .with_seed(cli.common.seed);
    match &cli.command {
        Command::Independence { input, degree } => {
            let cfg = load_points::<F>(input)?;
            let report = impose_independent(&cfg, *degree);
            let full = full_certificate(&cfg, *degree);
            render(manifest, ConditionsDocument::new(report, &full))
        }
        Command::Certify { input, n, k, intermediate_dim, projection, no_cross_check } => {
            let cfg = load_points::<F>(input)?;
            let plane_projection = projection.as_deref().map(load_projection::<F>).transpose()?;
            let opts = CertifyOptions {
                seed: cli.common.seed,
                search,
                intermediate_dim: *intermediate_dim,
                plane_projection,
                cross_check: !no_cross_check,
            };
            let bundle = certify_main(&cfg, params(*n, *k)?, &opts)?;
            render(manifest, BundleDocument::from_bundle(&bundle))
        }
        Command::StarCheck { input, coefficient, t_max } => {
            let cfg = load_points::<F>(input)?;
            let report = property_star(&cfg, *coefficient, *t_max, &search)?;
            render(manifest, StarDocument::from_report(&report))
        }
        Command::GenExample { n, k } => {
            let (family, nodes) = gen_example::<F>(*n, *k, cli.common.seed)?;
            render(manifest, ExampleDocument::new(&family, &nodes))
        }
        Command::GenGrid { a } => {
            let grid = gen_grid_ci::<F>(*a)?;
            render(manifest, GridDocument::new(&grid))
        }
        Command::GenStar { n, k, size, ambient_dim, max_retries } => {
            let s = gen_star_config::<F>(params(*n, *k)?, *size, *ambient_dim, cli.common.seed, *max_retries)?;
            #[derive(Serialize)]
            struct StarConfigDocument {
                points: PointSetDocument,
                seed: u64,
                attempts: u32,
                t_max: u32,
            }
            render(
                manifest,
                StarConfigDocument {
                    points: PointSetDocument::from_config(&s.config),
                    seed: s.seed,
                    attempts: s.attempts,
                    t_max: s.t_max,
                },
            )
        }
        Command::CbCheck { input, degrees } => {
            let cfg = load_points::<F>(input)?;
            let check = cb_check(&cfg, degrees).map_err(|e| CliError::Input(e.to_string()))?;
            render(manifest, check)
        }
        Command::Sweep { range, format } => sweep::<F>(range, *format, cli.common.seed, manifest),
        Command::Replay { .. } => Err(CliError::Internal("replay is handled before dispatch".into())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub n: u32,
    pub k: u32,
    pub degree: u32,
    pub node_bound: u64,
    pub size: usize,
    pub samples: u32,
    /// Samples for which a ★-configuration was drawn.
    pub generated: u32,
    /// Samples whose points were all separated.
    pub independent: u32,
    pub dependent: u32,
    pub routes: String,
}

fn sweep_sample<F: Field>(p: CIParams, size: usize, seed: u64, conjecture: bool) -> Result<Option<String>, CliError> {
    let generated = if conjecture {
        gen_random_config::<F>(5, size, seed)?
    } else {
        match gen_star_config::<F>(p, size, 5, seed, 16) {
            Ok(s) => s.config,
            Err(GeneratorError::RetriesExhausted { .. }) => return Ok(None),
            Err(e) => return Err(e.into()),
        }
    };
    if conjecture {
        let independent = full_certificate(&generated, p.separation_degree()).is_complete();
        return Ok(Some(if independent { "direct".into() } else { "dependent".into() }));
    }
    let opts = CertifyOptions { seed, ..CertifyOptions::default() };
    match certify_main(&generated, p, &opts) {
        Ok(b) => Ok(Some(b.route.name().to_string())),
        Err(TheoremError::Dependent { .. }) => Ok(Some("dependent".into())),
        Err(e) => Err(e.into()),
    }
}

fn sweep<F: Field>(range: &SweepRange, format: Format, seed: u64, manifest: &RunManifest) -> Result<String, CliError> {
    if range.n_min < 2 || range.n_max < range.n_min {
        return Err(CliError::Input(format!("bad range {}..={}", range.n_min, range.n_max)));
    }
    let pairs: Vec<CIParams> = (range.n_min..=range.n_max)
        .flat_map(|n| (2..=n).map(move |k| CIParams { n, k }))
        .collect();
    let jobs: Vec<(usize, u32)> = (0..pairs.len()).flat_map(|i| (0..range.samples).map(move |s| (i, s))).collect();
    let size_of = |p: &CIParams| {
        if range.conjecture {
            p.example_node_count() as usize - 1
        } else {
            range.size.unwrap_or(p.node_bound() as usize)
        }
    };
    let outcomes: Vec<Result<Option<String>, CliError>> = jobs
        .par_iter()
        .map(|&(i, s)| {
            let p = pairs[i];
            sweep_sample::<F>(p, size_of(&p), seed.wrapping_add(((p.n as u64) << 40) ^ ((p.k as u64) << 20) ^ s as u64), range.conjecture)
        })
        .collect();
    let mut rows: Vec<SweepRow> = pairs
        .iter()
        .map(|p| SweepRow {
            n: p.n,
            k: p.k,
            degree: p.separation_degree(),
            node_bound: p.node_bound(),
            size: size_of(p),
            samples: range.samples,
            generated: 0,
            independent: 0,
            dependent: 0,
            routes: String::new(),
        })
        .collect();
    let mut routes: Vec<std::collections::BTreeMap<String, u32>> = vec![Default::default(); pairs.len()];
    for (&(i, _), outcome) in jobs.iter().zip(outcomes) {
        let Some(route) = outcome? else { continue };
        let row = &mut rows[i];
        row.generated += 1;
        if route == "dependent" {
            row.dependent += 1;
        } else {
            row.independent += 1;
        }
        *routes[i].entry(route).or_default() += 1;
    }
    for (row, r) in rows.iter_mut().zip(routes) {
        row.routes = r.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(";");
    }
    match format {
        Format::Json => render(manifest, rows),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in &rows {
                w.serialize(row).map_err(|e| CliError::Internal(e.to_string()))?;
            }
            let body = String::from_utf8(w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?)
                .map_err(|e| CliError::Internal(e.to_string()))?;
            let head = serde_json::to_string(manifest).map_err(|e| CliError::Internal(e.to_string()))?;
            Ok(format!("{CSV_PREFIX}{head}\n{body}"))
        }
    }
}

impl From<DocumentError> for CliError {
    fn from(e: DocumentError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<IncidenceError> for CliError {
    fn from(e: IncidenceError) -> Self {
        match e {
            IncidenceError::Geom(g) => CliError::Internal(g.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<TheoremError> for CliError {
    fn from(e: TheoremError) -> Self {
        match e {
            TheoremError::StarViolation { .. }
            | TheoremError::TooManyPoints { .. }
            | TheoremError::Dependent { .. }
            | TheoremError::SwappingHypothesis { .. }
            | TheoremError::Invariant { .. } => CliError::Hypothesis(e.to_string()),
            TheoremError::CrossCheck(_) => CliError::CrossCheck(e.to_string()),
            TheoremError::BadParameters(_) | TheoremError::SwappingDegrees { .. } | TheoremError::NotAPartition => {
                CliError::Input(e.to_string())
            }
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<GeneratorError> for CliError {
    fn from(e: GeneratorError) -> Self {
        match e {
            GeneratorError::Theorem(t) => t.into(),
            GeneratorError::BadParameters(_) | GeneratorError::FieldTooSmall { .. } => CliError::Input(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}
