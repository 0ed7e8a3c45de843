//! Subcommand implementations and the exit-status contract.
//!
//! Exit codes: 0 success, 2 input validation, 3 undefined mathematical
//! operation, 4 unknown reference. Errors go to stderr verbatim.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use cport_core::catalog::{Catalog, CatalogFilter, DayClass, Ket, Verdict};
use cport_core::ingest::{
    parse_ledger, parse_portfolio, parse_weights, window_summary, IngestError, PortSnapshot,
    PortfolioFormat, ProjectRecord, RhoSource, TimeWindow,
};
use cport_core::metrics::{angle_degrees, rank_ports, CPortVector, WeightKind, WeightVector};
use cport_core::Error as CoreError;

use crate::report::{
    ComparisonPayload, GapEntry, GapPayload, InputDigest, RankEntry, RankingPayload,
    ReportDocument, ReportKind, ReportMeta, SnapshotPayload, TrajectoryPayload, TrajectoryPoint,
    TrajectorySegment,
};
use crate::{human, CatalogCommand, Cli, Command, Format};

pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_UNDEFINED_MATH: i32 = 3;
pub const EXIT_UNKNOWN_REFERENCE: i32 = 4;

pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn validation(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_VALIDATION,
            message: message.into(),
        }
    }

    fn undefined_math(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_UNDEFINED_MATH,
            message: message.into(),
        }
    }

    fn unknown_reference(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_UNKNOWN_REFERENCE,
            message: message.into(),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(error: CoreError) -> Self {
        match error {
            CoreError::NullVector { .. } => CliError::undefined_math(error.to_string()),
            other => CliError::validation(other.to_string()),
        }
    }
}

impl From<IngestError> for CliError {
    fn from(error: IngestError) -> Self {
        match error {
            IngestError::Domain(inner) => inner.into(),
            other => CliError::validation(other.to_string()),
        }
    }
}

/// Read-side context: every file read is digested so reports can pin their
/// inputs.
#[derive(Default)]
struct Inputs {
    digests: Vec<InputDigest>,
}

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<Vec<u8>, CliError> {
        let bytes = std::fs::read(path)
            .map_err(|e| CliError::validation(format!("cannot read {}: {e}", path.display())))?;
        let digest = InputDigest::new(path, &bytes);
        if !self.digests.iter().any(|d| d.path == digest.path) {
            self.digests.push(digest);
        }
        Ok(bytes)
    }
}

fn portfolio_format(path: &Path) -> Result<PortfolioFormat, CliError> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("csv") => Ok(PortfolioFormat::Csv),
        Some("json") => Ok(PortfolioFormat::Json),
        _ => Err(CliError::validation(format!(
            "cannot infer portfolio format of {}: expected a .csv or .json file",
            path.display()
        ))),
    }
}

fn load_records(inputs: &mut Inputs, path: &Path) -> Result<Vec<ProjectRecord>, CliError> {
    let format = portfolio_format(path)?;
    let bytes = inputs.read(path)?;
    parse_portfolio(&bytes, format)
        .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))
}

fn load_weights(
    inputs: &mut Inputs,
    path: Option<&Path>,
) -> Result<(WeightVector, WeightVector), CliError> {
    match path {
        Some(path) => {
            let bytes = inputs.read(path)?;
            parse_weights(&bytes)
                .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))
        }
        // The documented default: uniform weights, a = (2,2,2,2) and
        // w = (sqrt 3, sqrt 3, sqrt 3).
        None => Ok((
            WeightVector::uniform(WeightKind::BusinessSpecificity),
            WeightVector::uniform(WeightKind::InnovationReward),
        )),
    }
}

fn load_rho_source(
    inputs: &mut Inputs,
    ledger: Option<&Path>,
    rho: Option<f64>,
) -> Result<RhoSource, CliError> {
    match (ledger, rho) {
        (_, Some(value)) => Ok(RhoSource::Fixed(value)),
        (Some(path), None) => {
            let bytes = inputs.read(path)?;
            let ledger = parse_ledger(&bytes)
                .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))?;
            Ok(RhoSource::Ledger(ledger))
        }
        (None, None) => Err(CliError::validation(
            "no standardization merit source: pass --ledger <path> or --rho <value>",
        )),
    }
}

struct SnapshotSpec<'a> {
    portfolio: &'a Path,
    port: &'a str,
    window: &'a str,
    ledger: Option<&'a Path>,
    rho: Option<f64>,
    weights: Option<&'a Path>,
}

fn load_snapshot(
    inputs: &mut Inputs,
    spec: &SnapshotSpec<'_>,
) -> Result<(PortSnapshot, CPortVector, SnapshotPayload), CliError> {
    let window = TimeWindow::parse(spec.window).map_err(CliError::from)?;
    let records = load_records(inputs, spec.portfolio)?;
    let (a, w) = load_weights(inputs, spec.weights)?;
    let rho_source = load_rho_source(inputs, spec.ledger, spec.rho)?;
    let summary = window_summary(&records, &window, spec.port);
    let snapshot = PortSnapshot::assemble(spec.port, window, &records, rho_source, a, w)?;
    let vector = snapshot.cport_vector()?;
    let payload = SnapshotPayload::build(&snapshot, &vector, summary);
    Ok((snapshot, vector, payload))
}

fn emit<T: serde::Serialize>(
    cli: &Cli,
    kind: ReportKind,
    inputs: Inputs,
    payload: T,
    render: impl FnOnce(&T) -> String,
) {
    match cli.format {
        Format::Json => {
            let document = ReportDocument {
                kind,
                meta: ReportMeta::new(inputs.digests, cli.reproducible),
                payload,
            };
            println!("{}", document.to_json());
        }
        Format::Human => println!("{}", render(&payload)),
    }
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::IngestCheck { portfolio } => cmd_ingest_check(cli, portfolio),
        Command::Compute {
            portfolio,
            port,
            window,
            rho,
        } => cmd_compute(cli, portfolio, port, window, *rho),
        Command::Compare {
            portfolio,
            port,
            windows,
            rho,
            portfolio2,
            port2,
            ledger2,
            rho2,
            weights2,
        } => cmd_compare(
            cli,
            portfolio,
            port,
            windows,
            *rho,
            portfolio2.as_deref(),
            port2.as_deref(),
            ledger2.as_deref(),
            *rho2,
            weights2.as_deref(),
        ),
        Command::Rank { manifest } => cmd_rank(cli, manifest),
        Command::Trajectory {
            portfolio,
            port,
            windows,
            rho,
            csv,
        } => cmd_trajectory(cli, portfolio, port, windows, *rho, csv.as_deref()),
        Command::Catalog { command } => cmd_catalog(cli, command),
    }
}

fn cmd_ingest_check(cli: &Cli, portfolio: &Path) -> Result<(), CliError> {
    let mut inputs = Inputs::default();
    let records = load_records(&mut inputs, portfolio)?;
    if let Some(ledger) = cli.ledger.as_deref() {
        let bytes = inputs.read(ledger)?;
        parse_ledger(&bytes)
            .map_err(|e| CliError::validation(format!("{}: {e}", ledger.display())))?;
    }
    if let Some(weights) = cli.weights.as_deref() {
        let bytes = inputs.read(weights)?;
        parse_weights(&bytes)
            .map_err(|e| CliError::validation(format!("{}: {e}", weights.display())))?;
    }

    let mut ports: Vec<&str> = records.iter().map(|r| r.port_id.as_str()).collect();
    ports.sort_unstable();
    ports.dedup();
    let years = records.iter().map(|r| r.start_year);
    let year_range = match (years.clone().min(), years.max()) {
        (Some(min), Some(max)) => Some((min, max)),
        _ => None,
    };

    match cli.format {
        Format::Json => {
            let payload = serde_json::json!({
                "file": portfolio.display().to_string(),
                "records": records.len(),
                "ports": ports,
                "year_range": year_range.map(|(min, max)| vec![min, max]),
            });
            println!("{}", serde_json::to_string_pretty(&payload).expect("json"));
        }
        Format::Human => {
            println!("{}: {} valid record(s)", portfolio.display(), records.len());
            println!(
                "  ports: {}",
                if ports.is_empty() {
                    "-".into()
                } else {
                    ports.join(", ")
                }
            );
            if let Some((min, max)) = year_range {
                println!("  years: {min}..{max}");
            }
        }
    }
    Ok(())
}

fn cmd_compute(
    cli: &Cli,
    portfolio: &Path,
    port: &str,
    window: &str,
    rho: Option<f64>,
) -> Result<(), CliError> {
    let mut inputs = Inputs::default();
    let spec = SnapshotSpec {
        portfolio,
        port,
        window,
        ledger: cli.ledger.as_deref(),
        rho,
        weights: cli.weights.as_deref(),
    };
    let (_, _, payload) = load_snapshot(&mut inputs, &spec)?;
    emit(cli, ReportKind::Snapshot, inputs, payload, human::snapshot);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_compare(
    cli: &Cli,
    portfolio: &Path,
    port: &str,
    windows: &[String],
    rho: Option<f64>,
    portfolio2: Option<&Path>,
    port2: Option<&str>,
    ledger2: Option<&Path>,
    rho2: Option<f64>,
    weights2: Option<&Path>,
) -> Result<(), CliError> {
    let [window1, window2] = windows else {
        return Err(CliError::validation(
            "compare needs exactly two --window specs",
        ));
    };
    let mut inputs = Inputs::default();

    let first_spec = SnapshotSpec {
        portfolio,
        port,
        window: window1,
        ledger: cli.ledger.as_deref(),
        rho,
        weights: cli.weights.as_deref(),
    };
    let second_spec = SnapshotSpec {
        portfolio: portfolio2.unwrap_or(portfolio),
        port: port2.unwrap_or(port),
        window: window2,
        ledger: ledger2.or(cli.ledger.as_deref()),
        rho: rho2.or(rho),
        weights: weights2.or(cli.weights.as_deref()),
    };
    let (first_snapshot, first_vector, first) = load_snapshot(&mut inputs, &first_spec)?;
    let (second_snapshot, second_vector, second) = load_snapshot(&mut inputs, &second_spec)?;

    // Comparison is refused outright when either side is null; a rho of 0
    // is the usual culprit and worth calling out.
    for (snapshot, vector) in [
        (&first_snapshot, &first_vector),
        (&second_snapshot, &second_vector),
    ] {
        if vector.is_null() {
            let reason = if snapshot.rho == 0.0 {
                "rho = 0".to_string()
            } else {
                "no matching investment records".to_string()
            };
            return Err(CliError::undefined_math(format!(
                "angle undefined for null C-Port Vector: snapshot {} of port {} is null ({reason})",
                snapshot.window.label(),
                snapshot.port_id,
            )));
        }
    }

    let angle = angle_degrees(&first_vector, &second_vector)?;
    let payload = ComparisonPayload {
        first,
        second,
        angle_degrees: angle,
    };
    emit(
        cli,
        ReportKind::Comparison,
        inputs,
        payload,
        human::comparison,
    );
    Ok(())
}

#[derive(Deserialize)]
struct RankManifest {
    #[serde(default)]
    window: Option<String>,
    #[serde(default)]
    weights: Option<String>,
    ports: Vec<RankPortSpec>,
}

#[derive(Deserialize)]
struct RankPortSpec {
    id: String,
    portfolio: String,
    #[serde(default)]
    ledger: Option<String>,
    #[serde(default)]
    rho: Option<f64>,
    #[serde(default)]
    weights: Option<String>,
    #[serde(default)]
    window: Option<String>,
}

fn cmd_rank(cli: &Cli, manifest_path: &Path) -> Result<(), CliError> {
    let mut inputs = Inputs::default();
    let bytes = inputs.read(manifest_path)?;
    let manifest: RankManifest = serde_json::from_slice(&bytes).map_err(|e| {
        CliError::validation(format!(
            "{}: malformed manifest: {e}",
            manifest_path.display()
        ))
    })?;
    if manifest.ports.is_empty() {
        return Err(CliError::validation("manifest lists no ports"));
    }
    // Paths inside the manifest resolve relative to the manifest itself.
    let base = manifest_path.parent().unwrap_or_else(|| Path::new("."));
    let resolve = |p: &str| -> PathBuf { base.join(p) };

    let mut snapshots: Vec<(String, PortSnapshot, CPortVector)> = Vec::new();
    let mut warnings = Vec::new();
    for port in &manifest.ports {
        let window_spec = port
            .window
            .as_deref()
            .or(manifest.window.as_deref())
            .ok_or_else(|| {
                CliError::validation(format!(
                    "port {} has no window and the manifest sets no default",
                    port.id
                ))
            })?;
        let weights_path = port
            .weights
            .as_deref()
            .or(manifest.weights.as_deref())
            .map(&resolve);
        let ledger_path = port.ledger.as_deref().map(&resolve);
        let spec = SnapshotSpec {
            portfolio: &resolve(&port.portfolio),
            port: &port.id,
            window: window_spec,
            ledger: ledger_path.as_deref(),
            rho: port.rho,
            weights: weights_path.as_deref(),
        };
        match load_snapshot(&mut inputs, &spec) {
            Ok((snapshot, vector, _)) => snapshots.push((port.id.clone(), snapshot, vector)),
            Err(error) => warnings.push(format!("port {} skipped: {}", port.id, error.message)),
        }
    }
    if snapshots.is_empty() {
        return Err(CliError::validation(format!(
            "no port in the manifest produced a snapshot:\n  {}",
            warnings.join("\n  ")
        )));
    }

    let ranked = rank_ports(
        &snapshots
            .iter()
            .map(|(id, _, vector)| (id.clone(), vector.clone()))
            .collect::<Vec<_>>(),
    );
    let entries = ranked
        .iter()
        .enumerate()
        .map(|(index, (id, magnitude))| {
            let (_, snapshot, vector) = snapshots
                .iter()
                .find(|(other, _, _)| other == id)
                .expect("ranked ids come from snapshots");
            RankEntry {
                rank: index + 1,
                port_id: id.clone(),
                window: snapshot.window.label().to_string(),
                rho: snapshot.rho,
                magnitude_meur: *magnitude,
                squared_share: vector
                    .squared_share()
                    .ok()
                    .map(|s| crate::report::per_bundle(&s)),
            }
        })
        .collect();

    for warning in &warnings {
        eprintln!("cport: warning: {warning}");
    }
    let payload = RankingPayload { entries, warnings };
    emit(cli, ReportKind::Ranking, inputs, payload, human::ranking);
    Ok(())
}

fn cmd_trajectory(
    cli: &Cli,
    portfolio: &Path,
    port: &str,
    windows: &[String],
    rho: Option<f64>,
    csv_out: Option<&Path>,
) -> Result<(), CliError> {
    if windows.len() < 2 {
        return Err(CliError::validation(
            "trajectory needs at least two --window specs",
        ));
    }
    let mut inputs = Inputs::default();
    let mut points = Vec::new();
    let mut vectors: Vec<CPortVector> = Vec::new();
    for window in windows {
        let spec = SnapshotSpec {
            portfolio,
            port,
            window,
            ledger: cli.ledger.as_deref(),
            rho,
            weights: cli.weights.as_deref(),
        };
        let (snapshot, vector, payload) = load_snapshot(&mut inputs, &spec)?;
        points.push(TrajectoryPoint {
            window: crate::report::WindowInfo::from(&snapshot.window),
            rho: snapshot.rho,
            components_meur: payload.components_meur,
            magnitude_meur: payload.magnitude_meur,
            squared_share: payload.squared_share,
        });
        vectors.push(vector);
    }

    // Null windows stay in the sequence; the angles touching them are
    // simply undefined.
    let segments = vectors
        .windows(2)
        .zip(points.windows(2))
        .map(|(pair, point_pair)| TrajectorySegment {
            from: point_pair[0].window.label.clone(),
            to: point_pair[1].window.label.clone(),
            angle_degrees: angle_degrees(&pair[0], &pair[1]).ok(),
        })
        .collect();

    let payload = TrajectoryPayload {
        port_id: port.to_string(),
        points,
        segments,
    };
    if let Some(path) = csv_out {
        std::fs::write(path, payload.to_csv())
            .map_err(|e| CliError::validation(format!("cannot write {}: {e}", path.display())))?;
    }
    emit(
        cli,
        ReportKind::Trajectory,
        inputs,
        payload,
        human::trajectory,
    );
    Ok(())
}

#[derive(Deserialize)]
struct CapabilityManifest {
    capabilities: Vec<String>,
}

fn cmd_catalog(cli: &Cli, command: &CatalogCommand) -> Result<(), CliError> {
    let catalog = Catalog::builtin();
    match command {
        CatalogCommand::List {
            day,
            bundle,
            stakeholder,
            ket,
        } => {
            let filter = CatalogFilter {
                day: day
                    .as_deref()
                    .map(|d| {
                        DayClass::parse(d).ok_or_else(|| {
                            CliError::validation(format!(
                                "unknown day class `{d}`; use 1, 1.5, or 2"
                            ))
                        })
                    })
                    .transpose()?,
                bundle: bundle
                    .as_deref()
                    .map(|b| {
                        cport_core::metrics::Bundle::from_code(b).ok_or_else(|| {
                            CliError::validation(format!(
                                "unknown bundle `{b}`; use Nv, Fr, Mb, or St"
                            ))
                        })
                    })
                    .transpose()?,
                stakeholder: stakeholder.clone(),
                ket: ket
                    .as_deref()
                    .map(|k| {
                        Ket::parse(k)
                            .ok_or_else(|| CliError::validation(format!("unknown KET `{k}`")))
                    })
                    .transpose()?,
            };
            let entries = catalog.query(&filter);
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&entries).expect("catalog serializes")
                ),
                Format::Human => println!("{}", human::catalog_list(&entries)),
            }
            Ok(())
        }
        CatalogCommand::Show { code } => {
            let entry = catalog.get(code).ok_or_else(|| {
                CliError::unknown_reference(format!("unknown service code `{code}`"))
            })?;
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(entry).expect("catalog serializes")
                ),
                Format::Human => println!("{}", human::catalog_show(entry)),
            }
            Ok(())
        }
        CatalogCommand::Gap { capabilities } => {
            let mut inputs = Inputs::default();
            let bytes = inputs.read(capabilities)?;
            let manifest: CapabilityManifest = serde_json::from_slice(&bytes).map_err(|e| {
                CliError::validation(format!(
                    "{}: malformed capability manifest: {e}",
                    capabilities.display()
                ))
            })?;
            let capability_set: BTreeSet<String> = manifest.capabilities.into_iter().collect();
            let report = catalog.gap_report(&capability_set);
            let services = report
                .services
                .into_iter()
                .map(|verdict| match verdict.verdict {
                    Verdict::Deliverable => GapEntry {
                        code: verdict.code,
                        name: verdict.name,
                        deliverable: true,
                        missing: Vec::new(),
                    },
                    Verdict::Blocked(missing) => GapEntry {
                        code: verdict.code,
                        name: verdict.name,
                        deliverable: false,
                        missing,
                    },
                })
                .collect();
            let payload = GapPayload {
                capabilities: capability_set.into_iter().collect(),
                services,
                unknown_capabilities: report.unknown_capabilities,
            };
            emit(cli, ReportKind::Gap, inputs, payload, human::gap);
            Ok(())
        }
        CatalogCommand::Export => {
            // The export schema is the plain entry array, not a report
            // document, so external tools can consume it directly.
            println!(
                "{}",
                serde_json::to_string_pretty(catalog.entries()).expect("catalog serializes")
            );
            Ok(())
        }
    }
}
