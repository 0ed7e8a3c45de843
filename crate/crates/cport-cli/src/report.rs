//! Machine-readable report documents.
//!
//! JSON is the canonical report format. Field order is fixed by the struct
//! definitions and every collection is explicitly ordered, so identical
//! inputs produce byte-identical documents; the timestamp is the only
//! run-dependent field and is suppressed under `--reproducible`.

use serde::Serialize;
use sha2::{Digest, Sha256};

use cport_core::ingest::{IngestSummary, PortSnapshot, TimeWindow};
use cport_core::metrics::{total_investment, Bundle, CPortVector, TrlStage};

#[derive(Debug, Clone, Copy, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportKind {
    Snapshot,
    Comparison,
    Ranking,
    Trajectory,
    Gap,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(path: &std::path::Path, bytes: &[u8]) -> Self {
        InputDigest {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportMeta {
    pub tool: &'static str,
    pub version: &'static str,
    pub inputs: Vec<InputDigest>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

impl ReportMeta {
    pub fn new(inputs: Vec<InputDigest>, reproducible: bool) -> Self {
        ReportMeta {
            tool: "cport",
            version: env!("CARGO_PKG_VERSION"),
            inputs,
            timestamp: if reproducible {
                None
            } else {
                Some(chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true))
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ReportDocument<T: Serialize> {
    pub kind: ReportKind,
    pub meta: ReportMeta,
    pub payload: T,
}

impl<T: Serialize> ReportDocument<T> {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report documents always serialize")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WindowInfo {
    pub label: String,
    pub start_year: i32,
    pub end_year: i32,
}

impl From<&TimeWindow> for WindowInfo {
    fn from(window: &TimeWindow) -> Self {
        WindowInfo {
            label: window.label().to_string(),
            start_year: window.start_year(),
            end_year: window.end_year(),
        }
    }
}

/// A per-bundle value, kept as a list so the canonical bundle order
/// survives serialization.
#[derive(Debug, Clone, Serialize)]
pub struct BundleValue {
    pub bundle: &'static str,
    pub value: f64,
}

pub fn per_bundle(values: &[f64; 4]) -> Vec<BundleValue> {
    Bundle::ALL
        .iter()
        .zip(values)
        .map(|(b, v)| BundleValue {
            bundle: b.code(),
            value: *v,
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixRow {
    pub bundle: &'static str,
    pub prototype: f64,
    pub demo: f64,
    pub released: f64,
    pub total: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RecordCounts {
    pub total: usize,
    pub matched: usize,
    pub other_port: usize,
    pub outside_window: usize,
}

impl From<IngestSummary> for RecordCounts {
    fn from(summary: IngestSummary) -> Self {
        RecordCounts {
            total: summary.total,
            matched: summary.matched,
            other_port: summary.other_port,
            outside_window: summary.outside_window,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SnapshotPayload {
    pub port_id: String,
    pub window: WindowInfo,
    pub rho: f64,
    pub matrix_meur: Vec<MatrixRow>,
    pub components_meur: Vec<BundleValue>,
    pub magnitude_meur: f64,
    /// `None` when the vector is null and shares are undefined.
    pub squared_share: Option<Vec<BundleValue>>,
    pub total_investment_meur: f64,
    pub records: RecordCounts,
}

impl SnapshotPayload {
    pub fn build(snapshot: &PortSnapshot, vector: &CPortVector, summary: IngestSummary) -> Self {
        let matrix_meur = Bundle::ALL
            .iter()
            .map(|&bundle| MatrixRow {
                bundle: bundle.code(),
                prototype: snapshot.matrix.get(bundle, TrlStage::Prototype),
                demo: snapshot.matrix.get(bundle, TrlStage::Demo),
                released: snapshot.matrix.get(bundle, TrlStage::Released),
                total: snapshot.matrix.row_sums()[bundle.index()],
            })
            .collect();
        SnapshotPayload {
            port_id: snapshot.port_id.clone(),
            window: WindowInfo::from(&snapshot.window),
            rho: snapshot.rho,
            matrix_meur,
            components_meur: per_bundle(vector.components()),
            magnitude_meur: vector.magnitude(),
            squared_share: vector.squared_share().ok().map(|s| per_bundle(&s)),
            total_investment_meur: total_investment(&snapshot.matrix),
            records: summary.into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ComparisonPayload {
    pub first: SnapshotPayload,
    pub second: SnapshotPayload,
    pub angle_degrees: f64,
}

#[derive(Debug, Serialize)]
pub struct RankEntry {
    pub rank: usize,
    pub port_id: String,
    pub window: String,
    pub rho: f64,
    pub magnitude_meur: f64,
    pub squared_share: Option<Vec<BundleValue>>,
}

#[derive(Debug, Serialize)]
pub struct RankingPayload {
    pub entries: Vec<RankEntry>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct TrajectoryPoint {
    pub window: WindowInfo,
    pub rho: f64,
    pub components_meur: Vec<BundleValue>,
    pub magnitude_meur: f64,
    pub squared_share: Option<Vec<BundleValue>>,
}

#[derive(Debug, Serialize)]
pub struct TrajectorySegment {
    pub from: String,
    pub to: String,
    /// `None` when either endpoint is a null vector.
    pub angle_degrees: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct TrajectoryPayload {
    pub port_id: String,
    pub points: Vec<TrajectoryPoint>,
    pub segments: Vec<TrajectorySegment>,
}

impl TrajectoryPayload {
    /// Flat CSV with one row per window, suitable for external plotting.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        let mut header = vec![
            "window".to_string(),
            "start_year".to_string(),
            "end_year".to_string(),
            "rho".to_string(),
        ];
        for bundle in Bundle::ALL {
            header.push(format!("cpv_{}_meur", bundle.code().to_lowercase()));
        }
        header.push("magnitude_meur".to_string());
        for bundle in Bundle::ALL {
            header.push(format!("share_{}", bundle.code().to_lowercase()));
        }
        header.push("angle_from_prev_deg".to_string());
        writer.write_record(&header).expect("in-memory write");

        for (index, point) in self.points.iter().enumerate() {
            let mut row = vec![
                point.window.label.clone(),
                point.window.start_year.to_string(),
                point.window.end_year.to_string(),
                point.rho.to_string(),
            ];
            for component in &point.components_meur {
                row.push(component.value.to_string());
            }
            row.push(point.magnitude_meur.to_string());
            match &point.squared_share {
                Some(shares) => row.extend(shares.iter().map(|s| s.value.to_string())),
                None => row.extend(std::iter::repeat_n(String::new(), 4)),
            }
            let angle = if index == 0 {
                None
            } else {
                self.segments[index - 1].angle_degrees
            };
            row.push(angle.map(|a| a.to_string()).unwrap_or_default());
            writer.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory write"))
            .expect("csv output is UTF-8")
    }
}

#[derive(Debug, Serialize)]
pub struct GapEntry {
    pub code: String,
    pub name: String,
    pub deliverable: bool,
    pub missing: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct GapPayload {
    pub capabilities: Vec<String>,
    pub services: Vec<GapEntry>,
    pub unknown_capabilities: Vec<String>,
}
