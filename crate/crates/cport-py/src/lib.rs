//! Python bindings for the C-Port analytics: the innovation matrix, the
//! C-Port Vector operations, portfolio loading, and the service catalog.
//!
//! Build the extension with `cargo build -p cport-py`, then import the
//! produced `cport_py` cdylib (see python/smoke_test.py for the wiring).

use std::collections::BTreeSet;
use std::path::Path;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use cport_core::catalog::{Catalog, Verdict};
use cport_core::ingest::{
    self, build_matrix, window_summary, PortfolioFormat, ProjectRecord, TimeWindow,
};
use cport_core::metrics::{self, WeightKind, WeightVector};

fn value_err(error: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(error.to_string())
}

fn parse_kind(kind: &str) -> PyResult<WeightKind> {
    match kind.to_ascii_lowercase().as_str() {
        "a" | "business" | "business-specificity" | "business_specificity" => {
            Ok(WeightKind::BusinessSpecificity)
        }
        "w" | "innovation" | "innovation-reward" | "innovation_reward" => {
            Ok(WeightKind::InnovationReward)
        }
        other => Err(value_err(format!(
            "unknown weight kind `{other}`; use \"a\"/\"business-specificity\" or \
             \"w\"/\"innovation-reward\""
        ))),
    }
}

fn weight_vector(values: Option<Vec<f64>>, kind: WeightKind) -> PyResult<WeightVector> {
    match values {
        Some(raw) => WeightVector::normalize(&raw, kind).map_err(value_err),
        None => Ok(WeightVector::uniform(kind)),
    }
}

/// Bucket an integer TRL: "Prototype" (1-5), "Demo" (6-7), "Released" (8-9).
#[pyfunction]
fn trl_stage(trl: u8) -> PyResult<&'static str> {
    metrics::trl_stage(trl)
        .map(|stage| stage.full_name())
        .map_err(value_err)
}

/// Ratio of adopted standards over applicable ones; 0.0 when nothing is
/// applicable. Raises ValueError if `adopted` is not a subset.
#[pyfunction]
fn standardization_merit(applicable: Vec<String>, adopted: Vec<String>) -> PyResult<f64> {
    let ledger = metrics::StandardsLedger::new(applicable, adopted).map_err(value_err)?;
    Ok(ledger.merit())
}

/// Scale raw positive weights so that sum(1/x^2) = 1 while preserving
/// ratios. `kind` is "a" (4 components) or "w" (3 components).
#[pyfunction]
fn normalize_weights(raw: Vec<f64>, kind: &str) -> PyResult<Vec<f64>> {
    let kind = parse_kind(kind)?;
    Ok(WeightVector::normalize(&raw, kind)
        .map_err(value_err)?
        .values()
        .to_vec())
}

/// The 4x3 cumulative-cost matrix (bundles x TRL stages), in M EUR.
#[pyclass]
struct InnovationMatrix {
    inner: metrics::InnovationMatrix,
}

#[pymethods]
impl InnovationMatrix {
    /// Build from 4 rows (Nv, Fr, Mb, St) of 3 stage costs (P, D, R).
    #[new]
    fn new(cells: [[f64; 3]; 4]) -> PyResult<Self> {
        Ok(InnovationMatrix {
            inner: metrics::InnovationMatrix::new(cells).map_err(value_err)?,
        })
    }

    fn cells(&self) -> Vec<Vec<f64>> {
        self.inner.cells().iter().map(|row| row.to_vec()).collect()
    }

    /// Per-bundle totals in canonical order (Nv, Fr, Mb, St).
    fn row_sums(&self) -> Vec<f64> {
        self.inner.row_sums().to_vec()
    }

    /// Total investment via the trace identity, equal to the entrywise sum.
    fn total_investment(&self) -> f64 {
        metrics::total_investment(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("InnovationMatrix(row_sums={:?})", self.inner.row_sums())
    }
}

/// A port's C-Port Vector for one window; components in M EUR by bundle.
#[pyclass(from_py_object)]
#[derive(Clone)]
struct CPortVector {
    inner: metrics::CPortVector,
}

#[pymethods]
impl CPortVector {
    #[getter]
    fn components(&self) -> Vec<f64> {
        self.inner.components().to_vec()
    }

    #[getter]
    fn rho(&self) -> f64 {
        self.inner.rho()
    }

    #[getter]
    fn window(&self) -> String {
        self.inner.window().to_string()
    }

    fn magnitude(&self) -> f64 {
        self.inner.magnitude()
    }

    fn is_null(&self) -> bool {
        self.inner.is_null()
    }

    /// Per-bundle (v_i/|v|)^2; the four shares sum to 1. Raises ValueError
    /// on a null vector.
    fn squared_share(&self) -> PyResult<Vec<f64>> {
        Ok(self.inner.squared_share().map_err(value_err)?.to_vec())
    }

    fn __repr__(&self) -> String {
        format!(
            "CPortVector(window={:?}, rho={}, components={:?})",
            self.inner.window(),
            self.inner.rho(),
            self.inner.components()
        )
    }
}

/// Compute CPV_i = rho * a_i * sum_j C[i][j] * w_j.
///
/// `a` and `w` are raw weight proportions, normalized internally
/// (normalization is idempotent); omitting them selects uniform weights.
#[pyfunction]
#[pyo3(signature = (rho, matrix, window, a=None, w=None))]
fn cport_vector(
    rho: f64,
    matrix: &InnovationMatrix,
    window: &str,
    a: Option<Vec<f64>>,
    w: Option<Vec<f64>>,
) -> PyResult<CPortVector> {
    let a = weight_vector(a, WeightKind::BusinessSpecificity)?;
    let w = weight_vector(w, WeightKind::InnovationReward)?;
    Ok(CPortVector {
        inner: metrics::cport_vector(rho, &a, &matrix.inner, &w, window).map_err(value_err)?,
    })
}

/// Angle between two C-Port Vectors in degrees, within [0, 180].
#[pyfunction]
fn angle_degrees(v1: &CPortVector, v2: &CPortVector) -> PyResult<f64> {
    metrics::angle_degrees(&v1.inner, &v2.inner).map_err(value_err)
}

/// Rank (port_id, vector) pairs descending by magnitude; ties break on id.
#[pyfunction]
fn rank_ports(snapshots: Vec<(String, CPortVector)>) -> Vec<(String, f64)> {
    let snapshots: Vec<(String, metrics::CPortVector)> = snapshots
        .into_iter()
        .map(|(id, vector)| (id, vector.inner))
        .collect();
    metrics::rank_ports(&snapshots)
}

/// A validated portfolio of project records.
#[pyclass]
struct Portfolio {
    records: Vec<ProjectRecord>,
}

#[pymethods]
impl Portfolio {
    /// Load and validate a .csv or .json portfolio file.
    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        let path = Path::new(path);
        let format = match path.extension().and_then(|e| e.to_str()) {
            Some("csv") => PortfolioFormat::Csv,
            Some("json") => PortfolioFormat::Json,
            _ => {
                return Err(value_err(format!(
                    "cannot infer portfolio format of {}: expected .csv or .json",
                    path.display()
                )))
            }
        };
        let bytes = std::fs::read(path)
            .map_err(|e| value_err(format!("cannot read {}: {e}", path.display())))?;
        Ok(Portfolio {
            records: ingest::parse_portfolio(&bytes, format).map_err(value_err)?,
        })
    }

    fn __len__(&self) -> usize {
        self.records.len()
    }

    /// Distinct port ids, sorted.
    fn ports(&self) -> Vec<String> {
        let mut ports: Vec<String> = self.records.iter().map(|r| r.port_id.clone()).collect();
        ports.sort_unstable();
        ports.dedup();
        ports
    }

    /// Aggregate the records of `port_id` starting within the inclusive
    /// year range into an innovation matrix.
    fn matrix(&self, port_id: &str, start_year: i32, end_year: i32) -> PyResult<InnovationMatrix> {
        let window = TimeWindow::new(start_year, end_year).map_err(value_err)?;
        Ok(InnovationMatrix {
            inner: build_matrix(&self.records, &window, port_id),
        })
    }

    /// (total, matched, other_port, outside_window) for a port and window.
    fn summary(
        &self,
        port_id: &str,
        start_year: i32,
        end_year: i32,
    ) -> PyResult<(usize, usize, usize, usize)> {
        let window = TimeWindow::new(start_year, end_year).map_err(value_err)?;
        let summary = window_summary(&self.records, &window, port_id);
        Ok((
            summary.total,
            summary.matched,
            summary.other_port,
            summary.outside_window,
        ))
    }

    fn __repr__(&self) -> String {
        format!("Portfolio({} records)", self.records.len())
    }
}

/// The full service registry as a JSON array (same schema as
/// `cport catalog export`).
#[pyfunction]
fn catalog_json() -> PyResult<String> {
    serde_json::to_string_pretty(Catalog::builtin().entries()).map_err(value_err)
}

/// Readiness gap report against a capability token list, as JSON:
/// {"services": [{"code", "name", "deliverable", "missing"}],
///  "unknown_capabilities": [...]}.
#[pyfunction]
fn gap_report_json(capabilities: Vec<String>) -> PyResult<String> {
    let capability_set: BTreeSet<String> = capabilities.into_iter().collect();
    let report = Catalog::builtin().gap_report(&capability_set);
    let services: Vec<serde_json::Value> = report
        .services
        .into_iter()
        .map(|verdict| {
            let (deliverable, missing) = match verdict.verdict {
                Verdict::Deliverable => (true, Vec::new()),
                Verdict::Blocked(missing) => (false, missing),
            };
            serde_json::json!({
                "code": verdict.code,
                "name": verdict.name,
                "deliverable": deliverable,
                "missing": missing,
            })
        })
        .collect();
    serde_json::to_string_pretty(&serde_json::json!({
        "services": services,
        "unknown_capabilities": report.unknown_capabilities,
    }))
    .map_err(value_err)
}

#[pymodule]
fn cport_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<InnovationMatrix>()?;
    m.add_class::<CPortVector>()?;
    m.add_class::<Portfolio>()?;
    m.add_function(wrap_pyfunction!(trl_stage, m)?)?;
    m.add_function(wrap_pyfunction!(standardization_merit, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_weights, m)?)?;
    m.add_function(wrap_pyfunction!(cport_vector, m)?)?;
    m.add_function(wrap_pyfunction!(angle_degrees, m)?)?;
    m.add_function(wrap_pyfunction!(rank_ports, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_json, m)?)?;
    m.add_function(wrap_pyfunction!(gap_report_json, m)?)?;
    Ok(())
}
