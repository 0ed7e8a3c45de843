//! Portfolio ingestion: parsing, validation, and windowing of project
//! records into the inputs of the metric pipeline.
//!
//! Validation is exhaustive: every rule violation in a portfolio file is
//! collected and reported together with the offending record id or line
//! number, because the files are typically hand-maintained.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::metrics::{
    cport_vector, trl_stage, Bundle, CPortVector, InnovationMatrix, StandardsLedger, WeightKind,
    WeightVector,
};

/// Sanity range for a record's start year.
pub const YEAR_MIN: i32 = 1990;
pub const YEAR_MAX: i32 = 2100;

const CSV_COLUMNS: [&str; 8] = [
    "id",
    "port_id",
    "title",
    "cost",
    "cost_unit",
    "start_year",
    "trl",
    "bundle",
];

/// One reported rule violation, anchored to a record id or file line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Issue {
    pub location: String,
    pub message: String,
}

impl Issue {
    fn new(location: impl Into<String>, message: impl Into<String>) -> Self {
        Issue {
            location: location.into(),
            message: message.into(),
        }
    }
}

impl std::fmt::Display for Issue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

fn format_issues(issues: &[Issue]) -> String {
    issues
        .iter()
        .map(|i| format!("  - {i}"))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Errors produced while reading portfolio, ledger, or weights files.
#[derive(Debug, Error)]
pub enum IngestError {
    /// Structural failure: invalid UTF-8, malformed CSV/JSON, bad header.
    #[error("{0}")]
    Syntax(String),

    /// Rule violations, all of them, not just the first.
    #[error("validation failed with {} issue(s):\n{}", .0.len(), format_issues(.0))]
    Validation(Vec<Issue>),

    #[error(transparent)]
    Domain(#[from] Error),
}

/// Currency tag carried by every cost figure; matrices always store M EUR.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CostUnit {
    KiloEur,
    MegaEur,
}

impl CostUnit {
    pub fn code(self) -> &'static str {
        match self {
            CostUnit::KiloEur => "kEUR",
            CostUnit::MegaEur => "MEUR",
        }
    }

    pub fn from_code(code: &str) -> Option<CostUnit> {
        match code {
            "kEUR" => Some(CostUnit::KiloEur),
            "MEUR" => Some(CostUnit::MegaEur),
            _ => None,
        }
    }

    pub fn to_meur(self, value: f64) -> f64 {
        match self {
            CostUnit::KiloEur => value / 1000.0,
            CostUnit::MegaEur => value,
        }
    }
}

/// One funded innovation action.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectRecord {
    pub id: String,
    pub port_id: String,
    pub title: Option<String>,
    pub cost: f64,
    pub cost_unit: CostUnit,
    pub start_year: i32,
    pub trl: u8,
    pub bundle: Bundle,
}

impl ProjectRecord {
    pub fn cost_meur(&self) -> f64 {
        self.cost_unit.to_meur(self.cost)
    }
}

/// An inclusive year range, labeled `"START-END"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeWindow {
    start_year: i32,
    end_year: i32,
    label: String,
}

impl TimeWindow {
    pub fn new(start_year: i32, end_year: i32) -> Result<Self, IngestError> {
        if start_year > end_year {
            return Err(IngestError::Syntax(format!(
                "window start year {start_year} is after end year {end_year}"
            )));
        }
        Ok(TimeWindow {
            start_year,
            end_year,
            label: format!("{start_year}-{end_year}"),
        })
    }

    /// Parses the `START:END` window spec, years inclusive.
    pub fn parse(spec: &str) -> Result<Self, IngestError> {
        let (start, end) = spec.split_once(':').ok_or_else(|| {
            IngestError::Syntax(format!(
                "window spec `{spec}` must use the form START:END, e.g. 2017:2018"
            ))
        })?;
        let parse_year = |s: &str| {
            s.trim().parse::<i32>().map_err(|_| {
                IngestError::Syntax(format!("window spec `{spec}` has a non-integer year `{s}`"))
            })
        };
        TimeWindow::new(parse_year(start)?, parse_year(end)?)
    }

    pub fn start_year(&self) -> i32 {
        self.start_year
    }

    pub fn end_year(&self) -> i32 {
        self.end_year
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn contains_year(&self, year: i32) -> bool {
        (self.start_year..=self.end_year).contains(&year)
    }
}

/// Supported portfolio encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PortfolioFormat {
    Json,
    Csv,
}

#[derive(Debug)]
struct RawRecord {
    location: String,
    id: String,
    port_id: String,
    title: Option<String>,
    cost: f64,
    cost_unit: String,
    start_year: i64,
    trl: i64,
    bundle: String,
}

#[derive(Deserialize)]
struct JsonPortfolio {
    records: Vec<JsonRecord>,
}

#[derive(Deserialize)]
struct JsonRecord {
    id: String,
    port_id: String,
    #[serde(default)]
    title: Option<String>,
    cost: f64,
    cost_unit: String,
    start_year: i64,
    trl: i64,
    bundle: String,
}

/// Parses and validates a portfolio file. All rule violations are collected
/// into a single `Validation` error; an empty file is a valid empty portfolio.
pub fn parse_portfolio(
    bytes: &[u8],
    format: PortfolioFormat,
) -> Result<Vec<ProjectRecord>, IngestError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| IngestError::Syntax(format!("input is not valid UTF-8: {e}")))?;
    match format {
        PortfolioFormat::Json => parse_portfolio_json(text),
        PortfolioFormat::Csv => parse_portfolio_csv(text),
    }
}

fn parse_portfolio_json(text: &str) -> Result<Vec<ProjectRecord>, IngestError> {
    let file: JsonPortfolio = serde_json::from_str(text).map_err(|e| {
        IngestError::Syntax(format!(
            "malformed portfolio JSON at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    let raws = file
        .records
        .into_iter()
        .enumerate()
        .map(|(index, r)| RawRecord {
            location: if r.id.is_empty() {
                format!("record #{}", index + 1)
            } else {
                format!("record `{}`", r.id)
            },
            id: r.id,
            port_id: r.port_id,
            title: r.title.filter(|t| !t.is_empty()),
            cost: r.cost,
            cost_unit: r.cost_unit,
            start_year: r.start_year,
            trl: r.trl,
            bundle: r.bundle,
        })
        .collect();
    validate_records(raws, Vec::new())
}

fn parse_portfolio_csv(text: &str) -> Result<Vec<ProjectRecord>, IngestError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| IngestError::Syntax(format!("cannot read CSV header: {e}")))?;
    let expected = CSV_COLUMNS.join(",");
    if headers.iter().ne(CSV_COLUMNS) {
        return Err(IngestError::Syntax(format!(
            "CSV header must be `{expected}`, got `{}`",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }

    let mut raws = Vec::new();
    let mut issues = Vec::new();
    for row in reader.records() {
        let row = match row {
            Ok(row) => row,
            Err(e) => {
                let location = e
                    .position()
                    .map(|p| format!("line {}", p.line()))
                    .unwrap_or_else(|| "unknown line".to_string());
                issues.push(Issue::new(location, format!("malformed CSV row: {e}")));
                continue;
            }
        };
        let location = row
            .position()
            .map(|p| format!("line {}", p.line()))
            .unwrap_or_else(|| "unknown line".to_string());
        if row.len() != CSV_COLUMNS.len() {
            issues.push(Issue::new(
                location,
                format!("expected {} fields, got {}", CSV_COLUMNS.len(), row.len()),
            ));
            continue;
        }

        let mut row_ok = true;
        let cost = row[3].trim().parse::<f64>().unwrap_or_else(|_| {
            issues.push(Issue::new(
                &location,
                format!("cost `{}` is not a number", &row[3]),
            ));
            row_ok = false;
            0.0
        });
        let start_year = row[5].trim().parse::<i64>().unwrap_or_else(|_| {
            issues.push(Issue::new(
                &location,
                format!("start_year `{}` is not an integer", &row[5]),
            ));
            row_ok = false;
            0
        });
        let trl = row[6].trim().parse::<i64>().unwrap_or_else(|_| {
            issues.push(Issue::new(
                &location,
                format!("trl `{}` is not an integer", &row[6]),
            ));
            row_ok = false;
            0
        });
        if !row_ok {
            continue;
        }
        raws.push(RawRecord {
            location,
            id: row[0].to_string(),
            port_id: row[1].to_string(),
            title: if row[2].is_empty() {
                None
            } else {
                Some(row[2].to_string())
            },
            cost,
            cost_unit: row[4].to_string(),
            start_year,
            trl,
            bundle: row[7].to_string(),
        });
    }
    validate_records(raws, issues)
}

fn validate_records(
    raws: Vec<RawRecord>,
    mut issues: Vec<Issue>,
) -> Result<Vec<ProjectRecord>, IngestError> {
    let mut seen_ids: BTreeSet<String> = BTreeSet::new();
    let mut records = Vec::with_capacity(raws.len());

    for raw in raws {
        let mut ok = true;
        let reject = |message: String, issues: &mut Vec<Issue>| {
            issues.push(Issue::new(raw.location.clone(), message));
        };

        if raw.id.is_empty() {
            reject("record id must not be empty".into(), &mut issues);
            ok = false;
        } else if !seen_ids.insert(raw.id.clone()) {
            reject(format!("duplicate record id `{}`", raw.id), &mut issues);
            ok = false;
        }
        if raw.port_id.is_empty() {
            reject("port_id must not be empty".into(), &mut issues);
            ok = false;
        }
        if !(raw.cost.is_finite() && raw.cost >= 0.0) {
            reject(
                format!(
                    "cost must be a finite non-negative number, got {}",
                    raw.cost
                ),
                &mut issues,
            );
            ok = false;
        }
        let cost_unit = CostUnit::from_code(&raw.cost_unit);
        if cost_unit.is_none() {
            reject(
                format!(
                    "cost_unit must be `kEUR` or `MEUR`, got `{}`",
                    raw.cost_unit
                ),
                &mut issues,
            );
            ok = false;
        }
        if !(i64::from(YEAR_MIN)..=i64::from(YEAR_MAX)).contains(&raw.start_year) {
            reject(
                format!(
                    "start_year {} outside the sanity range {YEAR_MIN}..={YEAR_MAX}",
                    raw.start_year
                ),
                &mut issues,
            );
            ok = false;
        }
        if !(1..=9).contains(&raw.trl) {
            reject(
                format!("trl {} is outside the 1..=9 scale", raw.trl),
                &mut issues,
            );
            ok = false;
        }
        let bundle = Bundle::from_code(&raw.bundle);
        if bundle.is_none() {
            reject(
                format!(
                    "bundle must be one of Nv, Fr, Mb, St (case-sensitive), got `{}`",
                    raw.bundle
                ),
                &mut issues,
            );
            ok = false;
        }

        if ok {
            records.push(ProjectRecord {
                id: raw.id,
                port_id: raw.port_id,
                title: raw.title,
                cost: raw.cost,
                cost_unit: cost_unit.expect("checked above"),
                start_year: raw.start_year as i32,
                trl: raw.trl as u8,
                bundle: bundle.expect("checked above"),
            });
        }
    }

    if issues.is_empty() {
        Ok(records)
    } else {
        Err(IngestError::Validation(issues))
    }
}

#[derive(Serialize)]
struct JsonRecordOut<'a> {
    id: &'a str,
    port_id: &'a str,
    title: Option<&'a str>,
    cost: f64,
    cost_unit: &'static str,
    start_year: i32,
    trl: u8,
    bundle: &'static str,
}

/// Serializes records back to the portfolio JSON schema.
pub fn portfolio_to_json(records: &[ProjectRecord]) -> String {
    let out: Vec<JsonRecordOut<'_>> = records
        .iter()
        .map(|r| JsonRecordOut {
            id: &r.id,
            port_id: &r.port_id,
            title: r.title.as_deref(),
            cost: r.cost,
            cost_unit: r.cost_unit.code(),
            start_year: r.start_year,
            trl: r.trl,
            bundle: r.bundle.code(),
        })
        .collect();
    serde_json::to_string_pretty(&serde_json::json!({ "records": out }))
        .expect("portfolio records always serialize")
}

/// Serializes records back to the portfolio CSV schema.
pub fn portfolio_to_csv(records: &[ProjectRecord]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_COLUMNS).expect("in-memory write");
    for r in records {
        writer
            .write_record([
                r.id.as_str(),
                r.port_id.as_str(),
                r.title.as_deref().unwrap_or(""),
                &r.cost.to_string(),
                r.cost_unit.code(),
                &r.start_year.to_string(),
                &r.trl.to_string(),
                r.bundle.code(),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory write")).expect("csv output is UTF-8")
}

/// Aggregates matching records into the 4x3 innovation matrix, in M EUR.
/// A record contributes exactly once, in its start year, at the stage of its
/// declared TRL.
pub fn build_matrix(
    records: &[ProjectRecord],
    window: &TimeWindow,
    port_id: &str,
) -> InnovationMatrix {
    let mut matrix = InnovationMatrix::zero();
    for record in records {
        if record.port_id == port_id && window.contains_year(record.start_year) {
            let stage = trl_stage(record.trl).expect("record TRL validated at parse");
            matrix
                .add_cost(record.bundle, stage, record.cost_meur())
                .expect("record cost validated at parse");
        }
    }
    matrix
}

/// How records fell relative to a window and port filter. Records outside
/// the window are excluded from matrices but still counted here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IngestSummary {
    pub total: usize,
    pub matched: usize,
    pub other_port: usize,
    pub outside_window: usize,
}

pub fn window_summary(
    records: &[ProjectRecord],
    window: &TimeWindow,
    port_id: &str,
) -> IngestSummary {
    let mut summary = IngestSummary {
        total: records.len(),
        matched: 0,
        other_port: 0,
        outside_window: 0,
    };
    for record in records {
        if record.port_id != port_id {
            summary.other_port += 1;
        } else if !window.contains_year(record.start_year) {
            summary.outside_window += 1;
        } else {
            summary.matched += 1;
        }
    }
    summary
}

#[derive(Deserialize)]
struct JsonLedger {
    applicable: Vec<String>,
    adopted: Vec<String>,
}

/// Parses a standards ledger JSON object `{"applicable": [...], "adopted": [...]}`.
pub fn parse_ledger(bytes: &[u8]) -> Result<StandardsLedger, IngestError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| IngestError::Syntax(format!("input is not valid UTF-8: {e}")))?;
    let raw: JsonLedger = serde_json::from_str(text).map_err(|e| {
        IngestError::Syntax(format!(
            "malformed ledger JSON at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    Ok(StandardsLedger::new(raw.applicable, raw.adopted)?)
}

#[derive(Deserialize)]
struct JsonWeights {
    a_raw: Vec<f64>,
    w_raw: Vec<f64>,
}

/// Parses a weights JSON object `{"a_raw": [..4], "w_raw": [..3]}` and
/// normalizes both vectors.
pub fn parse_weights(bytes: &[u8]) -> Result<(WeightVector, WeightVector), IngestError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| IngestError::Syntax(format!("input is not valid UTF-8: {e}")))?;
    let raw: JsonWeights = serde_json::from_str(text).map_err(|e| {
        IngestError::Syntax(format!(
            "malformed weights JSON at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    let a = WeightVector::normalize(&raw.a_raw, WeightKind::BusinessSpecificity)?;
    let w = WeightVector::normalize(&raw.w_raw, WeightKind::InnovationReward)?;
    Ok((a, w))
}

/// Where a snapshot's merit factor comes from: a ledger or an explicit value.
#[derive(Debug, Clone)]
pub enum RhoSource {
    Ledger(StandardsLedger),
    Fixed(f64),
}

/// A port's innovation matrix plus everything needed to compute its
/// C-Port Vector for one time window.
#[derive(Debug, Clone)]
pub struct PortSnapshot {
    pub port_id: String,
    pub window: TimeWindow,
    pub matrix: InnovationMatrix,
    pub ledger: Option<StandardsLedger>,
    pub rho: f64,
    pub a: WeightVector,
    pub w: WeightVector,
}

impl PortSnapshot {
    pub fn assemble(
        port_id: impl Into<String>,
        window: TimeWindow,
        records: &[ProjectRecord],
        rho_source: RhoSource,
        a: WeightVector,
        w: WeightVector,
    ) -> Result<Self, Error> {
        let port_id = port_id.into();
        let (ledger, rho) = match rho_source {
            RhoSource::Ledger(ledger) => {
                let rho = ledger.merit();
                (Some(ledger), rho)
            }
            RhoSource::Fixed(rho) => {
                if !(rho.is_finite() && (0.0..=1.0).contains(&rho)) {
                    return Err(Error::RhoOutOfRange(rho));
                }
                (None, rho)
            }
        };
        let matrix = build_matrix(records, &window, &port_id);
        Ok(PortSnapshot {
            port_id,
            window,
            matrix,
            ledger,
            rho,
            a,
            w,
        })
    }

    pub fn cport_vector(&self) -> Result<CPortVector, Error> {
        cport_vector(
            self.rho,
            &self.a,
            &self.matrix,
            &self.w,
            self.window.label(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::TrlStage;
    use approx::assert_relative_eq;

    const HEADER: &str = "id,port_id,title,cost,cost_unit,start_year,trl,bundle";

    fn window(start: i32, end: i32) -> TimeWindow {
        TimeWindow::new(start, end).unwrap()
    }

    #[test]
    fn csv_row_parses_to_meur_and_stage() {
        let csv = format!("{HEADER}\np1,livorno,,310,kEUR,2017,8,St\n");
        let records = parse_portfolio(csv.as_bytes(), PortfolioFormat::Csv).unwrap();
        assert_eq!(records.len(), 1);
        let record = &records[0];
        assert_eq!(record.id, "p1");
        assert_eq!(record.title, None);
        assert_relative_eq!(record.cost_meur(), 0.310, max_relative = 1e-12);
        assert_eq!(trl_stage(record.trl).unwrap(), TrlStage::Released);
        assert_eq!(record.bundle, Bundle::Sustainability);
    }

    #[test]
    fn empty_portfolios_are_valid() {
        let csv = format!("{HEADER}\n");
        assert!(parse_portfolio(csv.as_bytes(), PortfolioFormat::Csv)
            .unwrap()
            .is_empty());
        assert!(
            parse_portfolio(br#"{"records": []}"#, PortfolioFormat::Json)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn duplicate_ids_are_named() {
        let csv = format!("{HEADER}\np1,livorno,,1,kEUR,2017,8,St\np1,livorno,,2,kEUR,2018,8,St\n");
        let err = parse_portfolio(csv.as_bytes(), PortfolioFormat::Csv).unwrap_err();
        match err {
            IngestError::Validation(issues) => {
                assert_eq!(issues.len(), 1);
                assert!(issues[0].message.contains("p1"), "{}", issues[0]);
            }
            other => panic!("expected validation error, got {other}"),
        }
    }

    #[test]
    fn validation_collects_every_issue() {
        let csv = format!(
            "{HEADER}\n\
             p1,livorno,,-5,kEUR,2017,8,St\n\
             p2,livorno,,10,GBP,1800,12,nv\n\
             p1,,,not-a-number,kEUR,2017,8,St\n"
        );
        let err = parse_portfolio(csv.as_bytes(), PortfolioFormat::Csv).unwrap_err();
        match err {
            IngestError::Validation(issues) => {
                let text = issues
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n");
                assert!(text.contains("non-negative"), "{text}");
                assert!(text.contains("GBP"), "{text}");
                assert!(text.contains("1800"), "{text}");
                assert!(text.contains("12"), "{text}");
                assert!(text.contains("nv"), "{text}");
                assert!(text.contains("not-a-number"), "{text}");
                assert!(
                    issues.len() >= 6,
                    "expected >= 6 issues, got {}",
                    issues.len()
                );
                // Line numbers anchor every issue.
                assert!(
                    issues.iter().all(|i| i.location.starts_with("line ")),
                    "{text}"
                );
            }
            other => panic!("expected validation error, got {other}"),
        }
    }

    #[test]
    fn csv_header_is_mandatory() {
        let csv = "id,port,title\np1,livorno,x\n";
        let err = parse_portfolio(csv.as_bytes(), PortfolioFormat::Csv).unwrap_err();
        assert!(matches!(err, IngestError::Syntax(_)), "{err}");
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = parse_portfolio(br#"{"records": ["#, PortfolioFormat::Json).unwrap_err();
        match err {
            IngestError::Syntax(message) => assert!(message.contains("line 1"), "{message}"),
            other => panic!("expected syntax error, got {other}"),
        }
    }

    #[test]
    fn json_and_csv_round_trip() {
        let csv = format!(
            "{HEADER}\n\
             p1,livorno,Radar pilot,137,kEUR,2017,6,Nv\n\
             p2,livorno,,0.31,MEUR,2017,8,St\n"
        );
        let records = parse_portfolio(csv.as_bytes(), PortfolioFormat::Csv).unwrap();

        let json = portfolio_to_json(&records);
        let back = parse_portfolio(json.as_bytes(), PortfolioFormat::Json).unwrap();
        assert_eq!(records, back);

        let csv_out = portfolio_to_csv(&records);
        let back = parse_portfolio(csv_out.as_bytes(), PortfolioFormat::Csv).unwrap();
        assert_eq!(records, back);
    }

    #[test]
    fn unit_tags_are_equivalent_in_matrices() {
        let kilo = format!("{HEADER}\np1,livorno,,310,kEUR,2017,8,St\n");
        let mega = format!("{HEADER}\np1,livorno,,0.310,MEUR,2017,8,St\n");
        let w = window(2017, 2017);
        let m1 = build_matrix(
            &parse_portfolio(kilo.as_bytes(), PortfolioFormat::Csv).unwrap(),
            &w,
            "livorno",
        );
        let m2 = build_matrix(
            &parse_portfolio(mega.as_bytes(), PortfolioFormat::Csv).unwrap(),
            &w,
            "livorno",
        );
        assert_eq!(m1, m2);
    }

    #[test]
    fn build_matrix_filters_port_and_window() {
        let csv = format!(
            "{HEADER}\n\
             p1,livorno,,100,kEUR,2017,3,Nv\n\
             p2,livorno,,200,kEUR,2019,3,Nv\n\
             p3,elba,,400,kEUR,2017,3,Nv\n"
        );
        let records = parse_portfolio(csv.as_bytes(), PortfolioFormat::Csv).unwrap();
        let w = window(2017, 2018);
        let matrix = build_matrix(&records, &w, "livorno");
        assert_relative_eq!(
            matrix.get(Bundle::Navigation, TrlStage::Prototype),
            0.1,
            max_relative = 1e-12
        );
        assert_relative_eq!(matrix.row_sums()[0], 0.1, max_relative = 1e-12);

        let summary = window_summary(&records, &w, "livorno");
        assert_eq!(
            summary,
            IngestSummary {
                total: 3,
                matched: 1,
                other_port: 1,
                outside_window: 1
            }
        );

        let empty = build_matrix(&records, &window(2030, 2031), "livorno");
        assert!(empty.is_zero());
    }

    #[test]
    fn window_spec_parsing() {
        let w = TimeWindow::parse("2017:2018").unwrap();
        assert_eq!(w.start_year(), 2017);
        assert_eq!(w.end_year(), 2018);
        assert_eq!(w.label(), "2017-2018");
        assert!(w.contains_year(2017) && w.contains_year(2018));
        assert!(!w.contains_year(2019));

        assert!(TimeWindow::parse("2017").is_err());
        assert!(TimeWindow::parse("2018:2017").is_err());
        assert!(TimeWindow::parse("a:b").is_err());
        assert!(TimeWindow::parse("2017:2017").is_ok());
    }

    #[test]
    fn ledger_parsing() {
        let ledger = parse_ledger(br#"{"applicable":["a","b"],"adopted":["a"]}"#).unwrap();
        assert_eq!(ledger.merit(), 0.5);

        let empty = parse_ledger(br#"{"applicable":[],"adopted":[]}"#).unwrap();
        assert_eq!(empty.merit(), 0.0);

        let err = parse_ledger(br#"{"applicable":["a"],"adopted":["a","z"]}"#).unwrap_err();
        assert!(err.to_string().contains('z'), "{err}");
    }

    #[test]
    fn weights_parsing() {
        let (a, w) = parse_weights(br#"{"a_raw":[1,1,1,1],"w_raw":[1,1,1]}"#).unwrap();
        assert_eq!(a.values(), &[2.0, 2.0, 2.0, 2.0]);
        assert_relative_eq!(w.values()[0], 3.0_f64.sqrt(), max_relative = 1e-12);

        assert!(parse_weights(br#"{"a_raw":[1,1,1],"w_raw":[1,1,1]}"#).is_err());
        assert!(parse_weights(br#"{"a_raw":[1,1,1,0],"w_raw":[1,1,1]}"#).is_err());
    }

    #[test]
    fn snapshot_assembly() {
        let csv = format!("{HEADER}\np1,livorno,,310,kEUR,2017,8,St\n");
        let records = parse_portfolio(csv.as_bytes(), PortfolioFormat::Csv).unwrap();
        let ledger = StandardsLedger::new(["a", "b"], ["a"]).unwrap();
        let snapshot = PortSnapshot::assemble(
            "livorno",
            window(2017, 2018),
            &records,
            RhoSource::Ledger(ledger),
            WeightVector::uniform(WeightKind::BusinessSpecificity),
            WeightVector::uniform(WeightKind::InnovationReward),
        )
        .unwrap();
        assert_eq!(snapshot.rho, 0.5);
        let vector = snapshot.cport_vector().unwrap();
        assert_eq!(vector.window(), "2017-2018");
        // 0.5 * 2 * 0.310 * sqrt(3)
        assert_relative_eq!(
            vector.component(Bundle::Sustainability),
            0.31 * 3.0_f64.sqrt(),
            max_relative = 1e-12
        );

        assert!(PortSnapshot::assemble(
            "livorno",
            window(2017, 2018),
            &records,
            RhoSource::Fixed(1.5),
            WeightVector::uniform(WeightKind::BusinessSpecificity),
            WeightVector::uniform(WeightKind::InnovationReward),
        )
        .is_err());
    }
}
