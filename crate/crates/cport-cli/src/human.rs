//! Human-readable rendering.
//!
//! Rounding rules, which the JSON values follow at full precision: angles
//! to 1 decimal, squared shares to 2 decimals, money to 3 decimals (k EUR
//! resolution). Styling is plain ANSI bold and is disabled entirely when
//! `CPORT_NO_COLOR` is set.

use std::fmt::Write;

use cport_core::catalog::ServiceEntry;

use crate::report::{
    ComparisonPayload, GapPayload, RankingPayload, SnapshotPayload, TrajectoryPayload,
};

fn styled() -> bool {
    std::env::var_os("CPORT_NO_COLOR").is_none()
}

fn bold(text: &str) -> String {
    if styled() {
        format!("\x1b[1m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

pub fn money(value: f64) -> String {
    format!("{value:.3}")
}

pub fn share(value: f64) -> String {
    format!("{value:.2}")
}

pub fn angle(value: f64) -> String {
    format!("{value:.1}")
}

pub fn rho(value: f64) -> String {
    format!("{value:.3}")
}

fn shares_line(shares: &Option<Vec<crate::report::BundleValue>>) -> String {
    match shares {
        Some(shares) => shares
            .iter()
            .map(|s| format!("{} {}", s.bundle, share(s.value)))
            .collect::<Vec<_>>()
            .join("  "),
        None => "undefined (null vector)".to_string(),
    }
}

pub fn snapshot(payload: &SnapshotPayload) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}",
        bold(&format!(
            "C-Port snapshot - port {}, window {}",
            payload.port_id, payload.window.label
        ))
    );
    let _ = writeln!(out, "  rho: {}", rho(payload.rho));
    let _ = writeln!(out, "  investment matrix (M EUR):");
    let _ = writeln!(
        out,
        "    {:<8}{:>12}{:>12}{:>12}{:>12}",
        "bundle", "prototype", "demo", "released", "total"
    );
    for row in &payload.matrix_meur {
        let _ = writeln!(
            out,
            "    {:<8}{:>12}{:>12}{:>12}{:>12}",
            row.bundle,
            money(row.prototype),
            money(row.demo),
            money(row.released),
            money(row.total)
        );
    }
    let components = payload
        .components_meur
        .iter()
        .map(|c| format!("{} {}", c.bundle, money(c.value)))
        .collect::<Vec<_>>()
        .join("  ");
    let _ = writeln!(out, "  C-PV components (M EUR): {components}");
    let _ = writeln!(out, "  |C-PV|: {} M EUR", money(payload.magnitude_meur));
    let _ = writeln!(
        out,
        "  squared share: {}",
        shares_line(&payload.squared_share)
    );
    let _ = writeln!(
        out,
        "  total investment: {} M EUR",
        money(payload.total_investment_meur)
    );
    let _ = write!(
        out,
        "  records: {} total, {} matched, {} other port, {} outside window",
        payload.records.total,
        payload.records.matched,
        payload.records.other_port,
        payload.records.outside_window
    );
    out
}

pub fn comparison(payload: &ComparisonPayload) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", snapshot(&payload.first));
    let _ = writeln!(out);
    let _ = writeln!(out, "{}", snapshot(&payload.second));
    let _ = writeln!(out);
    let _ = write!(
        out,
        "{}",
        bold(&format!(
            "angle between {} and {}: {} deg",
            payload.first.window.label,
            payload.second.window.label,
            angle(payload.angle_degrees)
        ))
    );
    out
}

pub fn ranking(payload: &RankingPayload) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", bold("C-Port ranking"));
    let _ = writeln!(
        out,
        "  {:<6}{:<16}{:<12}{:>8}{:>14}  squared share",
        "rank", "port", "window", "rho", "|C-PV| M EUR"
    );
    for entry in &payload.entries {
        let _ = writeln!(
            out,
            "  {:<6}{:<16}{:<12}{:>8}{:>14}  {}",
            entry.rank,
            entry.port_id,
            entry.window,
            rho(entry.rho),
            money(entry.magnitude_meur),
            shares_line(&entry.squared_share)
        );
    }
    for warning in &payload.warnings {
        let _ = writeln!(out, "  warning: {warning}");
    }
    out.trim_end().to_string()
}

pub fn trajectory(payload: &TrajectoryPayload) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}",
        bold(&format!("C-Port trajectory - port {}", payload.port_id))
    );
    let _ = writeln!(
        out,
        "  {:<12}{:>8}{:>14}  {:<42}angle from prev",
        "window", "rho", "|C-PV| M EUR", "squared share"
    );
    for (index, point) in payload.points.iter().enumerate() {
        let angle_text = if index == 0 {
            "-".to_string()
        } else {
            match payload.segments[index - 1].angle_degrees {
                Some(a) => format!("{} deg", angle(a)),
                None => "undefined".to_string(),
            }
        };
        let _ = writeln!(
            out,
            "  {:<12}{:>8}{:>14}  {:<42}{}",
            point.window.label,
            rho(point.rho),
            money(point.magnitude_meur),
            shares_line(&point.squared_share),
            angle_text
        );
    }
    out.trim_end().to_string()
}

pub fn gap(payload: &GapPayload) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}",
        bold(&format!(
            "Readiness gap report - {} capabilities",
            payload.capabilities.len()
        ))
    );
    for service in &payload.services {
        if service.deliverable {
            let _ = writeln!(
                out,
                "  {:<5} {:<58} Deliverable",
                service.code, service.name
            );
        } else {
            let _ = writeln!(
                out,
                "  {:<5} {:<58} Blocked: {}",
                service.code,
                service.name,
                service.missing.join(", ")
            );
        }
    }
    if !payload.unknown_capabilities.is_empty() {
        let _ = writeln!(
            out,
            "  note: capabilities unknown to the catalog: {}",
            payload.unknown_capabilities.join(", ")
        );
    }
    out.trim_end().to_string()
}

pub fn catalog_list(entries: &[&ServiceEntry]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "  {:<6}{:<9}{:<8}{:<60}KETs",
        "code", "day", "bundle", "name"
    );
    for entry in entries {
        let kets = entry
            .kets
            .iter()
            .map(|k| k.label())
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(
            out,
            "  {:<6}{:<9}{:<8}{:<60}{}",
            entry.code,
            entry.day.label(),
            entry.bundle.code(),
            entry.name,
            kets
        );
    }
    let _ = write!(out, "  {} service(s)", entries.len());
    out
}

pub fn catalog_show(entry: &ServiceEntry) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", bold(&format!("{} {}", entry.code, entry.name)));
    let _ = writeln!(
        out,
        "  bundle: {} ({})",
        entry.bundle.code(),
        entry.bundle.full_name()
    );
    let _ = writeln!(out, "  day class: {}", entry.day.label());
    let _ = writeln!(out, "  enabling functions:");
    for function in &entry.enabling_functions {
        let _ = writeln!(out, "    - {} [{}]", function.phrase, function.token);
    }
    let _ = writeln!(out, "  missing functions:");
    if entry.missing_functions.is_empty() {
        let _ = writeln!(out, "    none");
    }
    for function in &entry.missing_functions {
        let _ = writeln!(out, "    - {} [{}]", function.phrase, function.token);
    }
    let _ = writeln!(out, "  stakeholders: {}", entry.stakeholders.join(", "));
    let kets = if entry.kets.is_empty() {
        "none attributed".to_string()
    } else {
        entry
            .kets
            .iter()
            .map(|k| k.label())
            .collect::<Vec<_>>()
            .join(", ")
    };
    let _ = writeln!(out, "  KETs: {kets}");
    for note in &entry.notes {
        let _ = writeln!(out, "  note: {note}");
    }
    out.trim_end().to_string()
}
