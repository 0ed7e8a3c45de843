//! The C-Port service catalog: sixteen digital port services grouped into
//! the four bundles, classified by readiness day class, with the functions
//! each service needs, the community stakeholders it serves, and the key
//! enabling technologies behind it.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::metrics::Bundle;

mod builtin;

/// Readiness classes: deployable with state-of-the-art standards (Day 1),
/// awaiting standardization or technology closure (Day 1.5), beyond the
/// state of the art (Day 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DayClass {
    #[serde(rename = "Day 1")]
    Day1,
    #[serde(rename = "Day 1.5")]
    Day1_5,
    #[serde(rename = "Day 2")]
    Day2,
}

impl DayClass {
    pub const ALL: [DayClass; 3] = [DayClass::Day1, DayClass::Day1_5, DayClass::Day2];

    pub fn label(self) -> &'static str {
        match self {
            DayClass::Day1 => "Day 1",
            DayClass::Day1_5 => "Day 1.5",
            DayClass::Day2 => "Day 2",
        }
    }

    /// Accepts `1`, `1.5`, `2` (optionally prefixed with `day`, any case).
    pub fn parse(text: &str) -> Option<DayClass> {
        let trimmed = text.trim().to_ascii_lowercase();
        let number = trimmed
            .strip_prefix("day")
            .map(str::trim_start)
            .unwrap_or(&trimmed);
        match number {
            "1" => Some(DayClass::Day1),
            "1.5" => Some(DayClass::Day1_5),
            "2" => Some(DayClass::Day2),
            _ => None,
        }
    }
}

impl std::fmt::Display for DayClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// The reference set of key enabling technologies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ket {
    #[serde(rename = "5G")]
    FiveG,
    #[serde(rename = "IoT")]
    Iot,
    #[serde(rename = "Blockchain")]
    Blockchain,
    #[serde(rename = "AI/ML")]
    AiMl,
    #[serde(rename = "SatCom")]
    SatCom,
    #[serde(rename = "SatEO")]
    SatEo,
    #[serde(rename = "SatNav")]
    SatNav,
}

impl Ket {
    pub const ALL: [Ket; 7] = [
        Ket::FiveG,
        Ket::Iot,
        Ket::Blockchain,
        Ket::AiMl,
        Ket::SatCom,
        Ket::SatEo,
        Ket::SatNav,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Ket::FiveG => "5G",
            Ket::Iot => "IoT",
            Ket::Blockchain => "Blockchain",
            Ket::AiMl => "AI/ML",
            Ket::SatCom => "SatCom",
            Ket::SatEo => "SatEO",
            Ket::SatNav => "SatNav",
        }
    }

    /// Case-insensitive match on the label; `ai-ml` and `aiml` also work.
    pub fn parse(text: &str) -> Option<Ket> {
        let lower = text.trim().to_ascii_lowercase();
        Ket::ALL
            .into_iter()
            .find(|k| k.label().to_ascii_lowercase() == lower)
            .or(match lower.as_str() {
                "ai-ml" | "aiml" => Some(Ket::AiMl),
                _ => None,
            })
    }
}

impl std::fmt::Display for Ket {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// A function a service relies on: a canonical kebab-case token for set
/// operations plus the human-readable phrase it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ServiceFunction {
    pub token: String,
    pub phrase: String,
}

/// One catalog service.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ServiceEntry {
    pub code: String,
    pub name: String,
    pub bundle: Bundle,
    pub day: DayClass,
    /// Functions the service builds on.
    pub enabling_functions: Vec<ServiceFunction>,
    /// Functions still to be closed; empty for Day 1 services.
    pub missing_functions: Vec<ServiceFunction>,
    pub stakeholders: Vec<String>,
    pub kets: Vec<Ket>,
    /// Transcription notes, mostly on KET attribution calls.
    pub notes: Vec<String>,
}

impl ServiceEntry {
    /// Enabling and missing functions together.
    pub fn functions(&self) -> impl Iterator<Item = &ServiceFunction> {
        self.enabling_functions
            .iter()
            .chain(self.missing_functions.iter())
    }
}

/// Conjunctive query filter; `None` fields match everything.
#[derive(Debug, Clone, Default)]
pub struct CatalogFilter {
    pub bundle: Option<Bundle>,
    pub day: Option<DayClass>,
    pub stakeholder: Option<String>,
    pub ket: Option<Ket>,
}

/// Outcome of a gap check for one service.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Deliverable,
    /// Function tokens not covered by the capability set.
    Blocked(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ServiceVerdict {
    pub code: String,
    pub name: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub services: Vec<ServiceVerdict>,
    /// Capability tokens not known to the catalog vocabulary. They are
    /// accepted (the vocabulary is free) but worth flagging.
    pub unknown_capabilities: Vec<String>,
}

/// The immutable service registry.
#[derive(Debug, Clone)]
pub struct Catalog {
    entries: Vec<ServiceEntry>,
}

impl Catalog {
    /// The embedded sixteen-service registry.
    pub fn builtin() -> Catalog {
        Catalog {
            entries: builtin::entries(),
        }
    }

    pub fn entries(&self) -> &[ServiceEntry] {
        &self.entries
    }

    pub fn get(&self, code: &str) -> Option<&ServiceEntry> {
        self.entries.iter().find(|e| e.code == code)
    }

    /// Conjunctive filtering; results stay in code order. Stakeholder
    /// matching is case-insensitive.
    pub fn query(&self, filter: &CatalogFilter) -> Vec<&ServiceEntry> {
        self.entries
            .iter()
            .filter(|e| filter.bundle.is_none_or(|b| e.bundle == b))
            .filter(|e| filter.day.is_none_or(|d| e.day == d))
            .filter(|e| {
                filter
                    .stakeholder
                    .as_deref()
                    .is_none_or(|s| e.stakeholders.iter().any(|x| x.eq_ignore_ascii_case(s)))
            })
            .filter(|e| filter.ket.is_none_or(|k| e.kets.contains(&k)))
            .collect()
    }

    /// Every function token known to the catalog.
    pub fn vocabulary(&self) -> BTreeSet<&str> {
        self.entries
            .iter()
            .flat_map(|e| e.functions().map(|f| f.token.as_str()))
            .collect()
    }

    /// A service is deliverable iff every function it references (enabling
    /// and missing) is covered by the capability set; otherwise the
    /// uncovered tokens are listed.
    pub fn gap_report(&self, capabilities: &BTreeSet<String>) -> GapReport {
        let vocabulary = self.vocabulary();
        let services = self
            .entries
            .iter()
            .map(|entry| {
                let uncovered: BTreeSet<String> = entry
                    .functions()
                    .filter(|f| !capabilities.contains(&f.token))
                    .map(|f| f.token.clone())
                    .collect();
                let verdict = if uncovered.is_empty() {
                    Verdict::Deliverable
                } else {
                    Verdict::Blocked(uncovered.into_iter().collect())
                };
                ServiceVerdict {
                    code: entry.code.clone(),
                    name: entry.name.clone(),
                    verdict,
                }
            })
            .collect();
        let unknown_capabilities = capabilities
            .iter()
            .filter(|c| !vocabulary.contains(c.as_str()))
            .cloned()
            .collect();
        GapReport {
            services,
            unknown_capabilities,
        }
    }

    /// Finds the human-readable phrase behind a function token.
    pub fn phrase_for(&self, token: &str) -> Option<&str> {
        self.entries
            .iter()
            .flat_map(ServiceEntry::functions)
            .find(|f| f.token == token)
            .map(|f| f.phrase.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalog() -> Catalog {
        Catalog::builtin()
    }

    fn caps(tokens: &[&str]) -> BTreeSet<String> {
        tokens.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn catalog_counts() {
        let catalog = catalog();
        assert_eq!(catalog.entries().len(), 16);

        let by_day = |d| catalog.entries().iter().filter(|e| e.day == d).count();
        assert_eq!(by_day(DayClass::Day1), 4);
        assert_eq!(by_day(DayClass::Day1_5), 10);
        assert_eq!(by_day(DayClass::Day2), 2);

        let by_bundle = |b| catalog.entries().iter().filter(|e| e.bundle == b).count();
        assert_eq!(by_bundle(Bundle::Navigation), 5);
        assert_eq!(by_bundle(Bundle::Freight), 5);
        assert_eq!(by_bundle(Bundle::Mobility), 3);
        assert_eq!(by_bundle(Bundle::Sustainability), 3);
    }

    #[test]
    fn day_membership() {
        let catalog = catalog();
        let day_codes = |d: DayClass| -> Vec<&str> {
            catalog
                .entries()
                .iter()
                .filter(|e| e.day == d)
                .map(|e| e.code.as_str())
                .collect()
        };
        assert_eq!(day_codes(DayClass::Day1), ["A.1", "A.5", "B.1", "B.3"]);
        assert_eq!(
            day_codes(DayClass::Day1_5),
            ["A.3", "A.4", "B.2", "B.4", "B.5", "C.1", "C.2", "C.3", "D.1", "D.2"]
        );
        assert_eq!(day_codes(DayClass::Day2), ["A.2", "D.3"]);
    }

    #[test]
    fn codes_unique_sorted_and_coherent_with_bundles() {
        let catalog = catalog();
        let codes: Vec<&str> = catalog.entries().iter().map(|e| e.code.as_str()).collect();
        let mut sorted = codes.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(codes, sorted, "codes must be unique and in order");

        for entry in catalog.entries() {
            let expected = match entry.code.as_bytes()[0] {
                b'A' => Bundle::Navigation,
                b'B' => Bundle::Freight,
                b'C' => Bundle::Mobility,
                b'D' => Bundle::Sustainability,
                other => panic!("unexpected code prefix {other}"),
            };
            assert_eq!(entry.bundle, expected, "entry {}", entry.code);
        }
    }

    #[test]
    fn day1_services_have_no_missing_functions() {
        for entry in catalog().entries() {
            if entry.day == DayClass::Day1 {
                assert!(
                    entry.missing_functions.is_empty(),
                    "{} is Day 1 but lists missing functions",
                    entry.code
                );
            } else {
                assert!(
                    !entry.missing_functions.is_empty(),
                    "{} is {} but lists no missing functions",
                    entry.code,
                    entry.day
                );
            }
        }
    }

    #[test]
    fn query_examples() {
        let catalog = catalog();

        let mobility_day15 = catalog.query(&CatalogFilter {
            bundle: Some(Bundle::Mobility),
            day: Some(DayClass::Day1_5),
            ..Default::default()
        });
        let codes: Vec<&str> = mobility_day15.iter().map(|e| e.code.as_str()).collect();
        assert_eq!(codes, ["C.1", "C.2", "C.3"]);

        let insured_day2 = catalog.query(&CatalogFilter {
            day: Some(DayClass::Day2),
            stakeholder: Some("INSURANCE COMPANIES".into()),
            ..Default::default()
        });
        let codes: Vec<&str> = insured_day2.iter().map(|e| e.code.as_str()).collect();
        assert_eq!(codes, ["A.2"]);

        assert_eq!(catalog.query(&CatalogFilter::default()).len(), 16);

        let iot = catalog.query(&CatalogFilter {
            ket: Some(Ket::Iot),
            ..Default::default()
        });
        assert!(iot.iter().any(|e| e.code == "B.1"));
    }

    #[test]
    fn show_fields() {
        let catalog = catalog();

        let d3 = catalog.get("D.3").unwrap();
        assert_eq!(d3.day, DayClass::Day2);
        assert!(d3.stakeholders.iter().any(|s| s == "PORT AUTHORITY"));

        let a2 = catalog.get("A.2").unwrap();
        assert_eq!(a2.day, DayClass::Day2);
        assert!(a2
            .missing_functions
            .iter()
            .any(|f| f.phrase == "High-Rate/Real-Time Vessel-Port bi-directional communication"));
        assert!(a2.kets.contains(&Ket::FiveG));

        assert!(catalog.get("Z.9").is_none());
    }

    #[test]
    fn gap_report_examples() {
        let catalog = catalog();

        let report = catalog.gap_report(&caps(&[]));
        assert_eq!(report.services.len(), 16);
        assert!(report
            .services
            .iter()
            .all(|s| matches!(s.verdict, Verdict::Blocked(_))));

        // Everything A.1 references makes A.1 deliverable.
        let a1 = catalog.get("A.1").unwrap();
        let a1_caps: BTreeSet<String> = a1.functions().map(|f| f.token.clone()).collect();
        let report = catalog.gap_report(&a1_caps);
        let verdict = report.services.iter().find(|s| s.code == "A.1").unwrap();
        assert_eq!(verdict.verdict, Verdict::Deliverable);

        // Covering A.3's enabling functions but not the analytics gap blocks
        // A.3 on exactly that item.
        let report = catalog.gap_report(&caps(&[
            "accurate-vessel-positioning",
            "iot-based-distributed-network",
        ]));
        let verdict = report.services.iter().find(|s| s.code == "A.3").unwrap();
        assert_eq!(
            verdict.verdict,
            Verdict::Blocked(vec![
                "data-aggregation-and-on-line-analytical-processing".into()
            ])
        );

        // Unknown capabilities are accepted but reported.
        let report = catalog.gap_report(&caps(&["quantum-telepathy"]));
        assert_eq!(report.unknown_capabilities, vec!["quantum-telepathy"]);
    }

    #[test]
    fn day_and_ket_parsing() {
        assert_eq!(DayClass::parse("1"), Some(DayClass::Day1));
        assert_eq!(DayClass::parse("1.5"), Some(DayClass::Day1_5));
        assert_eq!(DayClass::parse("Day 2"), Some(DayClass::Day2));
        assert_eq!(DayClass::parse("3"), None);

        assert_eq!(Ket::parse("5g"), Some(Ket::FiveG));
        assert_eq!(Ket::parse("IoT"), Some(Ket::Iot));
        assert_eq!(Ket::parse("ai/ml"), Some(Ket::AiMl));
        assert_eq!(Ket::parse("ai-ml"), Some(Ket::AiMl));
        assert_eq!(Ket::parse("warp"), None);
    }

    #[test]
    fn export_round_trips() {
        let catalog = catalog();
        let json = serde_json::to_string(catalog.entries()).unwrap();
        let back: Vec<ServiceEntry> = serde_json::from_str(&json).unwrap();
        assert_eq!(catalog.entries(), back.as_slice());
    }
}
