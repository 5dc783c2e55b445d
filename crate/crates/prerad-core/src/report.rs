//! Suite report data model. Reports serialize to canonical JSON: stable
//! field order, no timestamps, so identical inputs give identical bytes.
//! Per-proposition runtimes are kept outside the canonical body.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
    Reported,
    Vacuous,
    Degraded,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Reported => "reported",
            Status::Vacuous => "vacuous",
            Status::Degraded => "degraded",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PropResult {
    pub proposition_id: String,
    pub paper_anchor: String,
    pub status: Status,
    /// which quantifier regime produced the verdict
    pub regime: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// measured wall time; excluded from the canonical JSON body
    #[serde(skip)]
    pub runtime_ms: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UniverseParams {
    pub max_order: usize,
    pub sum_arity: usize,
    pub num_classes: usize,
    pub class_names: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema_version: String,
    pub ring: String,
    pub universe: UniverseParams,
    pub suites: Vec<String>,
    pub propositions: Vec<PropResult>,
}

impl SuiteReport {
    /// Canonical JSON body: deterministic for equal inputs.
    pub fn to_canonical_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Human-readable projection of the JSON (never computed separately).
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "ring {} | universe: {} classes (max_order {}, sum_arity {})\n",
            self.ring,
            self.universe.num_classes,
            self.universe.max_order,
            self.universe.sum_arity
        ));
        for p in &self.propositions {
            out.push_str(&format!(
                "  {:<10} {:<28} {} ({} ms)\n",
                p.status.to_string(),
                p.proposition_id,
                p.paper_anchor,
                p.runtime_ms
            ));
            for n in &p.notes {
                out.push_str(&format!("             note: {n}\n"));
            }
            for w in &p.witnesses {
                out.push_str(&format!("             witness: {w}\n"));
            }
        }
        out
    }

    /// Proposition ids that failed among assert-marked registry entries.
    /// Only these should drive a nonzero exit code.
    pub fn failed_assertions(&self) -> Vec<&str> {
        self.propositions
            .iter()
            .filter(|p| {
                p.status == Status::Fails
                    && crate::suites::registry()
                        .iter()
                        .any(|e| e.id == p.proposition_id && e.assert)
            })
            .map(|p| p.proposition_id.as_str())
            .collect()
    }
}
