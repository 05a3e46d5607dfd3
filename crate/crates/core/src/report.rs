//! Deterministic report rendering.
//!
//! A [`Report`] is an ordered list of key/value entries, rendered either as
//! `key: value` lines or as a JSON object with the same key order. Reports
//! carry the tool version and the input digest and contain no timing data,
//! so the same input (and seed) always yields the same bytes.

use std::str::FromStr;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::analysis::{InequalityReport, Tag, Verdict};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::hgr;
use crate::hypergraph::{Hypergraph, HypergraphStats};
use crate::oracle::{Chromatic, CriticalCore, CriticalityReport};

pub const TOOL: &str = "hyperchrom";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Text,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            other => Err(Error::Unsupported(format!(
                "unknown report format '{other}'"
            ))),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    entries: Vec<(String, Value)>,
}

impl Report {
    /// A report headed by tool version and, when given, the input digest.
    pub fn new(input: Option<&Hypergraph>) -> Self {
        let mut r = Report::default();
        r.push("tool", format!("{TOOL} {VERSION}"));
        if let Some(h) = input {
            r.push("input_digest", hgr::digest(h));
        }
        r
    }

    pub fn push(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("report values serialize");
        self.entries.push((key.to_string(), value));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Text => {
                let mut out = String::new();
                for (key, value) in &self.entries {
                    out.push_str(key);
                    out.push_str(": ");
                    out.push_str(&plain(value));
                    out.push('\n');
                }
                out
            }
            ReportFormat::Json => {
                let map: Map<String, Value> = self.entries.iter().cloned().collect();
                let mut out =
                    serde_json::to_string_pretty(&Value::Object(map)).expect("report serializes");
                out.push('\n');
                out
            }
        }
    }
}

fn plain(value: &Value) -> String {
    match value {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|v| !v.is_array() && !v.is_object()) => {
            if items.is_empty() {
                "-".to_string()
            } else {
                items.iter().map(plain).collect::<Vec<_>>().join(" ")
            }
        }
        other => other.to_string(),
    }
}

fn push_stats(r: &mut Report, s: &HypergraphStats) {
    r.push("n", s.n);
    r.push("m", s.m);
    r.push("rank", s.rank);
    r.push("antirank", s.antirank);
    r.push("max_degree", s.max_degree);
    r.push("min_degree", s.min_degree);
    r.push("loopless", s.loopless);
    r.push("linear", s.linear);
    r.push("uniform_k", s.uniform_k);
    r.push("regular_d", s.regular_d);
    r.push("connected", s.connected);
    r.push("delta2", s.delta2);
}

pub fn stats_report(h: &Hypergraph, inequalities: &InequalityReport) -> Report {
    let mut r = Report::new(Some(h));
    push_stats(&mut r, &h.stats());
    for check in &inequalities.checks {
        r.push(
            &format!("check_{}", check.name),
            format!(
                "{} ({})",
                if check.holds { "ok" } else { "FAILED" },
                check.detail
            ),
        );
    }
    r
}

pub fn coloring_report(
    h: &Hypergraph,
    method: &str,
    coloring: &EdgeColoring,
    proper: bool,
    exact: Option<&Chromatic>,
) -> Report {
    let mut r = Report::new(Some(h));
    r.push("method", method);
    r.push("m", h.edge_count());
    if let Some(q) = exact {
        r.push("q", q.to_string());
    }
    r.push("q_used", coloring.q_used());
    r.push("proper", proper);
    r.push("colors", coloring.colors());
    r
}

pub fn verdict_report(h: &Hypergraph, v: &Verdict) -> Report {
    let mut r = Report::new(Some(h));
    push_stats(&mut r, &v.stats);
    r.push("bound_bf", v.bounds.bf);
    r.push("bound_greedy", v.bounds.greedy);
    r.push("bound_linegraph", v.bounds.linegraph);
    r.push(
        "bound_max_edge_degree_plus1",
        v.bounds.max_edge_degree_plus1,
    );
    for (key, tag) in [
        ("thm1", Tag::Thm1),
        ("thm2", Tag::Thm2),
        ("thm3", Tag::Thm3),
        ("rk61", Tag::Rk61),
        ("rk62", Tag::Rk62),
    ] {
        r.push(key, v.applicable.contains(&tag));
    }
    r.push(
        "applicable",
        v.applicable.iter().map(Tag::as_str).collect::<Vec<_>>(),
    );
    r.push("q", v.q.to_string());
    r.push("status", v.status.to_string());
    match &v.efl {
        Some(efl) => r.push(
            "efl",
            format!(
                "q {} n = {} ({})",
                if v.q.exact().is_some() { "<=" } else { "vs" },
                efl.n,
                match efl.holds {
                    Some(true) => "holds",
                    Some(false) => "FAILS",
                    None => "undecided",
                }
            ),
        ),
        None => r.push("efl", "not linear"),
    }
    r.push("witness_method", &v.witness_method);
    r.push("witness_q", v.witness.q_used());
    r.push("witness_colors", v.witness.colors());
    r.push("licensed_violations", &v.licensed_violations);
    r.push("search_nodes", v.search_nodes);
    r
}

pub fn critical_report(h: &Hypergraph, lemma: &CriticalityReport, core: &CriticalCore) -> Report {
    let mut r = Report::new(Some(h));
    r.push("q", lemma.q.to_string());
    r.push("complete", lemma.complete);
    r.push("lemma_ok", lemma.lemma_ok);
    for e in &lemma.entries {
        r.push(
            &format!("edge_{}", e.index),
            format!(
                "critical={} q_without={} d_H={}",
                match e.is_critical {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "unknown",
                },
                e.q_without,
                e.hyperedge_degree
            ),
        );
    }
    r.push("core_final", core.is_final);
    r.push("core_q", core.q.to_string());
    r.push("core_kept", &core.kept);
    r.push("core_m", core.hypergraph.edge_count());
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::verify_conjecture;
    use crate::instances;
    use crate::oracle::OracleBudget;

    #[test]
    fn text_rendering() {
        let mut r = Report::default();
        r.push("a", 1);
        r.push("b", "x");
        r.push("c", vec![1, 2, 3]);
        r.push("d", Option::<usize>::None);
        r.push("e", Vec::<usize>::new());
        assert_eq!(
            r.render(ReportFormat::Text),
            "a: 1\nb: x\nc: 1 2 3\nd: -\ne: -\n"
        );
    }

    #[test]
    fn json_rendering_keeps_order() {
        let mut r = Report::default();
        r.push("z", 1);
        r.push("a", true);
        let json = r.render(ReportFormat::Json);
        assert!(json.find("\"z\"").unwrap() < json.find("\"a\"").unwrap());
        let parsed: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["a"], Value::Bool(true));
    }

    #[test]
    fn fano_verdict_report() {
        let fano = instances::fano();
        let v = verify_conjecture(&fano, OracleBudget::default(), true);
        let r = verdict_report(&fano, &v);
        let text = r.render(ReportFormat::Text);
        assert!(text.contains("q: 7\n"));
        assert!(text.contains("bound_bf: 7\n"));
        assert!(text.contains("thm1: true\n"));
        assert!(text.contains("status: HOLDS\n"));
        assert!(text.contains("efl: q <= n = 7 (holds)\n"));
        assert_eq!(text, verdict_report(&fano, &v).render(ReportFormat::Text));
    }

    #[test]
    fn format_parsing() {
        assert_eq!("json".parse::<ReportFormat>().unwrap(), ReportFormat::Json);
        assert!("yaml".parse::<ReportFormat>().is_err());
    }
}
