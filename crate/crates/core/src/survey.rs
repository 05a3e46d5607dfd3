//! Batch verification over seeded random linear hypergraphs.
//!
//! Instance `i` is built from `derive_seed(master, i)` alone, so the set of
//! verdicts does not depend on the number of workers or their scheduling.
//! Results are sorted by instance index before rendering.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{verify_conjecture, ConjectureStatus, Tag, Verdict};
use crate::error::{Error, Result};
use crate::hgr;
use crate::hypergraph::Hypergraph;
use crate::instances::random_linear;
use crate::oracle::OracleBudget;
use crate::report::{TOOL, VERSION};
use crate::rng::{derive_seed, SeededRng};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATED: i32 = 3;
pub const EXIT_UNRESOLVED: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyConfig {
    pub count: usize,
    pub n_range: (usize, usize),
    pub m_range: (usize, usize),
    /// Uniformities to draw from; each must be at least 2.
    pub ks: Vec<usize>,
    pub seed: u64,
    pub jobs: usize,
    pub budget: OracleBudget,
    pub use_exact: bool,
}

impl SurveyConfig {
    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Unsupported(msg));
        if self.ks.is_empty() {
            return bad("survey needs at least one uniformity k".into());
        }
        if let Some(&k) = self.ks.iter().find(|&&k| k < 2) {
            return bad(format!("survey instances must be loopless, got k = {k}"));
        }
        let kmax = *self.ks.iter().max().expect("ks non-empty");
        if self.n_range.0 > self.n_range.1 || self.m_range.0 > self.m_range.1 {
            return bad("empty n or m range".into());
        }
        if self.n_range.0 < kmax {
            return bad(format!(
                "smallest n ({}) is below the largest k ({kmax})",
                self.n_range.0
            ));
        }
        if self.jobs == 0 {
            return bad("--jobs must be positive".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRecord {
    pub index: usize,
    pub seed: u64,
    pub k: usize,
    /// Hyperedges requested before any reduction for feasibility.
    pub m_requested: usize,
    pub hypergraph: Hypergraph,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyOutcome {
    pub config_line: String,
    pub records: Vec<SurveyRecord>,
}

impl SurveyOutcome {
    pub fn count(&self, status: ConjectureStatus) -> usize {
        self.records
            .iter()
            .filter(|r| r.verdict.status == status)
            .count()
    }

    /// Instances whose licensed bounds were exceeded.
    pub fn inconsistent(&self) -> usize {
        self.records
            .iter()
            .filter(|r| !r.verdict.licensed_violations.is_empty())
            .count()
    }

    /// 3 when any instance is VIOLATED, else 4 when any is UNRESOLVED, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.count(ConjectureStatus::Violated) > 0 {
            EXIT_VIOLATED
        } else if self.count(ConjectureStatus::Unresolved) > 0 {
            EXIT_UNRESOLVED
        } else {
            EXIT_OK
        }
    }

    pub fn render(&self) -> String {
        let mut out = format!("tool: {TOOL} {VERSION}\n{}\n", self.config_line);
        for r in &self.records {
            let v = &r.verdict;
            let tags: Vec<&str> = v.applicable.iter().map(Tag::as_str).collect();
            out.push_str(&format!(
                "instance {} seed={} n={} m={} k={} delta2={} q={} bound={} status={} tags={} digest={}\n",
                r.index,
                r.seed,
                v.stats.n,
                v.stats.m,
                r.k,
                v.stats.delta2,
                v.q,
                v.bounds.bf,
                v.status,
                if tags.is_empty() { "-".to_string() } else { tags.join(",") },
                hgr::digest(&r.hypergraph),
            ));
        }
        for r in self
            .records
            .iter()
            .filter(|r| r.verdict.status == ConjectureStatus::Violated)
        {
            out.push_str(&format!("violated instance {}:\n", r.index));
            out.push_str(&hgr::to_string(&r.hypergraph));
            let colors: Vec<String> = r
                .verdict
                .witness
                .colors()
                .iter()
                .map(|c| c.to_string())
                .collect();
            out.push_str(&format!("witness {}\n", colors.join(" ")));
        }
        out.push_str(&format!(
            "summary: count={} holds={} violated={} unresolved={} inconsistent={}\n",
            self.records.len(),
            self.count(ConjectureStatus::Holds),
            self.count(ConjectureStatus::Violated),
            self.count(ConjectureStatus::Unresolved),
            self.inconsistent(),
        ));
        out
    }

    /// The same content as [`SurveyOutcome::render`] as a JSON document.
    pub fn render_json(&self) -> String {
        let instances: Vec<Value> = self
            .records
            .iter()
            .map(|r| {
                let v = &r.verdict;
                json!({
                    "index": r.index,
                    "seed": r.seed,
                    "k": r.k,
                    "m_requested": r.m_requested,
                    "n": v.stats.n,
                    "m": v.stats.m,
                    "delta2": v.stats.delta2,
                    "q": v.q.to_string(),
                    "bound": v.bounds.bf,
                    "status": v.status,
                    "applicable": v.applicable,
                    "digest": hgr::digest(&r.hypergraph),
                    "hgr": (v.status == ConjectureStatus::Violated).then(|| hgr::to_string(&r.hypergraph)),
                    "witness": (v.status == ConjectureStatus::Violated).then(|| v.witness.colors()),
                })
            })
            .collect();
        let doc = json!({
            "tool": format!("{TOOL} {VERSION}"),
            "survey": self.config_line.trim_start_matches("survey: "),
            "instances": instances,
            "summary": {
                "count": self.records.len(),
                "holds": self.count(ConjectureStatus::Holds),
                "violated": self.count(ConjectureStatus::Violated),
                "unresolved": self.count(ConjectureStatus::Unresolved),
                "inconsistent": self.inconsistent(),
            },
        });
        let mut out = serde_json::to_string_pretty(&doc).expect("survey serializes");
        out.push('\n');
        out
    }
}

/// Builds instance `index`: n, k and m are drawn from the instance seed; if
/// the requested m cannot be placed, m is lowered one step at a time (each
/// attempt with a fresh generator seed) until generation succeeds.
pub fn survey_instance(cfg: &SurveyConfig, index: usize) -> (u64, usize, usize, Hypergraph) {
    let seed = derive_seed(cfg.seed, index as u64);
    let mut rng = SeededRng::new(seed);
    let n = rng.inclusive(cfg.n_range.0, cfg.n_range.1);
    let k = cfg.ks[rng.index(cfg.ks.len())];
    let m_requested = rng.inclusive(cfg.m_range.0, cfg.m_range.1);
    let mut m = m_requested;
    loop {
        if m == 0 {
            return (seed, k, m_requested, Hypergraph::empty(n));
        }
        match random_linear(n, m, k, rng.next_u64()) {
            Ok(h) => return (seed, k, m_requested, h),
            Err(_) => m -= 1,
        }
    }
}

pub fn run_survey(cfg: &SurveyConfig) -> Result<SurveyOutcome> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Unsupported(format!("cannot start worker pool: {e}")))?;
    let mut records: Vec<SurveyRecord> = pool.install(|| {
        (0..cfg.count)
            .into_par_iter()
            .map(|index| {
                let (seed, k, m_requested, hypergraph) = survey_instance(cfg, index);
                let verdict = verify_conjecture(&hypergraph, cfg.budget, cfg.use_exact);
                SurveyRecord {
                    index,
                    seed,
                    k,
                    m_requested,
                    hypergraph,
                    verdict,
                }
            })
            .collect()
    });
    records.sort_by_key(|r| r.index);
    let ks: Vec<String> = cfg.ks.iter().map(|k| k.to_string()).collect();
    let config_line = format!(
        "survey: family=random-linear count={} n={}..{} m={}..{} k={} seed={} exact={}",
        cfg.count,
        cfg.n_range.0,
        cfg.n_range.1,
        cfg.m_range.0,
        cfg.m_range.1,
        ks.join(","),
        cfg.seed,
        cfg.use_exact
    );
    Ok(SurveyOutcome {
        config_line,
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(jobs: usize) -> SurveyConfig {
        SurveyConfig {
            count: 24,
            n_range: (6, 10),
            m_range: (3, 10),
            ks: vec![2, 3],
            seed: 5,
            jobs,
            budget: OracleBudget::default(),
            use_exact: true,
        }
    }

    #[test]
    fn small_survey_holds_and_is_job_independent() {
        let one = run_survey(&config(1)).unwrap();
        let four = run_survey(&config(4)).unwrap();
        assert_eq!(one.render(), four.render());
        assert_eq!(one.render_json(), four.render_json());
        let doc: Value = serde_json::from_str(&one.render_json()).unwrap();
        assert_eq!(doc["summary"]["holds"], 24);
        assert_eq!(one.exit_code(), EXIT_OK);
        assert_eq!(one.count(ConjectureStatus::Holds), 24);
        assert!(one.records.iter().all(|r| r.hypergraph.is_linear()));
    }

    #[test]
    fn violated_is_never_masked() {
        let mut outcome = run_survey(&SurveyConfig {
            count: 3,
            ..config(1)
        })
        .unwrap();
        outcome.records[1].verdict.status = ConjectureStatus::Unresolved;
        assert_eq!(outcome.exit_code(), EXIT_UNRESOLVED);
        outcome.records[0].verdict.status = ConjectureStatus::Violated;
        assert_eq!(outcome.exit_code(), EXIT_VIOLATED);
        let text = outcome.render();
        assert!(text.contains("violated instance 0:\np hgr "));
        assert!(text.contains("summary: count=3 holds=1 violated=1 unresolved=1"));
    }

    #[test]
    fn infeasible_m_is_reduced() {
        let cfg = SurveyConfig {
            count: 4,
            n_range: (6, 6),
            m_range: (9, 9),
            ks: vec![3],
            ..config(1)
        };
        for i in 0..4 {
            let (_, k, requested, h) = survey_instance(&cfg, i);
            assert_eq!((k, requested), (3, 9));
            assert!(h.edge_count() <= 4 && h.edge_count() >= 1);
            assert!(h.is_linear());
        }
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut cfg = config(1);
        cfg.ks = vec![1];
        assert!(run_survey(&cfg).is_err());
        let mut cfg = config(1);
        cfg.n_range = (2, 4);
        cfg.ks = vec![3];
        assert!(run_survey(&cfg).is_err());
        let mut cfg = config(1);
        cfg.jobs = 0;
        assert!(run_survey(&cfg).is_err());
    }
}
