//! Bounds on the chromatic index, theorem-hypothesis checkers and the
//! verdict engine for `q(H) <= Δ([H]_2) + 1`.
//!
//! Every square-root hypothesis is decided in exact integer arithmetic by
//! squaring both (non-negative) sides; no floating point is involved.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::{
    brooks_edge_color, greedy_color, is_proper, vizing_hyperedge_color, EdgeColoring, OrderStrategy,
};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, HypergraphStats};
use crate::oracle::{chromatic_index, greedy_clique, Chromatic, OracleBudget};
use crate::transforms::line_graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Tag {
    #[serde(rename = "THM1")]
    Thm1,
    #[serde(rename = "THM2")]
    Thm2,
    #[serde(rename = "THM3")]
    Thm3,
    #[serde(rename = "RK61")]
    Rk61,
    #[serde(rename = "RK62")]
    Rk62,
    #[serde(rename = "U65_1")]
    U65Vizing,
    #[serde(rename = "U65_2")]
    U65Antirank,
    #[serde(rename = "U65_3")]
    U65SquareDelta,
    #[serde(rename = "U65_4")]
    U65Rank,
    #[serde(rename = "OPEN")]
    Open,
}

impl Tag {
    pub fn as_str(&self) -> &'static str {
        match self {
            Tag::Thm1 => "THM1",
            Tag::Thm2 => "THM2",
            Tag::Thm3 => "THM3",
            Tag::Rk61 => "RK61",
            Tag::Rk62 => "RK62",
            Tag::U65Vizing => "U65_1",
            Tag::U65Antirank => "U65_2",
            Tag::U65SquareDelta => "U65_3",
            Tag::U65Rank => "U65_4",
            Tag::Open => "OPEN",
        }
    }

    /// Tags whose hypotheses license `q <= Δ₂ + 1`.
    pub fn licenses_bf(&self) -> bool {
        !matches!(self, Tag::Rk61 | Tag::Open)
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ConjectureStatus {
    Holds,
    Violated,
    Unresolved,
}

impl fmt::Display for ConjectureStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConjectureStatus::Holds => "HOLDS",
            ConjectureStatus::Violated => "VIOLATED",
            ConjectureStatus::Unresolved => "UNRESOLVED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundSet {
    /// Δ₂ + 1.
    pub bf: usize,
    /// Greedy bound over sizes `ar..=r`; absent without hyperedges or with loops.
    pub greedy: Option<usize>,
    /// r(Δ₁ − 1) + 1; absent without hyperedges.
    pub linegraph: Option<usize>,
    /// max d_H(e) + 1; absent without hyperedges.
    pub max_edge_degree_plus1: Option<usize>,
}

fn stats_rank(stats: &HypergraphStats) -> Result<(usize, usize)> {
    match (stats.antirank, stats.rank) {
        (Some(ar), Some(r)) => Ok((ar, r)),
        _ => Err(Error::Unsupported(
            "bound undefined for a hypergraph without hyperedges".into(),
        )),
    }
}

pub fn bf_bound(h: &Hypergraph) -> usize {
    crate::transforms::max_degree_two_section(h) + 1
}

/// `max over ar <= k <= r of k * (floor(Δ₂ / (k - 1)) - 1) + 1`.
pub fn greedy_bound(h: &Hypergraph) -> Result<usize> {
    greedy_bound_from(&h.stats())
}

fn greedy_bound_from(stats: &HypergraphStats) -> Result<usize> {
    let (ar, r) = stats_rank(stats)?;
    if ar < 2 {
        return Err(Error::Unsupported(
            "greedy bound needs a loopless hypergraph (antirank >= 2)".into(),
        ));
    }
    let d2 = stats.delta2 as i64;
    let best = (ar..=r)
        .map(|k| {
            let k = k as i64;
            k * (d2 / (k - 1) - 1) + 1
        })
        .max()
        .expect("ar <= r gives a non-empty range");
    Ok(best.max(0) as usize)
}

/// `r (Δ₁ - 1) + 1`, an upper bound on `Δ(L(H)) + 1`.
pub fn linegraph_bound(h: &Hypergraph) -> Result<usize> {
    linegraph_bound_from(&h.stats())
}

fn linegraph_bound_from(stats: &HypergraphStats) -> Result<usize> {
    let (_, r) = stats_rank(stats)?;
    Ok(r * stats.max_degree.saturating_sub(1) + 1)
}

pub fn bounds(h: &Hypergraph) -> BoundSet {
    let stats = h.stats();
    bounds_from(h, &stats)
}

fn bounds_from(h: &Hypergraph, stats: &HypergraphStats) -> BoundSet {
    BoundSet {
        bf: stats.delta2 + 1,
        greedy: greedy_bound_from(stats).ok(),
        linegraph: linegraph_bound_from(stats).ok(),
        max_edge_degree_plus1: h.hyperedge_degrees().into_iter().max().map(|d| d + 1),
    }
}

/// `ar >= sqrt(Δ₂ + 1)`, decided as `ar² >= Δ₂ + 1` (written `ar² > Δ₂`).
pub fn thm1_condition(antirank: u64, delta2: u64) -> bool {
    (antirank as u128).pow(2) > delta2 as u128
}

/// `Δ₁ <= sqrt(Δ₂ + 1) + 1`, decided as `Δ₁ <= 1 or (Δ₁ - 1)² <= Δ₂ + 1`.
pub fn thm3_condition(max_degree: u64, delta2: u64) -> bool {
    max_degree <= 1 || ((max_degree - 1) as u128).pow(2) <= delta2 as u128 + 1
}

/// The rank condition `(v - u) δ₂ <= u v` with `r = δ₂ - u`,
/// `Δ₁ = δ₂ + 1 + v`, `δ₂ = sqrt(Δ₂)`.
///
/// Expanding `(δ₂ - u)(δ₂ + v) = δ₂² + (v - u) δ₂ - u v` shows the condition
/// is `r (Δ₁ - 1) <= Δ₂`, which is what is evaluated.
pub fn rk62_condition(rank: u64, max_degree: u64, delta2: u64) -> bool {
    rank as u128 * max_degree.saturating_sub(1) as u128 <= delta2 as u128
}

/// Loopless and `ar >= sqrt(Δ₂ + 1)`.
pub fn check_thm1(h: &Hypergraph) -> bool {
    check_thm1_from(&h.stats())
}

fn check_thm1_from(s: &HypergraphStats) -> bool {
    match s.antirank {
        Some(ar) => s.loopless && thm1_condition(ar as u64, s.delta2 as u64),
        None => false,
    }
}

/// Linear, k-uniform with k >= 2 and (k + 1)-regular.
pub fn check_thm2(h: &Hypergraph) -> bool {
    check_thm2_from(&h.stats())
}

fn check_thm2_from(s: &HypergraphStats) -> bool {
    match (s.uniform_k, s.regular_d) {
        (Some(k), Some(d)) => s.linear && k >= 2 && d == k + 1,
        _ => false,
    }
}

/// Loopless and `Δ₁ <= sqrt(Δ₂ + 1) + 1`.
pub fn check_thm3(h: &Hypergraph) -> bool {
    check_thm3_from(&h.stats())
}

fn check_thm3_from(s: &HypergraphStats) -> bool {
    s.loopless && thm3_condition(s.max_degree as u64, s.delta2 as u64)
}

/// `r (Δ₁ - 1) <= Δ₂`; needs at least one hyperedge.
pub fn check_rk62(h: &Hypergraph) -> bool {
    check_rk62_from(&h.stats())
}

fn check_rk62_from(s: &HypergraphStats) -> bool {
    match s.rank {
        Some(r) => rk62_condition(r as u64, s.max_degree as u64, s.delta2 as u64),
        None => false,
    }
}

/// Loopless with `ar² > Δ₂ + 1` strictly, where the greedy bound applies.
fn check_rk61_from(s: &HypergraphStats) -> bool {
    match s.antirank {
        Some(ar) => ar >= 2 && (ar as u128).pow(2) > s.delta2 as u128 + 1,
        None => false,
    }
}

/// Which of the four sufficient conditions for uniform linear hypergraphs
/// hold; `OPEN` when none does.
///
/// The fourth condition is emitted whenever `k >= 3` and `k (Δ₁ - 1) <= Δ₂`;
/// its side constraints `k < δ₂ < Δ₁ - 1` only describe the regime the
/// other three leave uncovered.
pub fn classify_uniform(h: &Hypergraph) -> Result<BTreeSet<Tag>> {
    classify_uniform_from(&h.stats())
}

fn classify_uniform_from(s: &HypergraphStats) -> Result<BTreeSet<Tag>> {
    if !s.linear {
        return Err(Error::Unsupported(
            "uniform classification needs a linear hypergraph".into(),
        ));
    }
    let k = match s.uniform_k {
        Some(k) if k >= 2 => k,
        Some(k) => {
            return Err(Error::Unsupported(format!(
                "uniform classification needs k >= 2, got k = {k}"
            )))
        }
        None => {
            return Err(Error::Unsupported(
                "uniform classification needs a uniform hypergraph".into(),
            ))
        }
    };
    let (k64, d1, d2) = (k as u64, s.max_degree as u64, s.delta2 as u64);
    let mut tags = BTreeSet::new();
    if k == 2 {
        tags.insert(Tag::U65Vizing);
    }
    if thm1_condition(k64, d2) {
        tags.insert(Tag::U65Antirank);
    }
    if d2 == k64 * k64 {
        tags.insert(Tag::U65SquareDelta);
    }
    if k >= 3 && rk62_condition(k64, d1, d2) {
        tags.insert(Tag::U65Rank);
    }
    if tags.is_empty() {
        tags.insert(Tag::Open);
    }
    Ok(tags)
}

/// Every tag whose hypotheses hold for `h`.
pub fn applicable_tags(h: &Hypergraph) -> BTreeSet<Tag> {
    applicable_from(&h.stats())
}

fn applicable_from(s: &HypergraphStats) -> BTreeSet<Tag> {
    let mut tags = BTreeSet::new();
    if check_thm1_from(s) {
        tags.insert(Tag::Thm1);
    }
    if check_thm2_from(s) {
        tags.insert(Tag::Thm2);
    }
    if check_thm3_from(s) {
        tags.insert(Tag::Thm3);
    }
    if check_rk61_from(s) {
        tags.insert(Tag::Rk61);
    }
    if check_rk62_from(s) {
        tags.insert(Tag::Rk62);
    }
    if let Ok(uniform) = classify_uniform_from(s) {
        tags.extend(uniform);
    }
    tags
}

/// `Δ₂ + 1 - (ar - Δ₁)`: an upper bound on q whenever some hyperedge of
/// minimum size is critical (e.g. in a critical hypergraph). Absent without
/// hyperedges.
pub fn critical_min_edge_bound(s: &HypergraphStats) -> Option<i64> {
    s.antirank
        .map(|ar| s.delta2 as i64 + 1 - (ar as i64 - s.max_degree as i64))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub checks: Vec<InequalityCheck>,
}

impl InequalityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, name: &str) -> Option<&InequalityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Evaluates the structural identities and inequalities that hold for
/// every hypergraph (or every hypergraph in the stated class). A failing
/// check indicates a bug.
pub fn inequality_suite(h: &Hypergraph) -> InequalityReport {
    let s = h.stats();
    let degrees = h.vertex_degrees();
    let edge_degrees = h.hyperedge_degrees();
    let mut checks = Vec::new();
    let mut push = |name: &str, holds: bool, detail: String| {
        checks.push(InequalityCheck {
            name: name.to_string(),
            holds,
            detail,
        })
    };

    if let (true, Some(ar)) = (s.loopless, s.antirank) {
        let rhs = (ar - 1) * s.max_degree;
        push(
            "delta2_ge_antirank_times_degree",
            s.delta2 >= rhs,
            format!("Δ₂ = {} >= (ar - 1)·Δ₁ = {rhs}", s.delta2),
        );
    }

    let sums: Vec<usize> = h
        .edges()
        .iter()
        .map(|e| e.iter().map(|&x| degrees[x] - 1).sum())
        .collect();
    let violations = edge_degrees
        .iter()
        .zip(&sums)
        .filter(|(d, sum)| d > sum)
        .count();
    push(
        "edge_degree_le_incidence_sum",
        violations == 0,
        format!(
            "{violations} of {} hyperedges have d_H(e) > Σ(deg - 1)",
            s.m
        ),
    );
    if s.linear {
        let unequal = edge_degrees
            .iter()
            .zip(&sums)
            .filter(|(d, sum)| d != sum)
            .count();
        push(
            "edge_degree_eq_incidence_sum_when_linear",
            unequal == 0,
            format!("{unequal} of {} hyperedges have d_H(e) != Σ(deg - 1)", s.m),
        );
    }

    if check_thm2_from(&s) {
        let k = s.uniform_k.expect("uniform under THM2");
        push(
            "uniform_regular_counting",
            k * s.m == (k + 1) * s.n,
            format!("k·m = {} vs (k + 1)·n = {}", k * s.m, (k + 1) * s.n),
        );
        push(
            "uniform_regular_delta2",
            s.delta2 + 1 == k * k,
            format!("Δ₂ = {} vs k² - 1 = {}", s.delta2, k * k - 1),
        );
        let off = edge_degrees.iter().filter(|&&d| d != k * k).count();
        push(
            "uniform_regular_edge_degree",
            off == 0,
            format!("{off} of {} hyperedges have d_H(e) != k² = {}", s.m, k * k),
        );
    }
    InequalityReport { checks }
}

/// Comparison `q(H) <= |V|`, reported for linear hypergraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EflCheck {
    pub n: usize,
    /// `None` when a bracket straddles `n`.
    pub holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub stats: HypergraphStats,
    pub bounds: BoundSet,
    pub applicable: BTreeSet<Tag>,
    pub q: Chromatic,
    pub status: ConjectureStatus,
    /// Proper coloring with `q.upper()` colors.
    pub witness: EdgeColoring,
    pub witness_method: String,
    pub efl: Option<EflCheck>,
    /// Licensed bounds that the lower end of q exceeds. Always empty unless
    /// a theorem's hypotheses are checked wrongly or a counterexample exists.
    pub licensed_violations: Vec<String>,
    pub search_nodes: u64,
}

/// Best constructive coloring among greedy (descending degree), Brooks and,
/// for simple graphs, Misra–Gries. Ties keep the earlier method.
pub fn best_constructive(h: &Hypergraph) -> (EdgeColoring, &'static str) {
    let mut best = (greedy_color(h, OrderStrategy::DescDegree), "greedy");
    let brooks = brooks_edge_color(h);
    if brooks.q_used() < best.0.q_used() {
        best = (brooks, "brooks");
    }
    if let Ok(vizing) = vizing_hyperedge_color(h) {
        if vizing.q_used() < best.0.q_used() {
            best = (vizing, "vizing");
        }
    }
    best
}

/// Assembles stats, bounds, applicable tags and q (exact, or bracketed by a
/// clique lower bound and the best coloring found), and decides the status.
///
/// Panics if a coloring produced internally fails re-verification: that is
/// an internal inconsistency, never a conjecture verdict.
pub fn verify_conjecture(h: &Hypergraph, budget: OracleBudget, use_exact: bool) -> Verdict {
    let stats = h.stats();
    let bounds = bounds_from(h, &stats);
    let applicable = applicable_from(&stats);
    let (constructive, method) = best_constructive(h);

    let (q, witness, witness_method, search_nodes) = if use_exact {
        let search = chromatic_index(h, budget);
        if constructive.q_used() < search.witness.q_used() {
            let q = bracket(search.value.lower(), constructive.q_used());
            (q, constructive, method.to_string(), search.nodes)
        } else {
            (
                search.value,
                search.witness,
                "exact".to_string(),
                search.nodes,
            )
        }
    } else {
        let clique = greedy_clique(&line_graph(h)).len().max(stats.max_degree);
        (
            bracket(clique, constructive.q_used()),
            constructive,
            method.to_string(),
            0,
        )
    };

    assert!(
        is_proper(h, &witness).unwrap_or(false) && witness.q_used() == q.upper(),
        "internal inconsistency: witness coloring from {witness_method} failed re-verification"
    );

    let bf = bounds.bf;
    let status = if q.upper() <= bf {
        ConjectureStatus::Holds
    } else if q.lower() > bf {
        ConjectureStatus::Violated
    } else {
        ConjectureStatus::Unresolved
    };

    let mut licensed_violations = Vec::new();
    for tag in applicable.iter().filter(|t| t.licenses_bf()) {
        if q.lower() > bf {
            licensed_violations.push(format!("{tag}: q >= {} > Δ₂ + 1 = {bf}", q.lower()));
        }
    }
    if applicable.contains(&Tag::Rk61) {
        if let Some(g) = bounds.greedy.filter(|&g| q.lower() > g) {
            licensed_violations.push(format!("RK61: q >= {} > greedy bound {g}", q.lower()));
        }
    }
    if let Some(l) = bounds.linegraph.filter(|&l| q.lower() > l) {
        licensed_violations.push(format!("line graph bound: q >= {} > {l}", q.lower()));
    }
    if let Some(d) = bounds.max_edge_degree_plus1.filter(|&d| q.lower() > d) {
        licensed_violations.push(format!("max edge degree bound: q >= {} > {d}", q.lower()));
    }

    let efl = stats.linear.then(|| EflCheck {
        n: stats.n,
        holds: if q.upper() <= stats.n {
            Some(true)
        } else if q.lower() > stats.n {
            Some(false)
        } else {
            None
        },
    });

    Verdict {
        stats,
        bounds,
        applicable,
        q,
        status,
        witness,
        witness_method,
        efl,
        licensed_violations,
        search_nodes,
    }
}

fn bracket(lower: usize, upper: usize) -> Chromatic {
    if lower >= upper {
        Chromatic::Exact(upper)
    } else {
        Chromatic::Bracket { lower, upper }
    }
}
