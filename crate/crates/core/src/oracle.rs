//! Exact chromatic number and chromatic index, and critical hyperedges.
//!
//! The solver is a DSATUR branch-and-bound. It starts from a DSATUR
//! heuristic coloring (upper bound) and a greedy clique (lower bound), and
//! only opens a new color as `max_used + 1`, which removes color-permutation
//! symmetry. When the node or time budget runs out the answer degrades to a
//! bracket `[lower, upper]`; it never reports an unproven exact value.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::coloring::{dsatur_color, is_proper, Coloring};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::transforms::{line_graph, SimpleGraph};

pub const DEFAULT_MAX_NODES: u64 = 10_000_000;
pub const DEFAULT_TIME_LIMIT: Duration = Duration::from_secs(30);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBudget {
    max_nodes: u64,
    time_limit: Duration,
}

impl OracleBudget {
    pub fn new(max_nodes: u64, time_limit: Duration) -> Result<Self> {
        if max_nodes == 0 {
            return Err(Error::Budget("max_nodes must be positive".into()));
        }
        if time_limit.is_zero() {
            return Err(Error::Budget("time limit must be positive".into()));
        }
        Ok(OracleBudget {
            max_nodes,
            time_limit,
        })
    }

    pub fn max_nodes(&self) -> u64 {
        self.max_nodes
    }

    pub fn time_limit(&self) -> Duration {
        self.time_limit
    }
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_nodes: DEFAULT_MAX_NODES,
            time_limit: DEFAULT_TIME_LIMIT,
        }
    }
}

/// An exact value, or a bracket when the search budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chromatic {
    Exact(usize),
    Bracket { lower: usize, upper: usize },
}

impl Chromatic {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            Chromatic::Exact(q) => Some(q),
            Chromatic::Bracket { .. } => None,
        }
    }

    pub fn lower(&self) -> usize {
        match *self {
            Chromatic::Exact(q) => q,
            Chromatic::Bracket { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> usize {
        match *self {
            Chromatic::Exact(q) => q,
            Chromatic::Bracket { upper, .. } => upper,
        }
    }

    fn from_bounds(lower: usize, upper: usize) -> Self {
        if lower == upper {
            Chromatic::Exact(upper)
        } else {
            Chromatic::Bracket { lower, upper }
        }
    }
}

impl std::fmt::Display for Chromatic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Chromatic::Exact(q) => write!(f, "{q}"),
            Chromatic::Bracket { lower, upper } => write!(f, "[{lower}, {upper}]"),
        }
    }
}

/// Outcome of an exact coloring search, with the best coloring found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Search {
    pub value: Chromatic,
    /// A proper coloring with `value.upper()` colors.
    pub witness: Coloring,
    pub nodes: u64,
}

struct Clock {
    start: Instant,
    nodes: u64,
    budget: OracleBudget,
    exhausted: bool,
}

impl Clock {
    fn new(budget: OracleBudget) -> Self {
        Clock {
            start: Instant::now(),
            nodes: 0,
            budget,
            exhausted: false,
        }
    }

    /// Counts one search node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes
            || (self.nodes.is_multiple_of(1024) && self.start.elapsed() > self.budget.time_limit)
        {
            self.exhausted = true;
        }
        !self.exhausted
    }
}

/// Largest clique found by greedy growth from each start vertex, taking the
/// candidate with most neighbors inside the candidate set at each step.
pub fn greedy_clique(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best: Vec<usize> = Vec::new();
    for &start in &starts {
        if g.degree(start) < best.len() {
            break;
        }
        let mut clique = vec![start];
        let mut candidates = g.row(start).clone();
        while candidates.count_ones(..) > 0 {
            let next = candidates
                .ones()
                .max_by_key(|&v| {
                    (
                        g.row(v).intersection_count(&candidates),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("candidate set is non-empty");
            clique.push(next);
            candidates.intersect_with(g.row(next));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

struct BranchAndBound<'a> {
    g: &'a SimpleGraph,
    colors: Vec<usize>,
    /// `conflicts[v][c]`: colored neighbors of `v` with color `c`.
    conflicts: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    best: Vec<usize>,
    best_count: usize,
    lower: usize,
    clock: &'a mut Clock,
}

impl BranchAndBound<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for &w in self.g.neighbors(v) {
            if self.conflicts[w][c] == 0 {
                self.saturation[w] += 1;
            }
            self.conflicts[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = 0;
        for &w in self.g.neighbors(v) {
            self.conflicts[w][c] -= 1;
            if self.conflicts[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == 0)
            .max_by(|&a, &b| {
                (self.saturation[a], self.g.degree(a))
                    .cmp(&(self.saturation[b], self.g.degree(b)))
                    .then(b.cmp(&a))
            })
    }

    fn search(&mut self, used: usize) {
        let Some(v) = self.pick() else {
            self.best.clone_from(&self.colors);
            self.best_count = used;
            return;
        };
        // Only completions using fewer than best_count colors are useful.
        let mut c = 1;
        while c <= (used + 1).min(self.best_count - 1) {
            if self.conflicts[v][c] == 0 {
                if !self.clock.tick() {
                    return;
                }
                self.assign(v, c);
                self.search(used.max(c));
                self.unassign(v);
                if self.best_count <= self.lower || self.clock.exhausted {
                    return;
                }
            }
            c += 1;
        }
    }
}

fn solve_connected(
    g: &SimpleGraph,
    lower_hint: usize,
    clock: &mut Clock,
) -> (Chromatic, Vec<usize>) {
    let n = g.vertex_count();
    if n == 0 {
        return (Chromatic::Exact(0), Vec::new());
    }
    let heuristic = dsatur_color(g);
    let lower = greedy_clique(g).len().max(lower_hint);
    let upper = heuristic.q_used();
    if lower >= upper {
        return (Chromatic::Exact(upper), heuristic.colors().to_vec());
    }
    let mut bb = BranchAndBound {
        g,
        colors: vec![0; n],
        conflicts: vec![vec![0; upper + 1]; n],
        saturation: vec![0; n],
        best: heuristic.colors().to_vec(),
        best_count: upper,
        lower,
        clock,
    };
    bb.search(0);
    let value = if bb.clock.exhausted && bb.best_count > bb.lower {
        Chromatic::from_bounds(bb.lower, bb.best_count)
    } else {
        Chromatic::Exact(bb.best_count)
    };
    (value, bb.best)
}

fn solve(g: &SimpleGraph, lower_hints: &[usize], budget: OracleBudget) -> Search {
    let mut clock = Clock::new(budget);
    let mut colors = vec![0usize; g.vertex_count()];
    let (mut lower, mut upper) = (0usize, 0usize);
    for component in g.components() {
        let sub = g.induced(&component);
        let hint = component.iter().map(|&v| lower_hints[v]).max().unwrap_or(0);
        let (value, local) = solve_connected(&sub, hint, &mut clock);
        lower = lower.max(value.lower());
        upper = upper.max(value.upper());
        for (&v, &c) in component.iter().zip(&local) {
            colors[v] = c;
        }
    }
    let witness = Coloring::from_raw(colors);
    debug_assert!(witness.is_proper_on(g));
    debug_assert_eq!(witness.q_used(), upper);
    Search {
        value: Chromatic::from_bounds(lower, upper),
        witness,
        nodes: clock.nodes,
    }
}

/// Exact χ(G) within the budget, else a bracket.
pub fn chromatic_number(g: &SimpleGraph, budget: OracleBudget) -> Search {
    solve(g, &vec![0; g.vertex_count()], budget)
}

/// Exact chromatic index q(H) = χ(L(H)) within the budget, else a bracket.
///
/// Hyperedges through a common vertex form a clique of the line graph, so
/// the maximum vertex degree seeds the lower bound alongside the greedy clique.
pub fn chromatic_index(h: &Hypergraph, budget: OracleBudget) -> Search {
    let l = line_graph(h);
    let mut hints = vec![0usize; h.edge_count()];
    for incident in h.incidence() {
        for &i in &incident {
            hints[i] = hints[i].max(incident.len());
        }
    }
    let search = solve(&l, &hints, budget);
    debug_assert!(is_proper(h, &search.witness).unwrap_or(false));
    search
}

/// Whether removing hyperedge `index` lowers q by one; `None` when either
/// chromatic index could not be determined within the budget.
pub fn is_critical(h: &Hypergraph, index: usize, budget: OracleBudget) -> Result<Option<bool>> {
    let reduced = h.remove_hyperedge(index)?;
    let full = chromatic_index(h, budget).value;
    let without = chromatic_index(&reduced, budget).value;
    Ok(match (full.exact(), without.exact()) {
        (Some(q), Some(qe)) => Some(qe + 1 == q),
        _ => None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalEntry {
    pub index: usize,
    pub hyperedge_degree: usize,
    pub q_without: Chromatic,
    /// `None` when undetermined within the budget.
    pub is_critical: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub q: Chromatic,
    pub entries: Vec<CriticalEntry>,
    /// For every hyperedge known to be critical: `q - 1 <= d_H(e)`.
    pub lemma_ok: bool,
    /// Every entry was determined.
    pub complete: bool,
}

impl CriticalityReport {
    pub fn all_critical(&self) -> bool {
        self.entries.iter().all(|e| e.is_critical == Some(true))
    }
}

/// Per-hyperedge criticality table and the check `q - 1 <= d_H(e)` for
/// every critical hyperedge. Costs `m + 1` exact solves.
pub fn check_lemma_key(h: &Hypergraph, budget: OracleBudget) -> CriticalityReport {
    let q = chromatic_index(h, budget).value;
    let degrees = h.hyperedge_degrees();
    let entries: Vec<CriticalEntry> = (0..h.edge_count())
        .map(|i| {
            let reduced = h.remove_hyperedge(i).expect("index in range");
            let q_without = chromatic_index(&reduced, budget).value;
            let is_critical = match (q.exact(), q_without.exact()) {
                (Some(q), Some(qe)) => Some(qe + 1 == q),
                _ => None,
            };
            CriticalEntry {
                index: i,
                hyperedge_degree: degrees[i],
                q_without,
                is_critical,
            }
        })
        .collect();
    let lemma_ok = match q.exact() {
        Some(q) => entries
            .iter()
            .filter(|e| e.is_critical == Some(true))
            .all(|e| q <= e.hyperedge_degree + 1),
        None => true,
    };
    let complete = q.exact().is_some() && entries.iter().all(|e| e.is_critical.is_some());
    CriticalityReport {
        q,
        entries,
        lemma_ok,
        complete,
    }
}

/// A critical partial hypergraph with the same chromatic index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalCore {
    pub hypergraph: Hypergraph,
    /// Original positions of the kept hyperedges, increasing.
    pub kept: Vec<usize>,
    pub q: Chromatic,
    /// False when the budget ran out before a fixpoint was certified.
    pub is_final: bool,
}

/// Removes, lowest position first, every hyperedge whose removal leaves q
/// unchanged, until all remaining hyperedges are critical.
///
/// A hyperedge found critical stays critical after later removals (q of the
/// smaller hypergraph minus that edge can only drop further), so one forward
/// scan reaches the same fixpoint as restarting after every removal.
pub fn extract_critical(h: &Hypergraph, budget: OracleBudget) -> CriticalCore {
    let q = chromatic_index(h, budget).value;
    let mut kept: Vec<usize> = (0..h.edge_count()).collect();
    let Some(target) = q.exact() else {
        return CriticalCore {
            hypergraph: h.clone(),
            kept,
            q,
            is_final: false,
        };
    };
    let mut current = h.clone();
    let mut pos = 0;
    while pos < kept.len() {
        let candidate = current.remove_hyperedge(pos).expect("position in range");
        match chromatic_index(&candidate, budget).value.exact() {
            Some(qe) if qe == target => {
                current = candidate;
                kept.remove(pos);
            }
            Some(_) => pos += 1,
            None => {
                return CriticalCore {
                    hypergraph: current,
                    kept,
                    q,
                    is_final: false,
                }
            }
        }
    }
    CriticalCore {
        hypergraph: current,
        kept,
        q,
        is_final: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    fn complete(n: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn budget_validation() {
        assert!(OracleBudget::new(0, Duration::from_secs(1)).is_err());
        assert!(OracleBudget::new(1, Duration::ZERO).is_err());
        let d = OracleBudget::default();
        assert_eq!(d.max_nodes(), 10_000_000);
        assert_eq!(d.time_limit(), Duration::from_secs(30));
    }

    #[test]
    fn chromatic_number_examples() {
        let budget = OracleBudget::default();
        assert_eq!(
            chromatic_number(&complete(7), budget).value,
            Chromatic::Exact(7)
        );
        assert_eq!(
            chromatic_number(&cycle(5), budget).value,
            Chromatic::Exact(3)
        );
        let l = line_graph(&instances::affine_plane(3).unwrap());
        let s = chromatic_number(&l, budget);
        assert_eq!(s.value, Chromatic::Exact(4));
        assert!(s.witness.is_proper_on(&l));
        assert_eq!(
            chromatic_number(&SimpleGraph::new(0), budget).value,
            Chromatic::Exact(0)
        );
        assert_eq!(
            chromatic_number(&SimpleGraph::new(3), budget).value,
            Chromatic::Exact(1)
        );
    }

    #[test]
    fn chromatic_index_examples() {
        let budget = OracleBudget::default();
        assert_eq!(
            chromatic_index(&instances::fano(), budget).value,
            Chromatic::Exact(7)
        );
        let triangle = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(
            chromatic_index(&triangle, budget).value,
            Chromatic::Exact(3)
        );
        let pg3 = instances::projective_plane(3).unwrap();
        assert_eq!(chromatic_index(&pg3, budget).value, Chromatic::Exact(13));
        assert_eq!(
            chromatic_index(&Hypergraph::empty(4), budget).value,
            Chromatic::Exact(0)
        );
    }

    #[test]
    fn tiny_budget_gives_bracket_not_wrong_value() {
        // Petersen: clique bound 3, chromatic index 4, so the proof needs search.
        let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<_> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let edges: Vec<Vec<usize>> = outer
            .into_iter()
            .chain(spokes)
            .chain(inner)
            .map(|(u, v)| vec![u, v])
            .collect();
        let petersen = Hypergraph::new(10, edges).unwrap();
        let full = chromatic_index(&petersen, OracleBudget::default());
        assert_eq!(full.value, Chromatic::Exact(4));
        let tight = OracleBudget::new(1, Duration::from_secs(5)).unwrap();
        let partial = chromatic_index(&petersen, tight);
        match partial.value {
            Chromatic::Exact(q) => assert_eq!(q, 4),
            Chromatic::Bracket { lower, upper } => {
                assert!(lower <= 4 && 4 <= upper);
                assert_eq!(partial.witness.q_used(), upper);
            }
        }
        assert!(is_proper(&petersen, &partial.witness).unwrap());
    }

    #[test]
    fn greedy_clique_finds_triangle() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(greedy_clique(&g), vec![0, 1, 2]);
    }

    #[test]
    fn criticality_examples() {
        let budget = OracleBudget::default();
        let single = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(is_critical(&single, 0, budget).unwrap(), Some(true));
        let fano = instances::fano();
        for i in 0..7 {
            assert_eq!(is_critical(&fano, i, budget).unwrap(), Some(true));
        }
        let disjoint = Hypergraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(is_critical(&disjoint, 0, budget).unwrap(), Some(false));
        assert!(is_critical(&disjoint, 2, budget).is_err());
    }

    #[test]
    fn extract_critical_examples() {
        let budget = OracleBudget::default();
        let fano = instances::fano();
        let core = extract_critical(&fano, budget);
        assert_eq!(core.hypergraph, fano);
        assert!(core.is_final);

        let disjoint = Hypergraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let core = extract_critical(&disjoint, budget);
        assert_eq!(core.hypergraph.edges(), &[vec![2, 3]]);
        assert_eq!(core.kept, vec![1]);
        assert_eq!(core.q, Chromatic::Exact(1));

        let single = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(extract_critical(&single, budget).hypergraph, single);
    }

    #[test]
    fn lemma_key_examples() {
        let budget = OracleBudget::default();
        let report = check_lemma_key(&instances::fano(), budget);
        assert!(report.all_critical() && report.lemma_ok && report.complete);
        assert!(report.entries.iter().all(|e| e.hyperedge_degree == 6));

        let triangle = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let report = check_lemma_key(&triangle, budget);
        assert_eq!(report.q, Chromatic::Exact(3));
        assert!(report.all_critical() && report.lemma_ok);
        assert!(report
            .entries
            .iter()
            .all(|e| e.q_without == Chromatic::Exact(2)));

        let path = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let report = check_lemma_key(&path, budget);
        assert!(report.all_critical() && report.lemma_ok);
        assert!(report.entries.iter().all(|e| e.hyperedge_degree == 1));
    }
}
