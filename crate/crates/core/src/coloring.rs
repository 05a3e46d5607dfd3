//! Constructive colorers.
//!
//! Hyperedge colorings are vertex colorings of the line graph, so most of
//! the work here happens on [`SimpleGraph`]. Colors are 1-based and every
//! returned coloring uses a contiguous range `1..=q_used`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rng::SeededRng;
use crate::transforms::{line_graph, SimpleGraph};

/// A color assignment indexed by position (hyperedge or graph vertex).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<usize>,
    q_used: usize,
}

/// Colors indexed by hyperedge position.
pub type EdgeColoring = Coloring;
/// Colors indexed by graph vertex.
pub type VertexColoring = Coloring;

impl Coloring {
    /// Relabels arbitrary positive colors onto `1..=q` preserving their order.
    pub fn from_raw(colors: Vec<usize>) -> Self {
        let mut used: Vec<usize> = colors.clone();
        used.sort_unstable();
        used.dedup();
        let relabel: HashMap<usize, usize> =
            used.iter().enumerate().map(|(i, &c)| (c, i + 1)).collect();
        let colors = colors.into_iter().map(|c| relabel[&c]).collect();
        Coloring {
            colors,
            q_used: used.len(),
        }
    }

    /// Accepts colors that already form the contiguous range `1..=q`.
    pub fn from_colors(colors: Vec<usize>) -> Result<Self> {
        if colors.contains(&0) {
            return Err(Error::Unsupported("color 0 is not a valid color".into()));
        }
        let q_used = colors.iter().copied().max().unwrap_or(0);
        let mut seen = vec![false; q_used + 1];
        for &c in &colors {
            seen[c] = true;
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::Unsupported(
                "colors do not form a contiguous range 1..=q".into(),
            ));
        }
        Ok(Coloring { colors, q_used })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, index: usize) -> usize {
        self.colors[index]
    }

    pub fn q_used(&self) -> usize {
        self.q_used
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// True iff adjacent vertices of `g` receive different colors.
    pub fn is_proper_on(&self, g: &SimpleGraph) -> bool {
        self.colors.len() == g.vertex_count()
            && g.edges()
                .into_iter()
                .all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

/// True iff no two intersecting hyperedge positions share a color.
pub fn is_proper(h: &Hypergraph, coloring: &EdgeColoring) -> Result<bool> {
    if coloring.len() != h.edge_count() {
        return Err(Error::PartialColoring {
            expected: h.edge_count(),
            got: coloring.len(),
        });
    }
    for incident in h.incidence() {
        let mut seen: Vec<usize> = incident.iter().map(|&i| coloring.color(i)).collect();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Processing order for [`greedy_color`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderStrategy {
    /// Input order.
    Index,
    /// Hyperedge degree descending, ties by index.
    #[default]
    DescDegree,
    /// Seeded shuffle.
    Random(u64),
}

impl fmt::Display for OrderStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderStrategy::Index => write!(f, "index"),
            OrderStrategy::DescDegree => write!(f, "desc-degree"),
            OrderStrategy::Random(seed) => write!(f, "random({seed})"),
        }
    }
}

impl FromStr for OrderStrategy {
    type Err = Error;

    /// Accepts `index`, `desc-degree`, `random` (seed 0) and `random(SEED)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "index" => Ok(OrderStrategy::Index),
            "desc-degree" => Ok(OrderStrategy::DescDegree),
            "random" => Ok(OrderStrategy::Random(0)),
            _ => s
                .strip_prefix("random(")
                .and_then(|rest| rest.strip_suffix(')'))
                .and_then(|seed| seed.trim().parse().ok())
                .map(OrderStrategy::Random)
                .ok_or_else(|| Error::Unsupported(format!("unknown order strategy '{s}'"))),
        }
    }
}

fn ordering(g: &SimpleGraph, strategy: OrderStrategy) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    match strategy {
        OrderStrategy::Index => {}
        OrderStrategy::DescDegree => order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v))),
        OrderStrategy::Random(seed) => SeededRng::new(seed).shuffle(&mut order),
    }
    order
}

/// First-fit coloring of `g` in the given vertex order.
pub fn greedy_vertex_color(g: &SimpleGraph, order: &[usize]) -> VertexColoring {
    let mut colors = vec![0usize; g.vertex_count()];
    let mut taken = FixedBitSet::with_capacity(g.max_degree() + 2);
    for &v in order {
        colors[v] = smallest_free(g, &colors, v, &mut taken);
    }
    Coloring::from_raw(colors)
}

fn smallest_free(g: &SimpleGraph, colors: &[usize], v: usize, taken: &mut FixedBitSet) -> usize {
    taken.clear();
    for &w in g.neighbors(v) {
        let c = colors[w];
        if c != 0 && c < taken.len() {
            taken.insert(c);
        }
    }
    (1..taken.len())
        .find(|&c| !taken.contains(c))
        .unwrap_or(taken.len())
}

/// Greedy hyperedge coloring: each hyperedge gets the smallest color not
/// used by an already colored hyperedge it meets.
pub fn greedy_color(h: &Hypergraph, strategy: OrderStrategy) -> EdgeColoring {
    let l = line_graph(h);
    greedy_vertex_color(&l, &ordering(&l, strategy))
}

/// DSATUR heuristic: repeatedly color the vertex seeing the most distinct
/// colors (ties: higher degree, then lower index).
pub fn dsatur_color(g: &SimpleGraph) -> VertexColoring {
    let n = g.vertex_count();
    let mut colors = vec![0usize; n];
    let mut seen: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n + 2); n];
    let mut saturation = vec![0usize; n];
    let mut taken = FixedBitSet::with_capacity(g.max_degree() + 2);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == 0)
            .max_by(|&a, &b| {
                (saturation[a], g.degree(a))
                    .cmp(&(saturation[b], g.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("an uncolored vertex remains");
        let c = smallest_free(g, &colors, v, &mut taken);
        colors[v] = c;
        for &w in g.neighbors(v) {
            if !seen[w].put(c) {
                saturation[w] += 1;
            }
        }
    }
    Coloring::from_raw(colors)
}

/// Brooks coloring: every connected component that is neither complete nor
/// an odd cycle receives at most `Δ(component)` colors; complete components
/// get one color per vertex and odd cycles get three.
pub fn brooks_color(g: &SimpleGraph) -> VertexColoring {
    let mut colors = vec![0usize; g.vertex_count()];
    for component in g.components() {
        let sub = g.induced(&component);
        for (local, &v) in brooks_connected(&sub).iter().zip(&component) {
            colors[v] = *local;
        }
    }
    Coloring::from_raw(colors)
}

/// Brooks coloring of the line graph, read back as a hyperedge coloring.
pub fn brooks_edge_color(h: &Hypergraph) -> EdgeColoring {
    brooks_color(&line_graph(h))
}

fn brooks_connected(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    if g.is_complete() {
        return (1..=n).collect();
    }
    let delta = g.max_degree();
    if let Some(root) = (0..n).find(|&v| g.degree(v) < delta) {
        return reverse_bfs_greedy(g, root, &[]);
    }
    // Regular and not complete from here on.
    if delta == 2 {
        return color_cycle(g);
    }
    if let Some(cut) = find_cut_vertex(g) {
        return color_through_cut(g, cut);
    }
    let (u, v, w) = find_brooks_triple(g)
        .expect("a 2-connected regular non-complete graph with Δ ≥ 3 has a Brooks triple");
    reverse_bfs_greedy(g, v, &[(u, 1), (w, 1)])
}

/// Colors vertices farthest-first along a BFS tree rooted at `root`, so every
/// vertex except the root still has its uncolored parent when it is colored.
fn reverse_bfs_greedy(g: &SimpleGraph, root: usize, precolored: &[(usize, usize)]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colors = vec![0usize; n];
    let mut visited = FixedBitSet::with_capacity(n);
    for &(v, c) in precolored {
        colors[v] = c;
        visited.insert(v);
    }
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([root]);
    visited.insert(root);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited.put(w) {
                queue.push_back(w);
            }
        }
    }
    let mut taken = FixedBitSet::with_capacity(g.max_degree() + 2);
    for &v in order.iter().rev() {
        colors[v] = smallest_free(g, &colors, v, &mut taken);
    }
    colors
}

fn color_cycle(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colors = vec![0usize; n];
    let (mut prev, mut cur) = (usize::MAX, 0);
    for step in 0..n {
        colors[cur] = if step % 2 == 0 { 1 } else { 2 };
        let next = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| w != prev)
            .expect("cycle vertex has two neighbors");
        prev = cur;
        cur = next;
    }
    if n % 2 == 1 {
        // The walk ends next to vertex 0, which also carries color 1.
        colors[prev] = 3;
    }
    colors
}

fn find_cut_vertex(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    (0..n).find(|&v| {
        let mut removed = FixedBitSet::with_capacity(n);
        removed.insert(v);
        g.components_avoiding(&removed).len() > 1
    })
}

/// Colors a connected regular graph with cut vertex `cut` using at most Δ
/// colors: each piece `C ∪ {cut}` sees `cut` with degree below Δ, so a
/// reverse-BFS greedy from `cut` stays within Δ; pieces are then aligned by
/// permuting colors so `cut` agrees.
fn color_through_cut(g: &SimpleGraph, cut: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut removed = FixedBitSet::with_capacity(n);
    removed.insert(cut);
    let mut colors = vec![0usize; n];
    colors[cut] = 1;
    for mut piece in g.components_avoiding(&removed) {
        piece.push(cut);
        piece.sort_unstable();
        let sub = g.induced(&piece);
        let local_cut = piece.binary_search(&cut).expect("cut vertex in piece");
        let local = reverse_bfs_greedy(&sub, local_cut, &[]);
        let cut_color = local[local_cut];
        for (&v, &c) in piece.iter().zip(&local) {
            if v == cut {
                continue;
            }
            colors[v] = if c == cut_color {
                1
            } else if c == 1 {
                cut_color
            } else {
                c
            };
        }
    }
    colors
}

/// Finds `v` with non-adjacent neighbors `u`, `w` such that removing `u` and
/// `w` leaves the graph connected.
fn find_brooks_triple(g: &SimpleGraph) -> Option<(usize, usize, usize)> {
    let n = g.vertex_count();
    for v in 0..n {
        let nbrs = g.neighbors(v);
        for (a, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[a + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                let mut removed = FixedBitSet::with_capacity(n);
                removed.insert(u);
                removed.insert(w);
                if g.components_avoiding(&removed).len() == 1 {
                    return Some((u, v, w));
                }
            }
        }
    }
    None
}

/// Misra–Gries edge coloring with at most `Δ(g) + 1` colors. The result is
/// indexed like [`SimpleGraph::edges`].
pub fn vizing_edge_color(g: &SimpleGraph) -> EdgeColoring {
    let edges = g.edges();
    let raw = misra_gries(g.vertex_count(), g.max_degree(), &edges);
    Coloring::from_raw(raw)
}

/// [`vizing_edge_color`] for a 2-uniform linear hypergraph (a simple graph
/// given as hyperedges); the result is indexed by hyperedge position.
pub fn vizing_hyperedge_color(h: &Hypergraph) -> Result<EdgeColoring> {
    if h.edges().iter().any(|e| e.len() != 2) {
        return Err(Error::Unsupported(
            "Vizing coloring needs every hyperedge to have exactly two vertices".into(),
        ));
    }
    if !h.is_linear() {
        return Err(Error::Unsupported(
            "Vizing coloring needs a simple graph (no repeated pairs)".into(),
        ));
    }
    let edges: Vec<(usize, usize)> = h.edges().iter().map(|e| (e[0], e[1])).collect();
    let max_degree = h.vertex_degrees().into_iter().max().unwrap_or(0);
    Ok(Coloring::from_raw(misra_gries(
        h.vertex_count(),
        max_degree,
        &edges,
    )))
}

struct EdgePalette {
    /// `at[x][c]` is the other endpoint of the edge at `x` colored `c`.
    at: Vec<Vec<Option<usize>>>,
    color: HashMap<(usize, usize), usize>,
}

impl EdgePalette {
    fn key(u: usize, v: usize) -> (usize, usize) {
        (u.min(v), u.max(v))
    }

    fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.color.get(&Self::key(u, v)).copied()
    }

    fn set(&mut self, u: usize, v: usize, c: usize) {
        debug_assert!(self.at[u][c].is_none() && self.at[v][c].is_none());
        self.at[u][c] = Some(v);
        self.at[v][c] = Some(u);
        self.color.insert(Self::key(u, v), c);
    }

    fn unset(&mut self, u: usize, v: usize) {
        if let Some(c) = self.color.remove(&Self::key(u, v)) {
            self.at[u][c] = None;
            self.at[v][c] = None;
        }
    }

    fn is_free(&self, x: usize, c: usize) -> bool {
        self.at[x][c].is_none()
    }

    fn free(&self, x: usize) -> usize {
        self.at[x]
            .iter()
            .position(Option::is_none)
            .expect("Δ + 1 colors leave one free at every vertex")
    }

    fn invert_path(&mut self, start: usize, first: usize, second: usize) {
        let mut path = Vec::new();
        let (mut x, mut want, mut other) = (start, first, second);
        while let Some(y) = self.at[x][want] {
            path.push((x, y, want));
            x = y;
            std::mem::swap(&mut want, &mut other);
        }
        for &(x, y, _) in &path {
            self.unset(x, y);
        }
        for &(x, y, c) in &path {
            let swapped = if c == first { second } else { first };
            self.set(x, y, swapped);
        }
    }
}

fn misra_gries(vertex_count: usize, max_degree: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let palette_size = max_degree + 1;
    let mut p = EdgePalette {
        at: vec![vec![None; palette_size]; vertex_count],
        color: HashMap::with_capacity(edges.len()),
    };
    for &(u, v) in edges {
        // Maximal fan of u starting at v.
        let mut fan = vec![v];
        let mut in_fan = FixedBitSet::with_capacity(vertex_count);
        in_fan.insert(v);
        loop {
            let last = *fan.last().expect("fan is non-empty");
            let next = (0..palette_size).find_map(|c| {
                if !p.is_free(last, c) {
                    return None;
                }
                p.at[u][c].filter(|&w| !in_fan.contains(w))
            });
            match next {
                Some(w) => {
                    in_fan.insert(w);
                    fan.push(w);
                }
                None => break,
            }
        }
        let c = p.free(u);
        let d = p.free(*fan.last().expect("fan is non-empty"));
        if c != d {
            p.invert_path(u, d, c);
        }
        // First fan vertex with d free such that the prefix is still a fan.
        let mut end = None;
        for i in 0..fan.len() {
            if i > 0 {
                match p.get(u, fan[i]) {
                    Some(col) if p.is_free(fan[i - 1], col) => {}
                    _ => break,
                }
            }
            if p.is_free(fan[i], d) {
                end = Some(i);
                break;
            }
        }
        let end = end.expect("Misra–Gries rotation point exists");
        let shifted: Vec<usize> = (0..end)
            .map(|i| p.get(u, fan[i + 1]).expect("fan edge is colored"))
            .collect();
        for &f in &fan[1..=end] {
            p.unset(u, f);
        }
        for (i, &col) in shifted.iter().enumerate() {
            p.set(u, fan[i], col);
        }
        p.set(u, fan[end], d);
    }
    edges
        .iter()
        .map(|&(u, v)| p.get(u, v).expect("every edge colored") + 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    fn triangle() -> Hypergraph {
        Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    fn cycle_graph(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    fn complete_graph(n: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn is_proper_examples() {
        let fano = instances::fano();
        let distinct = Coloring::from_colors((1..=7).collect()).unwrap();
        assert!(is_proper(&fano, &distinct).unwrap());

        let bad = Coloring::from_colors(vec![1, 1, 2]).unwrap();
        assert!(!is_proper(&triangle(), &bad).unwrap());

        let short = Coloring::from_colors(vec![1, 2]).unwrap();
        assert!(matches!(
            is_proper(&triangle(), &short),
            Err(Error::PartialColoring { .. })
        ));
    }

    #[test]
    fn parallel_classes_color_the_affine_plane() {
        // Lines with equal slope (and the verticals) are pairwise disjoint.
        let ag = instances::affine_plane(3).unwrap();
        let colors: Vec<usize> = (0..12).map(|i| i / 3 + 1).collect();
        let c = Coloring::from_colors(colors).unwrap();
        assert!(is_proper(&ag, &c).unwrap());
        assert_eq!(c.q_used(), 4);
    }

    #[test]
    fn from_colors_requires_contiguous_range() {
        assert!(Coloring::from_colors(vec![1, 3]).is_err());
        assert!(Coloring::from_colors(vec![0, 1]).is_err());
        let c = Coloring::from_raw(vec![7, 3, 7]);
        assert_eq!(c.colors(), &[2, 1, 2]);
        assert_eq!(c.q_used(), 2);
    }

    #[test]
    fn greedy_examples() {
        let c = greedy_color(&triangle(), OrderStrategy::Index);
        assert_eq!(c.q_used(), 3);
        let disjoint = Hypergraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        for order in [
            OrderStrategy::Index,
            OrderStrategy::DescDegree,
            OrderStrategy::Random(9),
        ] {
            assert_eq!(greedy_color(&disjoint, order).q_used(), 1);
            let c = greedy_color(&instances::fano(), order);
            assert_eq!(c.q_used(), 7);
            assert!(is_proper(&instances::fano(), &c).unwrap());
        }
    }

    #[test]
    fn order_strategy_parsing() {
        assert_eq!(
            "index".parse::<OrderStrategy>().unwrap(),
            OrderStrategy::Index
        );
        assert_eq!(
            "desc-degree".parse::<OrderStrategy>().unwrap(),
            OrderStrategy::DescDegree
        );
        assert_eq!(
            "random(42)".parse::<OrderStrategy>().unwrap(),
            OrderStrategy::Random(42)
        );
        assert!("smallest-last".parse::<OrderStrategy>().is_err());
        assert_eq!(OrderStrategy::Random(5).to_string(), "random(5)");
    }

    #[test]
    fn brooks_exceptions() {
        let k7 = complete_graph(7);
        let c = brooks_color(&k7);
        assert_eq!(c.q_used(), 7);
        assert!(c.is_proper_on(&k7));

        let c5 = cycle_graph(5);
        let c = brooks_color(&c5);
        assert_eq!(c.q_used(), 3);
        assert!(c.is_proper_on(&c5));

        let c6 = cycle_graph(6);
        assert_eq!(brooks_color(&c6).q_used(), 2);
    }

    #[test]
    fn brooks_on_affine_line_graph() {
        let ag = instances::affine_plane(3).unwrap();
        let c = brooks_edge_color(&ag);
        assert!(c.q_used() <= 9);
        assert!(is_proper(&ag, &c).unwrap());
    }

    #[test]
    fn brooks_single_hyperedge_and_fano() {
        let single = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(brooks_edge_color(&single).q_used(), 1);
        assert_eq!(brooks_edge_color(&instances::fano()).q_used(), 7);
    }

    #[test]
    fn brooks_regular_with_cut_vertex() {
        let ring = regular_with_cut();
        assert!(ring.degrees().iter().all(|&d| d == 4));
        assert!(find_cut_vertex(&ring).is_some());
        let c = brooks_color(&ring);
        assert!(c.is_proper_on(&ring));
        assert!(c.q_used() <= 4);
    }

    /// 4-regular graph with a cut vertex: vertex 0 is joined to two vertices
    /// in each of two copies of K5 minus an edge.
    fn regular_with_cut() -> SimpleGraph {
        let mut edges = Vec::new();
        for block in 0..2 {
            let base = 1 + block * 5;
            for a in 0..5 {
                for b in a + 1..5 {
                    if (a, b) != (0, 1) {
                        edges.push((base + a, base + b));
                    }
                }
            }
            edges.push((0, base));
            edges.push((0, base + 1));
        }
        SimpleGraph::from_edges(11, &edges).unwrap()
    }

    #[test]
    fn brooks_on_petersen() {
        let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<_> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let edges: Vec<_> = outer.into_iter().chain(spokes).chain(inner).collect();
        let g = SimpleGraph::from_edges(10, &edges).unwrap();
        let c = brooks_color(&g);
        assert!(c.is_proper_on(&g));
        assert!(c.q_used() <= 3);
    }

    #[test]
    fn vizing_examples() {
        let k4 = complete_graph(4);
        let c = vizing_edge_color(&k4);
        assert!(c.q_used() <= 4);
        let as_h = Hypergraph::new(4, k4.edges().iter().map(|&(u, v)| vec![u, v])).unwrap();
        assert!(is_proper(&as_h, &c).unwrap());

        let c5 = cycle_graph(5);
        assert_eq!(vizing_edge_color(&c5).q_used(), 3);

        let matching = SimpleGraph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(vizing_edge_color(&matching).q_used(), 1);
    }

    #[test]
    fn vizing_rejects_higher_rank() {
        assert!(matches!(
            vizing_hyperedge_color(&instances::fano()),
            Err(Error::Unsupported(_))
        ));
        let dup = Hypergraph::new(2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert!(vizing_hyperedge_color(&dup).is_err());
        let c = vizing_hyperedge_color(&triangle()).unwrap();
        assert_eq!(c.q_used(), 3);
        assert!(is_proper(&triangle(), &c).unwrap());
    }

    #[test]
    fn dsatur_is_proper() {
        let g = regular_with_cut();
        let c = dsatur_color(&g);
        assert!(c.is_proper_on(&g));
        assert_eq!(dsatur_color(&cycle_graph(6)).q_used(), 2);
    }
}
