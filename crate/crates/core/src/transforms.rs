//! Graphs derived from a hypergraph: the 2-section multigraph and the line
//! (intersection) graph.

use std::collections::{BTreeMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};

/// Loopless multigraph stored as a pair -> multiplicity map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    multiplicity: BTreeMap<(VertexId, VertexId), usize>,
}

impl Multigraph {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Multiplicity of the unordered pair `{x, y}`; zero when absent.
    pub fn multiplicity(&self, x: VertexId, y: VertexId) -> usize {
        let key = if x < y { (x, y) } else { (y, x) };
        self.multiplicity.get(&key).copied().unwrap_or(0)
    }

    /// Distinct pairs `(x, y)` with `x < y`, with their multiplicities.
    pub fn pairs(&self) -> impl Iterator<Item = ((VertexId, VertexId), usize)> + '_ {
        self.multiplicity.iter().map(|(&k, &v)| (k, v))
    }

    pub fn edge_count(&self) -> usize {
        self.multiplicity.values().sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut degrees = vec![0; self.vertex_count];
        for (&(x, y), &mult) in &self.multiplicity {
            degrees[x] += mult;
            degrees[y] += mult;
        }
        degrees
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }
}

/// Simple undirected graph with adjacency lists and bitset rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<usize>>,
    rows: Vec<FixedBitSet>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraph {
            adjacency: vec![Vec::new(); vertex_count],
            rows: vec![FixedBitSet::with_capacity(vertex_count); vertex_count],
        }
    }

    /// Builds a graph from an edge list. Parallel edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::new(vertex_count);
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    vertex_count,
                });
            }
            if u == v {
                return Err(Error::Unsupported(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        g.finish();
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        if !self.rows[u].put(v) {
            self.rows[v].insert(u);
            self.adjacency[u].push(v);
            self.adjacency[v].push(u);
        }
    }

    fn finish(&mut self) {
        for list in &mut self.adjacency {
            list.sort_unstable();
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Neighborhood of `v` as a bitset row.
    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adjacency.iter().all(|l| l.len() + 1 == n)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&FixedBitSet::with_capacity(self.vertex_count()))
    }

    /// Components of the graph with the vertices in `removed` deleted.
    pub fn components_avoiding(&self, removed: &FixedBitSet) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = removed.clone();
        seen.grow(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.put(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if !seen.put(w) {
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut position = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let mut g = SimpleGraph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adjacency[v] {
                let j = position[w];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j);
                }
            }
        }
        g.finish();
        g
    }
}

/// The 2-section `[H]_2`: one parallel edge per hyperedge containing a pair.
pub fn two_section(h: &Hypergraph) -> Multigraph {
    let mut multiplicity = BTreeMap::new();
    for edge in h.edges() {
        for (a, &x) in edge.iter().enumerate() {
            for &y in &edge[a + 1..] {
                *multiplicity.entry((x, y)).or_insert(0) += 1;
            }
        }
    }
    Multigraph {
        vertex_count: h.vertex_count(),
        multiplicity,
    }
}

/// Maximum degree of the 2-section, via `deg(x) = sum over b containing x of (|b| - 1)`.
pub fn max_degree_two_section(h: &Hypergraph) -> usize {
    let mut degree = vec![0usize; h.vertex_count()];
    for edge in h.edges() {
        for &x in edge {
            degree[x] += edge.len() - 1;
        }
    }
    degree.into_iter().max().unwrap_or(0)
}

/// Intersection graph of the hyperedges: vertex `i` is hyperedge position
/// `i`, and `i ~ j` iff the two hyperedges meet. For linear hypergraphs this
/// is the usual line graph.
pub fn line_graph(h: &Hypergraph) -> SimpleGraph {
    let mut g = SimpleGraph::new(h.edge_count());
    for incident in h.incidence() {
        for (a, &i) in incident.iter().enumerate() {
            for &j in &incident[a + 1..] {
                g.add_edge(i, j);
            }
        }
    }
    g.finish();
    g
}
