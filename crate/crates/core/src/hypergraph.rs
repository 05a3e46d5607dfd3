//! Finite hypergraphs with a multiset of hyperedges.
//!
//! A [`Hypergraph`] stores its vertex count and an ordered list of
//! hyperedges. Each hyperedge is kept as a strictly increasing list of
//! vertex ids, so intersections reduce to a linear merge. Hyperedges are
//! addressed by position: repeated hyperedges are legal and count as
//! distinct members everywhere (degrees, colorings, criticality).

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::transforms;

pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<Vec<VertexId>>,
}

/// Scalar invariants of a hypergraph.
///
/// `rank` and `antirank` are absent when there are no hyperedges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphStats {
    pub n: usize,
    pub m: usize,
    pub rank: Option<usize>,
    pub antirank: Option<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub loopless: bool,
    pub linear: bool,
    pub uniform_k: Option<usize>,
    pub regular_d: Option<usize>,
    pub connected: bool,
    pub delta2: usize,
}

/// One connected component: its vertices and the positions of its hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<usize>,
}

impl Hypergraph {
    /// Builds a hypergraph, normalizing every hyperedge to sorted order.
    ///
    /// Rejects empty hyperedges, repeated vertices inside one hyperedge and
    /// vertex ids outside `0..vertex_count`.
    pub fn new<E, I>(vertex_count: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = VertexId>,
    {
        let mut normalized = Vec::new();
        for (index, edge) in edges.into_iter().enumerate() {
            let mut edge: Vec<VertexId> = edge.into_iter().collect();
            if edge.is_empty() {
                return Err(Error::EmptyHyperedge { index });
            }
            edge.sort_unstable();
            for pair in edge.windows(2) {
                if pair[0] == pair[1] {
                    return Err(Error::RepeatedVertex {
                        index,
                        vertex: pair[0],
                    });
                }
            }
            if let Some(&last) = edge.last() {
                if last >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: last,
                        vertex_count,
                    });
                }
            }
            normalized.push(edge);
        }
        Ok(Hypergraph {
            vertex_count,
            edges: normalized,
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Hypergraph {
            vertex_count,
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<VertexId>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<&[VertexId]> {
        self.edges
            .get(index)
            .map(Vec::as_slice)
            .ok_or(Error::EdgeIndexOutOfRange {
                index,
                edge_count: self.edges.len(),
            })
    }

    fn check_vertex(&self, x: VertexId) -> Result<()> {
        if x < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: x,
                vertex_count: self.vertex_count,
            })
        }
    }

    /// Number of hyperedges (with multiplicity) containing `x`.
    pub fn vertex_degree(&self, x: VertexId) -> Result<usize> {
        self.check_vertex(x)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| e.binary_search(&x).is_ok())
            .count())
    }

    /// Degree of every vertex, indexed by vertex id.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut degrees = vec![0; self.vertex_count];
        for edge in &self.edges {
            for &x in edge {
                degrees[x] += 1;
            }
        }
        degrees
    }

    /// Number of other hyperedge positions meeting hyperedge `index`.
    pub fn hyperedge_degree(&self, index: usize) -> Result<usize> {
        let edge = self.edge(index)?;
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|&(j, other)| j != index && intersects(edge, other))
            .count())
    }

    /// Hyperedge degree of every position.
    pub fn hyperedge_degrees(&self) -> Vec<usize> {
        transforms::line_graph(self).degrees()
    }

    /// Positions of the hyperedges containing each vertex.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut incident = vec![Vec::new(); self.vertex_count];
        for (i, edge) in self.edges.iter().enumerate() {
            for &x in edge {
                incident[x].push(i);
            }
        }
        incident
    }

    pub fn rank(&self) -> Option<usize> {
        self.edges.iter().map(Vec::len).max()
    }

    pub fn antirank(&self) -> Option<usize> {
        self.edges.iter().map(Vec::len).min()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|e| e.len() == 1)
    }

    pub fn is_loopless(&self) -> bool {
        !self.has_loops()
    }

    /// True iff any two distinct hyperedge positions share at most one vertex.
    pub fn is_linear(&self) -> bool {
        // Two positions sharing two vertices means some pair is covered twice.
        let mut covered: HashSet<(VertexId, VertexId)> = HashSet::new();
        for edge in &self.edges {
            for (a, &x) in edge.iter().enumerate() {
                for &y in &edge[a + 1..] {
                    if !covered.insert((x, y)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn uniformity(&self) -> Option<usize> {
        match (self.antirank(), self.rank()) {
            (Some(lo), Some(hi)) if lo == hi => Some(lo),
            _ => None,
        }
    }

    pub fn regularity(&self) -> Option<usize> {
        let degrees = self.vertex_degrees();
        let max = degrees.iter().copied().max().unwrap_or(0);
        let min = degrees.iter().copied().min().unwrap_or(0);
        (max == min).then_some(max)
    }

    /// Components under the closure of "lie in a common hyperedge".
    ///
    /// Components are listed by smallest vertex; isolated vertices appear as
    /// singleton components without hyperedges.
    pub fn connected_components(&self) -> Vec<Component> {
        let mut dsu = DisjointSets::new(self.vertex_count);
        for edge in &self.edges {
            for pair in edge.windows(2) {
                dsu.union(pair[0], pair[1]);
            }
        }
        let mut slot: HashMap<usize, usize> = HashMap::new();
        let mut components: Vec<Component> = Vec::new();
        for x in 0..self.vertex_count {
            let root = dsu.find(x);
            let idx = *slot.entry(root).or_insert_with(|| {
                components.push(Component {
                    vertices: Vec::new(),
                    edges: Vec::new(),
                });
                components.len() - 1
            });
            components[idx].vertices.push(x);
        }
        for (i, edge) in self.edges.iter().enumerate() {
            let root = dsu.find(edge[0]);
            components[slot[&root]].edges.push(i);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// H with the hyperedge at `index` deleted; other positions keep their order.
    pub fn remove_hyperedge(&self, index: usize) -> Result<Hypergraph> {
        self.edge(index)?;
        let mut edges = self.edges.clone();
        edges.remove(index);
        Ok(Hypergraph {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    /// Partial hypergraph keeping only the listed positions, in the given order.
    pub fn restrict_edges(&self, positions: &[usize]) -> Result<Hypergraph> {
        let edges = positions
            .iter()
            .map(|&i| self.edge(i).map(<[VertexId]>::to_vec))
            .collect::<Result<Vec<_>>>()?;
        Ok(Hypergraph {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    pub fn stats(&self) -> HypergraphStats {
        let degrees = self.vertex_degrees();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let rank = self.rank();
        let antirank = self.antirank();
        HypergraphStats {
            n: self.vertex_count,
            m: self.edges.len(),
            rank,
            antirank,
            max_degree,
            min_degree,
            loopless: self.is_loopless(),
            linear: self.is_linear(),
            uniform_k: self.uniformity(),
            regular_d: (max_degree == min_degree).then_some(max_degree),
            connected: self.is_connected(),
            delta2: transforms::max_degree_two_section(self),
        }
    }
}

/// Sorted-merge intersection test.
pub(crate) fn intersects(a: &[VertexId], b: &[VertexId]) -> bool {
    intersection_size(a, b) > 0
}

pub(crate) fn intersection_size(a: &[VertexId], b: &[VertexId]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    fn triangle() -> Hypergraph {
        Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn construction_normalizes_and_rejects_bad_edges() {
        let h = Hypergraph::new(4, vec![vec![3, 0, 2]]).unwrap();
        assert_eq!(h.edges()[0], vec![0, 2, 3]);
        assert_eq!(
            Hypergraph::new(3, vec![Vec::<usize>::new()]),
            Err(Error::EmptyHyperedge { index: 0 })
        );
        assert_eq!(
            Hypergraph::new(3, vec![vec![1, 1, 2]]),
            Err(Error::RepeatedVertex {
                index: 0,
                vertex: 1
            })
        );
        assert!(matches!(
            Hypergraph::new(3, vec![vec![0, 3]]),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn vertex_degree_examples() {
        let fano = instances::fano();
        for x in 0..7 {
            assert_eq!(fano.vertex_degree(x).unwrap(), 3);
        }
        assert_eq!(Hypergraph::empty(1).vertex_degree(0).unwrap(), 0);
        let dup = Hypergraph::new(3, vec![vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
        assert_eq!(dup.vertex_degree(0).unwrap(), 2);
        assert!(dup.vertex_degree(3).is_err());
    }

    #[test]
    fn hyperedge_degree_examples() {
        let fano = instances::fano();
        for i in 0..7 {
            assert_eq!(fano.hyperedge_degree(i).unwrap(), 6);
        }
        let ag3 = instances::affine_plane(3).unwrap();
        for i in 0..ag3.edge_count() {
            assert_eq!(ag3.hyperedge_degree(i).unwrap(), 9);
        }
        let single = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(single.hyperedge_degree(0).unwrap(), 0);
        assert!(single.hyperedge_degree(1).is_err());
        let dup = Hypergraph::new(3, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(dup.hyperedge_degree(0).unwrap(), 1);
    }

    #[test]
    fn stats_of_triangle() {
        let s = triangle().stats();
        assert_eq!((s.n, s.m), (3, 3));
        assert_eq!((s.rank, s.antirank), (Some(2), Some(2)));
        assert_eq!((s.max_degree, s.min_degree), (2, 2));
        assert!(s.linear && s.loopless && s.connected);
        assert_eq!(s.uniform_k, Some(2));
        assert_eq!(s.regular_d, Some(2));
        assert_eq!(s.delta2, 2);
    }

    #[test]
    fn stats_of_designs() {
        let s = instances::fano().stats();
        assert_eq!((s.n, s.m, s.rank, s.antirank), (7, 7, Some(3), Some(3)));
        assert_eq!((s.max_degree, s.min_degree, s.delta2), (3, 3, 6));
        assert!(s.linear);

        let s = instances::affine_plane(3).unwrap().stats();
        assert_eq!((s.n, s.m), (9, 12));
        assert_eq!(s.uniform_k, Some(3));
        assert_eq!(s.regular_d, Some(4));
        assert_eq!(s.delta2, 8);
    }

    #[test]
    fn stats_of_edgeless() {
        let s = Hypergraph::empty(2).stats();
        assert_eq!((s.rank, s.antirank, s.uniform_k), (None, None, None));
        assert!(s.loopless);
        assert_eq!(s.delta2, 0);
        assert!(!s.connected);
    }

    #[test]
    fn linearity_examples() {
        assert!(instances::fano().is_linear());
        assert!(!Hypergraph::new(4, vec![vec![0, 1, 2], vec![0, 1, 3]])
            .unwrap()
            .is_linear());
        assert!(!Hypergraph::new(2, vec![vec![0, 1], vec![0, 1]])
            .unwrap()
            .is_linear());
    }

    #[test]
    fn component_examples() {
        assert_eq!(instances::fano().connected_components().len(), 1);
        let two = Hypergraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let comps = two.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[1].vertices, vec![2, 3]);
        assert_eq!(comps[1].edges, vec![1]);
        let isolated = Hypergraph::empty(3).connected_components();
        assert_eq!(isolated.len(), 3);
        assert!(isolated.iter().all(|c| c.edges.is_empty()));
    }

    #[test]
    fn remove_hyperedge_examples() {
        let path = triangle().remove_hyperedge(0).unwrap();
        assert_eq!(path.edges(), &[vec![1, 2], vec![0, 2]]);
        assert_eq!(path.vertex_count(), 3);
        let single = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(single.remove_hyperedge(0).unwrap().edge_count(), 0);
        assert!(single.remove_hyperedge(1).is_err());
    }

    #[test]
    fn intersection_merge() {
        assert_eq!(intersection_size(&[0, 2, 4, 6], &[1, 2, 3, 6]), 2);
        assert!(!intersects(&[0, 1], &[2, 3]));
    }
}
