//! Simple undirected graphs with sorted adjacency lists.
//!
//! [`Graph`] is the abstract base used by covers, the solver and the
//! structural predicates. Plane embeddings live in [`crate::plane`].

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

/// Vertex identifier, `0..vertex_count`.
pub type Vertex = usize;

/// Undirected edge stored with `.0 < .1`.
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} is out of range")]
    InvalidVertex(Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    DuplicateNeighbor { vertex: Vertex, neighbor: Vertex },
    #[error("non-symmetric adjacency: {from} lists {to} but {to} does not list {from}")]
    NonSymmetricAdjacency { from: Vertex, to: Vertex },
    #[error("expected {expected} rotations, found {found}")]
    RotationCountMismatch { expected: usize, found: usize },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("non-planar embedding: component containing vertex {root} has V - E + F = {euler}")]
    NonPlanarEmbedding { root: Vertex, euler: i64 },
    #[error("face boundaries do not determine a rotation at vertex {0}")]
    AmbiguousRotation(Vertex),
    #[error("cycle length bound {0} exceeds the supported maximum of 12")]
    MaxLenTooLarge(usize),
    #[error("graph is disconnected")]
    DisconnectedInput,
}

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edges: Vec<Edge>,
    edge_ids: HashMap<Edge, usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges are an error, as are loops.
    pub fn from_edges(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count {
                return Err(GraphError::InvalidVertex(u));
            }
            if v >= vertex_count {
                return Err(GraphError::InvalidVertex(v));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adjacency[u].contains(&v) {
                return Err(GraphError::DuplicateNeighbor {
                    vertex: u,
                    neighbor: v,
                });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self::from_adjacency_unchecked(adjacency))
    }

    /// Adjacency lists must already be symmetric, loop-free and duplicate-free.
    pub(crate) fn from_adjacency_unchecked(mut adjacency: Vec<Vec<Vertex>>) -> Self {
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let mut edges = Vec::new();
        for (u, list) in adjacency.iter().enumerate() {
            for &v in list {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        let edge_ids = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Graph {
            adjacency,
            edges,
            edge_ids,
        }
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::from_adjacency_unchecked(vec![Vec::new(); vertex_count])
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    /// Edges in ascending lexicographic order, each with `u < v`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Index of `uv` into [`Graph::edges`], in either orientation.
    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edge_ids.get(&normalize(u, v)).copied()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex(v))
        }
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued vertices have a distance");
            for &w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Length of a shortest `u`-`v` path, `None` when they lie in different components.
    pub fn shortest_distance(&self, u: Vertex, v: Vertex) -> Result<Option<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)[v])
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for root in self.vertices() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.components().len() == 1
    }

    /// `E - V + c`, the number of independent cycles.
    pub fn cyclomatic_number(&self) -> usize {
        self.edge_count() + self.components().len() - self.vertex_count()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).max()
    }

    /// Subgraph induced by `keep`, relabelled in the order given. Returns the
    /// subgraph and the map from new ids to old ids.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let adjacency = keep
            .iter()
            .map(|&v| {
                self.neighbors(v)
                    .iter()
                    .filter(|&&w| new_id[w] != usize::MAX)
                    .map(|&w| new_id[w])
                    .collect()
            })
            .collect();
        (Graph::from_adjacency_unchecked(adjacency), keep.to_vec())
    }

    /// The graph with `v` deleted; remaining vertices keep their relative order.
    pub fn remove_vertex(&self, v: Vertex) -> Graph {
        let keep: Vec<Vertex> = self.vertices().filter(|&w| w != v).collect();
        self.induced_subgraph(&keep).0
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in self.vertices() {
            let mut dist = vec![usize::MAX; self.vertex_count()];
            let mut parent = vec![usize::MAX; self.vertex_count()];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

pub(crate) fn normalize(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(
            Graph::from_edges(2, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateNeighbor {
                vertex: 1,
                neighbor: 0
            })
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::InvalidVertex(2))
        );
    }

    #[test]
    fn distances_on_a_path() {
        let g = path(3);
        assert_eq!(g.shortest_distance(0, 2), Ok(Some(2)));
        assert_eq!(g.shortest_distance(1, 1), Ok(Some(0)));
        assert_eq!(g.shortest_distance(0, 7), Err(GraphError::InvalidVertex(7)));
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(split.shortest_distance(0, 3), Ok(None));
    }

    #[test]
    fn girth_and_cyclomatic() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.girth(), Some(5));
        assert_eq!(c5.cyclomatic_number(), 1);
        assert_eq!(path(4).girth(), None);
        assert_eq!(path(4).cyclomatic_number(), 0);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let g = c4.remove_vertex(0);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }
}
