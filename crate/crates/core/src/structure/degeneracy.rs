use std::collections::BTreeSet;

use crate::graph::{Graph, GraphError, Vertex};

/// Result of min-degree peeling.
///
/// `peel_order` lists vertices in removal order, so each vertex has at most
/// `degeneracy` neighbours after it. Its reverse is a colouring order in
/// which each vertex has at most `degeneracy` earlier neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyCertificate {
    pub degeneracy: usize,
    pub peel_order: Vec<Vertex>,
}

impl DegeneracyCertificate {
    pub fn coloring_order(&self) -> Vec<Vertex> {
        self.peel_order.iter().rev().copied().collect()
    }

    /// Checks that the peel order is a permutation of `g`'s vertices and that
    /// no vertex has more than `degeneracy` later neighbours.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        if self.peel_order.len() != n {
            return false;
        }
        let mut position = vec![usize::MAX; n];
        for (i, &v) in self.peel_order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return false;
            }
            position[v] = i;
        }
        self.peel_order.iter().all(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| position[w] > position[v])
                .count()
                <= self.degeneracy
        })
    }
}

/// Repeatedly removes a vertex of minimum remaining degree, smallest id first.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyCertificate {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, Vertex)> = g.vertices().map(|v| (degree[v], v)).collect();
    let mut removed = vec![false; n];
    let mut peel_order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    while let Some((d, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(d);
        removed[v] = true;
        peel_order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    }
    DegeneracyCertificate {
        degeneracy,
        peel_order,
    }
}

pub fn min_degree(g: &Graph) -> Result<usize, GraphError> {
    g.min_degree().ok_or(GraphError::EmptyGraph)
}
