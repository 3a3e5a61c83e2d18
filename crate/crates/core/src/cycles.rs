//! Short cycle enumeration with a canonical form per cycle.

use std::fmt;

use crate::graph::{normalize, Edge, Graph, GraphError, Vertex};

/// Largest cycle length [`enumerate_cycles`] accepts.
pub const MAX_CYCLE_LEN: usize = 12;

/// A cycle in canonical form: starts at its smallest vertex and runs in the
/// direction whose second vertex is smaller.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle(Vec<Vertex>);

impl Cycle {
    /// Canonicalizes `vertices`. Returns `None` unless they form a cycle of
    /// length at least 3 in `g`.
    pub fn new(g: &Graph, vertices: &[Vertex]) -> Option<Cycle> {
        let n = vertices.len();
        if n < 3 || vertices.iter().any(|&v| v >= g.vertex_count()) {
            return None;
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        if (0..n).any(|i| !g.has_edge(vertices[i], vertices[(i + 1) % n])) {
            return None;
        }
        Some(Cycle::canonical(vertices))
    }

    pub(crate) fn canonical(vertices: &[Vertex]) -> Cycle {
        let n = vertices.len();
        let (start, _) = vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| *v)
            .expect("non-empty");
        let forward: Vec<Vertex> = (0..n).map(|i| vertices[(start + i) % n]).collect();
        let backward: Vec<Vertex> = (0..n).map(|i| vertices[(start + n - i) % n]).collect();
        Cycle(if forward[1] <= backward[1] {
            forward
        } else {
            backward
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| normalize(self.0[i], self.0[(i + 1) % n]))
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        let e = normalize(e.0, e.1);
        self.edges().any(|x| x == e)
    }

    pub fn shares_edge_with(&self, other: &Cycle) -> bool {
        self.edges().any(|e| other.has_edge(e))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// All cycles of length `3..=max_len`, each once, sorted by length and then
/// lexicographically by canonical vertex sequence.
pub fn enumerate_cycles(g: &Graph, max_len: usize) -> Result<Vec<Cycle>, GraphError> {
    if max_len > MAX_CYCLE_LEN {
        return Err(GraphError::MaxLenTooLarge(max_len));
    }
    let mut out = Vec::new();
    if max_len < 3 {
        return Ok(out);
    }
    let n = g.vertex_count();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(max_len);
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        extend(g, start, max_len, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
        path.pop();
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

/// Cycles whose length is exactly `len`.
pub fn cycles_of_length(g: &Graph, len: usize) -> Result<Vec<Cycle>, GraphError> {
    Ok(enumerate_cycles(g, len)?
        .into_iter()
        .filter(|c| c.len() == len)
        .collect())
}

// Paths start at the cycle's minimum vertex and only visit larger vertices.
// A closed path is kept in the direction whose second vertex is smaller.
fn extend(
    g: &Graph,
    start: Vertex,
    max_len: usize,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
) {
    let last = *path.last().expect("path starts non-empty");
    for &w in g.neighbors(last) {
        if w == start && path.len() >= 3 && path[1] < last {
            out.push(Cycle(path.clone()));
        } else if w > start && !on_path[w] && path.len() < max_len {
            path.push(w);
            on_path[w] = true;
            extend(g, start, max_len, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}
