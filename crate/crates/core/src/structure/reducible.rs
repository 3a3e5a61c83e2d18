use std::collections::BTreeSet;

use thiserror::Error;

use crate::cycles::{enumerate_cycles, Cycle};
use crate::graph::{normalize, Edge, Graph, Vertex};

use super::controls::controls_cycle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReducibleError {
    #[error("4⁻-cycles {0} and {1} share an edge")]
    AdjacentSmallCycles(Cycle, Cycle),
    #[error("malformed query: {0}")]
    MalformedQuery(String),
}

/// A cycle `v_1 ... v_m` whose last vertex is a 3-vertex. The controlled
/// 4⁻-cycle of each edge is unique when no two 4⁻-cycles share an edge, so
/// it is looked up rather than supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibleConfigQuery {
    pub cycle: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibleMatch {
    /// Whether conditions (i) through (v) all hold.
    pub holds: bool,
    /// First failing condition, numbered 1 to 5.
    pub failed_condition: Option<u8>,
    /// Positions `i` (1-based) with `d(v_i) = 4`.
    pub x: Vec<usize>,
    /// `E⁺` with the controlled cycle found for each edge.
    pub plus_edges: Vec<(Edge, Option<Cycle>)>,
    pub u: Vertex,
    pub w: Option<Vertex>,
    cycle: Vec<Vertex>,
}

impl ReducibleMatch {
    /// The vertex order used to extend a colouring greedily: the path
    /// `v_1 ... v_m` with every `E⁺` edge on it replaced by the rest of its
    /// controlled cycle, followed by `w` (if any) and `u`.
    pub fn greedy_sequence(&self) -> Vec<Vertex> {
        let m = self.cycle.len();
        let mut seq = Vec::new();
        for i in 0..m {
            let a = self.cycle[i];
            seq.push(a);
            if i + 1 == m {
                break;
            }
            let b = self.cycle[i + 1];
            let replaced = self.plus_edges.iter().find(|(e, _)| *e == normalize(a, b));
            if let Some((_, Some(c))) = replaced {
                seq.extend(detour(c, a, b));
            }
        }
        if let Some(w) = self.w {
            seq.push(w);
        }
        seq.push(self.u);
        seq
    }
}

// Interior vertices of the walk around `c` from `a` to `b` that avoids edge `ab`.
fn detour(c: &Cycle, a: Vertex, b: Vertex) -> Vec<Vertex> {
    let vs = c.vertices();
    let n = vs.len();
    let start = vs
        .iter()
        .position(|&x| x == a)
        .expect("edge endpoint on cycle");
    let forward: Vec<Vertex> = (0..n).map(|i| vs[(start + i) % n]).collect();
    let walk: Vec<Vertex> = if forward[1] == b {
        std::iter::once(a)
            .chain(forward[1..].iter().rev().copied())
            .collect()
    } else {
        forward
    };
    walk[1..n - 1].to_vec()
}

fn small_cycle_through(g: &Graph, small: &[Cycle], e: Edge) -> Option<Cycle> {
    small
        .iter()
        .find(|c| c.has_edge(e) && controls_cycle(g, e, c).unwrap_or(false))
        .cloned()
}

/// Checks conditions (i) through (v) of the nearly 2-degenerate reducible
/// configuration anchored at `q.cycle`.
pub fn match_reducible_config(
    g: &Graph,
    q: &ReducibleConfigQuery,
) -> Result<ReducibleMatch, ReducibleError> {
    let small = enumerate_cycles(g, 4).expect("4 is within bounds");
    for (i, a) in small.iter().enumerate() {
        if let Some(b) = small[i + 1..].iter().find(|b| a.shares_edge_with(b)) {
            return Err(ReducibleError::AdjacentSmallCycles(a.clone(), b.clone()));
        }
    }
    let cyc = &q.cycle;
    let m = cyc.len();
    if Cycle::new(g, cyc).is_none() {
        return Err(ReducibleError::MalformedQuery(
            "vertex sequence is not a cycle".into(),
        ));
    }
    let (first, last) = (cyc[0], cyc[m - 1]);
    if g.degree(last) != 3 {
        return Err(ReducibleError::MalformedQuery(format!(
            "v_m = {last} is not a 3-vertex"
        )));
    }
    let closing = normalize(last, first);
    let anchor = small_cycle_through(g, &small, closing).ok_or_else(|| {
        ReducibleError::MalformedQuery(format!("{last} {first} controls no 4⁻-cycle"))
    })?;
    let rest = detour(&anchor, last, first);
    let (u, w) = match rest.as_slice() {
        [u] => (*u, None),
        [w, u] => (*u, Some(*w)),
        _ => unreachable!("anchor has length 3 or 4"),
    };

    let x: Vec<usize> = (1..=m).filter(|&i| g.degree(cyc[i - 1]) == 4).collect();
    let mut plus: Vec<Edge> = x
        .iter()
        .filter(|&&i| i < m)
        .map(|&i| normalize(cyc[i - 1], cyc[i]))
        .collect();
    plus.push(closing);
    let plus_edges: Vec<(Edge, Option<Cycle>)> = plus
        .iter()
        .map(|&e| (e, small_cycle_through(g, &small, e)))
        .collect();

    let on_cycle: BTreeSet<Vertex> = cyc.iter().copied().collect();
    let mut outside: Vec<Vertex> = Vec::new();
    for (e, c) in &plus_edges {
        if let Some(c) = c {
            outside.extend(c.vertices().iter().filter(|&&v| v != e.0 && v != e.1));
        }
    }
    let mut all: Vec<Vertex> = cyc.iter().chain(outside.iter()).copied().collect();
    all.sort_unstable();
    let distinct = all.windows(2).all(|p| p[0] != p[1]);
    let named: BTreeSet<Vertex> = all.iter().copied().collect();

    let checks = [
        plus_edges.iter().all(|(_, c)| c.is_some()),
        distinct,
        cyc.iter().all(|&v| g.degree(v) <= 4),
        outside
            .iter()
            .filter(|v| !on_cycle.contains(v))
            .all(|&v| g.degree(v) == 3),
        g.neighbors(u).iter().any(|w| !named.contains(w)),
    ];
    let failed_condition = checks.iter().position(|ok| !ok).map(|i| i as u8 + 1);
    Ok(ReducibleMatch {
        holds: failed_condition.is_none(),
        failed_condition,
        x,
        plus_edges,
        u,
        w,
        cycle: cyc.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::Cover;
    use crate::greedy::GreedyExtensionQuery;

    // Cycle v1..v7 = 0..6 with v7 = 6 a 3-vertex on triangle 6 0 7 (u = 7).
    // v3 = 2 has degree 4 and its edge to v4 = 3 carries triangle 2 3 8.
    fn gadget(extra: &[(Vertex, Vertex)], n: usize) -> Graph {
        let mut edges: Vec<Edge> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.extend([(6, 7), (0, 7), (2, 8), (3, 8), (2, 10)]);
        edges.extend_from_slice(extra);
        Graph::from_edges(n, &edges).unwrap()
    }

    fn query() -> ReducibleConfigQuery {
        ReducibleConfigQuery {
            cycle: (0..7).collect(),
        }
    }

    #[test]
    fn configuration_matches() {
        let g = gadget(&[(7, 9), (8, 11)], 12);
        let r = match_reducible_config(&g, &query()).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.x, vec![3]);
        assert_eq!(r.u, 7);
        assert_eq!(r.greedy_sequence(), vec![0, 1, 2, 8, 3, 4, 5, 6, 7]);
        // The sequence satisfies the greedy extension conditions for k = 3.
        let c = Cover::identity(&g, 3).unwrap();
        let seq = r.greedy_sequence();
        let partial = g
            .vertices()
            .map(|v| (!seq.contains(&v)).then_some(1))
            .collect();
        let gq = GreedyExtensionQuery {
            cover: &c,
            sequence: seq,
            partial,
        };
        assert_eq!(gq.check_conditions(3), Ok(()));
    }

    #[test]
    fn apex_without_outside_neighbour() {
        // u's third neighbour is the controlled-triangle apex instead.
        let g = gadget(&[(7, 8)], 12);
        let r = match_reducible_config(&g, &query()).unwrap();
        assert_eq!(r.failed_condition, Some(5));
        let bare = gadget(&[(8, 11)], 12);
        assert!(!match_reducible_config(&bare, &query()).unwrap().holds);
    }

    #[test]
    fn heavy_controlled_vertex() {
        let g = gadget(&[(7, 9), (8, 11), (8, 12)], 13);
        let r = match_reducible_config(&g, &query()).unwrap();
        assert_eq!(r.failed_condition, Some(4));
    }

    #[test]
    fn errors() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let q = ReducibleConfigQuery {
            cycle: vec![0, 1, 2],
        };
        assert!(matches!(
            match_reducible_config(&k4, &q),
            Err(ReducibleError::AdjacentSmallCycles(..))
        ));
        let g = gadget(&[(7, 9), (8, 11)], 12);
        let rotated = ReducibleConfigQuery {
            cycle: vec![1, 2, 3, 4, 5, 6, 0],
        };
        assert!(matches!(
            match_reducible_config(&g, &rotated),
            Err(ReducibleError::MalformedQuery(_))
        ));
        let broken = ReducibleConfigQuery {
            cycle: vec![0, 1, 3],
        };
        assert!(matches!(
            match_reducible_config(&g, &broken),
            Err(ReducibleError::MalformedQuery(_))
        ));
    }
}
