//! Constructive extension of an M-colouring across a nearly degenerate
//! subgraph `K = v_1 ... v_t`.
//!
//! The query must satisfy, for the given `k`:
//!
//! 1. `|N(v_1) ∩ V(G')| < |N(v_t) ∩ V(G')|`, where `G' = G - V(K)`;
//! 2. `d(v_t) <= k` and `v_1 v_t` is an edge;
//! 3. every `v_i` with `1 < i < t` has at most `k - 1` neighbours outside
//!    `{v_{i+1}, ..., v_t}`.
//!
//! `v_1` is coloured first with the smallest colour that keeps a colour free
//! at `v_t`, then `v_2, ..., v_{t-1}` in order, and `v_t` last.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::cover::{Color, Cover, Transversal};
use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GreedyError {
    #[error("condition ({condition}) fails at vertex {vertex}")]
    PreconditionViolated { condition: u8, vertex: Vertex },
    #[error("malformed query: {0}")]
    MalformedQuery(String),
}

/// Input to [`extend_coloring_greedy`].
#[derive(Debug, Clone)]
pub struct GreedyExtensionQuery<'a> {
    pub cover: &'a Cover,
    /// `v_1, ..., v_t`.
    pub sequence: Vec<Vertex>,
    /// Colours of `G'`; must be `None` exactly on the sequence.
    pub partial: Vec<Option<Color>>,
}

impl GreedyExtensionQuery<'_> {
    /// Checks the structural conditions in order and reports the first failure.
    pub fn check_conditions(&self, k: usize) -> Result<(), GreedyError> {
        let g = self.cover.graph();
        let seq = &self.sequence;
        let t = seq.len();
        let in_k: BTreeSet<Vertex> = seq.iter().copied().collect();
        let outside = |v: Vertex| g.neighbors(v).iter().filter(|w| !in_k.contains(w)).count();
        let (first, last) = (seq[0], seq[t - 1]);
        if outside(first) >= outside(last) {
            return Err(GreedyError::PreconditionViolated {
                condition: 1,
                vertex: first,
            });
        }
        if g.degree(last) > k || !g.has_edge(first, last) {
            return Err(GreedyError::PreconditionViolated {
                condition: 2,
                vertex: last,
            });
        }
        for i in 1..t.saturating_sub(1) {
            let later: BTreeSet<Vertex> = seq[i + 1..].iter().copied().collect();
            let earlier_or_outside = g
                .neighbors(seq[i])
                .iter()
                .filter(|w| !later.contains(w))
                .count();
            if earlier_or_outside > k - 1 {
                return Err(GreedyError::PreconditionViolated {
                    condition: 3,
                    vertex: seq[i],
                });
            }
        }
        Ok(())
    }

    fn check_shape(&self, k: usize) -> Result<(), GreedyError> {
        let g = self.cover.graph();
        let n = g.vertex_count();
        if k == 0 {
            return Err(GreedyError::MalformedQuery("k must be positive".into()));
        }
        if self.sequence.len() < 2 {
            return Err(GreedyError::MalformedQuery(
                "sequence needs at least two vertices".into(),
            ));
        }
        if self.partial.len() != n {
            return Err(GreedyError::MalformedQuery(format!(
                "partial colouring has {} entries for {n} vertices",
                self.partial.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for &v in &self.sequence {
            if v >= n || !seen.insert(v) {
                return Err(GreedyError::MalformedQuery(format!(
                    "vertex {v} is invalid or repeated"
                )));
            }
            if self.cover.list(v).len() < k {
                return Err(GreedyError::MalformedQuery(format!(
                    "list of vertex {v} is shorter than {k}"
                )));
            }
        }
        for v in 0..n {
            match (seen.contains(&v), self.partial[v]) {
                (true, Some(_)) => {
                    return Err(GreedyError::MalformedQuery(format!(
                        "vertex {v} of K is already coloured"
                    )))
                }
                (false, None) => {
                    return Err(GreedyError::MalformedQuery(format!(
                        "vertex {v} of G' is uncoloured"
                    )))
                }
                (false, Some(c)) if !self.cover.list(v).contains(&c) => {
                    return Err(GreedyError::MalformedQuery(format!(
                        "colour {c} is not listed at {v}"
                    )))
                }
                _ => {}
            }
        }
        for &(u, v) in g.edges() {
            if let (Some(a), Some(b)) = (self.partial[u], self.partial[v]) {
                if self.cover.is_matched(u, a, v, b) {
                    return Err(GreedyError::MalformedQuery(format!(
                        "partial colouring conflicts on edge {u} {v}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Extends the partial colouring of `G'` to all of `G`.
pub fn extend_coloring_greedy(
    q: &GreedyExtensionQuery<'_>,
    k: usize,
) -> Result<Transversal, GreedyError> {
    q.check_shape(k)?;
    q.check_conditions(k)?;
    let c = q.cover;
    let g = c.graph();
    let mut colors = q.partial.clone();
    let seq = &q.sequence;
    let (first, last) = (seq[0], seq[seq.len() - 1]);

    let blocked_by = |v: Vertex, colors: &[Option<Color>]| -> BTreeSet<Color> {
        g.neighbors(v)
            .iter()
            .filter_map(|&w| colors[w].and_then(|b| c.partner(w, b, v)))
            .collect()
    };
    let free = |v: Vertex, colors: &[Option<Color>]| -> Vec<Color> {
        let blocked = blocked_by(v, colors);
        let mut list: Vec<Color> = c
            .list(v)
            .iter()
            .copied()
            .filter(|a| !blocked.contains(a))
            .collect();
        list.sort_unstable();
        list
    };

    // Neighbours of v_t inside K other than v_1 are still uncoloured and each
    // may block one more colour later.
    let pending = g
        .neighbors(last)
        .iter()
        .filter(|&&w| w != first && colors[w].is_none())
        .count();
    let blocked_at_last = blocked_by(last, &colors);
    let choice = free(first, &colors).into_iter().find(|&a| {
        let mut after = blocked_at_last.clone();
        if let Some(b) = c.partner(first, a, last) {
            after.insert(b);
        }
        after.len() + pending < c.list(last).len()
    });
    let a = choice.expect("conditions (1) and (2) leave v_1 a colour that spares v_t");
    colors[first] = Some(a);

    for &v in &seq[1..] {
        let a = *free(v, &colors)
            .first()
            .expect("conditions (2) and (3) leave a free colour");
        colors[v] = Some(a);
    }
    Ok(Transversal(
        colors
            .into_iter()
            .map(|x| x.expect("every vertex coloured"))
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::verify_transversal;
    use crate::graph::Graph;
    use crate::solver::find_m_coloring;

    // G' = {0, 1, 2}; K = 3 (v_1), 4 (v_2). v_2 sees 1 and 2, v_1 sees 0.
    fn two_vertex_case() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap()
    }

    fn brute_force_extensions(c: &Cover, partial: &[Option<Color>], free: &[Vertex]) -> usize {
        let mut count = 0;
        let k = c.list(free[0]).len();
        for code in 0..k.pow(free.len() as u32) {
            let mut colors = partial.to_vec();
            let mut x = code;
            for &v in free {
                colors[v] = Some(c.list(v)[x % k]);
                x /= k;
            }
            let t = Transversal(colors.into_iter().map(Option::unwrap).collect());
            if verify_transversal(c, &t) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn extends_two_vertex_configuration() {
        let g = two_vertex_case();
        for seed in 0..50 {
            let c = Cover::random_permutation(&g, 3, seed).unwrap();
            let base = c.graph().induced_subgraph(&[0, 1, 2]).0;
            let sub = Cover::random_permutation(&base, 3, seed).unwrap();
            let _ = sub;
            // Colour G' using the full cover restricted by brute force.
            let mut partial = None;
            'outer: for a in 1..=3 {
                for b in 1..=3 {
                    for d in 1..=3 {
                        if !c.is_matched(0, a, 1, b) && !c.is_matched(1, b, 2, d) {
                            partial = Some(vec![Some(a), Some(b), Some(d), None, None]);
                            break 'outer;
                        }
                    }
                }
            }
            let partial = partial.unwrap();
            assert!(brute_force_extensions(&c, &partial, &[3, 4]) > 0);
            let q = GreedyExtensionQuery {
                cover: &c,
                sequence: vec![3, 4],
                partial,
            };
            let t = extend_coloring_greedy(&q, 3).unwrap();
            assert!(verify_transversal(&c, &t));
        }
    }

    #[test]
    fn condition_one_is_reported() {
        let g = two_vertex_case();
        let c = Cover::identity(&g, 3).unwrap();
        let partial = vec![Some(1), Some(2), Some(1), None, None];
        let q = GreedyExtensionQuery {
            cover: &c,
            sequence: vec![4, 3],
            partial,
        };
        assert_eq!(
            extend_coloring_greedy(&q, 3),
            Err(GreedyError::PreconditionViolated {
                condition: 1,
                vertex: 4
            })
        );
    }

    #[test]
    fn malformed_partial_colouring() {
        let g = two_vertex_case();
        let c = Cover::identity(&g, 3).unwrap();
        let q = GreedyExtensionQuery {
            cover: &c,
            sequence: vec![3, 4],
            partial: vec![Some(1), Some(1), Some(2), None, None],
        };
        assert!(matches!(
            extend_coloring_greedy(&q, 3),
            Err(GreedyError::MalformedQuery(_))
        ));
        let solved = find_m_coloring(&c).transversal.unwrap();
        let q = GreedyExtensionQuery {
            cover: &c,
            sequence: vec![3, 4],
            partial: solved.0.iter().map(|&x| Some(x)).collect(),
        };
        assert!(matches!(
            extend_coloring_greedy(&q, 3),
            Err(GreedyError::MalformedQuery(_))
        ));
    }
}
