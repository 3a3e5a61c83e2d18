//! DP-k-colourability by exhaustive enumeration of normalized covers.
//!
//! Removing pairs from a matching never makes a cover harder to colour, so
//! it suffices to check covers whose matchings are full permutations on the
//! lists `{1..k}`. Relabelling the lists along a spanning forest turns every
//! forest edge into the identity, which leaves `(k!)^(E - V + c)` covers: one
//! permutation per non-forest edge.
//!
//! The enumeration is split into contiguous chunks of the cover index space
//! (first non-forest edge most significant) and the chunks run on the rayon
//! pool. The reported witness is the first failing cover in index order
//! regardless of how many chunks are used.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::cover::{Color, Cover, SpanningTree};
use crate::graph::{Graph, Vertex};
use crate::solver::{Compiled, Link, Outcome, Search, SolverError};

/// Default search-node budget shared by all covers of one enumeration.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpReport {
    pub k: usize,
    pub colorable: bool,
    /// First normalized cover without an M-colouring, when one exists.
    pub witness: Option<Cover>,
    /// `(k!)^(non-forest edges)`.
    pub enumeration_size: u128,
    pub nodes: u64,
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (0..k as u32).collect();
    loop {
        out.push(cur.clone());
        // Next lexicographic permutation.
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..k)
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("pivot exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

struct Plan {
    k: usize,
    perms: Vec<Vec<u32>>,
    base: Compiled,
    order: Vec<Vertex>,
    /// Per non-forest edge: (low endpoint, link index at low, high endpoint, link index at high).
    slots: Vec<(Vertex, usize, Vertex, usize)>,
    non_forest: Vec<usize>,
    size: u128,
}

impl Plan {
    fn new(g: &Graph, k: usize) -> Self {
        let forest = SpanningTree::bfs_forest(g);
        let identity: Vec<u32> = (0..k as u32).collect();
        let mut links: Vec<Vec<Link>> = vec![Vec::new(); g.vertex_count()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            links[u].push(Link {
                to: v,
                edge: e,
                map: identity.clone(),
            });
            links[v].push(Link {
                to: u,
                edge: e,
                map: identity.clone(),
            });
        }
        let base = Compiled {
            sizes: vec![k; g.vertex_count()],
            links,
        };
        let non_forest: Vec<usize> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| !forest.is_tree_edge(u, v))
            .map(|(e, _)| e)
            .collect();
        let slots = non_forest
            .iter()
            .map(|&e| {
                let (u, v) = g.edges()[e];
                let iu = base.links[u]
                    .iter()
                    .position(|l| l.edge == e)
                    .expect("link");
                let iv = base.links[v]
                    .iter()
                    .position(|l| l.edge == e)
                    .expect("link");
                (u, iu, v, iv)
            })
            .collect();
        let perms = permutations(k);
        let size = (perms.len() as u128)
            .checked_pow(non_forest.len() as u32)
            .unwrap_or(u128::MAX);
        Plan {
            k,
            perms,
            base,
            order: forest.order,
            slots,
            non_forest,
            size,
        }
    }

    fn set(&self, cc: &mut Compiled, slot: usize, perm: usize) {
        let (u, iu, v, iv) = self.slots[slot];
        let p = &self.perms[perm];
        cc.links[u][iu].map.copy_from_slice(p);
        let inv = &mut cc.links[v][iv].map;
        for (a, &b) in p.iter().enumerate() {
            inv[b as usize] = a as u32;
        }
    }

    fn digits(&self, mut index: u128) -> Vec<usize> {
        let base = self.perms.len() as u128;
        let mut d = vec![0; self.slots.len()];
        for slot in (0..self.slots.len()).rev() {
            d[slot] = (index % base) as usize;
            index /= base;
        }
        d
    }

    fn cover(&self, g: &Graph, index: u128) -> Cover {
        let digits = self.digits(index);
        let mut perms: Vec<Vec<Color>> = vec![(1..=self.k as Color).collect(); g.edge_count()];
        for (slot, &e) in self.non_forest.iter().enumerate() {
            perms[e] = self.perms[digits[slot]].iter().map(|&c| c + 1).collect();
        }
        Cover::from_permutations(g, self.k, &perms).expect("permutations are valid matchings")
    }
}

/// Decides DP-`k`-colourability of `g` using `k!` chunks.
pub fn dp_k_colorability(g: &Graph, k: usize, budget: u64) -> Result<DpReport, SolverError> {
    let chunks = (1..=k).product::<usize>().max(1);
    dp_k_colorability_chunked(g, k, budget, chunks)
}

/// As [`dp_k_colorability`] with an explicit chunk count. The verdict and
/// witness do not depend on `chunks`.
pub fn dp_k_colorability_chunked(
    g: &Graph,
    k: usize,
    budget: u64,
    chunks: usize,
) -> Result<DpReport, SolverError> {
    if k == 0 {
        return Err(SolverError::ZeroColors);
    }
    let plan = Plan::new(g, k);
    if plan.size > budget as u128 {
        return Err(SolverError::BudgetExceeded {
            budget,
            required: plan.size,
        });
    }
    let total = plan.size as u64;
    let chunks = (chunks.max(1) as u64).min(total.max(1));
    let nodes = AtomicU64::new(0);
    let over_budget = AtomicBool::new(false);
    let first_failing_chunk = AtomicUsize::new(usize::MAX);
    let colors: Vec<Vec<u32>> = vec![(0..k as u32).collect(); g.vertex_count()];

    let failures: Vec<Option<u128>> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let lo = total * chunk / chunks;
            let hi = total * (chunk + 1) / chunks;
            let mut cc = plan.base.clone();
            let mut digits = plan.digits(lo as u128);
            for (slot, &d) in digits.iter().enumerate() {
                plan.set(&mut cc, slot, d);
            }
            let mut search = Search::new(&cc.sizes, &plan.order, &colors, budget);
            let mut index = lo;
            while index < hi {
                if over_budget.load(Ordering::Relaxed)
                    || first_failing_chunk.load(Ordering::Relaxed) < chunk as usize
                {
                    return None;
                }
                let before = search.stats.nodes;
                let remaining = budget.saturating_sub(nodes.load(Ordering::Relaxed));
                search.set_limit(before.saturating_add(remaining));
                let outcome = search.run(&cc);
                let spent = search.stats.nodes - before;
                if nodes.fetch_add(spent, Ordering::Relaxed) + spent > budget {
                    over_budget.store(true, Ordering::Relaxed);
                    return None;
                }
                match outcome {
                    Outcome::Found => {}
                    Outcome::Exhausted => {
                        first_failing_chunk.fetch_min(chunk as usize, Ordering::Relaxed);
                        return Some(index as u128);
                    }
                    Outcome::LimitHit => {
                        over_budget.store(true, Ordering::Relaxed);
                        return None;
                    }
                }
                index += 1;
                // Mixed-radix increment, least significant slot last.
                for slot in (0..digits.len()).rev() {
                    digits[slot] += 1;
                    if digits[slot] < plan.perms.len() {
                        plan.set(&mut cc, slot, digits[slot]);
                        break;
                    }
                    digits[slot] = 0;
                    plan.set(&mut cc, slot, 0);
                }
            }
            None
        })
        .collect();

    let witness_index = failures.iter().flatten().next().copied();
    if witness_index.is_none() && over_budget.load(Ordering::Relaxed) {
        return Err(SolverError::BudgetExceeded {
            budget,
            required: plan.size,
        });
    }
    Ok(DpReport {
        k,
        colorable: witness_index.is_none(),
        witness: witness_index.map(|i| plan.cover(g, i)),
        enumeration_size: plan.size,
        nodes: nodes.load(Ordering::Relaxed),
    })
}

/// Whether every cover of `g` with lists of size `k` has an M-colouring.
pub fn is_dp_k_colorable(g: &Graph, k: usize, budget: u64) -> Result<bool, SolverError> {
    dp_k_colorability(g, k, budget).map(|r| r.colorable)
}

/// Smallest `k <= max_k` for which `g` is DP-`k`-colourable.
pub fn dp_chromatic_number(g: &Graph, max_k: usize, budget: u64) -> Result<usize, SolverError> {
    for k in 1..=max_k {
        if is_dp_k_colorable(g, k, budget)? {
            return Ok(k);
        }
    }
    Err(SolverError::NotWithinMax(max_k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::find_m_coloring;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn permutation_listing() {
        assert_eq!(permutations(1), vec![vec![0]]);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
    }

    #[test]
    fn small_chromatic_values() {
        assert_eq!(dp_chromatic_number(&cycle(6), 4, DEFAULT_BUDGET), Ok(3));
        assert_eq!(dp_chromatic_number(&complete(4), 4, DEFAULT_BUDGET), Ok(4));
        let tree = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(dp_chromatic_number(&tree, 3, DEFAULT_BUDGET), Ok(2));
        assert_eq!(
            dp_chromatic_number(&Graph::empty(1), 3, DEFAULT_BUDGET),
            Ok(1)
        );
        assert_eq!(
            dp_chromatic_number(&complete(4), 3, DEFAULT_BUDGET),
            Err(SolverError::NotWithinMax(3))
        );
    }

    #[test]
    fn single_edge_needs_two_colours() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(is_dp_k_colorable(&g, 1, DEFAULT_BUDGET), Ok(false));
        assert_eq!(is_dp_k_colorable(&g, 2, DEFAULT_BUDGET), Ok(true));
    }

    #[test]
    fn c5_three_and_witness_for_two() {
        assert_eq!(is_dp_k_colorable(&cycle(5), 3, DEFAULT_BUDGET), Ok(true));
        let r = dp_k_colorability(&cycle(6), 2, DEFAULT_BUDGET).unwrap();
        let w = r.witness.unwrap();
        assert!(!find_m_coloring(&w).is_found());
        assert_eq!(r.enumeration_size, 2);
    }

    #[test]
    fn budget_is_checked_up_front() {
        let r = dp_k_colorability(&complete(4), 4, 100);
        assert_eq!(
            r,
            Err(SolverError::BudgetExceeded {
                budget: 100,
                required: 24u128.pow(3)
            })
        );
    }

    #[test]
    fn chunk_count_does_not_change_the_answer() {
        let g = complete(4);
        let reference = dp_k_colorability_chunked(&g, 3, DEFAULT_BUDGET, 1).unwrap();
        for chunks in [2, 5, 6, 17, 216, 1000] {
            let r = dp_k_colorability_chunked(&g, 3, DEFAULT_BUDGET, chunks).unwrap();
            assert_eq!(r.colorable, reference.colorable);
            assert_eq!(r.witness, reference.witness);
        }
    }

    #[test]
    fn disconnected_graphs_use_a_forest() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        assert_eq!(is_dp_k_colorable(&g, 2, DEFAULT_BUDGET), Ok(false));
        assert_eq!(is_dp_k_colorable(&g, 3, DEFAULT_BUDGET), Ok(true));
    }
}
