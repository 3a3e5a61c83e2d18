//! Connected graphs on few vertices, one per isomorphism class.

use std::collections::BTreeSet;

use crate::graph::{Edge, Graph};

fn pair_index(n: usize) -> Vec<Edge> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Connected graphs on exactly `n` vertices up to isomorphism (`n <= 7`),
/// each in the labelling with the smallest edge bitmask.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "supported for 1..=7 vertices");
    let pairs = pair_index(n);
    let mut slot = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        slot[u][v] = i;
        slot[v][u] = i;
    }
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let canonical = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .fold(0u32, |acc, (_, &(u, v))| acc | 1 << slot[p[u]][p[v]])
            })
            .min()
            .expect("at least one permutation");
        if canonical != mask || !seen.insert(canonical) {
            continue;
        }
        let edges: Vec<Edge> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).expect("simple");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// All connected graphs on `1..=max_n` vertices up to isomorphism.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}
