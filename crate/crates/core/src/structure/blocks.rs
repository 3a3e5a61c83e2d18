use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    Edge,
    Cycle,
    Complete,
    Other,
}

/// A block of the `k`-degree subgraph that is neither a cycle nor complete.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockViolation {
    pub vertices: Vec<Vertex>,
    pub edge_count: usize,
}

/// Vertex sets of the blocks (maximal 2-connected pieces and bridges) of
/// `g`, each sorted, listed in ascending order. Isolated vertices are skipped.
pub fn biconnected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX || g.degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // Frames of (vertex, parent, next neighbour index).
        let mut frames: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut next)) = frames.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*next) {
                *next += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(p, _, _)) = frames.last() {
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    let mut block = Vec::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (p, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    out.push(block);
                }
            }
        }
    }
    out.sort();
    out
}

pub(crate) fn classify_block(g: &Graph) -> BlockKind {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n == 2 {
        BlockKind::Edge
    } else if m == n * (n - 1) / 2 {
        BlockKind::Complete
    } else if g.vertices().all(|v| g.degree(v) == 2) {
        BlockKind::Cycle
    } else {
        BlockKind::Other
    }
}

/// Blocks of the subgraph induced by vertices of degree exactly `k` that are
/// neither cycles nor complete graphs.
pub fn audit_blocks(g: &Graph, k: usize) -> Vec<BlockViolation> {
    let keep: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) == k).collect();
    let (h, map) = g.induced_subgraph(&keep);
    biconnected_components(&h)
        .into_iter()
        .filter_map(|block| {
            let (b, _) = h.induced_subgraph(&block);
            (classify_block(&b) == BlockKind::Other).then(|| BlockViolation {
                vertices: block.iter().map(|&x| map[x]).collect(),
                edge_count: b.edge_count(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube() -> Graph {
        let mut edges = Vec::new();
        for i in 0..4 {
            edges.push((i, (i + 1) % 4));
            edges.push((i + 4, (i + 1) % 4 + 4));
            edges.push((i, i + 4));
        }
        Graph::from_edges(8, &edges).unwrap()
    }

    #[test]
    fn bowtie_has_two_blocks() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(
            biconnected_components(&g),
            vec![vec![0, 1, 2], vec![0, 3, 4]]
        );
    }

    #[test]
    fn path_blocks_are_edges() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            biconnected_components(&g),
            vec![vec![0, 1], vec![1, 2], vec![2, 3]]
        );
    }

    #[test]
    fn audits() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(audit_blocks(&k4, 3).is_empty());
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert!(audit_blocks(&c5, 2).is_empty());
        let v = audit_blocks(&cube(), 3);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].vertices, (0..8).collect::<Vec<_>>());
        assert_eq!(v[0].edge_count, 12);
    }
}
