use crate::cycles::{cycles_of_length, Cycle};
use crate::graph::Graph;

/// All 3-cycles, in canonical order.
pub fn triangles(g: &Graph) -> Vec<Cycle> {
    cycles_of_length(g, 3).expect("3 is within the cycle bound")
}

/// Pairs of distinct triangles sharing at least one edge.
pub fn adjacent_triangle_pairs(g: &Graph) -> Vec<(Cycle, Cycle)> {
    let tris = triangles(g);
    let mut out = Vec::new();
    for (i, a) in tris.iter().enumerate() {
        for b in &tris[i + 1..] {
            if a.shares_edge_with(b) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn pair_distance(dist: &[Vec<Option<usize>>], a: &Cycle, b: &Cycle) -> Option<usize> {
    a.vertices()
        .iter()
        .flat_map(|&x| b.vertices().iter().map(move |&y| dist[x][y]))
        .flatten()
        .min()
}

fn all_distances(g: &Graph, tris: &[Cycle]) -> Vec<Vec<Option<usize>>> {
    let mut dist = vec![Vec::new(); g.vertex_count()];
    for t in tris {
        for &v in t.vertices() {
            if dist[v].is_empty() {
                dist[v] = g.bfs_distances(v);
            }
        }
    }
    dist
}

/// Minimum vertex distance between two distinct triangles. `None` when
/// there are fewer than two triangles or no two lie in one component.
pub fn triangle_distance(g: &Graph) -> Option<usize> {
    let tris = triangles(g);
    let dist = all_distances(g, &tris);
    let mut best = None;
    for (i, a) in tris.iter().enumerate() {
        for b in &tris[i + 1..] {
            if let Some(d) = pair_distance(&dist, a, b) {
                best = Some(best.map_or(d, |x: usize| x.min(d)));
            }
        }
    }
    best
}

/// Triangle pairs at distance strictly below `bound`, with their distance.
pub fn triangle_pairs_within(g: &Graph, bound: usize) -> Vec<(Cycle, Cycle, usize)> {
    let tris = triangles(g);
    let dist = all_distances(g, &tris);
    let mut out = Vec::new();
    for (i, a) in tris.iter().enumerate() {
        for b in &tris[i + 1..] {
            if let Some(d) = pair_distance(&dist, a, b).filter(|&d| d < bound) {
                out.push((a.clone(), b.clone(), d));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap()
    }

    #[test]
    fn k4_pairs_all_adjacent() {
        assert_eq!(adjacent_triangle_pairs(&k4()).len(), 6);
        assert_eq!(triangle_distance(&k4()), Some(0));
    }

    #[test]
    fn bowtie_touches_without_adjacency() {
        assert!(adjacent_triangle_pairs(&bowtie()).is_empty());
        assert_eq!(triangle_distance(&bowtie()), Some(0));
    }

    #[test]
    fn bridged_triangles_are_one_apart() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
            .unwrap();
        assert_eq!(triangle_distance(&g), Some(1));
        assert_eq!(triangle_pairs_within(&g, 2).len(), 1);
        assert!(triangle_pairs_within(&g, 1).is_empty());
    }

    #[test]
    fn single_or_separate_triangles() {
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(triangle_distance(&c3), None);
        assert!(adjacent_triangle_pairs(&c3).is_empty());
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(triangle_distance(&two), None);
    }
}
