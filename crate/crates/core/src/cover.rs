//! Covers: a list assignment plus one matching per base edge.
//!
//! Matchings are stored as explicit pair sets so partial and empty matchings
//! are first-class. A pair `(a, b)` on edge `(u, v)` with `u < v` joins
//! colour `a` at `u` with colour `b` at `v`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub type Color = u32;

/// An edge with its matched `(colour at u, colour at v)` pairs.
pub type EdgePairs = ((Vertex, Vertex), Vec<(Color, Color)>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("list assignment has {found} lists for {expected} vertices")]
    ListCountMismatch { expected: usize, found: usize },
    #[error("vertex {0} has an empty list")]
    EmptyList(Vertex),
    #[error("vertex {vertex} lists colour {color} twice")]
    DuplicateColor { vertex: Vertex, color: Color },
    #[error("{u} {v} is not an edge of the base graph")]
    UnknownEdge { u: Vertex, v: Vertex },
    #[error("colour {color} is not in the list of vertex {vertex}")]
    UnknownColor { vertex: Vertex, color: Color },
    #[error("cover vertex ({vertex}, {color}) is used twice by the matching on edge {edge:?}")]
    NotAMatching {
        edge: (Vertex, Vertex),
        vertex: Vertex,
        color: Color,
    },
    #[error("matching on edge {0:?} is not a full permutation of a k-uniform list")]
    NotPermutationCover((Vertex, Vertex)),
    #[error("base graph is not connected")]
    DisconnectedBase,
    #[error("colour count must be at least 1")]
    ZeroColors,
}

/// One list of colours per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<Color>>) -> Result<Self, CoverError> {
        for (v, list) in lists.iter().enumerate() {
            if list.is_empty() {
                return Err(CoverError::EmptyList(v));
            }
            for (i, &c) in list.iter().enumerate() {
                if list[..i].contains(&c) {
                    return Err(CoverError::DuplicateColor {
                        vertex: v,
                        color: c,
                    });
                }
            }
        }
        Ok(ListAssignment { lists })
    }

    /// `L(v) = {1, ..., k}` for every vertex.
    pub fn uniform(vertex_count: usize, k: usize) -> Self {
        let list: Vec<Color> = (1..=k as Color).collect();
        ListAssignment {
            lists: vec![list; vertex_count],
        }
    }

    pub fn list(&self, v: Vertex) -> &[Color] {
        &self.lists[v]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    /// `Some(k)` when every list is exactly `{1, ..., k}`.
    pub fn uniform_size(&self) -> Option<usize> {
        let k = self.lists.first()?.len();
        let expected: Vec<Color> = (1..=k as Color).collect();
        self.lists
            .iter()
            .all(|l| {
                let mut s = l.clone();
                s.sort_unstable();
                s == expected
            })
            .then_some(k)
    }
}

/// Matched colour pairs on one edge, `(colour at low end, colour at high end)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    pairs: Vec<(Color, Color)>,
}

impl Matching {
    pub fn pairs(&self) -> &[(Color, Color)] {
        &self.pairs
    }

    pub fn contains(&self, low: Color, high: Color) -> bool {
        self.pairs.binary_search(&(low, high)).is_ok()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// A validated cover `H` of a base graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    graph: Graph,
    lists: ListAssignment,
    matchings: Vec<Matching>,
}

/// One chosen colour per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Transversal(pub Vec<Color>);

impl Transversal {
    pub fn color(&self, v: Vertex) -> Color {
        self.0[v]
    }
}

impl fmt::Display for Transversal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Cover {
    /// Validates lists and per-edge pair sets. Pairs are given as
    /// `((u, v), [(colour at u, colour at v), ...])`; an edge may appear
    /// more than once and unlisted edges carry the empty matching.
    pub fn build(
        graph: &Graph,
        lists: ListAssignment,
        matchings: &[EdgePairs],
    ) -> Result<Self, CoverError> {
        if lists.len() != graph.vertex_count() {
            return Err(CoverError::ListCountMismatch {
                expected: graph.vertex_count(),
                found: lists.len(),
            });
        }
        let mut per_edge = vec![Matching::default(); graph.edge_count()];
        for &((u, v), ref pairs) in matchings {
            let e = graph
                .edge_id(u, v)
                .ok_or(CoverError::UnknownEdge { u, v })?;
            for &(cu, cv) in pairs {
                if !lists.list(u).contains(&cu) {
                    return Err(CoverError::UnknownColor {
                        vertex: u,
                        color: cu,
                    });
                }
                if !lists.list(v).contains(&cv) {
                    return Err(CoverError::UnknownColor {
                        vertex: v,
                        color: cv,
                    });
                }
                let pair = if u < v { (cu, cv) } else { (cv, cu) };
                if !per_edge[e].pairs.contains(&pair) {
                    per_edge[e].pairs.push(pair);
                }
            }
        }
        for (e, m) in per_edge.iter_mut().enumerate() {
            m.pairs.sort_unstable();
            let (lo, hi) = graph.edges()[e];
            check_matching(m, (lo, hi))?;
        }
        Ok(Cover {
            graph: graph.clone(),
            lists,
            matchings: per_edge,
        })
    }

    /// `k`-uniform lists and the identity matching on every edge; its
    /// transversals are exactly the proper `k`-colourings of `g`.
    pub fn identity(g: &Graph, k: usize) -> Result<Self, CoverError> {
        if k == 0 {
            return Err(CoverError::ZeroColors);
        }
        let identity = Matching {
            pairs: (1..=k as Color).map(|c| (c, c)).collect(),
        };
        Ok(Cover {
            graph: g.clone(),
            lists: ListAssignment::uniform(g.vertex_count(), k),
            matchings: vec![identity; g.edge_count()],
        })
    }

    /// A full permutation matching on every edge, drawn from a ChaCha8
    /// generator seeded with `seed`. Edges are visited in [`Graph::edges`] order.
    pub fn random_permutation(g: &Graph, k: usize, seed: u64) -> Result<Self, CoverError> {
        if k == 0 {
            return Err(CoverError::ZeroColors);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<Color> = (1..=k as Color).collect();
        let matchings = (0..g.edge_count())
            .map(|_| {
                perm.shuffle(&mut rng);
                let mut pairs: Vec<(Color, Color)> = perm
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| (i as Color + 1, c))
                    .collect();
                pairs.sort_unstable();
                Matching { pairs }
            })
            .collect();
        Ok(Cover {
            graph: g.clone(),
            lists: ListAssignment::uniform(g.vertex_count(), k),
            matchings,
        })
    }

    /// Permutation cover from explicit permutations, `perms[e][c - 1]` being
    /// the colour at the high endpoint matched with colour `c` at the low one.
    pub fn from_permutations(
        g: &Graph,
        k: usize,
        perms: &[Vec<Color>],
    ) -> Result<Self, CoverError> {
        let matchings: Vec<_> = g
            .edges()
            .iter()
            .zip(perms)
            .map(|(&e, p)| {
                (
                    e,
                    p.iter()
                        .enumerate()
                        .map(|(i, &c)| (i as Color + 1, c))
                        .collect(),
                )
            })
            .collect();
        let cover = Cover::build(g, ListAssignment::uniform(g.vertex_count(), k), &matchings)?;
        cover.uniform_permutation_size()?;
        Ok(cover)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn lists(&self) -> &ListAssignment {
        &self.lists
    }

    pub fn list(&self, v: Vertex) -> &[Color] {
        self.lists.list(v)
    }

    /// Matching on the edge with index `e` in [`Graph::edges`].
    pub fn matching(&self, e: usize) -> &Matching {
        &self.matchings[e]
    }

    pub fn matchings(&self) -> &[Matching] {
        &self.matchings
    }

    /// Whether `(u, a)` and `(v, b)` are joined in `H`.
    pub fn is_matched(&self, u: Vertex, a: Color, v: Vertex, b: Color) -> bool {
        match self.graph.edge_id(u, v) {
            None => false,
            Some(e) if u < v => self.matchings[e].contains(a, b),
            Some(e) => self.matchings[e].contains(b, a),
        }
    }

    /// Colour at `v` matched with colour `a` at `u`, if any.
    pub fn partner(&self, u: Vertex, a: Color, v: Vertex) -> Option<Color> {
        let e = self.graph.edge_id(u, v)?;
        let pairs = &self.matchings[e].pairs;
        if u < v {
            pairs.iter().find(|p| p.0 == a).map(|p| p.1)
        } else {
            pairs.iter().find(|p| p.1 == a).map(|p| p.0)
        }
    }

    /// The cover with the pair `(low, high)` removed from edge `e`.
    pub fn without_pair(&self, e: usize, pair: (Color, Color)) -> Cover {
        let mut out = self.clone();
        out.matchings[e].pairs.retain(|&p| p != pair);
        out
    }

    /// `Ok(k)` when lists are `{1..k}` and every matching is a full permutation.
    pub fn uniform_permutation_size(&self) -> Result<usize, CoverError> {
        let first_edge = self.graph.edges().first().copied().unwrap_or((0, 0));
        let k = self
            .lists
            .uniform_size()
            .ok_or(CoverError::NotPermutationCover(first_edge))?;
        for (e, m) in self.matchings.iter().enumerate() {
            if m.len() != k {
                return Err(CoverError::NotPermutationCover(self.graph.edges()[e]));
            }
        }
        Ok(k)
    }

    /// The number of cover vertices, `sum |L(v)|`.
    pub fn cover_vertex_count(&self) -> usize {
        self.graph.vertices().map(|v| self.list(v).len()).sum()
    }
}

fn check_matching(m: &Matching, edge: (Vertex, Vertex)) -> Result<(), CoverError> {
    for (i, &(a, b)) in m.pairs.iter().enumerate() {
        for &(c, d) in &m.pairs[..i] {
            if a == c {
                return Err(CoverError::NotAMatching {
                    edge,
                    vertex: edge.0,
                    color: a,
                });
            }
            if b == d {
                return Err(CoverError::NotAMatching {
                    edge,
                    vertex: edge.1,
                    color: b,
                });
            }
        }
    }
    Ok(())
}

/// Whether `t` picks one listed colour per vertex and no matched pair.
pub fn verify_transversal(c: &Cover, t: &Transversal) -> bool {
    let g = c.graph();
    if t.0.len() != g.vertex_count() {
        return false;
    }
    if g.vertices().any(|v| !c.list(v).contains(&t.0[v])) {
        return false;
    }
    g.edges()
        .iter()
        .enumerate()
        .all(|(e, &(u, v))| !c.matching(e).contains(t.0[u], t.0[v]))
}

/// A rooted spanning tree given by parent pointers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    /// Vertices in the order they were reached.
    pub order: Vec<Vertex>,
    /// `parent[root]` is `None`.
    pub parent: Vec<Option<Vertex>>,
}

impl SpanningTree {
    /// Breadth-first tree from vertex 0, neighbours scanned in ascending order.
    pub fn bfs(g: &Graph) -> Result<Self, CoverError> {
        let forest = Self::bfs_forest(g);
        if forest.parent.iter().filter(|p| p.is_none()).count() != 1 {
            return Err(CoverError::DisconnectedBase);
        }
        Ok(forest)
    }

    /// Breadth-first forest; each component is rooted at its smallest vertex.
    pub fn bfs_forest(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for &w in g.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some(u);
                        queue.push_back(w);
                    }
                }
            }
        }
        SpanningTree { order, parent }
    }

    pub fn is_tree_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.parent[u] == Some(v) || self.parent[v] == Some(u)
    }
}

/// Result of [`normalize_cover`]: the relabelled cover and, per vertex, the
/// map from old colour to new colour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedCover {
    pub cover: Cover,
    pub relabel: Vec<BTreeMap<Color, Color>>,
}

impl NormalizedCover {
    /// Carries a transversal of the original cover to the normalized one.
    pub fn map_transversal(&self, t: &Transversal) -> Transversal {
        Transversal(
            t.0.iter()
                .enumerate()
                .map(|(v, c)| self.relabel[v][c])
                .collect(),
        )
    }
}

/// Relabels each list so every tree edge carries the identity matching.
/// Transversals of the input and output correspond one-to-one through
/// [`NormalizedCover::map_transversal`].
pub fn normalize_cover(c: &Cover, tree: &SpanningTree) -> Result<NormalizedCover, CoverError> {
    let k = c.uniform_permutation_size()?;
    let g = c.graph();
    if tree.order.len() != g.vertex_count()
        || tree.parent.iter().filter(|p| p.is_none()).count() != 1
    {
        return Err(CoverError::DisconnectedBase);
    }
    let identity: BTreeMap<Color, Color> = (1..=k as Color).map(|x| (x, x)).collect();
    let mut relabel: Vec<BTreeMap<Color, Color>> = vec![BTreeMap::new(); g.vertex_count()];
    for &v in &tree.order {
        relabel[v] = match tree.parent[v] {
            None => identity.clone(),
            Some(p) => {
                if !g.has_edge(p, v) {
                    return Err(CoverError::UnknownEdge { u: p, v });
                }
                // New colour of b at v equals the new colour of its partner at p.
                (1..=k as Color)
                    .map(|b| {
                        let a = c.partner(v, b, p).expect("full permutation");
                        (b, relabel[p][&a])
                    })
                    .collect()
            }
        };
    }
    let matchings: Vec<_> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| {
            let pairs = c
                .matching(e)
                .pairs()
                .iter()
                .map(|&(a, b)| (relabel[u][&a], relabel[v][&b]))
                .collect();
            ((u, v), pairs)
        })
        .collect();
    let cover = Cover::build(g, ListAssignment::uniform(g.vertex_count(), k), &matchings)?;
    Ok(NormalizedCover { cover, relabel })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge() -> Graph {
        Graph::from_edges(2, &[(0, 1)]).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn count_transversals(c: &Cover) -> usize {
        let n = c.graph().vertex_count();
        let mut count = 0;
        let mut idx = vec![0usize; n];
        loop {
            let t = Transversal((0..n).map(|v| c.list(v)[idx[v]]).collect());
            if verify_transversal(c, &t) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                idx[i] += 1;
                if idx[i] < c.list(i).len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn swap_matching_is_valid() {
        let c = Cover::build(
            &edge(),
            ListAssignment::uniform(2, 2),
            &[((0, 1), vec![(1, 2), (2, 1)])],
        )
        .unwrap();
        assert!(c.is_matched(0, 1, 1, 2));
        assert!(c.is_matched(1, 2, 0, 1));
        assert_eq!(c.partner(1, 1, 0), Some(2));
    }

    #[test]
    fn reused_cover_vertex_is_rejected() {
        let err = Cover::build(
            &edge(),
            ListAssignment::uniform(2, 2),
            &[((0, 1), vec![(1, 1), (1, 2)])],
        );
        assert_eq!(
            err,
            Err(CoverError::NotAMatching {
                edge: (0, 1),
                vertex: 0,
                color: 1
            })
        );
    }

    #[test]
    fn unknown_colour_and_edge() {
        let lists = ListAssignment::uniform(2, 2);
        assert_eq!(
            Cover::build(&edge(), lists.clone(), &[((0, 1), vec![(3, 1)])]),
            Err(CoverError::UnknownColor {
                vertex: 0,
                color: 3
            })
        );
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(
            Cover::build(&g, ListAssignment::uniform(3, 2), &[((1, 2), vec![])]),
            Err(CoverError::UnknownEdge { u: 1, v: 2 })
        );
    }

    #[test]
    fn list_validation() {
        assert_eq!(
            ListAssignment::new(vec![vec![]]),
            Err(CoverError::EmptyList(0))
        );
        assert_eq!(
            ListAssignment::new(vec![vec![1, 1]]),
            Err(CoverError::DuplicateColor {
                vertex: 0,
                color: 1
            })
        );
        assert_eq!(
            ListAssignment::new(vec![vec![2, 1]])
                .unwrap()
                .uniform_size(),
            Some(2)
        );
    }

    #[test]
    fn empty_matchings_accept_everything() {
        let g = cycle(3);
        let lists = ListAssignment::new(vec![vec![1], vec![1, 5], vec![7]]).unwrap();
        let c = Cover::build(&g, lists, &[]).unwrap();
        assert_eq!(count_transversals(&c), 2);
    }

    #[test]
    fn identity_cover_counts_proper_colourings() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(count_transversals(&Cover::identity(&k4, 4).unwrap()), 24);
        assert_eq!(
            count_transversals(&Cover::identity(&Graph::empty(1), 1).unwrap()),
            1
        );
        assert_eq!(
            count_transversals(&Cover::identity(&cycle(3), 2).unwrap()),
            0
        );
    }

    #[test]
    fn random_covers_are_reproducible() {
        let g = cycle(5);
        let a = Cover::random_permutation(&g, 3, 42).unwrap();
        assert_eq!(a, Cover::random_permutation(&g, 3, 42).unwrap());
        assert_eq!(a.uniform_permutation_size(), Ok(3));
    }

    #[test]
    fn twisted_c4_appears_within_sixteen_seeds() {
        let g = cycle(4);
        let twisted = (0..16u64)
            .map(|s| Cover::random_permutation(&g, 2, s).unwrap())
            .filter(|c| count_transversals(c) == 0)
            .count();
        assert!(twisted >= 1);
    }

    #[test]
    fn normalizing_identity_is_a_fixed_point() {
        let g = cycle(4);
        let c = Cover::identity(&g, 3).unwrap();
        let n = normalize_cover(&c, &SpanningTree::bfs(&g).unwrap()).unwrap();
        assert_eq!(n.cover, c);
    }

    #[test]
    fn normalizing_pushes_swap_off_the_tree() {
        let g = cycle(3);
        let c = Cover::build(
            &g,
            ListAssignment::uniform(3, 2),
            &[
                ((0, 1), vec![(1, 2), (2, 1)]),
                ((1, 2), vec![(1, 1), (2, 2)]),
                ((0, 2), vec![(1, 1), (2, 2)]),
            ],
        )
        .unwrap();
        let tree = SpanningTree::bfs(&g).unwrap();
        let n = normalize_cover(&c, &tree).unwrap();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let identity = n.cover.matching(e).pairs() == [(1, 1), (2, 2)];
            assert_eq!(identity, tree.is_tree_edge(u, v));
        }
        // One twist on a triangle: 2 transversals before and after.
        assert_eq!(count_transversals(&c), 2);
        assert_eq!(count_transversals(&n.cover), 2);
    }

    #[test]
    fn normalizing_a_path_gives_identity() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = Cover::random_permutation(&g, 2, 9).unwrap();
        let n = normalize_cover(&c, &SpanningTree::bfs(&g).unwrap()).unwrap();
        assert_eq!(n.cover, Cover::identity(&g, 2).unwrap());
        assert_eq!(count_transversals(&c), count_transversals(&n.cover));
        assert_eq!(count_transversals(&c), 2);
    }

    #[test]
    fn normalization_rejects_partial_and_disconnected() {
        let g = edge();
        let partial =
            Cover::build(&g, ListAssignment::uniform(2, 2), &[((0, 1), vec![(1, 1)])]).unwrap();
        let tree = SpanningTree::bfs(&g).unwrap();
        assert_eq!(
            normalize_cover(&partial, &tree),
            Err(CoverError::NotPermutationCover((0, 1)))
        );
        let split = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(SpanningTree::bfs(&split), Err(CoverError::DisconnectedBase));
    }
}
