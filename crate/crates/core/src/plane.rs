//! Plane graphs given by a rotation system.
//!
//! Every vertex lists its neighbours in counterclockwise order. Faces are
//! traced with the usual next-edge rule: after the dart `(u, v)` the walk
//! continues with `(v, w)` where `w` follows `u` in the rotation at `v`.
//! A face boundary is a closed walk and may repeat vertices and edges.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::graph::{normalize, Edge, Graph, GraphError, Vertex};

/// Index into [`PlaneGraph::faces`].
pub type FaceId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    /// Vertices in walk order; `boundary[i] -> boundary[i + 1]` is a dart.
    pub boundary: Vec<Vertex>,
}

impl Face {
    /// Number of darts on the walk. A cut edge counts twice; an isolated
    /// vertex bounds a face of length 0.
    pub fn len(&self) -> usize {
        if self.boundary.len() == 1 {
            0
        } else {
            self.boundary.len()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Directed edges in walk order.
    pub fn darts(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.len();
        (0..n).map(move |i| (self.boundary[i], self.boundary[(i + 1) % n]))
    }

    /// Undirected boundary edges in walk order (a cut edge appears twice).
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.darts().map(|(u, v)| normalize(u, v))
    }

    /// True when no vertex repeats, i.e. the boundary is a cycle.
    pub fn is_cycle(&self) -> bool {
        let mut seen: Vec<Vertex> = self.boundary.clone();
        seen.sort_unstable();
        seen.dedup();
        self.len() >= 3 && seen.len() == self.boundary.len()
    }
}

/// An immutable plane graph: abstract graph, rotation system and traced faces.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    graph: Graph,
    rotations: Vec<Vec<Vertex>>,
    faces: Vec<Face>,
    dart_ids: HashMap<(Vertex, Vertex), usize>,
    dart_offsets: Vec<usize>,
    /// `(face, position in boundary)` for every dart id.
    dart_slots: Vec<(FaceId, usize)>,
    isolated_faces: Vec<Option<FaceId>>,
}

impl PlaneGraph {
    /// Validates a rotation system and traces its faces.
    pub fn build(vertex_count: usize, rotations: Vec<Vec<Vertex>>) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::EmptyGraph);
        }
        if rotations.len() != vertex_count {
            return Err(GraphError::RotationCountMismatch {
                expected: vertex_count,
                found: rotations.len(),
            });
        }
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &w) in rot.iter().enumerate() {
                if w >= vertex_count {
                    return Err(GraphError::InvalidVertex(w));
                }
                if w == v {
                    return Err(GraphError::SelfLoop(v));
                }
                if rot[..i].contains(&w) {
                    return Err(GraphError::DuplicateNeighbor {
                        vertex: v,
                        neighbor: w,
                    });
                }
            }
        }
        for (v, rot) in rotations.iter().enumerate() {
            for &w in rot {
                if !rotations[w].contains(&v) {
                    return Err(GraphError::NonSymmetricAdjacency { from: v, to: w });
                }
            }
        }
        let graph = Graph::from_adjacency_unchecked(rotations.clone());

        let mut dart_offsets = Vec::with_capacity(vertex_count + 1);
        let mut dart_ids = HashMap::new();
        let mut total = 0;
        for (v, rot) in rotations.iter().enumerate() {
            dart_offsets.push(total);
            for (i, &w) in rot.iter().enumerate() {
                dart_ids.insert((v, w), total + i);
            }
            total += rot.len();
        }
        dart_offsets.push(total);

        let mut pg = PlaneGraph {
            graph,
            rotations,
            faces: Vec::new(),
            dart_ids,
            dart_offsets,
            dart_slots: vec![(usize::MAX, 0); total],
            isolated_faces: vec![None; vertex_count],
        };
        pg.trace();
        pg.check_euler()?;
        Ok(pg)
    }

    /// Builds a plane graph from face boundaries. Every edge must lie on at
    /// least one listed face. Faces may be given in either orientation; they
    /// are reoriented to agree with the first face. At most one face may be
    /// omitted, provided its boundary visits each vertex at most once (the
    /// usual case of an outer face bounded by a cycle).
    pub fn from_faces(vertex_count: usize, faces: &[Vec<Vertex>]) -> Result<Self, GraphError> {
        let faces = orient_faces(faces)?;
        let mut neighbors: Vec<Vec<Vertex>> = vec![Vec::new(); vertex_count];
        let mut succ: Vec<BTreeMap<Vertex, Vertex>> = vec![BTreeMap::new(); vertex_count];
        for face in &faces {
            let n = face.len();
            for i in 0..n {
                let (u, v, w) = (face[i], face[(i + 1) % n], face[(i + 2) % n]);
                for x in [u, v, w] {
                    if x >= vertex_count {
                        return Err(GraphError::InvalidVertex(x));
                    }
                }
                if !neighbors[v].contains(&u) {
                    neighbors[v].push(u);
                }
                if !neighbors[v].contains(&w) {
                    neighbors[v].push(w);
                }
                if succ[v].insert(u, w).is_some_and(|old| old != w) {
                    return Err(GraphError::AmbiguousRotation(v));
                }
            }
        }
        let mut rotations = Vec::with_capacity(vertex_count);
        for v in 0..vertex_count {
            rotations.push(close_rotation(v, &neighbors[v], &succ[v])?);
        }
        Self::build(vertex_count, rotations)
    }

    fn trace(&mut self) {
        let total = self.dart_slots.len();
        for start in 0..total {
            if self.dart_slots[start].0 != usize::MAX {
                continue;
            }
            let id = self.faces.len();
            let mut boundary = Vec::new();
            let (mut u, mut v) = self.dart_endpoints(start);
            loop {
                let d = self.dart_ids[&(u, v)];
                if self.dart_slots[d].0 != usize::MAX {
                    break;
                }
                self.dart_slots[d] = (id, boundary.len());
                boundary.push(u);
                let next = self.rotation_successor(v, u);
                u = v;
                v = next;
            }
            self.faces.push(Face { id, boundary });
        }
        for v in 0..self.vertex_count() {
            if self.rotations[v].is_empty() {
                let id = self.faces.len();
                self.faces.push(Face {
                    id,
                    boundary: vec![v],
                });
                self.isolated_faces[v] = Some(id);
            }
        }
    }

    fn dart_endpoints(&self, dart: usize) -> (Vertex, Vertex) {
        let u = self.dart_offsets.partition_point(|&o| o <= dart) - 1;
        (u, self.rotations[u][dart - self.dart_offsets[u]])
    }

    fn check_euler(&self) -> Result<(), GraphError> {
        for comp in self.graph.components() {
            let v = comp.len() as i64;
            let e: i64 = comp
                .iter()
                .map(|&x| self.graph.degree(x) as i64)
                .sum::<i64>()
                / 2;
            let mut faces: Vec<FaceId> =
                comp.iter().flat_map(|&x| self.incident_faces(x)).collect();
            faces.sort_unstable();
            faces.dedup();
            let euler = v - e + faces.len() as i64;
            if euler != 2 {
                return Err(GraphError::NonPlanarEmbedding {
                    root: comp[0],
                    euler,
                });
            }
        }
        Ok(())
    }

    /// Neighbour following `u` in the counterclockwise rotation at `v`.
    pub fn rotation_successor(&self, v: Vertex, u: Vertex) -> Vertex {
        let rot = &self.rotations[v];
        let pos = self.dart_ids[&(v, u)] - self.dart_offsets[v];
        rot[(pos + 1) % rot.len()]
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.graph.degree(v)
    }

    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<Vertex>] {
        &self.rotations
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f]
    }

    /// Face whose boundary walk contains the dart `u -> v`.
    pub fn face_of_dart(&self, u: Vertex, v: Vertex) -> Option<FaceId> {
        self.dart_ids.get(&(u, v)).map(|&d| self.dart_slots[d].0)
    }

    /// `(face, position)` of the dart `u -> v`.
    pub fn dart_slot(&self, u: Vertex, v: Vertex) -> Option<(FaceId, usize)> {
        self.dart_ids.get(&(u, v)).map(|&d| self.dart_slots[d])
    }

    /// The two faces on either side of edge `uv` (equal for a cut edge).
    pub fn faces_of_edge(&self, u: Vertex, v: Vertex) -> Option<(FaceId, FaceId)> {
        Some((self.face_of_dart(u, v)?, self.face_of_dart(v, u)?))
    }

    /// Corners at `v` as `(face, position)` pairs, one per outgoing dart in
    /// rotation order. A face meeting `v` twice contributes two corners.
    pub fn corners(&self, v: Vertex) -> Vec<(FaceId, usize)> {
        if let Some(f) = self.isolated_faces[v] {
            return vec![(f, 0)];
        }
        self.rotations[v]
            .iter()
            .map(|&w| self.dart_slot(v, w).expect("rotation darts are traced"))
            .collect()
    }

    /// Faces at `v` with multiplicity, in rotation order.
    pub fn incident_faces(&self, v: Vertex) -> Vec<FaceId> {
        self.corners(v).into_iter().map(|(f, _)| f).collect()
    }

    /// Faces sharing at least one edge with `f`, excluding `f` itself, each
    /// paired with the first shared edge along `f`'s walk.
    pub fn adjacent_faces(&self, f: FaceId) -> Vec<(FaceId, Edge)> {
        let mut out: Vec<(FaceId, Edge)> = Vec::new();
        for (u, v) in self.faces[f].darts() {
            let h = self.face_of_dart(v, u).expect("reverse dart exists");
            if h != f && !out.iter().any(|&(g, _)| g == h) {
                out.push((h, normalize(u, v)));
            }
        }
        out
    }

    pub fn faces_adjacent(&self, f: FaceId, h: FaceId) -> bool {
        faces_adjacent(&self.faces[f], &self.faces[h])
    }

    pub fn shortest_distance(&self, u: Vertex, v: Vertex) -> Result<Option<usize>, GraphError> {
        self.graph.shortest_distance(u, v)
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    /// Deletes edge `uv` from the rotation system. Adjacent faces merge.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<Self, GraphError> {
        let mut rotations = self.rotations.clone();
        rotations[u].retain(|&x| x != v);
        rotations[v].retain(|&x| x != u);
        Self::build(self.vertex_count(), rotations)
    }
}

/// Faces are adjacent when their walks share an undirected edge. A face is
/// never adjacent to itself.
pub fn faces_adjacent(f: &Face, h: &Face) -> bool {
    if f.id == h.id {
        return false;
    }
    f.edges().any(|e| h.edges().any(|x| x == e))
}

fn close_rotation(
    v: Vertex,
    neighbors: &[Vertex],
    succ: &BTreeMap<Vertex, Vertex>,
) -> Result<Vec<Vertex>, GraphError> {
    if neighbors.is_empty() {
        return Ok(Vec::new());
    }
    let mut has_pred: Vec<Vertex> = succ.values().copied().collect();
    has_pred.sort_unstable();
    if has_pred.windows(2).any(|w| w[0] == w[1]) {
        return Err(GraphError::AmbiguousRotation(v));
    }
    let heads: Vec<Vertex> = neighbors
        .iter()
        .copied()
        .filter(|u| has_pred.binary_search(u).is_err())
        .collect();
    let start = match heads.as_slice() {
        [] => *neighbors.iter().min().expect("non-empty"),
        [h] => *h,
        _ => return Err(GraphError::AmbiguousRotation(v)),
    };
    let mut rot = vec![start];
    let mut cur = start;
    while let Some(&next) = succ.get(&cur) {
        if next == start {
            break;
        }
        if rot.contains(&next) {
            return Err(GraphError::AmbiguousRotation(v));
        }
        rot.push(next);
        cur = next;
    }
    if rot.len() != neighbors.len() {
        return Err(GraphError::AmbiguousRotation(v));
    }
    Ok(rot)
}

/// Reorients face walks so that every edge shared by two faces is traversed
/// in opposite directions.
fn orient_faces(faces: &[Vec<Vertex>]) -> Result<Vec<Vec<Vertex>>, GraphError> {
    let mut by_edge: HashMap<Edge, Vec<usize>> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for j in 0..f.len() {
            by_edge
                .entry(normalize(f[j], f[(j + 1) % f.len()]))
                .or_default()
                .push(i);
        }
    }
    let darts_of = |f: &[Vertex]| -> Vec<(Vertex, Vertex)> {
        (0..f.len()).map(|j| (f[j], f[(j + 1) % f.len()])).collect()
    };
    let mut out: Vec<Option<Vec<Vertex>>> = vec![None; faces.len()];
    for root in 0..faces.len() {
        if out[root].is_some() {
            continue;
        }
        out[root] = Some(faces[root].clone());
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let fi = out[i].clone().expect("oriented");
            for (a, b) in darts_of(&fi) {
                for &j in &by_edge[&normalize(a, b)] {
                    if j == i {
                        continue;
                    }
                    let same_direction = darts_of(&faces[j]).contains(&(a, b));
                    let candidate = if same_direction {
                        let mut r = faces[j].clone();
                        r.reverse();
                        r
                    } else {
                        faces[j].clone()
                    };
                    match &out[j] {
                        None => {
                            out[j] = Some(candidate);
                            queue.push_back(j);
                        }
                        Some(existing) => {
                            if darts_of(existing).contains(&(a, b)) {
                                return Err(GraphError::AmbiguousRotation(a));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out
        .into_iter()
        .map(|f| f.expect("all faces oriented"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> PlaneGraph {
        // Vertex 3 sits inside triangle 0 1 2.
        PlaneGraph::build(
            4,
            vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
        )
        .unwrap()
    }

    fn cycle(n: usize) -> PlaneGraph {
        let rot = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
        PlaneGraph::build(n, rot).unwrap()
    }

    fn cube() -> PlaneGraph {
        // Outer square 0 1 2 3, inner square 4 5 6 7, spokes i -- i + 4.
        PlaneGraph::build(
            8,
            vec![
                vec![1, 4, 3],
                vec![2, 5, 0],
                vec![3, 6, 1],
                vec![0, 7, 2],
                vec![0, 5, 7],
                vec![1, 6, 4],
                vec![2, 7, 5],
                vec![3, 4, 6],
            ],
        )
        .unwrap()
    }

    #[test]
    fn k4_has_four_triangles() {
        let g = k4();
        assert_eq!(
            (g.vertex_count(), g.edge_count(), g.face_count()),
            (4, 6, 4)
        );
        assert!(g.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn single_edge() {
        let g = PlaneGraph::build(2, vec![vec![1], vec![0]]).unwrap();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.face(0).boundary, vec![0, 1]);
        assert_eq!(g.face(0).len(), 2);
    }

    #[test]
    fn isolated_vertex_has_an_empty_face() {
        let g = PlaneGraph::build(1, vec![vec![]]).unwrap();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.face(0).len(), 0);
        assert_eq!(g.corners(0), vec![(0, 0)]);
    }

    #[test]
    fn cube_has_six_quadrilaterals() {
        let g = cube();
        assert_eq!(g.face_count(), 6);
        assert!(g.faces().iter().all(|f| f.len() == 4 && f.is_cycle()));
        assert_eq!(g.shortest_distance(0, 6), Ok(Some(3)));
    }

    #[test]
    fn cycles_have_two_faces() {
        for n in [3, 10] {
            let g = cycle(n);
            assert_eq!(g.face_count(), 2);
            assert!(g.faces().iter().all(|f| f.len() == n));
            assert!(g.faces_adjacent(0, 1));
            assert!(!g.faces_adjacent(0, 0));
        }
    }

    #[test]
    fn bowtie_outer_face_is_not_a_cycle() {
        // Triangles 0 1 2 and 0 3 4 sharing vertex 0.
        let g = PlaneGraph::build(
            5,
            vec![
                vec![1, 2, 3, 4],
                vec![2, 0],
                vec![0, 1],
                vec![4, 0],
                vec![0, 3],
            ],
        )
        .unwrap();
        let mut lens: Vec<usize> = g.faces().iter().map(Face::len).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![3, 3, 6]);
        let big = g.faces().iter().find(|f| f.len() == 6).unwrap();
        assert!(!big.is_cycle());
        assert_eq!(big.boundary.iter().filter(|&&v| v == 0).count(), 2);
    }

    #[test]
    fn opposite_cube_faces_are_not_adjacent() {
        let g = cube();
        let outer = g.face_of_dart(0, 1).unwrap();
        let inner = g.face_of_dart(5, 4).unwrap();
        assert_ne!(outer, inner);
        assert!(!g.faces_adjacent(outer, inner));
        assert_eq!(g.adjacent_faces(outer).len(), 4);
    }

    #[test]
    fn rejects_bad_rotations() {
        assert_eq!(
            PlaneGraph::build(2, vec![vec![1], vec![]]).unwrap_err(),
            GraphError::NonSymmetricAdjacency { from: 0, to: 1 }
        );
        assert_eq!(
            PlaneGraph::build(1, vec![vec![0]]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert_eq!(
            PlaneGraph::build(2, vec![vec![1, 1], vec![0]]).unwrap_err(),
            GraphError::DuplicateNeighbor {
                vertex: 0,
                neighbor: 1
            }
        );
        // K4 with one rotation flipped is a torus-like embedding.
        let err = PlaneGraph::build(
            4,
            vec![vec![1, 2, 3], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
        );
        assert!(matches!(err, Err(GraphError::NonPlanarEmbedding { .. })));
    }

    #[test]
    fn from_faces_recovers_the_cube() {
        let g = PlaneGraph::from_faces(
            8,
            &[
                vec![0, 1, 2, 3],
                vec![0, 1, 5, 4],
                vec![1, 2, 6, 5],
                vec![2, 3, 7, 6],
                vec![3, 0, 4, 7],
            ],
        )
        .unwrap();
        assert_eq!(g.face_count(), 6);
        assert!(g.faces().iter().all(|f| f.len() == 4));
    }

    #[test]
    fn face_walk_partitions_darts() {
        let g = cube();
        let total: usize = g.faces().iter().map(Face::len).sum();
        assert_eq!(total, 2 * g.edge_count());
        for (u, v) in g.faces().iter().flat_map(|f| f.darts().collect::<Vec<_>>()) {
            assert!(g.graph().has_edge(u, v));
        }
    }
}
