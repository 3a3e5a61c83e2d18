//! Named fixtures, discharging gadgets and seeded random plane graphs.
//!
//! Most graphs are built from straight-line drawings: each rotation is the
//! neighbour list sorted by angle, which is a valid embedding whenever the
//! drawing has no crossings.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{normalize, Edge, Graph, Vertex};
use crate::plane::{FaceId, PlaneGraph};

#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: String,
    pub graph: PlaneGraph,
}

impl NamedGraph {
    fn new(name: impl Into<String>, graph: PlaneGraph) -> Self {
        NamedGraph {
            name: name.into(),
            graph,
        }
    }
}

type Point = (f64, f64);

fn polar(r: f64, degrees: f64) -> Point {
    let t = degrees * PI / 180.0;
    (r * t.cos(), r * t.sin())
}

/// Embeds a crossing-free straight-line drawing.
fn from_drawing(points: &[Point], edges: &[Edge]) -> PlaneGraph {
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); points.len()];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for (v, list) in adj.iter_mut().enumerate() {
        let (x, y) = points[v];
        list.sort_by(|&a, &b| {
            let ta = (points[a].1 - y).atan2(points[a].0 - x);
            let tb = (points[b].1 - y).atan2(points[b].0 - x);
            ta.total_cmp(&tb)
        });
    }
    PlaneGraph::build(points.len(), adj)
        .unwrap_or_else(|e| panic!("drawing is not crossing-free: {e} {points:?} {edges:?}"))
}

fn ring(n: usize, offset: usize) -> Vec<Edge> {
    (0..n).map(|i| (offset + i, offset + (i + 1) % n)).collect()
}

fn regular(n: usize, r: f64, phase: f64) -> Vec<Point> {
    (0..n)
        .map(|i| polar(r, phase + 360.0 * i as f64 / n as f64))
        .collect()
}

pub fn cycle(n: usize) -> PlaneGraph {
    assert!(n >= 3, "cycles need three vertices");
    from_drawing(&regular(n, 10.0, 0.0), &ring(n, 0))
}

pub fn path(n: usize) -> PlaneGraph {
    let points: Vec<Point> = (0..n).map(|i| (i as f64, 0.0)).collect();
    let edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
    from_drawing(&points, &edges)
}

pub fn star(leaves: usize) -> PlaneGraph {
    let mut points = vec![(0.0, 0.0)];
    points.extend(regular(leaves, 10.0, 0.0));
    let edges: Vec<Edge> = (1..=leaves).map(|i| (0, i)).collect();
    from_drawing(&points, &edges)
}

pub fn wheel(rim: usize) -> PlaneGraph {
    let mut points = regular(rim, 10.0, 0.0);
    points.push((0.0, 0.0));
    let mut edges = ring(rim, 0);
    edges.extend((0..rim).map(|i| (i, rim)));
    from_drawing(&points, &edges)
}

pub fn prism(n: usize) -> PlaneGraph {
    let mut points = regular(n, 10.0, 0.0);
    points.extend(regular(n, 5.0, 0.0));
    let mut edges = ring(n, 0);
    edges.extend(ring(n, n));
    edges.extend((0..n).map(|i| (i, n + i)));
    from_drawing(&points, &edges)
}

pub fn k4() -> PlaneGraph {
    PlaneGraph::from_faces(
        4,
        &[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]],
    )
    .expect("K4")
}

pub fn cube() -> PlaneGraph {
    prism(4)
}

pub fn octahedron() -> PlaneGraph {
    let faces = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 1],
        [5, 2, 1],
        [5, 3, 2],
        [5, 4, 3],
        [5, 1, 4],
    ];
    PlaneGraph::from_faces(6, &faces.map(|f| f.to_vec())).expect("octahedron")
}

pub fn dodecahedron() -> PlaneGraph {
    let mut points = regular(5, 10.0, 90.0);
    points.extend(regular(10, 6.0, 90.0));
    points.extend(regular(5, 3.0, 126.0));
    let mut edges = ring(5, 0);
    edges.extend(ring(10, 5));
    edges.extend(ring(5, 15));
    edges.extend((0..5).map(|i| (i, 5 + 2 * i)));
    edges.extend((0..5).map(|i| (6 + 2 * i, 15 + i)));
    from_drawing(&points, &edges)
}

pub fn grid(rows: usize, cols: usize) -> PlaneGraph {
    let id = |i: usize, j: usize| i * cols + j;
    let mut points = Vec::new();
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            points.push((j as f64, i as f64));
            if j + 1 < cols {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < rows {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    from_drawing(&points, &edges)
}

/// Keeps the vertices in `keep` (which must induce a connected subgraph).
fn restrict(points: &[Point], edges: &[Edge], keep: &BTreeSet<Vertex>) -> PlaneGraph {
    let ids: Vec<Vertex> = keep.iter().copied().collect();
    let mut new_id = vec![usize::MAX; points.len()];
    for (i, &v) in ids.iter().enumerate() {
        new_id[v] = i;
    }
    let pts: Vec<Point> = ids.iter().map(|&v| points[v]).collect();
    let es: Vec<Edge> = edges
        .iter()
        .filter(|(u, v)| keep.contains(u) && keep.contains(v))
        .map(|&(u, v)| (new_id[u], new_id[v]))
        .collect();
    from_drawing(&pts, &es)
}

/// Honeycomb patch with `rows` rows of `cols` hexagons (drawn as a brick
/// wall), with dangling ends trimmed.
pub fn hex_patch(rows: usize, cols: usize) -> PlaneGraph {
    assert!(
        rows >= 1 && cols >= 1,
        "hex patch needs at least one hexagon"
    );
    let width = 2 * cols + 1;
    let id = |i: usize, j: usize| i * width + j;
    let mut points = Vec::new();
    let mut edges = Vec::new();
    for i in 0..=rows {
        for j in 0..width {
            points.push((j as f64, i as f64));
            if j + 1 < width {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i < rows && (i + j) % 2 == 0 {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    let mut keep: BTreeSet<Vertex> = (0..points.len()).collect();
    loop {
        let degree = |v: Vertex| {
            edges
                .iter()
                .filter(|&&(a, b)| (a == v || b == v) && keep.contains(&a) && keep.contains(&b))
                .count()
        };
        let leaves: Vec<Vertex> = keep.iter().copied().filter(|&v| degree(v) <= 1).collect();
        if leaves.is_empty() {
            break;
        }
        for v in leaves {
            keep.remove(&v);
        }
    }
    restrict(&points, &edges, &keep)
}

/// Random stacked triangulation drawn with centroid insertion: returns the
/// drawing so callers can modify it before embedding.
fn stacked_drawing(n: usize, rng: &mut ChaCha8Rng) -> (Vec<Point>, Vec<Edge>) {
    let mut points = vec![(0.0, 0.0), (100.0, 0.0), (50.0, 87.0)];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut faces = vec![[0, 1, 2]];
    while points.len() < n.max(3) {
        let idx = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(idx);
        let v = points.len();
        points.push((
            (points[a].0 + points[b].0 + points[c].0) / 3.0,
            (points[a].1 + points[b].1 + points[c].1) / 3.0,
        ));
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
    }
    (points, edges)
}

pub fn stacked_triangulation(n: usize, seed: u64) -> PlaneGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (points, edges) = stacked_drawing(n, &mut rng);
    from_drawing(&points, &edges)
}

/// Stacked triangulation with up to `deletions` random edges removed,
/// never disconnecting the graph.
pub fn random_planar(n: usize, deletions: usize, seed: u64) -> PlaneGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (points, mut edges) = stacked_drawing(n, &mut rng);
    edges.shuffle(&mut rng);
    let mut removed = 0;
    let mut i = 0;
    while removed < deletions && i < edges.len() {
        let candidate: Vec<Edge> = edges
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(points.len(), &candidate).expect("simple");
        if g.is_connected() {
            edges = candidate;
            removed += 1;
        } else {
            i += 1;
        }
    }
    from_drawing(&points, &edges)
}

fn subdivide(points: &mut Vec<Point>, edges: &[Edge], parts: usize) -> Vec<Edge> {
    let mut out = Vec::new();
    for &(u, v) in edges {
        let mut prev = u;
        for s in 1..parts {
            let t = s as f64 / parts as f64;
            let w = points.len();
            points.push((
                points[u].0 + t * (points[v].0 - points[u].0),
                points[u].1 + t * (points[v].1 - points[u].1),
            ));
            out.push((prev, w));
            prev = w;
        }
        out.push((prev, v));
    }
    out
}

/// Random stacked triangulation on `n` vertices with every edge split into
/// `parts` edges.
pub fn subdivided_planar(n: usize, parts: usize, seed: u64) -> PlaneGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut points, edges) = stacked_drawing(n, &mut rng);
    let edges = subdivide(&mut points, &edges, parts.max(1));
    from_drawing(&points, &edges)
}

/// A graph with far-apart triangles and no 4-, 5-, 7-, 6-, 8- or 9-cycles:
/// a stacked triangulation with edges split in four, then up to
/// `triangles` of its original degree-3 vertices replaced by triangles.
pub fn sparse_triangles(n: usize, triangles: usize, seed: u64) -> PlaneGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut points, base) = stacked_drawing(n, &mut rng);
    let original = points.len();
    let mut edges = subdivide(&mut points, &base, 4);
    // Inner vertices only: the outer three have a reflex angle.
    let mut candidates: Vec<Vertex> = (3..original)
        .filter(|&v| base.iter().filter(|&&(a, b)| a == v || b == v).count() == 3)
        .collect();
    candidates.shuffle(&mut rng);
    let mut dropped = BTreeSet::new();
    for &v in candidates.iter().take(triangles) {
        let nbrs: Vec<Vertex> = edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        let mut corners = Vec::new();
        for &w in &nbrs {
            let c = points.len();
            points.push((
                points[v].0 + 0.4 * (points[w].0 - points[v].0),
                points[v].1 + 0.4 * (points[w].1 - points[v].1),
            ));
            corners.push(c);
            edges.retain(|&e| e != normalize(v, w) && e != (v, w) && e != (w, v));
            edges.push((c, w));
        }
        edges.extend([
            (corners[0], corners[1]),
            (corners[1], corners[2]),
            (corners[2], corners[0]),
        ]);
        dropped.insert(v);
    }
    let keep: BTreeSet<Vertex> = (0..points.len()).filter(|v| !dropped.contains(v)).collect();
    restrict(&points, &edges, &keep)
}

/// Named fixtures used by the tests and the CLI.
pub fn fixtures() -> Vec<NamedGraph> {
    let mut out = vec![
        NamedGraph::new("k4", k4()),
        NamedGraph::new("cube", cube()),
        NamedGraph::new("octahedron", octahedron()),
        NamedGraph::new("dodecahedron", dodecahedron()),
        NamedGraph::new("path5", path(5)),
        NamedGraph::new("star4", star(4)),
        NamedGraph::new("wheel5", wheel(5)),
        NamedGraph::new("wheel6", wheel(6)),
        NamedGraph::new("prism3", prism(3)),
        NamedGraph::new("prism5", prism(5)),
        NamedGraph::new("grid3x3", grid(3, 3)),
        NamedGraph::new("grid3x4", grid(3, 4)),
        NamedGraph::new("hex1x2", hex_patch(1, 2)),
        NamedGraph::new("hex2x2", hex_patch(2, 2)),
        NamedGraph::new("hex3x3", hex_patch(3, 3)),
        NamedGraph::new("special-face", gadgets::special_face().0),
        NamedGraph::new("bad-face", gadgets::bad_face().0),
        NamedGraph::new("poor-seven-face", gadgets::poor_seven_face().0),
    ];
    for n in 3..=12 {
        out.push(NamedGraph::new(format!("c{n}"), cycle(n)));
    }
    out
}

/// Fixtures plus seeded random graphs; at least fifty in total.
pub fn corpus() -> Vec<NamedGraph> {
    let mut out = fixtures();
    for seed in 0..8 {
        out.push(NamedGraph::new(
            format!("stacked-{seed}"),
            stacked_triangulation(6 + 2 * seed as usize, seed),
        ));
        out.push(NamedGraph::new(
            format!("planar-{seed}"),
            random_planar(8 + seed as usize, 4 + seed as usize, seed),
        ));
        out.push(NamedGraph::new(
            format!("subdivided-{seed}"),
            subdivided_planar(4 + seed as usize % 3, 2, seed),
        ));
        out.push(NamedGraph::new(
            format!("sparse-triangles-{seed}"),
            sparse_triangles(5 + seed as usize, 2, seed),
        ));
    }
    out
}

pub mod gadgets {
    //! Isolated configurations whose final charges have closed forms.

    use super::*;

    fn face_of_length(g: &PlaneGraph, u: Vertex, v: Vertex, len: usize) -> FaceId {
        let (a, b) = g.faces_of_edge(u, v).expect("edge exists");
        if g.face(a).len() == len {
            a
        } else {
            assert_eq!(g.face(b).len(), len);
            b
        }
    }

    /// A special 10-face `0..10` with triangles on six of its edges. Returns
    /// the graph and the special face.
    pub fn special_face() -> (PlaneGraph, FaceId) {
        let mut points = regular(10, 10.0, 0.0);
        let mut edges = ring(10, 0);
        for i in [0, 1, 3, 5, 7, 8] {
            let apex = points.len();
            points.push(polar(13.0, 36.0 * i as f64 + 18.0));
            edges.extend([(i, apex), ((i + 1) % 10, apex)]);
        }
        let g = from_drawing(&points, &edges);
        let f = face_of_length(&g, 0, 1, 10);
        (g, f)
    }

    /// A bad 10-face `0..10` adjacent to two special faces that share a
    /// triangle. Returns the graph, the bad face and the two special faces.
    pub fn bad_face() -> (PlaneGraph, FaceId, [FaceId; 2]) {
        let mut points = regular(10, 10.0, 0.0);
        let mut edges = ring(10, 0);
        for j in 0..5 {
            points.push(polar(13.0, 72.0 * j as f64 + 18.0));
            edges.extend([(2 * j, 10 + j), (2 * j + 1, 10 + j)]);
        }
        let (u1, u3, u5) = (10, 11, 12);
        // Paths p1..p6 (from u3 back to u1) and q1..q6 (from u5 to u3).
        let p: Vec<Vertex> = (15..21).collect();
        for (i, _) in p.iter().enumerate() {
            points.push(polar(18.0, 84.0 - 12.0 * i as f64));
        }
        let q: Vec<Vertex> = (21..27).collect();
        for (i, _) in q.iter().enumerate() {
            points.push(polar(18.0, 156.0 - 12.0 * i as f64));
        }
        edges.push((u3, p[0]));
        edges.extend(p.windows(2).map(|w| (w[0], w[1])));
        edges.push((p[5], u1));
        edges.push((u5, q[0]));
        edges.extend(q.windows(2).map(|w| (w[0], w[1])));
        edges.push((q[5], u3));
        edges.push((p[0], q[5]));
        let mut apex = |a: Vertex, b: Vertex, at: Point, points: &mut Vec<Point>| {
            let x = points.len();
            points.push(at);
            edges.extend([(a, x), (b, x)]);
        };
        apex(p[1], p[2], polar(22.0, 66.0), &mut points);
        apex(p[3], p[4], polar(22.0, 42.0), &mut points);
        apex(p[5], u1, polar(16.0, 12.0), &mut points);
        apex(q[1], q[2], polar(22.0, 138.0), &mut points);
        apex(q[3], q[4], polar(22.0, 114.0), &mut points);
        apex(u5, q[0], polar(16.0, 168.0), &mut points);
        let g = from_drawing(&points, &edges);
        let bad = face_of_length(&g, 0, 1, 10);
        let left = face_of_length(&g, 1, 2, 10);
        let right = face_of_length(&g, 3, 4, 10);
        (g, bad, [left, right])
    }

    /// A 5-vertex `0` on two triangles whose three remaining corners lie on
    /// a single 12-face.
    pub fn five_vertex() -> PlaneGraph {
        let points = [
            (0.0, 0.0),
            polar(5.0, 0.0),
            polar(5.0, 40.0),
            polar(5.0, 120.0),
            polar(5.0, 160.0),
            polar(3.0, 240.0),
            polar(6.0, 240.0),
            polar(9.0, 240.0),
        ];
        from_drawing(
            &points,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (0, 3),
                (3, 4),
                (0, 4),
                (0, 5),
                (5, 6),
                (6, 7),
            ],
        )
    }

    /// A poor 7-face `0..7` with 4-faces on edges `01`, `23` and `45`, all
    /// drawn around an inner hub. Returns the graph and the 7-face.
    pub fn poor_seven_face() -> (PlaneGraph, FaceId) {
        let theta = |i: usize| 360.0 * i as f64 / 7.0;
        let mut points = regular(7, 10.0, 0.0);
        let mut edges = ring(7, 0);
        for j in 0..3 {
            let (a, b) = (2 * j, 2 * j + 1);
            let (x, y) = (points.len(), points.len() + 1);
            points.push(polar(6.0, theta(a) + 8.0));
            points.push(polar(6.0, theta(b) - 8.0));
            edges.extend([(a, x), (x, y), (y, b)]);
        }
        let tail = points.len();
        points.push(polar(6.0, theta(6)));
        edges.push((6, tail));
        let hub = points.len();
        points.push((0.0, 0.0));
        edges.extend((7..=tail).map(|b| (b, hub)));
        for j in 0..3 {
            let leaf = points.len();
            points.push(polar(6.0, theta(2 * j) - 10.0));
            edges.push((7 + 2 * j, leaf));
        }
        let g = from_drawing(&points, &edges);
        let f = face_of_length(&g, 0, 1, 7);
        (g, f)
    }
}
