use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{normalize, Edge, GraphError, Vertex};
use crate::plane::{FaceId, PlaneGraph};

use super::rules::RuleSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThreeVertexKind {
    /// On a 3-face.
    Weak,
    /// On a 4-face and no 3-face.
    SemiWeak,
    /// On no 4⁻-face.
    Strong,
}

/// How many of a corner's two face edges control a 4⁻-face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Richness {
    Rich,
    SemiRich,
    Poor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TenFaceKind {
    Poor,
    Bad,
    Special,
    SemiSpecial,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SevenFaceKind {
    Special,
    Poor,
    Plain,
}

/// Degree patterns of a 4-face, read cyclically in either direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FourFacePattern {
    /// Matches `(3, 3, 3⁺, 4⁺)`.
    pub three_three: bool,
    /// Matches `(3, 4, 3⁺, 4⁺)` or `(3, 4, 4⁺, 3⁺)`.
    pub three_four: bool,
}

pub(crate) const SPECIAL_SIGNATURE: [usize; 10] = [3, 3, 3, 3, 3, 4, 3, 3, 4, 3];

/// Vertex and face labels for one plane graph and rule set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub rule_set: RuleSet,
    /// Degree sequence along each face boundary.
    pub signatures: Vec<Vec<usize>>,
    /// Set for every 3-vertex.
    pub three_vertex: Vec<Option<ThreeVertexKind>>,
    /// Indexed by face and boundary position.
    pub richness: Vec<Vec<Richness>>,
    /// Set for 4-faces bounded by a cycle.
    pub four_face: Vec<Option<FourFacePattern>>,
    /// Set for 10-faces under rule set A.
    pub ten_face: Vec<Option<TenFaceKind>>,
    /// Set for 7-faces under rule set B.
    pub seven_face: Vec<Option<SevenFaceKind>>,
    pub bad_edges: BTreeSet<Edge>,
    pub bad_vertices: BTreeSet<Vertex>,
    /// Number of bad edges on each non-bad 10⁺-face.
    pub bad_edge_counts: BTreeMap<FaceId, usize>,
}

impl ClassificationReport {
    pub fn is_regular(&self, f: FaceId, d: usize) -> bool {
        self.signatures[f].iter().all(|&x| x == d)
    }

    pub fn ten(&self, f: FaceId) -> Option<TenFaceKind> {
        self.ten_face[f]
    }

    pub fn seven(&self, f: FaceId) -> Option<SevenFaceKind> {
        self.seven_face[f]
    }

    pub fn is_bad(&self, f: FaceId) -> bool {
        self.ten_face[f] == Some(TenFaceKind::Bad)
    }

    pub fn is_special_ten(&self, f: FaceId) -> bool {
        self.ten_face[f] == Some(TenFaceKind::Special)
    }
}

/// Whether `seq` equals `pattern` up to rotation and reflection.
pub(crate) fn cyclic_match(seq: &[usize], pattern: &[usize]) -> bool {
    matches_with(seq, pattern.len(), |i, d| d == pattern[i])
}

fn matches_with(seq: &[usize], n: usize, ok: impl Fn(usize, usize) -> bool) -> bool {
    if seq.len() != n {
        return false;
    }
    (0..n).any(|start| {
        (0..n).all(|i| ok(i, seq[(start + i) % n]))
            || (0..n).all(|i| ok(i, seq[(start + n - i) % n]))
    })
}

// Pattern entries: (value, at_least).
fn pattern_match(seq: &[usize], pattern: &[(usize, bool)]) -> bool {
    matches_with(seq, pattern.len(), |i, d| {
        let (v, plus) = pattern[i];
        if plus {
            d >= v
        } else {
            d == v
        }
    })
}

pub(crate) fn three_vertex_kind(g: &PlaneGraph, v: Vertex) -> ThreeVertexKind {
    let lens: Vec<usize> = g
        .incident_faces(v)
        .iter()
        .map(|&f| g.face(f).len())
        .collect();
    if lens.contains(&3) {
        ThreeVertexKind::Weak
    } else if lens.contains(&4) {
        ThreeVertexKind::SemiWeak
    } else {
        ThreeVertexKind::Strong
    }
}

fn corner_richness(g: &PlaneGraph, f: FaceId, pos: usize) -> Richness {
    use crate::structure::edge_controls_small_face;
    let b = &g.face(f).boundary;
    let n = b.len();
    if n < 2 {
        return Richness::Rich;
    }
    let v = b[pos];
    let mut edges: Vec<Edge> = vec![
        normalize(b[(pos + n - 1) % n], v),
        normalize(v, b[(pos + 1) % n]),
    ];
    edges.dedup();
    match edges
        .iter()
        .filter(|&&(x, y)| edge_controls_small_face(g, x, y))
        .count()
    {
        0 => Richness::Rich,
        1 => Richness::SemiRich,
        _ => Richness::Poor,
    }
}

fn adjacent_len_counts(g: &PlaneGraph, f: FaceId) -> BTreeMap<usize, usize> {
    let mut counts = BTreeMap::new();
    for (h, _) in g.adjacent_faces(f) {
        *counts.entry(g.face(h).len()).or_insert(0) += 1;
    }
    counts
}

/// Labels every vertex and face of a connected plane graph.
pub fn classify(g: &PlaneGraph, rule_set: RuleSet) -> Result<ClassificationReport, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::DisconnectedInput);
    }
    let faces = g.faces();
    let signatures: Vec<Vec<usize>> = faces
        .iter()
        .map(|f| {
            if f.is_empty() {
                Vec::new()
            } else {
                f.boundary.iter().map(|&v| g.degree(v)).collect()
            }
        })
        .collect();
    let three_vertex = (0..g.vertex_count())
        .map(|v| (g.degree(v) == 3).then(|| three_vertex_kind(g, v)))
        .collect();
    let richness: Vec<Vec<Richness>> = faces
        .iter()
        .map(|f| {
            (0..f.boundary.len())
                .map(|p| corner_richness(g, f.id, p))
                .collect()
        })
        .collect();
    let four_face = faces
        .iter()
        .map(|f| {
            (f.len() == 4 && f.is_cycle()).then(|| {
                let s = &signatures[f.id];
                FourFacePattern {
                    three_three: pattern_match(s, &[(3, false), (3, false), (3, true), (4, true)]),
                    three_four: pattern_match(s, &[(3, false), (4, false), (3, true), (4, true)])
                        || pattern_match(s, &[(3, false), (4, false), (4, true), (3, true)]),
                }
            })
        })
        .collect();

    let mut report = ClassificationReport {
        rule_set,
        signatures,
        three_vertex,
        richness,
        four_face,
        ten_face: vec![None; faces.len()],
        seven_face: vec![None; faces.len()],
        bad_edges: BTreeSet::new(),
        bad_vertices: BTreeSet::new(),
        bad_edge_counts: BTreeMap::new(),
    };
    match rule_set {
        RuleSet::A => classify_ten_faces(g, &mut report),
        RuleSet::B => classify_seven_faces(g, &mut report),
        RuleSet::C => {}
    }
    Ok(report)
}

fn classify_ten_faces(g: &PlaneGraph, r: &mut ClassificationReport) {
    for f in g.faces() {
        if f.len() != 10 || !f.is_cycle() {
            if f.len() == 10 {
                r.ten_face[f.id] = Some(TenFaceKind::Plain);
            }
            continue;
        }
        let counts = adjacent_len_counts(g, f.id);
        let (tri, quad) = (
            counts.get(&3).copied().unwrap_or(0),
            counts.get(&4).copied().unwrap_or(0),
        );
        let sig = &r.signatures[f.id];
        let kind = if r.is_regular(f.id, 3) && tri == 5 {
            TenFaceKind::Bad
        } else if r.is_regular(f.id, 3) && tri == 4 && quad == 1 {
            TenFaceKind::Poor
        } else if cyclic_match(sig, &SPECIAL_SIGNATURE) && tri == 6 {
            TenFaceKind::Special
        } else if cyclic_match(sig, &SPECIAL_SIGNATURE) && tri == 5 && quad == 1 {
            TenFaceKind::SemiSpecial
        } else {
            TenFaceKind::Plain
        };
        r.ten_face[f.id] = Some(kind);
        if kind == TenFaceKind::Bad {
            r.bad_edges.extend(f.edges());
            r.bad_vertices.extend(f.boundary.iter().copied());
        }
    }
    for f in g.faces() {
        if f.len() >= 10 && !r.is_bad(f.id) {
            let t = f.edges().filter(|e| r.bad_edges.contains(e)).count();
            r.bad_edge_counts.insert(f.id, t);
        }
    }
}

fn classify_seven_faces(g: &PlaneGraph, r: &mut ClassificationReport) {
    for f in g.faces() {
        if f.len() != 7 {
            continue;
        }
        let mut semi_weak = 0;
        let mut poor_four = 0;
        let mut strong = 0;
        for (pos, &v) in f.boundary.iter().enumerate() {
            match (g.degree(v), r.three_vertex[v]) {
                (3, Some(ThreeVertexKind::SemiWeak)) => semi_weak += 1,
                (3, Some(ThreeVertexKind::Strong)) => strong += 1,
                (4, _) if r.richness[f.id][pos] == Richness::Poor => poor_four += 1,
                _ => {}
            }
        }
        let kind = if !f.is_cycle() || semi_weak != 6 {
            SevenFaceKind::Plain
        } else if poor_four == 1 {
            SevenFaceKind::Special
        } else if strong == 1 {
            SevenFaceKind::Poor
        } else {
            SevenFaceKind::Plain
        };
        r.seven_face[f.id] = Some(kind);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_matching() {
        let rotated = [4, 3, 3, 4, 3, 3, 3, 3, 3, 3];
        assert!(cyclic_match(&rotated, &SPECIAL_SIGNATURE));
        let reflected: Vec<usize> = SPECIAL_SIGNATURE.iter().rev().copied().collect();
        assert!(cyclic_match(&reflected, &SPECIAL_SIGNATURE));
        assert!(!cyclic_match(
            &[4, 3, 4, 3, 3, 3, 3, 3, 3, 3],
            &SPECIAL_SIGNATURE
        ));
    }

    #[test]
    fn four_face_patterns() {
        let p = |s: &[usize]| pattern_match(s, &[(3, false), (3, false), (3, true), (4, true)]);
        assert!(p(&[3, 4, 3, 3]));
        assert!(p(&[3, 3, 4, 4]));
        assert!(!p(&[3, 4, 3, 4]));
        assert!(!p(&[3, 3, 3, 3]));
    }

    #[test]
    fn strong_and_weak() {
        let k4 = PlaneGraph::build(
            4,
            vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
        )
        .unwrap();
        let r = classify(&k4, RuleSet::A).unwrap();
        assert!(r
            .three_vertex
            .iter()
            .all(|k| *k == Some(ThreeVertexKind::Weak)));
        let cube = PlaneGraph::from_faces(
            8,
            &[
                vec![0, 1, 2, 3],
                vec![0, 4, 5, 1],
                vec![1, 5, 6, 2],
                vec![2, 6, 7, 3],
                vec![3, 7, 4, 0],
            ],
        )
        .unwrap();
        let r = classify(&cube, RuleSet::A).unwrap();
        assert!(r
            .three_vertex
            .iter()
            .all(|k| *k == Some(ThreeVertexKind::SemiWeak)));
        assert!(r
            .four_face
            .iter()
            .all(|p| *p == Some(FourFacePattern::default())));
    }
}
