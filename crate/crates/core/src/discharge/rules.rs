use std::fmt;
use std::str::FromStr;

use crate::graph::{normalize, Edge, GraphError, Vertex};
use crate::plane::{FaceId, PlaneGraph};

use super::classify::{
    classify, ClassificationReport, Richness, SevenFaceKind, TenFaceKind, ThreeVertexKind,
};
use super::ledger::{initial_charges, ratio, Charge, ChargeLedger, Element, Transfer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleSet {
    A,
    B,
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleInfo {
    pub id: &'static str,
    pub text: &'static str,
}

const RULES_A: &[RuleInfo] = &[
    RuleInfo {
        id: "R1",
        text: "4-face sends 1/2 to each incident 3-vertex",
    },
    RuleInfo {
        id: "R2",
        text: "6-face sends 1 to each incident vertex",
    },
    RuleInfo {
        id: "R3",
        text: "7-face sends 3/2 to each semi-rich 3-vertex and 1 to every other vertex",
    },
    RuleInfo {
        id: "R4",
        text: "8-face sends 5/4 to each incident vertex",
    },
    RuleInfo {
        id: "R5",
        text: "9-face sends 4/3 to each incident vertex",
    },
    RuleInfo {
        id: "R6a",
        text: "10+-face sends 1 to a 3-vertex on three 5+-faces",
    },
    RuleInfo {
        id: "R6b",
        text: "10+-face sends 5/4 to a 3-vertex on a 4-face",
    },
    RuleInfo {
        id: "R6c",
        text: "bad face sends 4/3 and the non-special third face 5/3 to a 3-vertex on a 3-face",
    },
    RuleInfo {
        id: "R6d",
        text: "10+-face sends 3/2 to any other 3-vertex",
    },
    RuleInfo {
        id: "R7a",
        text: "10+-face sends 1 to a rich or poor 4-vertex",
    },
    RuleInfo {
        id: "R7b",
        text: "10+-face sends 1/2 to a semi-rich 4-vertex",
    },
    RuleInfo {
        id: "R8a",
        text: "10+-face sends 1/3 to a 5-vertex on two 4--faces",
    },
    RuleInfo {
        id: "R8b",
        text: "10+-face sends 1/4 to a 5-vertex on one 4--face",
    },
    RuleInfo {
        id: "R8c",
        text: "10+-face sends 1/5 to any other 5-vertex",
    },
    RuleInfo {
        id: "R9",
        text: "(3,3,3+,4+)-face sends 1/2 to each adjacent poor face",
    },
    RuleInfo {
        id: "R10",
        text: "(3,4,3+,4+)- or (3,4,4+,3+)-face sends 1/4 to each adjacent semi-special face",
    },
];

const RULES_B: &[RuleInfo] = &[
    RuleInfo { id: "R1", text: "4-face sends 1/2 to each incident 3-vertex" },
    RuleInfo { id: "R2", text: "7+-face sends 3/2, 5/4 or 1 to a weak, semi-weak or strong 3-vertex" },
    RuleInfo { id: "R3", text: "7+-face sends 1, 3/4 or 1/2 to a poor, semi-rich or rich 4-vertex" },
    RuleInfo { id: "R4", text: "7+-face sends 1/3 to each incident 5-vertex" },
    RuleInfo { id: "R5", text: "(3,3,3+,4+)-face sends 1/4 to each adjacent poor or special 7-face through a (3,3)-edge" },
    RuleInfo { id: "R6", text: "(3,4,3+,4+)- or (3,4,4+,3+)-face sends 1/4 to each adjacent special 7-face through a (3,4)-edge" },
];

const RULES_C: &[RuleInfo] = &[
    RuleInfo {
        id: "R1",
        text: "6+-face sends 1 to a strong 3-vertex, 1/2 to a rich 4-vertex, 1/4 to a 5-vertex",
    },
    RuleInfo {
        id: "R2",
        text: "8+-face sends 3/2 to a weak 3-vertex, 3/4 to a semi-rich 4-vertex",
    },
];

impl RuleSet {
    pub const ALL: [RuleSet; 3] = [RuleSet::A, RuleSet::B, RuleSet::C];

    pub fn rules(self) -> &'static [RuleInfo] {
        match self {
            RuleSet::A => RULES_A,
            RuleSet::B => RULES_B,
            RuleSet::C => RULES_C,
        }
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleSet::A => "A",
            RuleSet::B => "B",
            RuleSet::C => "C",
        })
    }
}

impl FromStr for RuleSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(RuleSet::A),
            "B" => Ok(RuleSet::B),
            "C" => Ok(RuleSet::C),
            other => Err(format!("unknown rule set '{other}', expected A, B or C")),
        }
    }
}

/// Configurations the rules do not settle on their own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Flag {
    /// A 3-vertex on a 3-face whose other two faces are both bad; both
    /// bad-face transfers were applied.
    BothPartnersBad {
        vertex: Vertex,
        faces: (FaceId, FaceId),
    },
    /// A face-to-face rule found more than one qualifying shared edge; one
    /// transfer was made through the first.
    MultipleQualifyingEdges {
        rule: &'static str,
        source: FaceId,
        target: FaceId,
        edges: Vec<Edge>,
    },
    /// A bad edge with bad faces on both sides.
    AdjacentBadFaces { edge: Edge, faces: (FaceId, FaceId) },
    /// A non-bad 10⁺-face with more than a third of its edges bad.
    TooManyBadEdges {
        face: FaceId,
        bad_edges: usize,
        length: usize,
    },
    /// Two 6⁻-faces sharing an edge.
    AdjacentSmallFaces { faces: (FaceId, FaceId), edge: Edge },
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flag::BothPartnersBad { vertex, faces } => {
                write!(
                    f,
                    "v{vertex}: bad faces f{} and f{} both pay under R6c",
                    faces.0, faces.1
                )
            }
            Flag::MultipleQualifyingEdges {
                rule,
                source,
                target,
                edges,
            } => {
                let list: Vec<String> = edges.iter().map(|(u, v)| format!("{u} {v}")).collect();
                write!(
                    f,
                    "{rule}: f{source} meets f{target} through {} qualifying edges ({})",
                    edges.len(),
                    list.join(", ")
                )
            }
            Flag::AdjacentBadFaces { edge, faces } => {
                write!(
                    f,
                    "bad faces f{} and f{} share edge {} {}",
                    faces.0, faces.1, edge.0, edge.1
                )
            }
            Flag::TooManyBadEdges {
                face,
                bad_edges,
                length,
            } => {
                write!(f, "f{face}: {bad_edges} bad edges on a {length}-face")
            }
            Flag::AdjacentSmallFaces { faces, edge } => {
                write!(
                    f,
                    "6--faces f{} and f{} share edge {} {}",
                    faces.0, faces.1, edge.0, edge.1
                )
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub ledger: ChargeLedger,
    pub classification: ClassificationReport,
    pub flags: Vec<Flag>,
}

struct Run<'a> {
    g: &'a PlaneGraph,
    r: &'a ClassificationReport,
    transfers: Vec<Transfer>,
    flags: Vec<Flag>,
}

impl Run<'_> {
    fn send(&mut self, rule: &'static str, f: FaceId, v: Vertex, amount: Charge) {
        self.transfers.push(Transfer {
            source: Element::Face(f),
            target: Element::Vertex(v),
            amount,
            rule,
            via: None,
        });
    }

    fn len(&self, f: FaceId) -> usize {
        self.g.face(f).len()
    }

    /// Edges shared by `f` and `h`, in `f`'s walk order.
    fn shared_edges(&self, f: FaceId, h: FaceId) -> Vec<Edge> {
        let mut out: Vec<Edge> = Vec::new();
        for (u, v) in self.g.face(f).darts() {
            let e = normalize(u, v);
            if self.g.face_of_dart(v, u) == Some(h) && !out.contains(&e) {
                out.push(e);
            }
        }
        out
    }

    /// Sends `amount` from every face passing `source_ok` to each adjacent face
    /// passing `target_ok`, once per pair, through the first qualifying edge.
    fn face_to_face(
        &mut self,
        rule: &'static str,
        amount: Charge,
        source_ok: impl Fn(FaceId) -> bool,
        target_ok: impl Fn(FaceId) -> bool,
        edge_ok: impl Fn(Edge) -> bool,
    ) {
        for q in 0..self.g.face_count() {
            if !source_ok(q) {
                continue;
            }
            for (h, _) in self.g.adjacent_faces(q) {
                if !target_ok(h) {
                    continue;
                }
                let edges: Vec<Edge> = self
                    .shared_edges(q, h)
                    .into_iter()
                    .filter(|&e| edge_ok(e))
                    .collect();
                let Some(&first) = edges.first() else {
                    continue;
                };
                if edges.len() > 1 {
                    self.flags.push(Flag::MultipleQualifyingEdges {
                        rule,
                        source: q,
                        target: h,
                        edges: edges.clone(),
                    });
                }
                self.transfers.push(Transfer {
                    source: Element::Face(q),
                    target: Element::Face(h),
                    amount: amount.clone(),
                    rule,
                    via: Some(first),
                });
            }
        }
    }

    fn small_faces_at(&self, v: Vertex) -> usize {
        self.g
            .incident_faces(v)
            .iter()
            .filter(|&&f| self.len(f) <= 4)
            .count()
    }

    fn rule_set_a(&mut self) {
        let (g, r) = (self.g, self.r);
        for face in g.faces() {
            let f = face.id;
            let d = face.len();
            for (pos, &v) in face.boundary.iter().enumerate() {
                if face.is_empty() {
                    break;
                }
                let dv = g.degree(v);
                match d {
                    4 if dv == 3 => self.send("R1", f, v, ratio(1, 2)),
                    6 => self.send("R2", f, v, ratio(1, 1)),
                    7 if dv == 3 && r.richness[f][pos] == Richness::SemiRich => {
                        self.send("R3", f, v, ratio(3, 2))
                    }
                    7 => self.send("R3", f, v, ratio(1, 1)),
                    8 => self.send("R4", f, v, ratio(5, 4)),
                    9 => self.send("R5", f, v, ratio(4, 3)),
                    d if d >= 10 => match dv {
                        3 => self.rule_six(f, pos, v),
                        4 if r.richness[f][pos] == Richness::SemiRich => {
                            self.send("R7b", f, v, ratio(1, 2))
                        }
                        4 => self.send("R7a", f, v, ratio(1, 1)),
                        5 => match self.small_faces_at(v) {
                            0 => self.send("R8c", f, v, ratio(1, 5)),
                            1 => self.send("R8b", f, v, ratio(1, 4)),
                            _ => self.send("R8a", f, v, ratio(1, 3)),
                        },
                        _ => {}
                    },
                    _ => {}
                }
            }
        }
        let four = |q: FaceId| r.four_face[q];
        self.face_to_face(
            "R9",
            ratio(1, 2),
            |q| four(q).is_some_and(|p| p.three_three),
            |h| r.ten(h) == Some(TenFaceKind::Poor),
            |_| true,
        );
        self.face_to_face(
            "R10",
            ratio(1, 4),
            |q| four(q).is_some_and(|p| p.three_four),
            |h| r.ten(h) == Some(TenFaceKind::SemiSpecial),
            |_| true,
        );
        self.coherence_flags();
    }

    // R6 for the corner of 3-vertex `v` at position `pos` of 10⁺-face `f`.
    fn rule_six(&mut self, f: FaceId, pos: usize, v: Vertex) {
        let (g, r) = (self.g, self.r);
        let corners = g.corners(v);
        let me = corners
            .iter()
            .position(|&c| c == (f, pos))
            .expect("corner of v on f");
        let others: Vec<FaceId> = corners
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != me)
            .map(|(_, c)| c.0)
            .collect();
        let lens: Vec<usize> = corners.iter().map(|c| self.len(c.0)).collect();
        if lens.iter().all(|&l| l >= 5) {
            return self.send("R6a", f, v, ratio(1, 1));
        }
        if lens.contains(&4) {
            return self.send("R6b", f, v, ratio(5, 4));
        }
        let pairs = [(others[0], others[1]), (others[1], others[0])];
        if r.is_bad(f) {
            if let Some(&(_, h)) = pairs
                .iter()
                .find(|(a, b)| self.len(*a) == 3 && !r.is_special_ten(*b))
            {
                self.send("R6c", f, v, ratio(4, 3));
                self.send("R6c", h, v, ratio(5, 3));
                if r.is_bad(h) {
                    self.flags.push(Flag::BothPartnersBad {
                        vertex: v,
                        faces: (f.min(h), f.max(h)),
                    });
                }
                return;
            }
        } else if !r.is_special_ten(f)
            && pairs.iter().any(|&(a, b)| r.is_bad(a) && self.len(b) == 3)
        {
            // `f` is the third face of a bad face's R6c transfer and has paid there.
            return;
        }
        self.send("R6d", f, v, ratio(3, 2));
    }

    fn coherence_flags(&mut self) {
        let (g, r) = (self.g, self.r);
        for &(u, v) in &r.bad_edges {
            let (a, b) = g.faces_of_edge(u, v).expect("bad edge exists");
            if a != b && r.is_bad(a) && r.is_bad(b) {
                self.flags.push(Flag::AdjacentBadFaces {
                    edge: (u, v),
                    faces: (a.min(b), a.max(b)),
                });
            }
        }
        for (&face, &t) in &r.bad_edge_counts {
            let length = self.len(face);
            if 3 * t > length {
                self.flags.push(Flag::TooManyBadEdges {
                    face,
                    bad_edges: t,
                    length,
                });
            }
        }
        for &(u, v) in g.graph().edges() {
            let (a, b) = g.faces_of_edge(u, v).expect("edge exists");
            if a != b && self.len(a) <= 6 && self.len(b) <= 6 {
                self.flags.push(Flag::AdjacentSmallFaces {
                    faces: (a.min(b), a.max(b)),
                    edge: (u, v),
                });
            }
        }
    }

    fn rule_set_b(&mut self) {
        let (g, r) = (self.g, self.r);
        for face in g.faces() {
            let f = face.id;
            let d = face.len();
            for (pos, &v) in face.boundary.iter().enumerate() {
                if face.is_empty() {
                    break;
                }
                match (d, g.degree(v)) {
                    (4, 3) => self.send("R1", f, v, ratio(1, 2)),
                    (d, 3) if d >= 7 => match r.three_vertex[v].expect("3-vertex") {
                        ThreeVertexKind::Weak => self.send("R2", f, v, ratio(3, 2)),
                        ThreeVertexKind::SemiWeak => self.send("R2", f, v, ratio(5, 4)),
                        ThreeVertexKind::Strong => self.send("R2", f, v, ratio(1, 1)),
                    },
                    (d, 4) if d >= 7 => match r.richness[f][pos] {
                        Richness::Poor => self.send("R3", f, v, ratio(1, 1)),
                        Richness::SemiRich => self.send("R3", f, v, ratio(3, 4)),
                        Richness::Rich => self.send("R3", f, v, ratio(1, 2)),
                    },
                    (d, 5) if d >= 7 => self.send("R4", f, v, ratio(1, 3)),
                    _ => {}
                }
            }
        }
        let deg = |e: Edge| {
            (
                g.degree(e.0).min(g.degree(e.1)),
                g.degree(e.0).max(g.degree(e.1)),
            )
        };
        self.face_to_face(
            "R5",
            ratio(1, 4),
            |q| r.four_face[q].is_some_and(|p| p.three_three),
            |h| {
                matches!(
                    r.seven(h),
                    Some(SevenFaceKind::Poor | SevenFaceKind::Special)
                )
            },
            |e| deg(e) == (3, 3),
        );
        self.face_to_face(
            "R6",
            ratio(1, 4),
            |q| r.four_face[q].is_some_and(|p| p.three_four),
            |h| r.seven(h) == Some(SevenFaceKind::Special),
            |e| deg(e) == (3, 4),
        );
    }

    fn rule_set_c(&mut self) {
        let (g, r) = (self.g, self.r);
        for face in g.faces() {
            let f = face.id;
            let d = face.len();
            if d < 6 {
                continue;
            }
            for (pos, &v) in face.boundary.iter().enumerate() {
                match g.degree(v) {
                    3 => match r.three_vertex[v].expect("3-vertex") {
                        ThreeVertexKind::Strong => self.send("R1", f, v, ratio(1, 1)),
                        ThreeVertexKind::Weak if d >= 8 => self.send("R2", f, v, ratio(3, 2)),
                        _ => {}
                    },
                    4 => match r.richness[f][pos] {
                        Richness::Rich => self.send("R1", f, v, ratio(1, 2)),
                        Richness::SemiRich if d >= 8 => self.send("R2", f, v, ratio(3, 4)),
                        _ => {}
                    },
                    5 => self.send("R1", f, v, ratio(1, 4)),
                    _ => {}
                }
            }
        }
    }
}

/// Classifies `g` and applies every rule of `rule_set` once.
pub fn apply_rules(g: &PlaneGraph, rule_set: RuleSet) -> Result<RunOutcome, GraphError> {
    let mut ledger = initial_charges(g)?;
    let classification = classify(g, rule_set)?;
    let mut run = Run {
        g,
        r: &classification,
        transfers: Vec::new(),
        flags: Vec::new(),
    };
    match rule_set {
        RuleSet::A => run.rule_set_a(),
        RuleSet::B => run.rule_set_b(),
        RuleSet::C => run.rule_set_c(),
    }
    let Run {
        transfers, flags, ..
    } = run;
    for t in transfers {
        ledger.apply(t);
    }
    Ok(RunOutcome {
        ledger,
        classification,
        flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> PlaneGraph {
        let rot = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
        PlaneGraph::build(n, rot).unwrap()
    }

    #[test]
    fn closed_form_face_values() {
        for (n, expected) in [(6, 0), (8, 0), (9, 0)] {
            let out = apply_rules(&cycle(n), RuleSet::A).unwrap();
            for c in out.ledger.face_charges() {
                assert_eq!(*c, ratio(expected, 1), "C{n}");
            }
            assert_eq!(out.ledger.total(), ratio(-12, 1));
        }
    }

    #[test]
    fn conservation_on_cycles() {
        for rs in RuleSet::ALL {
            for n in 3..=12 {
                let out = apply_rules(&cycle(n), rs).unwrap();
                assert_eq!(out.ledger.total(), ratio(-12, 1), "C{n} under {rs}");
            }
        }
    }

    #[test]
    fn two_vertices_stay_negative() {
        // C4 under rule set A: each 4-face only pays 3-vertices.
        let out = apply_rules(&cycle(4), RuleSet::A).unwrap();
        assert!(out
            .ledger
            .vertex_charges()
            .iter()
            .all(|c| *c == ratio(-4, 1)));
    }

    #[test]
    fn rule_set_names() {
        assert_eq!("c".parse::<RuleSet>(), Ok(RuleSet::C));
        assert_eq!(RuleSet::B.rules().len(), 6);
    }
}
