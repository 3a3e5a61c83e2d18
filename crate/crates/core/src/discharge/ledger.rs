use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::graph::{Edge, GraphError, Vertex};
use crate::plane::{FaceId, PlaneGraph};

pub type Charge = BigRational;

/// Renders a rational as `p/q`, including integers (`-12/1`).
pub fn format_rational(r: &Charge) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `p/q` as a charge.
pub fn ratio(p: i64, q: i64) -> Charge {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Vertex(Vertex),
    Face(FaceId),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Face(x) => write!(f, "f{x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub source: Element,
    pub target: Element,
    pub amount: Charge,
    pub rule: &'static str,
    /// Shared edge for face-to-face transfers.
    pub via: Option<Edge>,
}

impl fmt::Display for Transfer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} -> {} {}",
            self.rule,
            self.source,
            self.target,
            format_rational(&self.amount)
        )?;
        if let Some((u, v)) = self.via {
            write!(f, " via {u} {v}")?;
        }
        Ok(())
    }
}

/// Exact charges on vertices and faces, before and after transfers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    initial_vertex: Vec<Charge>,
    initial_face: Vec<Charge>,
    vertex: Vec<Charge>,
    face: Vec<Charge>,
    transfers: Vec<Transfer>,
}

/// `d(v) - 6` on vertices and `2 d(f) - 6` on faces.
pub fn initial_charges(g: &PlaneGraph) -> Result<ChargeLedger, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::DisconnectedInput);
    }
    let vertex: Vec<Charge> = (0..g.vertex_count())
        .map(|v| ratio(g.degree(v) as i64 - 6, 1))
        .collect();
    let face: Vec<Charge> = g
        .faces()
        .iter()
        .map(|f| ratio(2 * f.len() as i64 - 6, 1))
        .collect();
    Ok(ChargeLedger {
        initial_vertex: vertex.clone(),
        initial_face: face.clone(),
        vertex,
        face,
        transfers: Vec::new(),
    })
}

impl ChargeLedger {
    fn slot(&mut self, e: Element) -> &mut Charge {
        match e {
            Element::Vertex(v) => &mut self.vertex[v],
            Element::Face(f) => &mut self.face[f],
        }
    }

    pub fn apply(&mut self, t: Transfer) {
        *self.slot(t.source) -= &t.amount;
        *self.slot(t.target) += &t.amount;
        self.transfers.push(t);
    }

    pub fn charge(&self, e: Element) -> &Charge {
        match e {
            Element::Vertex(v) => &self.vertex[v],
            Element::Face(f) => &self.face[f],
        }
    }

    pub fn initial_charge(&self, e: Element) -> &Charge {
        match e {
            Element::Vertex(v) => &self.initial_vertex[v],
            Element::Face(f) => &self.initial_face[f],
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        let faces = self.face.len();
        (0..self.vertex.len())
            .map(Element::Vertex)
            .chain((0..faces).map(Element::Face))
    }

    pub fn vertex_charges(&self) -> &[Charge] {
        &self.vertex
    }

    pub fn face_charges(&self) -> &[Charge] {
        &self.face
    }

    pub fn transfers(&self) -> &[Transfer] {
        &self.transfers
    }

    pub fn total(&self) -> Charge {
        self.vertex
            .iter()
            .chain(&self.face)
            .fold(Charge::zero(), |acc, x| acc + x)
    }

    pub fn initial_total(&self) -> Charge {
        self.initial_vertex
            .iter()
            .chain(&self.initial_face)
            .fold(Charge::zero(), |acc, x| acc + x)
    }

    /// Net amount received by `e` (negative when it gave more than it got).
    pub fn net_received(&self, e: Element) -> Charge {
        self.charge(e) - self.initial_charge(e)
    }
}

/// Elements with negative charge, most negative first.
pub fn negative_elements(l: &ChargeLedger) -> Vec<(Element, Charge)> {
    let mut out: Vec<(Element, Charge)> = l
        .elements()
        .map(|e| (e, l.charge(e).clone()))
        .filter(|(_, c)| c.is_negative())
        .collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> PlaneGraph {
        let rot = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
        PlaneGraph::build(n, rot).unwrap()
    }

    #[test]
    fn k4_and_c10_totals() {
        let k4 = PlaneGraph::build(
            4,
            vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
        )
        .unwrap();
        let l = initial_charges(&k4).unwrap();
        assert_eq!(l.vertex_charges().to_vec(), vec![ratio(-3, 1); 4]);
        assert_eq!(l.total(), ratio(-12, 1));
        let l = initial_charges(&cycle(10)).unwrap();
        assert_eq!(l.face_charges().to_vec(), vec![ratio(14, 1); 2]);
        assert_eq!(l.total(), ratio(-12, 1));
    }

    #[test]
    fn transfers_conserve() {
        let mut l = initial_charges(&cycle(4)).unwrap();
        l.apply(Transfer {
            source: Element::Face(0),
            target: Element::Vertex(1),
            amount: ratio(5, 4),
            rule: "test",
            via: None,
        });
        assert_eq!(l.total(), ratio(-12, 1));
        assert_eq!(l.net_received(Element::Vertex(1)), ratio(5, 4));
        assert_eq!(l.transfers()[0].to_string(), "test f0 -> v1 5/4");
        let neg = negative_elements(&l);
        assert_eq!(neg[0].0, Element::Vertex(0));
        assert_eq!(neg.last().unwrap().0, Element::Vertex(1));
    }

    #[test]
    fn zero_ledger_has_no_negatives() {
        let mut l = initial_charges(&cycle(3)).unwrap();
        for v in 0..3 {
            for f in 0..2 {
                l.apply(Transfer {
                    source: Element::Face(f),
                    target: Element::Vertex(v),
                    amount: ratio(0, 1),
                    rule: "noop",
                    via: None,
                });
            }
        }
        let zeroed = ChargeLedger {
            vertex: vec![Charge::zero(); 3],
            face: vec![Charge::zero(); 2],
            ..l
        };
        assert!(negative_elements(&zeroed).is_empty());
    }

    #[test]
    fn rationals_print_as_fractions() {
        assert_eq!(format_rational(&ratio(-12, 1)), "-12/1");
        assert_eq!(format_rational(&ratio(6, 8)), "3/4");
    }

    #[test]
    fn disconnected_rejected() {
        let g = PlaneGraph::build(2, vec![vec![], vec![]]).unwrap();
        assert_eq!(initial_charges(&g), Err(GraphError::DisconnectedInput));
    }
}
