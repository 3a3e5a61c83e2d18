use std::fmt;
use std::str::FromStr;

use crate::cycles::{enumerate_cycles, Cycle};
use crate::graph::Graph;

use super::triangles::{adjacent_triangle_pairs, triangle_pairs_within};

/// The three hypothesis sets checked by the auditor.
///
/// * `A`: no adjacent triangles, no 5-, 6- or 9-cycles.
/// * `B`: triangles pairwise at distance at least 2, no 5-, 6- or 8-cycles.
/// * `C`: triangles pairwise at distance at least 2, no 4-, 5- or 7-cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    A,
    B,
    C,
}

impl Theorem {
    pub const ALL: [Theorem; 3] = [Theorem::A, Theorem::B, Theorem::C];

    pub fn forbidden_lengths(self) -> &'static [usize] {
        match self {
            Theorem::A => &[5, 6, 9],
            Theorem::B => &[5, 6, 8],
            Theorem::C => &[4, 5, 7],
        }
    }

    /// Required minimum triangle distance, if the theorem bounds it.
    pub fn triangle_distance_bound(self) -> Option<usize> {
        match self {
            Theorem::A => None,
            Theorem::B | Theorem::C => Some(2),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Theorem::A => "A",
            Theorem::B => "B",
            Theorem::C => "C",
        };
        f.write_str(s)
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Theorem::A),
            "B" => Ok(Theorem::B),
            "C" => Ok(Theorem::C),
            other => Err(format!("unknown theorem '{other}', expected A, B or C")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    ForbiddenCycle(Cycle),
    AdjacentTriangles(Cycle, Cycle),
    CloseTriangles {
        first: Cycle,
        second: Cycle,
        distance: usize,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::ForbiddenCycle(c) => write!(f, "{}-cycle {c}", c.len()),
            Witness::AdjacentTriangles(a, b) => write!(f, "adjacent triangles {a} {b}"),
            Witness::CloseTriangles {
                first,
                second,
                distance,
            } => {
                write!(f, "triangles {first} {second} at distance {distance}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub theorem: Theorem,
    pub satisfied: bool,
    pub witnesses: Vec<Witness>,
}

/// Checks every hypothesis of `theorem` and lists all violations.
pub fn check_hypotheses(g: &Graph, theorem: Theorem) -> HypothesisReport {
    let lengths = theorem.forbidden_lengths();
    let max = *lengths.iter().max().expect("non-empty");
    let mut witnesses: Vec<Witness> = enumerate_cycles(g, max)
        .expect("bounds are at most 9")
        .into_iter()
        .filter(|c| lengths.contains(&c.len()))
        .map(Witness::ForbiddenCycle)
        .collect();
    match theorem.triangle_distance_bound() {
        None => witnesses.extend(
            adjacent_triangle_pairs(g)
                .into_iter()
                .map(|(a, b)| Witness::AdjacentTriangles(a, b)),
        ),
        Some(bound) => witnesses.extend(triangle_pairs_within(g, bound).into_iter().map(
            |(first, second, distance)| Witness::CloseTriangles {
                first,
                second,
                distance,
            },
        )),
    }
    HypothesisReport {
        theorem,
        satisfied: witnesses.is_empty(),
        witnesses,
    }
}
