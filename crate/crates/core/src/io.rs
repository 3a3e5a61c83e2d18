//! Text formats: JSON graph documents and line-based cover files.
//!
//! A graph document holds a rotation system:
//!
//! ```text
//! {
//!   "name": "k4",
//!   "vertices": 4,
//!   "rotations": [
//!     [1, 2, 3],
//!     ...
//!   ]
//! }
//! ```
//!
//! A cover file has one record per line. `k 3` gives every vertex the list
//! `1..=3`; `list v : c1 c2 ...` overrides one list; `u v : a>b c>d` matches
//! colour `a` at `u` with `b` at `v`. Edges without a record carry the empty
//! matching. `#` starts a comment.

use serde::Deserialize;
use thiserror::Error;

use crate::cover::{Color, Cover, CoverError, EdgePairs, ListAssignment};
use crate::graph::{Graph, GraphError, Vertex};
use crate::plane::PlaneGraph;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    #[serde(default)]
    pub name: Option<String>,
    pub vertices: usize,
    pub rotations: Vec<Vec<Vertex>>,
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_plane_graph(name: Option<&str>, g: &PlaneGraph) -> Self {
        GraphDocument {
            name: name.map(str::to_owned),
            vertices: g.vertex_count(),
            rotations: g.rotations().to_vec(),
        }
    }

    pub fn to_plane_graph(&self) -> Result<PlaneGraph, GraphError> {
        PlaneGraph::build(self.vertices, self.rotations.clone())
    }

    /// Canonical text: stable key order, one rotation per line, trailing newline.
    pub fn format(&self) -> String {
        let mut out = String::from("{\n");
        if let Some(name) = &self.name {
            let quoted = serde_json::to_string(name).expect("strings serialize");
            out.push_str(&format!("  \"name\": {quoted},\n"));
        }
        out.push_str(&format!("  \"vertices\": {},\n", self.vertices));
        if self.rotations.is_empty() {
            out.push_str("  \"rotations\": []\n}\n");
            return out;
        }
        out.push_str("  \"rotations\": [\n");
        for (i, rot) in self.rotations.iter().enumerate() {
            let items: Vec<String> = rot.iter().map(|v| v.to_string()).collect();
            let comma = if i + 1 < self.rotations.len() {
                ","
            } else {
                ""
            };
            out.push_str(&format!("    [{}]{comma}\n", items.join(", ")));
        }
        out.push_str("  ]\n}\n");
        out
    }
}

/// Parses a graph document and builds its embedding.
pub fn read_plane_graph(text: &str) -> Result<(Option<String>, PlaneGraph), IoError> {
    let doc = GraphDocument::parse(text)?;
    let g = doc.to_plane_graph()?;
    Ok((doc.name, g))
}

fn syntax(line: usize, message: impl Into<String>) -> IoError {
    IoError::Syntax {
        line,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(line: usize, token: &str) -> Result<T, IoError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("expected a number, found '{token}'")))
}

/// Parses a cover file against the base graph `g`.
pub fn parse_cover(text: &str, g: &Graph) -> Result<Cover, IoError> {
    let mut k: Option<usize> = None;
    let mut overrides: Vec<(Vertex, Vec<Color>)> = Vec::new();
    let mut pairs: Vec<EdgePairs> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (head, tail) = match body.split_once(':') {
            Some((h, t)) => (h.trim(), Some(t.trim())),
            None => (body, None),
        };
        let words: Vec<&str> = head.split_whitespace().collect();
        match (words.as_slice(), tail) {
            (["k", n], None) => {
                if k.is_some() {
                    return Err(syntax(line, "repeated k record"));
                }
                k = Some(number(line, n)?);
            }
            (["list", v], Some(t)) => {
                let v: Vertex = number(line, v)?;
                g.check_vertex(v)?;
                let colors = t
                    .split_whitespace()
                    .map(|c| number(line, c))
                    .collect::<Result<Vec<Color>, _>>()?;
                overrides.push((v, colors));
            }
            ([u, v], Some(t)) => {
                let (u, v): (Vertex, Vertex) = (number(line, u)?, number(line, v)?);
                let mut list = Vec::new();
                for token in t.split_whitespace() {
                    let (a, b) = token
                        .split_once('>')
                        .ok_or_else(|| syntax(line, format!("expected a>b, found '{token}'")))?;
                    list.push((number(line, a)?, number(line, b)?));
                }
                pairs.push(((u, v), list));
            }
            _ => return Err(syntax(line, format!("unrecognised record '{body}'"))),
        }
    }
    let mut lists: Vec<Vec<Color>> = match k {
        Some(k) => vec![(1..=k as Color).collect(); g.vertex_count()],
        None => vec![Vec::new(); g.vertex_count()],
    };
    for (v, colors) in overrides {
        lists[v] = colors;
    }
    Ok(Cover::build(g, ListAssignment::new(lists)?, &pairs)?)
}

/// Writes `c` in the cover file format; [`parse_cover`] reads it back.
pub fn format_cover(c: &Cover) -> String {
    let g = c.graph();
    let mut out = String::new();
    let uniform = c.lists().uniform_size();
    match uniform {
        Some(k) => out.push_str(&format!("k {k}\n")),
        None => {
            for v in g.vertices() {
                let items: Vec<String> = c.list(v).iter().map(|x| x.to_string()).collect();
                out.push_str(&format!("list {v} : {}\n", items.join(" ")));
            }
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let pairs = c.matching(e).pairs();
        if pairs.is_empty() {
            continue;
        }
        let items: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}>{b}")).collect();
        out.push_str(&format!("{u} {v} : {}\n", items.join(" ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn document_round_trip() {
        for ng in corpus::fixtures() {
            let doc = GraphDocument::from_plane_graph(Some(&ng.name), &ng.graph);
            let text = doc.format();
            let back = GraphDocument::parse(&text).unwrap();
            assert_eq!(back.format(), text);
            assert_eq!(back.to_plane_graph().unwrap().faces(), ng.graph.faces());
        }
    }

    #[test]
    fn asymmetric_rotation_is_rejected() {
        let text = r#"{"vertices": 3, "rotations": [[1, 2], [0], [0, 1]]}"#;
        assert!(matches!(
            read_plane_graph(text),
            Err(IoError::Graph(GraphError::NonSymmetricAdjacency {
                from: 2,
                to: 1
            }))
        ));
    }

    #[test]
    fn cover_round_trip() {
        let g = corpus::cycle(4);
        let c = Cover::random_permutation(g.graph(), 3, 7).unwrap();
        let text = format_cover(&c);
        let back = parse_cover(&text, g.graph()).unwrap();
        assert_eq!(format_cover(&back), text);
        assert_eq!(back.matchings(), c.matchings());
    }

    #[test]
    fn partial_matchings_and_lists() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let c = parse_cover(
            "# two vertices\nlist 0 : 1 2\nlist 1 : 3 4\n1 0 : 3>2\n",
            &g,
        )
        .unwrap();
        assert!(c.is_matched(0, 2, 1, 3));
        assert!(!c.is_matched(0, 1, 1, 4));
        assert!(matches!(
            parse_cover("k 2\n0 1 : 1-2\n", &g),
            Err(IoError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_cover("k 2\n0 1 : 1>3\n", &g),
            Err(IoError::Cover(_))
        ));
    }
}
