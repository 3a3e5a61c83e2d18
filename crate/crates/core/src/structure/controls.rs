use thiserror::Error;

use crate::cycles::Cycle;
use crate::graph::{Graph, Vertex};
use crate::plane::{FaceId, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ControlError {
    #[error("{u} {v} is not an edge")]
    UnknownEdge { u: Vertex, v: Vertex },
    #[error("face {0} does not exist")]
    UnknownFace(FaceId),
}

/// Whether the edge lies on a 7⁺-face and on a 4⁻-face.
pub fn edge_controls_small_face(g: &PlaneGraph, u: Vertex, v: Vertex) -> bool {
    match g.faces_of_edge(u, v) {
        Some((a, b)) => {
            let (la, lb) = (g.face(a).len(), g.face(b).len());
            (la >= 7 && lb <= 4) || (lb >= 7 && la <= 4)
        }
        None => false,
    }
}

/// Whether `uv` controls `face`: `face` is a 4⁻-face on one side of `uv`
/// and the other side is a 7⁺-face.
pub fn controls_face(
    g: &PlaneGraph,
    (u, v): (Vertex, Vertex),
    face: FaceId,
) -> Result<bool, ControlError> {
    let (a, b) = g
        .faces_of_edge(u, v)
        .ok_or(ControlError::UnknownEdge { u, v })?;
    if face >= g.face_count() {
        return Err(ControlError::UnknownFace(face));
    }
    if g.face(face).len() > 4 {
        return Ok(false);
    }
    let other = if a == face {
        b
    } else if b == face {
        a
    } else {
        return Ok(false);
    };
    Ok(other != face && g.face(other).len() >= 7)
}

/// Whether `uv` controls `cycle`: `cycle` is a 4⁻-cycle through `uv` and
/// `uv` also lies on some cycle of length at least 7.
pub fn controls_cycle(
    g: &Graph,
    (u, v): (Vertex, Vertex),
    cycle: &Cycle,
) -> Result<bool, ControlError> {
    if u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v) {
        return Err(ControlError::UnknownEdge { u, v });
    }
    if cycle.len() > 4 || !cycle.has_edge((u, v)) {
        return Ok(false);
    }
    Ok(on_long_cycle(g, u, v, 7))
}

/// Whether edge `uv` lies on a cycle of length at least `min_len`.
pub(crate) fn on_long_cycle(g: &Graph, u: Vertex, v: Vertex, min_len: usize) -> bool {
    let mut on_path = vec![false; g.vertex_count()];
    on_path[v] = true;
    long_path(g, v, u, 1, min_len - 1, &mut on_path, (u, v))
}

// Simple paths from `at` to `target` avoiding the edge itself; `len` counts
// edges walked so far including `uv`.
fn long_path(
    g: &Graph,
    at: Vertex,
    target: Vertex,
    len: usize,
    need: usize,
    on_path: &mut [bool],
    edge: (Vertex, Vertex),
) -> bool {
    for &w in g.neighbors(at) {
        if w == target {
            if len >= need && !(at == edge.1 && len == 1) {
                return true;
            }
            continue;
        }
        if on_path[w] {
            continue;
        }
        on_path[w] = true;
        let found = long_path(g, w, target, len + 1, need, on_path, edge);
        on_path[w] = false;
        if found {
            return true;
        }
    }
    false
}
