//! Structural predicates on graphs and plane graphs: forbidden cycles,
//! triangle placement, degeneracy, blocks and reducible configurations.

mod blocks;
mod controls;
mod degeneracy;
mod hypotheses;
mod reducible;
mod triangles;

pub use blocks::{audit_blocks, biconnected_components, BlockKind, BlockViolation};
pub use controls::{controls_cycle, controls_face, edge_controls_small_face, ControlError};
pub use degeneracy::{degeneracy_ordering, min_degree, DegeneracyCertificate};
pub use hypotheses::{check_hypotheses, HypothesisReport, Theorem, Witness};
pub use reducible::{match_reducible_config, ReducibleConfigQuery, ReducibleError, ReducibleMatch};
pub use triangles::{adjacent_triangle_pairs, triangle_distance, triangle_pairs_within, triangles};
