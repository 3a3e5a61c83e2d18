//! Plane graphs, DP-colouring and discharging audits.

pub mod corpus;
pub mod cover;
pub mod cycles;
pub mod discharge;
pub mod dp;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod plane;
pub mod small_graphs;
pub mod solver;
pub mod structure;
