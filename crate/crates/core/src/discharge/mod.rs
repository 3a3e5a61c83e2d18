//! Discharging: initial charges, face and vertex classification, the three
//! rule sets, and an audit that combines them with the structural checks.

mod audit;
mod classify;
mod ledger;
mod rules;

pub use audit::{audit, AuditReport};
pub use classify::{
    classify, ClassificationReport, FourFacePattern, Richness, SevenFaceKind, TenFaceKind,
    ThreeVertexKind,
};
pub use ledger::{
    format_rational, initial_charges, negative_elements, ratio, Charge, ChargeLedger, Element,
    Transfer,
};
pub use rules::{apply_rules, Flag, RuleInfo, RuleSet, RunOutcome};
