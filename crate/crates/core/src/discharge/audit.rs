use std::collections::BTreeMap;
use std::fmt;

use crate::graph::GraphError;
use crate::plane::PlaneGraph;
use crate::structure::{
    audit_blocks, check_hypotheses, degeneracy_ordering, BlockViolation, DegeneracyCertificate,
    HypothesisReport, Theorem,
};

use super::ledger::{format_rational, negative_elements, Charge, Element};
use super::rules::{apply_rules, RuleSet, RunOutcome};

/// Every check a minimal counterexample must survive, run on one graph.
#[derive(Debug, Clone)]
pub struct AuditReport {
    pub theorem: Theorem,
    pub hypotheses: HypothesisReport,
    pub min_degree: usize,
    pub degeneracy: DegeneracyCertificate,
    /// Blocks of the 3-degree subgraph that are neither cycles nor complete.
    pub blocks: Vec<BlockViolation>,
    pub outcome: RunOutcome,
    pub negatives: Vec<(Element, Charge)>,
}

impl AuditReport {
    pub fn rule_set(&self) -> RuleSet {
        self.outcome.classification.rule_set
    }

    /// Conservation holds: final total equals the initial total.
    pub fn conserved(&self) -> bool {
        self.outcome.ledger.total() == self.outcome.ledger.initial_total()
    }

    /// Short reasons why `g` cannot be a minimal counterexample.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.hypotheses.satisfied {
            out.push(format!("hypotheses of theorem {} violated", self.theorem));
        }
        if self.min_degree < 3 {
            out.push(format!("minimum degree {} < 3", self.min_degree));
        }
        if !self.blocks.is_empty() {
            out.push(format!("{} reducible block(s)", self.blocks.len()));
        }
        if !self.negatives.is_empty() {
            out.push(format!(
                "{} element(s) with negative charge",
                self.negatives.len()
            ));
        }
        out
    }

    /// Label counts, in a stable order.
    fn classification_summary(&self) -> Vec<String> {
        let r = &self.outcome.classification;
        let mut counts: BTreeMap<String, usize> = BTreeMap::new();
        for kind in r.three_vertex.iter().flatten() {
            *counts.entry(format!("3-vertex {kind:?}")).or_default() += 1;
        }
        for kind in r.ten_face.iter().flatten() {
            *counts.entry(format!("10-face {kind:?}")).or_default() += 1;
        }
        for kind in r.seven_face.iter().flatten() {
            *counts.entry(format!("7-face {kind:?}")).or_default() += 1;
        }
        let mut lines: Vec<String> = counts
            .into_iter()
            .map(|(k, n)| format!("{k}: {n}"))
            .collect();
        if self.rule_set() == RuleSet::A {
            lines.push(format!("bad edges: {}", r.bad_edges.len()));
            lines.push(format!("bad vertices: {}", r.bad_vertices.len()));
        }
        lines
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ledger = &self.outcome.ledger;
        writeln!(f, "HYPOTHESES")?;
        writeln!(
            f,
            "theorem {}: {}",
            self.theorem,
            if self.hypotheses.satisfied {
                "satisfied"
            } else {
                "violated"
            }
        )?;
        for w in &self.hypotheses.witnesses {
            writeln!(f, "{w}")?;
        }
        writeln!(f, "MIN-DEGREE")?;
        writeln!(
            f,
            "delta={} {}",
            self.min_degree,
            if self.min_degree >= 3 { "ok" } else { "< 3" }
        )?;
        writeln!(f, "DEGENERACY")?;
        writeln!(f, "degeneracy={}", self.degeneracy.degeneracy)?;
        let order: Vec<String> = self
            .degeneracy
            .peel_order
            .iter()
            .map(|v| v.to_string())
            .collect();
        writeln!(f, "peel {}", order.join(" "))?;
        writeln!(f, "BLOCKS")?;
        if self.blocks.is_empty() {
            writeln!(f, "none")?;
        }
        for b in &self.blocks {
            let vs: Vec<String> = b.vertices.iter().map(|v| v.to_string()).collect();
            writeln!(f, "block {} edges={}", vs.join(" "), b.edge_count)?;
        }
        writeln!(f, "CLASSIFICATION")?;
        writeln!(f, "rule set {}", self.rule_set())?;
        for line in self.classification_summary() {
            writeln!(f, "{line}")?;
        }
        writeln!(f, "CHARGES")?;
        writeln!(
            f,
            "initial total {}",
            format_rational(&ledger.initial_total())
        )?;
        writeln!(f, "final total {}", format_rational(&ledger.total()))?;
        writeln!(
            f,
            "conserved {}",
            if self.conserved() { "yes" } else { "no" }
        )?;
        for (e, c) in &self.negatives {
            writeln!(f, "negative {e} {}", format_rational(c))?;
        }
        writeln!(f, "FLAGS")?;
        if self.outcome.flags.is_empty() {
            writeln!(f, "none")?;
        }
        for flag in &self.outcome.flags {
            writeln!(f, "{flag}")?;
        }
        Ok(())
    }
}

fn rule_set_for(theorem: Theorem) -> RuleSet {
    match theorem {
        Theorem::A => RuleSet::A,
        Theorem::B => RuleSet::B,
        Theorem::C => RuleSet::C,
    }
}

/// Runs the hypothesis check, minimality checks and the matching rule set.
pub fn audit(g: &PlaneGraph, theorem: Theorem) -> Result<AuditReport, GraphError> {
    let outcome = apply_rules(g, rule_set_for(theorem))?;
    let graph = g.graph();
    let negatives = negative_elements(&outcome.ledger);
    Ok(AuditReport {
        theorem,
        hypotheses: check_hypotheses(graph, theorem),
        min_degree: graph.min_degree().ok_or(GraphError::EmptyGraph)?,
        degeneracy: degeneracy_ordering(graph),
        blocks: audit_blocks(graph, 3),
        outcome,
        negatives,
    })
}
