//! Output shapes. Every JSON document carries `"schema": "movdom/1"`; field
//! order is fixed by the structs below, so equal inputs give equal bytes.

use std::fmt::Write as _;

use serde::Serialize;

use movdom::harness::{Budget, ClaimReport};
use movdom::movable::{MovabilityCertificate, PairAction, VertexAction};
use movdom::{CoronaLayout, Graph, JoinLayout, ReplacementMode, SolverResult, Verdict, VertexSet};

pub const SCHEMA: &str = "movdom/1";

/// `2` or `"none"`.
#[derive(Serialize)]
#[serde(untagged)]
enum Value {
    Number(usize),
    Label(&'static str),
}

#[derive(Serialize)]
struct ComputeDoc<'a> {
    schema: &'static str,
    invariant: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    mode: Option<ReplacementMode>,
    n: usize,
    m: usize,
    value: Value,
    witness: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<&'a MovabilityCertificate>,
}

pub fn compute_json(invariant: &str, mode: Option<ReplacementMode>, g: &Graph, result: &SolverResult) -> String {
    let doc = ComputeDoc {
        schema: SCHEMA,
        invariant,
        mode,
        n: g.order(),
        m: g.size(),
        value: result.value().map_or(Value::Label("none"), Value::Number),
        witness: result.witness(),
        certificate: result.certificate(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

fn label(invariant: &str, mode: Option<ReplacementMode>) -> String {
    match mode {
        Some(m) => format!("{invariant} ({m})"),
        None => invariant.to_string(),
    }
}

fn certificate_lines(cert: &MovabilityCertificate, out: &mut String) {
    match cert {
        MovabilityCertificate::OneMovable(moves) => {
            for m in moves {
                let _ = match m.action {
                    VertexAction::Drop => writeln!(out, "  vertex {}: drop", m.vertex),
                    VertexAction::Swap { u } => writeln!(out, "  vertex {}: swap to {u}", m.vertex),
                };
            }
        }
        MovabilityCertificate::TwoMovable(moves) => {
            for m in moves {
                let (x, y) = m.pair;
                let _ = match m.action {
                    PairAction::Drop => writeln!(out, "  pair ({x}, {y}): drop"),
                    PairAction::Swap { u, v } => writeln!(out, "  pair ({x}, {y}): swap to ({u}, {v})"),
                };
            }
        }
    }
}

pub fn compute_text(invariant: &str, mode: Option<ReplacementMode>, g: &Graph, result: &SolverResult) -> String {
    let mut out = String::new();
    let name = label(invariant, mode);
    let _ = writeln!(out, "graph: {} vertices, {} edges", g.order(), g.size());
    match result {
        SolverResult::Found { value, witness, certificate } => {
            let _ = writeln!(out, "{name} = {value}");
            let _ = writeln!(out, "witness: {witness}");
            if let Some(cert) = certificate {
                out.push_str("certificate:\n");
                certificate_lines(cert, &mut out);
            }
        }
        SolverResult::NotExists => {
            let _ = writeln!(out, "{name} = none (no qualifying set exists)");
        }
    }
    out
}

pub enum Layout {
    Join(JoinLayout),
    Corona(CoronaLayout),
}

#[derive(Serialize)]
struct Factor<'a> {
    source: &'a str,
    n: usize,
}

#[derive(Serialize)]
struct LayoutDoc<'a> {
    schema: &'static str,
    product: &'a str,
    left: Factor<'a>,
    right: Factor<'a>,
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    join: Option<&'a JoinLayout>,
    #[serde(skip_serializing_if = "Option::is_none")]
    corona: Option<&'a CoronaLayout>,
}

pub fn layout_json(product: &str, left: &str, right: &str, g: &Graph, layout: &Layout) -> String {
    let (join, corona) = match layout {
        Layout::Join(j) => (Some(j), None),
        Layout::Corona(c) => (None, Some(c)),
    };
    let (ln, rn) = match layout {
        Layout::Join(j) => (j.left.len(), j.right.len()),
        Layout::Corona(c) => (c.centers.len(), c.copies.first().map_or(0, |r| r.len())),
    };
    let doc = LayoutDoc {
        schema: SCHEMA,
        product,
        left: Factor { source: left, n: ln },
        right: Factor { source: right, n: rn },
        n: g.order(),
        m: g.size(),
        join,
        corona,
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

#[derive(Serialize)]
struct CheckDoc<'a> {
    schema: &'static str,
    property: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    mode: Option<ReplacementMode>,
    set: VertexSet,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<&'a MovabilityCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<movdom::movable::MovabilityFailure>,
}

pub fn check_json(
    property: &str,
    mode: Option<ReplacementMode>,
    set: VertexSet,
    holds: bool,
    verdict: Option<&Verdict>,
) -> String {
    let doc = CheckDoc {
        schema: SCHEMA,
        property,
        mode,
        set,
        holds,
        certificate: verdict.and_then(Verdict::certificate),
        failure: verdict.and_then(Verdict::failure),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn check_text(
    property: &str,
    mode: Option<ReplacementMode>,
    set: VertexSet,
    holds: bool,
    verdict: Option<&Verdict>,
) -> String {
    let mut out = String::new();
    let name = label(property, mode);
    let _ = writeln!(out, "{set} is {}{name}", if holds { "" } else { "not " });
    match verdict {
        Some(Verdict::Certified(cert)) => {
            out.push_str("certificate:\n");
            certificate_lines(cert, &mut out);
        }
        Some(Verdict::Refuted(f)) => {
            let _ = writeln!(out, "reason: {f}");
        }
        None => {}
    }
    out
}

#[derive(Serialize)]
struct BudgetDoc {
    max_order: usize,
    max_product_order: usize,
    samples: usize,
    movable_samples: usize,
    seed: u64,
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    schema: &'static str,
    budget: BudgetDoc,
    status: &'static str,
    reports: &'a [ClaimReport],
}

pub fn verify_json(budget: &Budget, reports: &[ClaimReport]) -> String {
    let doc = VerifyDoc {
        schema: SCHEMA,
        budget: BudgetDoc {
            max_order: budget.max_order,
            max_product_order: budget.max_product_order,
            samples: budget.samples,
            movable_samples: budget.movable_samples,
            seed: budget.seed,
        },
        status: if reports.iter().all(ClaimReport::passed) { "pass" } else { "fail" },
        reports,
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

pub fn verify_text(reports: &[ClaimReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let _ = write!(out, "{status} {:<14} {:>5} instances", r.claim, r.instances);
        if r.failures > 0 {
            let _ = write!(out, ", {} failed", r.failures);
        }
        if r.vacuous {
            out.push_str(" (vacuous: 0 instances)");
        }
        let _ = writeln!(out, "  pool: {}", r.pool);
        for (k, v) in &r.skipped {
            let _ = writeln!(out, "     skipped {k}: {v}");
        }
        if let Some(t) = &r.clause_tally {
            let tally: Vec<String> = t.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(out, "     clause tally: {}", tally.join(", "));
        }
        if let Some(cx) = &r.counterexample {
            let graphs: Vec<String> = cx.graphs.iter().map(|g| format!("{} {}", g.role, g.name)).collect();
            let _ = write!(out, "     counterexample: {}", graphs.join("; "));
            if let Some(m) = cx.mode {
                let _ = write!(out, "; mode {m}");
            }
            if let Some(s) = cx.set {
                let _ = write!(out, "; set {s}");
            }
            let _ = writeln!(out, "; expected {}, got {}", cx.expected, cx.got);
        }
    }
    out
}
