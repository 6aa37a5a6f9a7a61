//! JSON reports. Every command prints one object: `status` first, then the
//! command's payload, then `timing`. Everything except `timing` is a pure
//! function of the inputs and flags.

use std::time::Duration;

use serde_json::{json, Map, Value};

use dlab_core::audit::{AuditOutcome, AuditVerdict, Finding, Sums};
use dlab_core::charges::{CaseCheck, ChargeLedger, Item};
use dlab_core::labeller::{Reduction, TraceStep};
use dlab_core::rational::{render, Q};
use dlab_core::reducible::ReducibleConfig;
use dlab_core::structure::{StructureReport, Witness};
use dlab_core::Graph;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Infeasible,
    BudgetExceeded,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Infeasible => "infeasible",
            Status::BudgetExceeded => "budget-exceeded",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub status: Status,
    pub payload: Map<String, Value>,
    /// One line for standard error.
    pub summary: String,
    pub exit_code: i32,
}

impl Report {
    pub fn new(status: Status, summary: impl Into<String>) -> Self {
        Report { status, payload: Map::new(), summary: summary.into(), exit_code: 0 }
    }

    pub fn with(mut self, key: &str, value: Value) -> Self {
        self.payload.insert(key.into(), value);
        self
    }

    pub fn from_error(err: &CliError) -> Self {
        let status = if err.exit_code() == 3 { Status::BudgetExceeded } else { Status::Error };
        let mut r = Report::new(status, err.to_string())
            .with("kind", json!(err.kind()))
            .with("message", json!(err.to_string()));
        if let CliError::Parse { line, column, .. } = err {
            r = r.with("line", json!(line)).with("column", json!(column));
        }
        if let CliError::Schema { field, .. } = err {
            r = r.with("field", json!(field));
        }
        r.exit_code = err.exit_code();
        r
    }

    /// The report without timing; byte-identical across identical runs.
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("status".into(), json!(self.status.as_str()));
        obj.extend(self.payload.clone());
        Value::Object(obj)
    }

    pub fn to_json_timed(&self, elapsed: Duration) -> Value {
        let mut v = self.to_json();
        v["timing"] = json!({ "wall_ms": elapsed.as_secs_f64() * 1000.0 });
        v
    }
}

pub fn rational(x: &Q) -> Value {
    json!(render(x))
}

fn item(x: Item) -> Value {
    json!(x.to_string())
}

pub fn config_json(g: &Graph, c: &ReducibleConfig) -> Value {
    match c {
        ReducibleConfig::LowSumEdge { edge } => {
            let (u, v) = g.endpoints(*edge);
            json!({ "kind": c.kind(), "edge": [u, v], "degree_sum": g.degree(u) + g.degree(v) })
        }
        ReducibleConfig::LowVertexEdge { edge, low } => {
            let (u, v) = g.endpoints(*edge);
            json!({ "kind": c.kind(), "edge": [u, v], "low": low, "degree_sum": g.degree(u) + g.degree(v) })
        }
        ReducibleConfig::Alternator(a) => {
            let b: Vec<_> = a.b.iter().map(|&e| g.endpoints(e)).map(|(u, v)| [u, v]).collect();
            json!({ "kind": c.kind(), "k": a.k, "x": a.x, "y": a.y, "b": b })
        }
    }
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Unreachable { vertex } => json!({ "kind": "unreachable", "vertex": vertex }),
        Witness::Edge { u, v, degree_sum, .. } => json!({ "kind": "edge", "edge": [u, v], "degree_sum": degree_sum }),
        Witness::NoMasterAssignment { k } => json!({ "kind": "no-master-assignment", "k": k }),
        Witness::WeakMaster { k, x, master } => json!({ "kind": "weak-master", "k": k, "x": x, "master": master }),
        Witness::Overloaded { k, master, load } => {
            json!({ "kind": "overloaded", "k": k, "master": master, "load": load })
        }
    }
}

pub fn structure_json(r: &StructureReport) -> Value {
    let props: Map<String, Value> = r
        .verdicts
        .iter()
        .map(|v| (v.property.to_string(), v.witness.as_ref().map(witness_json).unwrap_or(json!("holds"))))
        .collect();
    Value::Object(props)
}

pub fn ledger_json(l: &ChargeLedger) -> Value {
    let mut obj = Map::new();
    obj.insert("vertices".into(), json!(l.vertices.iter().map(rational).collect::<Vec<_>>()));
    if !l.faces.is_empty() {
        obj.insert("faces".into(), json!(l.faces.iter().map(rational).collect::<Vec<_>>()));
    }
    let transfers: Vec<Value> = l
        .transfers
        .iter()
        .map(|t| json!({ "from": item(t.from), "to": item(t.to), "amount": rational(&t.amount), "rule": t.rule.to_string() }))
        .collect();
    obj.insert("transfers".into(), json!(transfers));
    Value::Object(obj)
}

fn check_json(c: &CaseCheck) -> Value {
    json!({ "item": item(c.item), "case": c.case, "lower": rational(&c.lower), "actual": rational(&c.actual) })
}

fn sums_json(s: &Sums) -> Value {
    json!({
        "initial": rational(&s.initial),
        "final": rational(&s.final_charge),
        "bound": rational(&s.bound),
        "derived": rational(&s.derived),
    })
}

/// Payload fields for an audit: `outcome`, then whichever of `property`,
/// `witness`, `reason`, `sums`, `failed_checks`, `ledger` apply.
pub fn audit_payload(g: &Graph, v: &AuditVerdict, with_ledger: bool) -> Map<String, Value> {
    let mut obj = Map::new();
    obj.insert("outcome".into(), json!(v.outcome.name()));
    match &v.outcome {
        AuditOutcome::Reducible { property, finding } => {
            obj.insert("property".into(), json!(property));
            let w = match finding {
                Finding::Disconnected { vertex } => json!({ "kind": "unreachable", "vertex": vertex }),
                Finding::Config(c) => config_json(g, c),
            };
            obj.insert("witness".into(), w);
        }
        AuditOutcome::ChargeContradiction { sums, failed } => {
            obj.insert("sums".into(), sums_json(sums));
            obj.insert("failed_checks".into(), json!(failed.iter().map(check_json).collect::<Vec<_>>()));
        }
        AuditOutcome::Inconclusive { reason } => {
            obj.insert("reason".into(), json!(reason));
        }
        AuditOutcome::ConsistentCounterexample { sums } => {
            obj.insert("sums".into(), sums_json(sums));
        }
    }
    if let Some(eps) = v.epsilon {
        obj.insert("euler_characteristic".into(), json!(eps));
    }
    if let Some(s) = &v.structure {
        obj.insert("structure".into(), structure_json(s));
    }
    if with_ledger {
        if let Some(l) = &v.ledger {
            obj.insert("ledger".into(), ledger_json(l));
            obj.insert("checks".into(), json!(v.checks.iter().map(check_json).collect::<Vec<_>>()));
        }
    }
    obj
}

pub fn trace_json(trace: &[TraceStep]) -> Value {
    let steps: Vec<Value> = trace
        .iter()
        .map(|s| {
            let payload = match &s.reduction {
                Reduction::IsolatedVertex { vertex } => json!({ "vertex": vertex }),
                Reduction::LowSumEdge { u, v } => json!({ "edge": [u, v] }),
                Reduction::LowVertexEdge { u, v, low } => json!({ "edge": [u, v], "low": low }),
                Reduction::Alternator { k, x, y } => json!({ "k": k, "x": x, "y": y }),
                Reduction::Fallback { vertices, edges } => json!({ "vertices": vertices, "edges": edges }),
            };
            json!({ "step": s.step, "kind": s.reduction.kind(), "payload": payload })
        })
        .collect();
    json!(steps)
}
