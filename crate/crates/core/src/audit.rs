//! Per-instance audit: shows a concrete embedded graph is not a minimal
//! counterexample, either by exhibiting a reducible configuration or by
//! running the discharging and reaching the charge contradiction.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::alternator::find_alternator;
use crate::charges::{
    discharge_thm13, discharge_thm14, initial_charges_thm13, initial_charges_thm14, CaseCheck,
    ChargeLedger, Item,
};
use crate::embedding::{euler_characteristic, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{q, Q};
use crate::reducible::{alternator_cap, check_reducible, ReducibleConfig};
use crate::structure::{structural_check, Property, StructureReport, Witness};
use crate::threshold::{meets_threshold, positive_characteristic_constant};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// Nonpositive Euler characteristic, `M` at least the threshold.
    Thm13,
    /// Positive Euler characteristic, `M ≥ 5d + 2`.
    Thm14,
}

impl Theorem {
    pub fn parse(s: &str) -> Option<Theorem> {
        match s {
            "thm13" => Some(Theorem::Thm13),
            "thm14" => Some(Theorem::Thm14),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Thm13 => "thm13",
            Theorem::Thm14 => "thm14",
        }
    }
}

/// Why the graph reduces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finding {
    Disconnected { vertex: usize },
    Config(ReducibleConfig),
}

/// Exact sums behind a discharging verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sums {
    pub initial: Q,
    pub final_charge: Q,
    /// `−6ε` or `−4ε`.
    pub bound: Q,
    /// What the case analysis forces `Σw′` to exceed if the structural
    /// properties and both claims hold.
    pub derived: Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditOutcome {
    /// `property` is `C1`..`C5` or `claim-2`.
    Reducible {
        property: String,
        finding: Finding,
    },
    /// The derived lower bound on `Σw′` is at least the bound, while the
    /// actual sum never is; the failed local checks show where.
    ChargeContradiction {
        sums: Sums,
        failed: Vec<CaseCheck>,
    },
    Inconclusive {
        reason: String,
    },
    /// Structural properties hold and the sums do not contradict. The
    /// theorems rule this out.
    ConsistentCounterexample {
        sums: Sums,
    },
}

impl AuditOutcome {
    pub fn name(&self) -> &'static str {
        match self {
            AuditOutcome::Reducible { .. } => "reducible",
            AuditOutcome::ChargeContradiction { .. } => "charge-contradiction",
            AuditOutcome::Inconclusive { .. } => "inconclusive",
            AuditOutcome::ConsistentCounterexample { .. } => "consistent-counterexample",
        }
    }
}

impl fmt::Display for AuditOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditOutcome::Reducible { property, finding } => match finding {
                Finding::Disconnected { vertex } => {
                    write!(f, "reducible ({property}): vertex {vertex} unreachable")
                }
                Finding::Config(c) => write!(f, "reducible ({property}): {}", c.kind()),
            },
            AuditOutcome::ChargeContradiction { sums, .. } => write!(
                f,
                "charge contradiction: derived {} vs bound {}",
                sums.derived, sums.bound
            ),
            AuditOutcome::Inconclusive { reason } => write!(f, "inconclusive: {reason}"),
            AuditOutcome::ConsistentCounterexample { .. } => {
                f.write_str("consistent counterexample")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditVerdict {
    pub outcome: AuditOutcome,
    pub epsilon: Option<i64>,
    pub structure: Option<StructureReport>,
    /// Final ledger, present when discharging ran.
    pub ledger: Option<ChargeLedger>,
    pub checks: Vec<CaseCheck>,
}

impl AuditVerdict {
    fn early(
        outcome: AuditOutcome,
        epsilon: Option<i64>,
        structure: Option<StructureReport>,
    ) -> Self {
        AuditVerdict {
            outcome,
            epsilon,
            structure,
            ledger: None,
            checks: Vec::new(),
        }
    }
}

fn reducible(
    g: &Graph,
    d: u32,
    m: usize,
    property: &str,
    config: ReducibleConfig,
) -> Result<AuditOutcome> {
    if !check_reducible(g, d, m, &config)? {
        return Err(Error::Defect(format!(
            "{property} witness does not validate as {}",
            config.kind()
        )));
    }
    Ok(AuditOutcome::Reducible {
        property: property.into(),
        finding: Finding::Config(config),
    })
}

/// An alternator for `first`, else for any other `k` in `3..=K`.
fn locate_alternator(g: &Graph, d: u32, m: usize, first: usize) -> Option<ReducibleConfig> {
    let cap = alternator_cap(m, d);
    core::iter::once(first)
        .chain((3..=cap).filter(|&k| k != first))
        .find_map(|k| find_alternator(g, k, m))
        .map(ReducibleConfig::Alternator)
}

fn hypothesis(
    g: &Graph,
    d: u32,
    m: usize,
    epsilon: i64,
    theorem: Theorem,
) -> Result<Option<String>> {
    if d < 2 {
        return Ok(Some(format!("d = {d} is below 2")));
    }
    if g.max_degree() > m {
        return Ok(Some(format!(
            "maximum degree {} exceeds M = {m}",
            g.max_degree()
        )));
    }
    Ok(match theorem {
        Theorem::Thm13 if epsilon > 0 => {
            Some(format!("Euler characteristic {epsilon} is positive"))
        }
        Theorem::Thm13 if !meets_threshold(m, d, epsilon)? => {
            Some(format!("M = {m} is below the threshold"))
        }
        Theorem::Thm14 if epsilon <= 0 => {
            Some(format!("Euler characteristic {epsilon} is not positive"))
        }
        Theorem::Thm14 if m < positive_characteristic_constant(d) => Some(format!(
            "M = {m} is below 5d + 2 = {}",
            positive_characteristic_constant(d)
        )),
        _ => None,
    })
}

pub fn audit(
    g: &Graph,
    rotation: &RotationSystem,
    d: u32,
    m: usize,
    theorem: Theorem,
) -> Result<AuditVerdict> {
    rotation.validate(g)?;
    if let Some(vertex) = g.components().iter().position(|&c| c != 0) {
        let outcome = AuditOutcome::Reducible {
            property: "C1".into(),
            finding: Finding::Disconnected { vertex },
        };
        return Ok(AuditVerdict::early(outcome, None, None));
    }
    let epsilon = euler_characteristic(g, rotation)?;
    if let Some(reason) = hypothesis(g, d, m, epsilon, theorem)? {
        return Ok(AuditVerdict::early(
            AuditOutcome::Inconclusive { reason },
            Some(epsilon),
            None,
        ));
    }
    let report = structural_check(g, d, m);
    for p in [Property::C3, Property::C2, Property::C4, Property::C5] {
        let Some(w) = &report.verdict(p).witness else {
            continue;
        };
        let outcome = match *w {
            Witness::Edge { edge, u, v, .. } if p == Property::C3 => {
                let low = if g.degree(u) <= g.degree(v) { u } else { v };
                reducible(g, d, m, "C3", ReducibleConfig::LowVertexEdge { edge, low })?
            }
            Witness::Edge { edge, .. } => {
                reducible(g, d, m, "C2", ReducibleConfig::LowSumEdge { edge })?
            }
            Witness::NoMasterAssignment { k }
            | Witness::WeakMaster { k, .. }
            | Witness::Overloaded { k, .. } => match locate_alternator(g, d, m, k) {
                Some(config) => reducible(g, d, m, &format!("{p}"), config)?,
                None => AuditOutcome::Inconclusive {
                    reason: format!("{p} fails at k = {k} but no alternator was found"),
                },
            },
            Witness::Unreachable { .. } => {
                return Err(Error::Defect("connected graph reported unreachable".into()))
            }
        };
        return Ok(AuditVerdict::early(outcome, Some(epsilon), Some(report)));
    }

    let mi = m as i64;
    let (initial, discharge, derived) = match theorem {
        Theorem::Thm13 => {
            let init = initial_charges_thm13(g, rotation)?;
            let cap = alternator_cap(m, d);
            let high = (0..g.vertex_count()).filter(|&v| g.degree(v) > cap).count();
            if (high as i64) < mi - cap as i64 + 3 {
                let outcome = match find_alternator(g, cap, m) {
                    Some(alt) => reducible(g, d, m, "claim-2", ReducibleConfig::Alternator(alt))?,
                    None => AuditOutcome::Inconclusive {
                        reason: format!(
                            "only {high} vertices of degree above {cap} and no {cap}-alternator"
                        ),
                    },
                };
                return Ok(AuditVerdict::early(outcome, Some(epsilon), Some(report)));
            }
            let out = discharge_thm13(g, d, m, &report.masters, &init.ledger)?;
            (init, out, q((mi - cap as i64 + 3) * (cap as i64 - 5)))
        }
        Theorem::Thm14 => {
            let init = initial_charges_thm14(g, rotation)?;
            let out = discharge_thm14(g, rotation, m, report.masters.get(&3), &init.ledger)?;
            (init, out, q(0))
        }
    };
    let mut checks = discharge.checks.clone();
    if theorem == Theorem::Thm13 {
        // Claim 1: δ ≥ M − Δ + 3
        if let Some(v) = (0..g.vertex_count()).min_by_key(|&v| g.degree(v)) {
            checks.push(CaseCheck {
                item: Item::Vertex(v),
                case: "claim-1",
                lower: q(mi - g.max_degree() as i64 + 3),
                actual: q(g.degree(v) as i64),
            });
        }
    }
    let sums = Sums {
        initial: initial.total,
        final_charge: discharge.ledger.total(),
        bound: initial.bound,
        derived,
    };
    let contradiction = match theorem {
        // every high vertex ends strictly above K − 5, so Σw′ > derived
        Theorem::Thm13 => sums.derived >= sums.bound,
        Theorem::Thm14 => sums.derived > sums.bound,
    };
    let failed: Vec<CaseCheck> = checks.iter().filter(|c| !c.holds()).cloned().collect();
    let outcome = if contradiction {
        AuditOutcome::ChargeContradiction { sums, failed }
    } else {
        AuditOutcome::ConsistentCounterexample { sums }
    };
    Ok(AuditVerdict {
        outcome,
        epsilon: Some(epsilon),
        structure: Some(report),
        ledger: Some(discharge.ledger),
        checks,
    })
}
