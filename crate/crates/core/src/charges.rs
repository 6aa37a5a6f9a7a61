//! Charge ledgers and the two discharging procedures.
//!
//! For nonpositive characteristic only vertices carry charge, initially
//! `d(v) − 6`, and low vertices draw 1 from each of their masters (rule R1).
//! For positive characteristic vertices and faces start at `d − 4`; 3-vertices
//! draw 1 from their 3-master (R1) and vertices of degree 5 to 7, and 8 or
//! more, feed incident triangles `(k − 4)/k` (R2) and `1/2` (R3).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::embedding::{euler_characteristic, trace_faces, Face, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::masters::MasterAssignment;
use crate::rational::{frac, q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Item {
    Vertex(usize),
    Face(usize),
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Vertex(v) => write!(f, "v{v}"),
            Item::Face(i) => write!(f, "f{i}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rule {
    R1,
    R2,
    R3,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub from: Item,
    pub to: Item,
    pub amount: Q,
    pub rule: Rule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    pub vertices: Vec<Q>,
    /// Empty when faces carry no charge.
    pub faces: Vec<Q>,
    pub transfers: Vec<Transfer>,
}

impl ChargeLedger {
    pub fn new(vertices: Vec<Q>, faces: Vec<Q>) -> Self {
        ChargeLedger {
            vertices,
            faces,
            transfers: Vec::new(),
        }
    }

    pub fn charge(&self, item: Item) -> Q {
        match item {
            Item::Vertex(v) => self.vertices[v],
            Item::Face(f) => self.faces[f],
        }
    }

    fn slot(&mut self, item: Item) -> &mut Q {
        match item {
            Item::Vertex(v) => &mut self.vertices[v],
            Item::Face(f) => &mut self.faces[f],
        }
    }

    pub fn total(&self) -> Q {
        self.vertices
            .iter()
            .chain(&self.faces)
            .fold(q(0), |acc, x| acc + x)
    }

    /// Moves `amount` and logs it; the total is unchanged.
    pub fn transfer(&mut self, from: Item, to: Item, amount: Q, rule: Rule) {
        *self.slot(from) -= amount;
        *self.slot(to) += amount;
        self.transfers.push(Transfer {
            from,
            to,
            amount,
            rule,
        });
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialCharges {
    pub ledger: ChargeLedger,
    pub epsilon: i64,
    pub total: Q,
    /// `−6ε` or `−4ε`.
    pub bound: Q,
    /// For vertex charges: `total ≤ −6ε`. For vertex and face charges: the
    /// total is negative, checked only when `ε > 0`.
    pub within_bound: bool,
}

/// Vertex charges `d(v) − 6`, with the identity
/// `Σ(d(v) − 6) = −6ε − Σ_f (2d(f) − 6)` verified.
pub fn initial_charges_thm13(g: &Graph, rotation: &RotationSystem) -> Result<InitialCharges> {
    let faces = trace_faces(g, rotation)?;
    let epsilon = euler_characteristic(g, rotation)?;
    let vertices: Vec<Q> = (0..g.vertex_count())
        .map(|v| q(g.degree(v) as i64 - 6))
        .collect();
    let ledger = ChargeLedger::new(vertices, Vec::new());
    let total = ledger.total();
    let face_part: i64 = faces.iter().map(|f| 2 * f.degree() as i64 - 6).sum();
    if total != q(-6 * epsilon - face_part) {
        return Err(Error::Defect(format!(
            "vertex charge identity fails: {total} vs {}",
            -6 * epsilon - face_part
        )));
    }
    let bound = q(-6 * epsilon);
    Ok(InitialCharges {
        ledger,
        epsilon,
        total,
        bound,
        within_bound: total <= bound,
    })
}

/// Vertex and face charges `d − 4`, with `Σ = −4ε` verified.
pub fn initial_charges_thm14(g: &Graph, rotation: &RotationSystem) -> Result<InitialCharges> {
    let faces = trace_faces(g, rotation)?;
    let epsilon = euler_characteristic(g, rotation)?;
    let vertices: Vec<Q> = (0..g.vertex_count())
        .map(|v| q(g.degree(v) as i64 - 4))
        .collect();
    let face_charges: Vec<Q> = faces.iter().map(|f| q(f.degree() as i64 - 4)).collect();
    let ledger = ChargeLedger::new(vertices, face_charges);
    let total = ledger.total();
    let bound = q(-4 * epsilon);
    if total != bound {
        return Err(Error::Defect(format!(
            "vertex and face charge identity fails: {total} vs {bound}"
        )));
    }
    let within_bound = epsilon <= 0 || total < q(0);
    Ok(InitialCharges {
        ledger,
        epsilon,
        total,
        bound,
        within_bound,
    })
}

/// A local lower bound on a final charge, tagged with the case it comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseCheck {
    pub item: Item,
    pub case: &'static str,
    pub lower: Q,
    pub actual: Q,
}

impl CaseCheck {
    pub fn holds(&self) -> bool {
        self.actual >= self.lower
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discharge {
    pub ledger: ChargeLedger,
    pub checks: Vec<CaseCheck>,
}

impl Discharge {
    pub fn failed(&self) -> impl Iterator<Item = &CaseCheck> {
        self.checks.iter().filter(|c| !c.holds())
    }
}

fn conserve(before: &ChargeLedger, after: &ChargeLedger) -> Result<()> {
    if before.total() != after.total() {
        return Err(Error::Defect("discharging changed the total charge".into()));
    }
    Ok(())
}

/// Rule R1 with masters for `j ∈ {3, 4, 5}`: an `i`-vertex receives 1 from
/// its `j`-master for every `i ≤ j ≤ 5`. Checks the per-vertex bounds of the
/// case analysis, which depends on `M − Δ`.
pub fn discharge_thm13(
    g: &Graph,
    d: u32,
    m: usize,
    masters: &BTreeMap<usize, MasterAssignment>,
    initial: &ChargeLedger,
) -> Result<Discharge> {
    let mut ledger = initial.clone();
    for v in 0..g.vertex_count() {
        let i = g.degree(v);
        if !(3..=5).contains(&i) {
            continue;
        }
        for j in i..=5 {
            let master = masters
                .get(&j)
                .and_then(|ma| ma.master_of(v))
                .ok_or_else(|| {
                    Error::Precondition(format!("vertex {v} of degree {i} has no {j}-master"))
                })?;
            ledger.transfer(Item::Vertex(master), Item::Vertex(v), q(1), Rule::R1);
        }
    }
    conserve(initial, &ledger)?;
    let delta = g.max_degree();
    let cap = crate::reducible::alternator_cap(m, d);
    let mi = m as i64;
    let mut checks = Vec::new();
    for v in 0..g.vertex_count() {
        let k = g.degree(v);
        let actual = ledger.vertices[v];
        let (case, lower) = if k < 3 {
            ("k<3", q(0))
        } else if k <= 5 {
            ("a", q(0))
        } else if k + 3 <= m {
            ("b", q(0))
        } else {
            let lower = match (m - delta, delta - k) {
                (2, 0) | (1, 1) | (0, 2) => mi - 11,
                _ => mi - 12,
            };
            ("c", q(lower))
        };
        checks.push(CaseCheck {
            item: Item::Vertex(v),
            case,
            lower,
            actual,
        });
        if k > cap {
            checks.push(CaseCheck {
                item: Item::Vertex(v),
                case: "high",
                lower: q(cap as i64 - 5),
                actual,
            });
        }
    }
    Ok(Discharge { ledger, checks })
}

/// Rules R1 to R3 and the vertex and face case bounds.
pub fn discharge_thm14(
    g: &Graph,
    rotation: &RotationSystem,
    m: usize,
    masters_3: Option<&MasterAssignment>,
    initial: &ChargeLedger,
) -> Result<Discharge> {
    let faces: Vec<Face> = trace_faces(g, rotation)?;
    if faces.len() != initial.faces.len() {
        return Err(Error::Precondition(
            "ledger and embedding disagree on the faces".into(),
        ));
    }
    let mut ledger = initial.clone();
    for v in 0..g.vertex_count() {
        if g.degree(v) == 3 {
            let master = masters_3
                .and_then(|ma| ma.master_of(v))
                .ok_or_else(|| Error::Precondition(format!("3-vertex {v} has no 3-master")))?;
            ledger.transfer(Item::Vertex(master), Item::Vertex(v), q(1), Rule::R1);
        }
    }
    for (i, f) in faces.iter().enumerate() {
        if f.degree() != 3 {
            continue;
        }
        for v in f.vertices() {
            let k = g.degree(v) as i64;
            if (5..=7).contains(&k) {
                ledger.transfer(Item::Vertex(v), Item::Face(i), frac(k - 4, k), Rule::R2);
            } else if k >= 8 {
                ledger.transfer(Item::Vertex(v), Item::Face(i), frac(1, 2), Rule::R3);
            }
        }
    }
    conserve(initial, &ledger)?;
    let mut checks = Vec::new();
    for v in 0..g.vertex_count() {
        let k = g.degree(v);
        let (case, lower) = match k {
            _ if k == m => ("k=M", frac(m as i64 - 10, 2)),
            0..=2 => ("k<3", q(0)),
            3 => ("k=3", q(0)),
            4 => ("k=4", q(0)),
            5..=7 => ("5<=k<=7", q(0)),
            _ => ("8<=k<=M-1", q(0)),
        };
        checks.push(CaseCheck {
            item: Item::Vertex(v),
            case,
            lower,
            actual: ledger.vertices[v],
        });
    }
    for (i, f) in faces.iter().enumerate() {
        let case = match f.degree() {
            0..=2 => "face<3",
            3 => match f.vertices().map(|v| g.degree(v)).min().unwrap_or(0) {
                3 => "face-a",
                4 => "face-b",
                5 => "face-c",
                6.. => "face-d",
                _ => "face<3-corner",
            },
            _ => "face>=4",
        };
        checks.push(CaseCheck {
            item: Item::Face(i),
            case,
            lower: q(0),
            actual: ledger.faces[i],
        });
    }
    Ok(Discharge { ledger, checks })
}
