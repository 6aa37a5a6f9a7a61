//! The five structural properties every minimal counterexample must have.
//!
//! * C1: connected.
//! * C2: every edge has degree sum at least `M − 2d + 4`.
//! * C3: every edge with an endpoint of degree at most `K = ⌊(M + 2d − 1)/2d⌋`
//!   has degree sum at least `M + 3`.
//! * C4: for each `3 ≤ k ≤ K`, a master assignment exists.
//! * C5: a `k`-master has degree at least `M + 3 − k` and masters at most
//!   `k − 2` vertices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::masters::{capacity, find_master_assignment, MasterAssignment};
use crate::reducible::{alternator_cap, low_sum_bound};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Property {
    C1,
    C2,
    C3,
    C4,
    C5,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Property::C1 => "C1",
            Property::C2 => "C2",
            Property::C3 => "C3",
            Property::C4 => "C4",
            Property::C5 => "C5",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A vertex outside the component of vertex 0.
    Unreachable {
        vertex: usize,
    },
    Edge {
        edge: usize,
        u: usize,
        v: usize,
        degree_sum: usize,
    },
    NoMasterAssignment {
        k: usize,
    },
    WeakMaster {
        k: usize,
        x: usize,
        master: usize,
    },
    Overloaded {
        k: usize,
        master: usize,
        load: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyVerdict {
    pub property: Property,
    pub witness: Option<Witness>,
}

impl PropertyVerdict {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub verdicts: Vec<PropertyVerdict>,
    /// Master assignments found for each `k` in `3..=K`.
    pub masters: BTreeMap<usize, MasterAssignment>,
}

impl StructureReport {
    pub fn verdict(&self, p: Property) -> &PropertyVerdict {
        self.verdicts
            .iter()
            .find(|v| v.property == p)
            .expect("every property is evaluated")
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(PropertyVerdict::holds)
    }
}

fn edge_witness(g: &Graph, e: usize) -> Witness {
    let (u, v) = g.endpoints(e);
    Witness::Edge {
        edge: e,
        u,
        v,
        degree_sum: g.degree(u) + g.degree(v),
    }
}

pub fn structural_check(g: &Graph, d: u32, m: usize) -> StructureReport {
    let cap = alternator_cap(m, d);
    let sum = |e: usize| {
        let (u, v) = g.endpoints(e);
        g.degree(u) + g.degree(v)
    };
    let c1 = g
        .components()
        .iter()
        .position(|&c| c != 0)
        .map(|vertex| Witness::Unreachable { vertex });
    let c2 = (0..g.edge_count())
        .find(|&e| (sum(e) as i64) < low_sum_bound(m, d) + 1)
        .map(|e| edge_witness(g, e));
    let c3 = (0..g.edge_count())
        .find(|&e| {
            let (u, v) = g.endpoints(e);
            g.degree(u).min(g.degree(v)) <= cap && sum(e) < m + 3
        })
        .map(|e| edge_witness(g, e));
    let mut masters = BTreeMap::new();
    let mut c4 = None;
    for k in 3..=cap {
        match find_master_assignment(g, k) {
            Some(ma) => {
                masters.insert(k, ma);
            }
            None => {
                c4.get_or_insert(Witness::NoMasterAssignment { k });
            }
        }
    }
    let c5 = masters.values().find_map(|ma| master_witness(g, m, ma));
    let verdicts = [
        (Property::C1, c1),
        (Property::C2, c2),
        (Property::C3, c3),
        (Property::C4, c4),
        (Property::C5, c5),
    ]
    .into_iter()
    .map(|(property, witness)| PropertyVerdict { property, witness })
    .collect();
    StructureReport { verdicts, masters }
}

fn master_witness(g: &Graph, m: usize, ma: &MasterAssignment) -> Option<Witness> {
    let k = ma.k;
    if let Some((&x, &y)) = ma.pairs.iter().find(|(_, &y)| g.degree(y) + k < m + 3) {
        return Some(Witness::WeakMaster { k, x, master: y });
    }
    let loads = ma.loads(g.vertex_count());
    loads
        .iter()
        .position(|&l| l > capacity(k))
        .map(|master| Witness::Overloaded {
            k,
            master,
            load: loads[master],
        })
}
