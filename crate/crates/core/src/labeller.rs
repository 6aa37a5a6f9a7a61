//! Inductive list labeller: peel a reducible configuration, label the smaller
//! graph, and extend.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::alternator::Alternator;
use crate::budget::Budget;
use crate::embedding::RotationSystem;
use crate::error::Error;
use crate::extend::{extend_low_sum_edge, extend_low_vertex_edge, reduce_alternator};
use crate::graph::Graph;
use crate::labelling::{respects_lists, Labelling, ListAssignment};
use crate::reducible::{find_reducible, ReducibleConfig};
use crate::search::find_list_labelling;

/// One reduction, in the vertex numbering of the input graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction {
    IsolatedVertex {
        vertex: usize,
    },
    LowSumEdge {
        u: usize,
        v: usize,
    },
    LowVertexEdge {
        u: usize,
        v: usize,
        low: usize,
    },
    Alternator {
        k: usize,
        x: Vec<usize>,
        y: Vec<usize>,
    },
    /// No configuration applied; the remaining graph was searched directly.
    Fallback {
        vertices: usize,
        edges: usize,
    },
}

impl Reduction {
    pub fn kind(&self) -> &'static str {
        match self {
            Reduction::IsolatedVertex { .. } => "isolated-vertex",
            Reduction::LowSumEdge { .. } => "low-sum-edge",
            Reduction::LowVertexEdge { .. } => "low-vertex-edge",
            Reduction::Alternator { .. } => "alternator",
            Reduction::Fallback { .. } => "fallback",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub step: usize,
    pub reduction: Reduction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub labelling: Labelling,
    pub trace: Vec<TraceStep>,
}

/// Why the labeller stopped, with the reductions made up to that point. The
/// failing stage is the last step of the trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabellerFailure {
    pub error: Error,
    pub trace: Vec<TraceStep>,
}

impl fmt::Display for LabellerFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.trace.last() {
            Some(step) => write!(
                f,
                "{} (at step {}, {})",
                self.error,
                step.step,
                step.reduction.kind()
            ),
            None => write!(f, "{}", self.error),
        }
    }
}

impl core::error::Error for LabellerFailure {}

/// Labels `g` from lists of size at least `M + 2d` by repeatedly removing a
/// reducible configuration. The rotation is accepted for interface symmetry
/// with the audit and is not consulted.
pub fn constructive_labeller(
    g: &Graph,
    _rotation: Option<&RotationSystem>,
    d: u32,
    m: usize,
    lists: &ListAssignment,
    budget: &mut Budget,
) -> Result<Construction, LabellerFailure> {
    let mut run = Run {
        d,
        m,
        budget,
        trace: Vec::new(),
    };
    let fail = |error: Error, trace: Vec<TraceStep>| LabellerFailure { error, trace };
    if d < 2 {
        return Err(fail(
            Error::Precondition(format!("d = {d} must be at least 2")),
            Vec::new(),
        ));
    }
    if g.max_degree() > m {
        return Err(fail(
            Error::Precondition(format!("maximum degree {} exceeds M = {m}", g.max_degree())),
            Vec::new(),
        ));
    }
    if lists.len() != g.element_count() {
        return Err(fail(
            Error::Precondition(format!(
                "{} lists for {} elements",
                lists.len(),
                g.element_count()
            )),
            Vec::new(),
        ));
    }
    let vmap: Vec<usize> = (0..g.vertex_count()).collect();
    match run.label(g, &vmap, lists) {
        Ok(labelling) => {
            if !respects_lists(g, d, lists, &labelling).unwrap_or(false) {
                return Err(fail(
                    Error::Defect("labeller produced an invalid labelling".into()),
                    run.trace,
                ));
            }
            Ok(Construction {
                labelling,
                trace: run.trace,
            })
        }
        Err(error) => Err(fail(error, run.trace)),
    }
}

struct Run<'a> {
    d: u32,
    m: usize,
    budget: &'a mut Budget,
    trace: Vec<TraceStep>,
}

impl Run<'_> {
    fn record(&mut self, reduction: Reduction) {
        let step = self.trace.len();
        self.trace.push(TraceStep { step, reduction });
    }

    fn label(
        &mut self,
        g: &Graph,
        vmap: &[usize],
        lists: &ListAssignment,
    ) -> Result<Labelling, Error> {
        let n = g.vertex_count();
        if n == 0 {
            return Ok(Vec::new());
        }
        if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
            self.record(Reduction::IsolatedVertex { vertex: vmap[v] });
            let keep: Vec<bool> = (0..n).map(|w| w != v).collect();
            let mut lab = self.label_induced(g, vmap, lists, &keep)?;
            let first = lists[v].iter().min().copied();
            lab[v] = Some(first.ok_or_else(|| {
                Error::Precondition(format!("vertex {} has an empty list", vmap[v]))
            })?);
            return Ok(lab);
        }
        match find_reducible(g, self.d, self.m) {
            Some(ReducibleConfig::LowSumEdge { edge }) => {
                let (u, v) = g.endpoints(edge);
                self.record(Reduction::LowSumEdge {
                    u: vmap[u],
                    v: vmap[v],
                });
                let partial = self.label_without_edge(g, vmap, lists, edge)?;
                extend_low_sum_edge(g, self.d, self.m, edge, &partial, lists)
            }
            Some(ReducibleConfig::LowVertexEdge { edge, low }) => {
                let (u, v) = g.endpoints(edge);
                self.record(Reduction::LowVertexEdge {
                    u: vmap[u],
                    v: vmap[v],
                    low: vmap[low],
                });
                let partial = self.label_without_edge(g, vmap, lists, edge)?;
                extend_low_vertex_edge(g, self.d, self.m, edge, low, &partial, lists)
            }
            Some(ReducibleConfig::Alternator(alt)) => {
                self.record(Reduction::Alternator {
                    k: alt.k,
                    x: alt.x.iter().map(|&x| vmap[x]).collect(),
                    y: alt.y.iter().map(|&y| vmap[y]).collect(),
                });
                self.label_alternator(g, vmap, lists, &alt)
            }
            None => {
                self.record(Reduction::Fallback {
                    vertices: n,
                    edges: g.edge_count(),
                });
                find_list_labelling(g, self.d, lists, self.budget)?.ok_or_else(|| {
                    Error::Defect("irreducible remainder has no list labelling".into())
                })
            }
        }
    }

    fn label_without_edge(
        &mut self,
        g: &Graph,
        vmap: &[usize],
        lists: &ListAssignment,
        edge: usize,
    ) -> Result<Labelling, Error> {
        let n = g.vertex_count();
        let (sub, emap) = g.without_edge(edge);
        let mut sub_lists: ListAssignment = lists[..n].to_vec();
        sub_lists.extend(emap.iter().map(|&e| lists[n + e].clone()));
        let sub_lab = self.label(&sub, vmap, &sub_lists)?;
        let mut lab: Labelling = vec![None; g.element_count()];
        lab[..n].copy_from_slice(&sub_lab[..n]);
        for (i, &e) in emap.iter().enumerate() {
            lab[n + e] = sub_lab[n + i];
        }
        Ok(lab)
    }

    fn label_induced(
        &mut self,
        g: &Graph,
        vmap: &[usize],
        lists: &ListAssignment,
        keep: &[bool],
    ) -> Result<Labelling, Error> {
        let n = g.vertex_count();
        let (sub, sub_vmap, sub_emap) = g.induced(keep);
        let mut sub_lists: ListAssignment = sub_vmap.iter().map(|&v| lists[v].clone()).collect();
        sub_lists.extend(sub_emap.iter().map(|&e| lists[n + e].clone()));
        let outer: Vec<usize> = sub_vmap.iter().map(|&v| vmap[v]).collect();
        let sub_lab = self.label(&sub, &outer, &sub_lists)?;
        let mut lab: Labelling = vec![None; g.element_count()];
        for (i, &v) in sub_vmap.iter().enumerate() {
            lab[v] = sub_lab[i];
        }
        let sn = sub.vertex_count();
        for (i, &e) in sub_emap.iter().enumerate() {
            lab[n + e] = sub_lab[sn + i];
        }
        Ok(lab)
    }

    fn label_alternator(
        &mut self,
        g: &Graph,
        vmap: &[usize],
        lists: &ListAssignment,
        alt: &Alternator,
    ) -> Result<Labelling, Error> {
        let mut keep = vec![true; g.vertex_count()];
        for &x in &alt.x {
            keep[x] = false;
        }
        let partial = self.label_induced(g, vmap, lists, &keep)?;
        reduce_alternator(g, self.d, self.m, alt, &partial, lists)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    fn lists(g: &Graph, size: u32, seed: u32) -> ListAssignment {
        (0..g.element_count() as u32)
            .map(|i| {
                (0..size)
                    .map(|c| c * (1 + (i + seed) % 3) + (i * 7 + seed) % 5)
                    .collect()
            })
            .collect()
    }

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1);
        let out = constructive_labeller(&g, None, 2, 12, &vec![vec![7, 3]], &mut Budget::default())
            .unwrap();
        assert_eq!(out.labelling, vec![Some(3)]);
    }

    #[test]
    fn star_and_wheel() {
        for fam in [Family::Star(12), Family::Wheel(8)] {
            let e = generate(&fam).unwrap();
            let l = lists(&e.graph, 16, 3);
            let out = constructive_labeller(
                &e.graph,
                Some(&e.rotation),
                2,
                12,
                &l,
                &mut Budget::default(),
            )
            .unwrap();
            assert!(respects_lists(&e.graph, 2, &l, &out.labelling).unwrap());
            assert!(!out.trace.is_empty());
        }
    }

    #[test]
    fn guards() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let r = constructive_labeller(&g, None, 1, 12, &vec![vec![0]; 3], &mut Budget::default());
        assert!(matches!(
            r,
            Err(LabellerFailure {
                error: Error::Precondition(_),
                ..
            })
        ));
    }
}
