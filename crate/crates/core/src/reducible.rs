//! Detection of the reducible configurations used by the inductive labeller.

use crate::alternator::{check_alternator, find_alternator, Alternator};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReducibleConfig {
    /// An edge whose endpoint degrees sum to at most `M − 2d + 3`.
    LowSumEdge {
        edge: usize,
    },
    /// An edge with an endpoint `low` of degree at most the alternator cap
    /// and degree sum at most `M + 2`.
    LowVertexEdge {
        edge: usize,
        low: usize,
    },
    Alternator(Alternator),
}

impl ReducibleConfig {
    pub fn kind(&self) -> &'static str {
        match self {
            ReducibleConfig::LowSumEdge { .. } => "low-sum-edge",
            ReducibleConfig::LowVertexEdge { .. } => "low-vertex-edge",
            ReducibleConfig::Alternator(_) => "alternator",
        }
    }
}

/// `⌊(M + 2d − 1) / 2d⌋`, the largest useful alternator order and the degree
/// below which a vertex can always be recoloured last.
pub fn alternator_cap(m: usize, d: u32) -> usize {
    let d = d as usize;
    m.div_ceil(2 * d)
}

/// Largest degree sum of an edge that can be coloured last.
pub fn low_sum_bound(m: usize, d: u32) -> i64 {
    m as i64 - 2 * d as i64 + 3
}

fn degree_sum(g: &Graph, e: usize) -> usize {
    let (u, v) = g.endpoints(e);
    g.degree(u) + g.degree(v)
}

/// First low-sum edge, else first low-vertex edge, else a k-alternator for the
/// smallest workable `k` in `3..=⌊(M + 2d − 1) / 2d⌋`.
pub fn find_reducible(g: &Graph, d: u32, m: usize) -> Option<ReducibleConfig> {
    if let Some(edge) =
        (0..g.edge_count()).find(|&e| degree_sum(g, e) as i64 <= low_sum_bound(m, d))
    {
        return Some(ReducibleConfig::LowSumEdge { edge });
    }
    let cap = alternator_cap(m, d);
    for edge in 0..g.edge_count() {
        let (u, v) = g.endpoints(edge);
        let low = if g.degree(u) <= g.degree(v) { u } else { v };
        if g.degree(low) <= cap && degree_sum(g, edge) <= m + 2 {
            return Some(ReducibleConfig::LowVertexEdge { edge, low });
        }
    }
    (3..=cap)
        .find_map(|k| find_alternator(g, k, m))
        .map(ReducibleConfig::Alternator)
}

/// Re-checks the defining inequality of a configuration.
pub fn check_reducible(g: &Graph, d: u32, m: usize, config: &ReducibleConfig) -> Result<bool> {
    Ok(match config {
        ReducibleConfig::LowSumEdge { edge } => {
            *edge < g.edge_count() && degree_sum(g, *edge) as i64 <= low_sum_bound(m, d)
        }
        ReducibleConfig::LowVertexEdge { edge, low } => {
            *edge < g.edge_count() && {
                let (u, v) = g.endpoints(*edge);
                (*low == u || *low == v)
                    && g.degree(*low) <= alternator_cap(m, d)
                    && degree_sum(g, *edge) <= m + 2
            }
        }
        ReducibleConfig::Alternator(alt) => {
            (3..=alternator_cap(m, d)).contains(&alt.k) && check_alternator(g, alt, m)?
        }
    })
}
