//! k-alternators: bipartite subgraphs `B(X, Y)` in which every edge at a
//! vertex of `X` lies in `B`, `d(x) ≤ k` on `X`, and each `y ∈ Y` keeps at least
//! `d(y) + k − M − 1` of its edges in `B`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alternator {
    pub k: usize,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    /// Edge indices of `B`.
    pub b: Vec<usize>,
}

impl Alternator {
    /// The alternator on `x` with `Y = N(X)` and `B` every edge at `X`.
    pub fn spanned_by(g: &Graph, k: usize, mut x: Vec<usize>) -> Alternator {
        x.sort_unstable();
        x.dedup();
        let mut in_x = vec![false; g.vertex_count()];
        for &v in &x {
            in_x[v] = true;
        }
        let mut y: Vec<usize> = x
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied())
            .filter(|&u| !in_x[u])
            .collect();
        y.sort_unstable();
        y.dedup();
        let mut b: Vec<usize> = x
            .iter()
            .flat_map(|&v| g.incident(v).iter().copied())
            .collect();
        b.sort_unstable();
        b.dedup();
        Alternator { k, x, y, b }
    }

    /// `d_B(v)` for every vertex.
    pub fn b_degrees(&self, g: &Graph) -> Vec<usize> {
        let mut deg = vec![0; g.vertex_count()];
        for &e in &self.b {
            let (u, v) = g.endpoints(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }
}

/// Lower bound on `d_B(y)` for `y ∈ Y`.
pub fn y_requirement(g: &Graph, y: usize, k: usize, m: usize) -> i64 {
    g.degree(y) as i64 + k as i64 - m as i64 - 1
}

/// Checks the alternator inequalities. An empty `X` or `B` is not an
/// alternator. Structural problems (unknown vertices, overlapping sides,
/// edges not joining the sides) are errors.
pub fn check_alternator(g: &Graph, alt: &Alternator, m: usize) -> Result<bool> {
    let n = g.vertex_count();
    let mut side = vec![0u8; n];
    for (v, tag) in alt
        .x
        .iter()
        .map(|&v| (v, 1u8))
        .chain(alt.y.iter().map(|&v| (v, 2u8)))
    {
        if v >= n {
            return Err(Error::InvalidGraph(format!(
                "alternator names vertex {v} outside the graph"
            )));
        }
        if side[v] != 0 {
            return Err(Error::InvalidGraph(format!(
                "vertex {v} appears twice in the alternator"
            )));
        }
        side[v] = tag;
    }
    let mut seen = vec![false; g.edge_count()];
    for &e in &alt.b {
        if e >= g.edge_count() || seen[e] {
            return Err(Error::InvalidGraph(format!(
                "alternator edge {e} is unknown or repeated"
            )));
        }
        seen[e] = true;
        let (u, v) = g.endpoints(e);
        if side[u] + side[v] != 3 {
            return Err(Error::InvalidGraph(format!(
                "alternator edge {u}-{v} does not join X to Y"
            )));
        }
    }
    if alt.x.is_empty() || alt.b.is_empty() {
        return Ok(false);
    }
    let deg_b = alt.b_degrees(g);
    let x_ok = alt
        .x
        .iter()
        .all(|&x| deg_b[x] == g.degree(x) && g.degree(x) <= alt.k);
    let y_ok = alt
        .y
        .iter()
        .all(|&y| deg_b[y] as i64 >= y_requirement(g, y, alt.k, m));
    Ok(x_ok && y_ok)
}

/// Finds a k-alternator if one exists.
///
/// Starts from all vertices of degree `1..=k` as `X` and peels: a vertex
/// outside `X` whose neighbours in `X` are too few to meet its requirement
/// forces all of them out, since any alternator inside `X` touching it would
/// fail there. When the peeled set is independent it is an alternator with
/// `Y = N(X)`; otherwise some edge of it cannot lie inside `X` and both ways of
/// breaking it are tried.
pub fn find_alternator(g: &Graph, k: usize, m: usize) -> Option<Alternator> {
    let n = g.vertex_count();
    let x: Vec<bool> = (0..n).map(|v| (1..=k).contains(&g.degree(v))).collect();
    search(g, k, m, x).map(|x| Alternator::spanned_by(g, k, (0..n).filter(|&v| x[v]).collect()))
}

fn search(g: &Graph, k: usize, m: usize, mut x: Vec<bool>) -> Option<Vec<bool>> {
    peel(g, k, m, &mut x);
    if !x.iter().any(|&b| b) {
        return None;
    }
    let inner = g.edges().iter().copied().find(|&(a, b)| x[a] && x[b]);
    let Some((a, b)) = inner else { return Some(x) };
    for drop in [a, b] {
        let mut sub = x.clone();
        sub[drop] = false;
        if let Some(found) = search(g, k, m, sub) {
            return Some(found);
        }
    }
    None
}

fn peel(g: &Graph, k: usize, m: usize, x: &mut [bool]) {
    loop {
        let mut changed = false;
        for y in 0..g.vertex_count() {
            if x[y] {
                continue;
            }
            let inside = g.neighbors(y).iter().filter(|&&u| x[u]).count();
            if inside > 0 && (inside as i64) < y_requirement(g, y, k, m) {
                for &u in g.neighbors(y) {
                    x[u] = false;
                }
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}
