//! List edge colouring of bipartite graphs by the kernel method.
//!
//! Each edge `e = ab` (with `a` on the left) gets a rank `ρ_e` among the edges
//! at `a` and a rank `φ_e` among the edges at `b`. Orienting the line graph
//! towards lower ranks gives `e` out-degree `ρ_e + φ_e`, and every induced
//! subgraph has a kernel: a stable matching for those preferences. Colouring
//! a kernel of the edges that still hold colour `c`, and striking `c` from
//! the rest, keeps each list longer than the out-degree, so the process never
//! runs dry as long as `ρ_e + φ_e < |L(e)|`.
//!
//! Ranks satisfying `ρ_e + φ_e ≤ max(d(a), d(b)) − 1` are found by a small
//! search over the right-side ranks; left-side ranks then follow by sorting.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labelling::Color;

/// Node budget for the rank search before the sides are swapped.
const RANK_BUDGET: u64 = 2_000_000;

/// Colours every edge from its list so that edges sharing a vertex differ.
///
/// `left[v]` gives the side of each vertex; every edge must cross. Lists are
/// indexed by edge and need at least `max(d(a), d(b))` distinct colours.
pub fn galvin_edge_coloring(g: &Graph, left: &[bool], lists: &[Vec<Color>]) -> Result<Vec<Color>> {
    if left.len() != g.vertex_count() || lists.len() != g.edge_count() {
        return Err(Error::Precondition(
            "side or list table has the wrong length".into(),
        ));
    }
    let mut lists: Vec<Vec<Color>> = lists.to_vec();
    for (e, l) in lists.iter_mut().enumerate() {
        l.sort_unstable();
        l.dedup();
        let (u, v) = g.endpoints(e);
        if left[u] == left[v] {
            return Err(Error::Precondition(format!(
                "edge {u}-{v} does not cross the bipartition"
            )));
        }
        let need = g.degree(u).max(g.degree(v));
        if l.len() < need {
            return Err(Error::Precondition(format!(
                "edge {u}-{v} has {} colours, needs {need}",
                l.len()
            )));
        }
    }
    let (rho, phi) = ranks(g, left)?;
    kernel_colouring(g, left, &rho, &phi, lists)
}

/// Left and right ranks with `ρ_e + φ_e ≤ max(d(a), d(b)) − 1`.
pub fn ranks(g: &Graph, left: &[bool]) -> Result<(Vec<usize>, Vec<usize>)> {
    for flip in [false, true] {
        let side: Vec<bool> = left.iter().map(|&s| s != flip).collect();
        let mut search = RankSearch::new(g, &side);
        let mut budget = Budget::new(RANK_BUDGET);
        match search.run(&mut budget) {
            Ok(true) => {
                let (rho, phi) = search.finish();
                return Ok(if flip { (phi, rho) } else { (rho, phi) });
            }
            Ok(false) | Err(Error::BudgetExceeded { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Defect(
        "no rank assignment found for the kernel orientation".into(),
    ))
}

struct RankSearch<'a> {
    g: &'a Graph,
    /// Edges at each vertex on the left side.
    at_left: Vec<Vec<usize>>,
    /// Right endpoint of each edge.
    right_end: Vec<usize>,
    left_end: Vec<usize>,
    /// Right-side vertices by decreasing degree.
    order: Vec<usize>,
    span: Vec<usize>,
    phi: Vec<Option<usize>>,
    next: Vec<usize>,
}

impl<'a> RankSearch<'a> {
    fn new(g: &'a Graph, left: &[bool]) -> Self {
        let n = g.vertex_count();
        let mut at_left = vec![Vec::new(); n];
        let mut right_end = Vec::with_capacity(g.edge_count());
        let mut left_end = Vec::with_capacity(g.edge_count());
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let (a, b) = if left[u] { (u, v) } else { (v, u) };
            at_left[a].push(e);
            left_end.push(a);
            right_end.push(b);
        }
        let mut order: Vec<usize> = (0..n).filter(|&v| !left[v] && g.degree(v) > 0).collect();
        order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
        let span = g
            .edges()
            .iter()
            .map(|&(u, v)| g.degree(u).max(g.degree(v)))
            .collect();
        RankSearch {
            g,
            at_left,
            right_end,
            left_end,
            order,
            span,
            phi: vec![None; g.edge_count()],
            next: vec![0; n],
        }
    }

    /// Sorted slack values `span − φ` at a left vertex; unranked edges assume
    /// the smallest rank still open at their right end.
    fn slack_values(&self, a: usize) -> Vec<usize> {
        let mut vals: Vec<usize> = self.at_left[a]
            .iter()
            .map(|&e| {
                let r = self.phi[e].unwrap_or(self.next[self.right_end[e]]);
                self.span[e].saturating_sub(r)
            })
            .collect();
        vals.sort_unstable();
        vals
    }

    fn margin(&self, a: usize) -> i64 {
        self.slack_values(a)
            .iter()
            .enumerate()
            .map(|(j, &s)| s as i64 - (j as i64 + 1))
            .min()
            .unwrap_or(i64::MAX)
    }

    fn run(&mut self, budget: &mut Budget) -> Result<bool> {
        self.rec(0, budget)
    }

    fn rec(&mut self, pos: usize, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        let Some(&y) = self.order.get(pos) else {
            return Ok(true);
        };
        let r = self.next[y];
        if r == self.g.degree(y) {
            return self.rec(pos + 1, budget);
        }
        let mut cands: Vec<(i64, usize)> = self
            .g
            .incident(y)
            .iter()
            .filter(|&&e| self.phi[e].is_none())
            .map(|&e| (self.margin(self.left_end[e]), e))
            .collect();
        cands.sort_unstable();
        for (_, e) in cands {
            self.phi[e] = Some(r);
            self.next[y] = r + 1;
            let ok = self
                .g
                .incident(y)
                .iter()
                .all(|&f| self.margin(self.left_end[f]) >= 0);
            if ok {
                let step = if r + 1 < self.g.degree(y) {
                    pos
                } else {
                    pos + 1
                };
                if self.rec(step, budget)? {
                    return Ok(true);
                }
            }
            self.phi[e] = None;
            self.next[y] = r;
        }
        Ok(false)
    }

    fn finish(self) -> (Vec<usize>, Vec<usize>) {
        let phi: Vec<usize> = self
            .phi
            .iter()
            .map(|p| p.expect("every edge ranked"))
            .collect();
        let mut rho = vec![0; phi.len()];
        for edges in &self.at_left {
            let mut sorted = edges.clone();
            sorted.sort_by_key(|&e| (self.span[e] - phi[e], e));
            for (j, &e) in sorted.iter().enumerate() {
                rho[e] = j;
            }
        }
        (rho, phi)
    }
}

fn kernel_colouring(
    g: &Graph,
    left: &[bool],
    rho: &[usize],
    phi: &[usize],
    mut lists: Vec<Vec<Color>>,
) -> Result<Vec<Color>> {
    let m = g.edge_count();
    let mut colour: Vec<Option<Color>> = vec![None; m];
    let mut palette: Vec<Color> = lists.iter().flatten().copied().collect();
    palette.sort_unstable();
    palette.dedup();
    let ends: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| if left[u] { (u, v) } else { (v, u) })
        .collect();
    for c in palette {
        let live: Vec<usize> = (0..m)
            .filter(|&e| colour[e].is_none() && lists[e].binary_search(&c).is_ok())
            .collect();
        if live.is_empty() {
            continue;
        }
        let kernel = stable_matching(g.vertex_count(), &live, &ends, rho, phi);
        for &e in &live {
            if kernel.contains(&e) {
                colour[e] = Some(c);
            } else {
                lists[e].retain(|&x| x != c);
            }
        }
    }
    colour
        .into_iter()
        .enumerate()
        .map(|(e, c)| {
            c.ok_or_else(|| Error::Defect(format!("kernel method left edge {e} uncoloured")))
        })
        .collect()
}

/// Gale–Shapley with left vertices proposing; both sides prefer lower rank.
fn stable_matching(
    n: usize,
    live: &[usize],
    ends: &[(usize, usize)],
    rho: &[usize],
    phi: &[usize],
) -> Vec<usize> {
    let mut prefs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &e in live {
        prefs[ends[e].0].push(e);
    }
    for p in prefs.iter_mut() {
        p.sort_by_key(|&e| core::cmp::Reverse(rho[e]));
    }
    let mut held: Vec<Option<usize>> = vec![None; n];
    let mut free: Vec<usize> = (0..n).filter(|&a| !prefs[a].is_empty()).collect();
    while let Some(a) = free.pop() {
        let Some(e) = prefs[a].pop() else { continue };
        let b = ends[e].1;
        match held[b] {
            None => held[b] = Some(e),
            Some(f) if phi[e] < phi[f] => {
                held[b] = Some(e);
                free.push(ends[f].0);
            }
            Some(_) => free.push(a),
        }
    }
    let mut out: Vec<usize> = held.into_iter().flatten().collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proper(g: &Graph, lists: &[Vec<Color>], colours: &[Color]) -> bool {
        let in_list = colours.iter().zip(lists).all(|(c, l)| l.contains(c));
        let distinct = (0..g.vertex_count()).all(|v| {
            let mut seen: Vec<Color> = g.incident(v).iter().map(|&e| colours[e]).collect();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        });
        in_list && distinct
    }

    #[test]
    fn path_gets_distinct_colours() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let lists = vec![vec![5, 9], vec![5, 9]];
        let c = galvin_edge_coloring(&g, &[true, false, true], &lists).unwrap();
        assert!(proper(&g, &lists, &c));
    }

    #[test]
    fn even_cycle_alternates() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let lists = vec![vec![0, 1]; 4];
        let side = g.bipartition().unwrap();
        let c = galvin_edge_coloring(&g, &side, &lists).unwrap();
        assert!(proper(&g, &lists, &c));
    }

    #[test]
    fn k33_three_colours() {
        let mut edges = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                edges.push((a, b));
            }
        }
        let g = Graph::new(6, &edges).unwrap();
        let lists = vec![vec![0, 1, 2]; 9];
        let side: Vec<bool> = (0..6).map(|v| v < 3).collect();
        let c = galvin_edge_coloring(&g, &side, &lists).unwrap();
        assert!(proper(&g, &lists, &c));
    }

    #[test]
    fn short_lists_are_rejected() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let r = galvin_edge_coloring(&g, &[true, false, true], &[vec![1], vec![1, 2]]);
        assert!(matches!(r, Err(Error::Precondition(_))));
        let r = galvin_edge_coloring(&g, &[true, true, false], &[vec![1, 2], vec![1, 2]]);
        assert!(matches!(r, Err(Error::Precondition(_))));
    }

    #[test]
    fn ranks_respect_the_bound() {
        let mut edges = Vec::new();
        for a in 0..4 {
            for b in 4..9 {
                if (a + b) % 3 != 0 {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::new(9, &edges).unwrap();
        let side: Vec<bool> = (0..9).map(|v| v < 4).collect();
        let (rho, phi) = ranks(&g, &side).unwrap();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            assert!(rho[e] + phi[e] < g.degree(u).max(g.degree(v)));
        }
    }
}
