//! Extension steps: colour the elements removed by a reduction, given a
//! labelling of what remains.
//!
//! Every function takes the labelling indexed by the elements of the full
//! graph, with the removed elements uncoloured, and returns it completed.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::alternator::{check_alternator, Alternator};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::galvin::galvin_edge_coloring;
use crate::graph::{Element, Graph};
use crate::labelling::{available_at, is_valid, Constraints, Labelling, ListAssignment};
use crate::reducible::{alternator_cap, low_sum_bound};
use crate::search::extend_list_labelling;

/// Node budget for the local repair in [`extend_low_sum_edge`].
const REPAIR_BUDGET: u64 = 200_000;

fn check_lists(g: &Graph, d: u32, m: usize, lists: &ListAssignment) -> Result<()> {
    if lists.len() != g.element_count() {
        return Err(Error::Precondition(format!(
            "{} lists for {} elements",
            lists.len(),
            g.element_count()
        )));
    }
    let need = m + 2 * d as usize;
    if let Some(i) = (0..lists.len()).find(|&i| distinct_len(&lists[i]) < need) {
        return Err(Error::Precondition(format!(
            "{:?} has fewer than {need} colours",
            g.element(i)
        )));
    }
    Ok(())
}

fn distinct_len(l: &[u32]) -> usize {
    let mut l = l.to_vec();
    l.sort_unstable();
    l.dedup();
    l.len()
}

/// The labelling must colour exactly the complement of `missing` and be
/// valid on the graph with the `missing` edges deleted.
fn check_partial(
    g: &Graph,
    d: u32,
    partial: &Labelling,
    missing: &[Element],
    deleted: &[usize],
) -> Result<()> {
    if partial.len() != g.element_count() {
        return Err(Error::Precondition(
            "partial labelling has the wrong length".into(),
        ));
    }
    for i in 0..partial.len() {
        let expect_free = missing.contains(&g.element(i));
        if partial[i].is_some() == expect_free {
            let what = if expect_free {
                "coloured"
            } else {
                "uncoloured"
            };
            return Err(Error::Precondition(format!(
                "{:?} is unexpectedly {what}",
                g.element(i)
            )));
        }
    }
    let keep: Vec<usize> = (0..g.edge_count())
        .filter(|e| !deleted.contains(e))
        .collect();
    let edges: Vec<(usize, usize)> = keep.iter().map(|&e| g.endpoints(e)).collect();
    let sub = Graph::new(g.vertex_count(), &edges)?;
    let n = g.vertex_count();
    let mut lab: Labelling = partial[..n].to_vec();
    lab.extend(keep.iter().map(|&e| partial[n + e]));
    if !is_valid(&sub, d, &lab)? {
        return Err(Error::Precondition("partial labelling is not valid".into()));
    }
    Ok(())
}

fn finish(g: &Graph, d: u32, lab: Labelling) -> Result<Labelling> {
    if lab.iter().any(Option::is_none) || !is_valid(g, d, &lab)? {
        return Err(Error::Defect(
            "extension produced an invalid labelling".into(),
        ));
    }
    Ok(lab)
}

fn greedy(
    cons: &Constraints,
    d: u32,
    lab: &mut Labelling,
    lists: &ListAssignment,
    i: usize,
) -> bool {
    let mut cands = lists[i].clone();
    cands.sort_unstable();
    match available_at(cons, d, lab, i, &cands).first() {
        Some(&c) => {
            lab[i] = Some(c);
            true
        }
        None => false,
    }
}

/// Colours a low-sum edge `e = uv` (degree sum at most `M − 2d + 3`).
///
/// The counting argument leaves at least one colour for `e`. It ignores the
/// edge `uv` itself as a constraint between `u` and `v`, which were not
/// adjacent in `G − e`; if they share a colour, one endpoint is recoloured
/// first, and failing that the endpoints and `e` are searched jointly.
pub fn extend_low_sum_edge(
    g: &Graph,
    d: u32,
    m: usize,
    e: usize,
    partial: &Labelling,
    lists: &ListAssignment,
) -> Result<Labelling> {
    if e >= g.edge_count() {
        return Err(Error::Precondition(format!("edge {e} is not in the graph")));
    }
    let (u, v) = g.endpoints(e);
    let sum = (g.degree(u) + g.degree(v)) as i64;
    if sum > low_sum_bound(m, d) {
        return Err(Error::Precondition(format!(
            "degree sum {sum} exceeds M − 2d + 3 = {}",
            low_sum_bound(m, d)
        )));
    }
    check_lists(g, d, m, lists)?;
    check_partial(g, d, partial, &[Element::Edge(e)], &[e])?;
    let cons = Constraints::new(g);
    let n = g.vertex_count();
    let mut lab = partial.clone();
    if lab[u] != lab[v] {
        if !greedy(&cons, d, &mut lab, lists, n + e) {
            return Err(Error::Defect(format!(
                "no colour left for low-sum edge {u}-{v}"
            )));
        }
        return finish(g, d, lab);
    }
    for w in [u, v] {
        let mut trial = partial.clone();
        trial[w] = None;
        if greedy(&cons, d, &mut trial, lists, w) && greedy(&cons, d, &mut trial, lists, n + e) {
            return finish(g, d, trial);
        }
    }
    let mut trial = partial.clone();
    trial[u] = None;
    trial[v] = None;
    let mut budget = Budget::new(REPAIR_BUDGET);
    match extend_list_labelling(g, d, lists, &trial, &mut budget) {
        Ok(Some(lab)) => finish(g, d, lab),
        Ok(None) | Err(Error::BudgetExceeded { .. }) => Err(Error::Defect(format!(
            "endpoints {u} and {v} share a colour and cannot be separated"
        ))),
        Err(err) => Err(err),
    }
}

/// Colours an edge `e = uv` whose endpoint `low` has degree at most
/// `⌊(M + 2d − 1)/2d⌋` and whose degree sum is at most `M + 2`: erase `low`,
/// colour `e`, then recolour `low`.
pub fn extend_low_vertex_edge(
    g: &Graph,
    d: u32,
    m: usize,
    e: usize,
    low: usize,
    partial: &Labelling,
    lists: &ListAssignment,
) -> Result<Labelling> {
    if e >= g.edge_count() {
        return Err(Error::Precondition(format!("edge {e} is not in the graph")));
    }
    let (u, v) = g.endpoints(e);
    if low != u && low != v {
        return Err(Error::Precondition(format!(
            "vertex {low} is not an endpoint of edge {u}-{v}"
        )));
    }
    let cap = alternator_cap(m, d);
    if g.degree(low) > cap {
        return Err(Error::Precondition(format!(
            "d({low}) = {} exceeds {cap}",
            g.degree(low)
        )));
    }
    if g.degree(u) + g.degree(v) > m + 2 {
        return Err(Error::Precondition(format!(
            "degree sum of {u}-{v} exceeds M + 2"
        )));
    }
    check_lists(g, d, m, lists)?;
    check_partial(g, d, partial, &[Element::Edge(e)], &[e])?;
    let cons = Constraints::new(g);
    let mut lab = partial.clone();
    lab[low] = None;
    if !greedy(&cons, d, &mut lab, lists, g.vertex_count() + e) {
        return Err(Error::Defect(format!("no colour left for edge {u}-{v}")));
    }
    if !greedy(&cons, d, &mut lab, lists, low) {
        return Err(Error::Defect(format!(
            "no colour left to recolour vertex {low}"
        )));
    }
    finish(g, d, lab)
}

/// Residual lists of the alternator edges against the coloured part,
/// indexed like `alt.b`.
pub fn residual_lists(
    g: &Graph,
    d: u32,
    alt: &Alternator,
    partial: &Labelling,
    lists: &ListAssignment,
) -> Vec<Vec<u32>> {
    let cons = Constraints::new(g);
    let n = g.vertex_count();
    alt.b
        .iter()
        .map(|&e| {
            let mut cands = lists[n + e].clone();
            cands.sort_unstable();
            cands.dedup();
            available_at(&cons, d, partial, n + e, &cands)
        })
        .collect()
}

/// Colours the alternator edges from their residual lists by the kernel
/// method, then each vertex of `X` greedily.
///
/// `partial` must colour exactly the elements of `G[V ∖ X]`.
pub fn reduce_alternator(
    g: &Graph,
    d: u32,
    m: usize,
    alt: &Alternator,
    partial: &Labelling,
    lists: &ListAssignment,
) -> Result<Labelling> {
    let n = g.vertex_count();
    if g.max_degree() > m {
        return Err(Error::Precondition(format!(
            "maximum degree {} exceeds M = {m}",
            g.max_degree()
        )));
    }
    if !(3..=alternator_cap(m, d)).contains(&alt.k) {
        return Err(Error::Precondition(format!(
            "alternator order {} outside 3..={}",
            alt.k,
            alternator_cap(m, d)
        )));
    }
    if !check_alternator(g, alt, m)? {
        return Err(Error::Precondition("not a valid alternator".into()));
    }
    let mut in_x = vec![false; n];
    for &x in &alt.x {
        in_x[x] = true;
    }
    if g.edges().iter().any(|&(a, b)| in_x[a] && in_x[b]) {
        return Err(Error::Precondition(
            "alternator side X is not independent".into(),
        ));
    }
    check_lists(g, d, m, lists)?;
    // with d_B(x) = d(x), the edges at X are exactly B
    let missing: Vec<Element> = alt
        .x
        .iter()
        .map(|&x| Element::Vertex(x))
        .chain(alt.b.iter().map(|&e| Element::Edge(e)))
        .collect();
    check_partial(g, d, partial, &missing, &alt.b)?;

    let residual = residual_lists(g, d, alt, partial, lists);
    let deg_b = alt.b_degrees(g);
    for (i, &e) in alt.b.iter().enumerate() {
        let (a, b) = g.endpoints(e);
        let need = deg_b[a].max(deg_b[b]);
        if residual[i].len() < need {
            return Err(Error::Defect(format!(
                "residual list of edge {a}-{b} has {} colours, fewer than {need}",
                residual[i].len()
            )));
        }
    }
    let edges: Vec<(usize, usize)> = alt.b.iter().map(|&e| g.endpoints(e)).collect();
    let sub = Graph::new(n, &edges)?;
    let colours = galvin_edge_coloring(&sub, &in_x, &residual)?;
    let mut lab = partial.clone();
    for (i, &e) in alt.b.iter().enumerate() {
        lab[n + e] = Some(colours[i]);
    }
    let cons = Constraints::new(g);
    for &x in &alt.x {
        if !greedy(&cons, d, &mut lab, lists, x) {
            return Err(Error::Defect(format!(
                "no colour left for alternator vertex {x}"
            )));
        }
    }
    finish(g, d, lab)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labelling::Color;

    fn lists_for(g: &Graph, size: u32, shift: u32) -> ListAssignment {
        (0..g.element_count())
            .map(|i| (0..size).map(|c| c * 2 + (i as u32 * shift) % 3).collect())
            .collect()
    }

    fn star(k: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
        Graph::new(k + 1, &edges).unwrap()
    }

    #[test]
    fn low_sum_edge_on_k2() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let lists = lists_for(&g, 16, 1);
        let partial = vec![Some(lists[0][0]), Some(lists[1][0]), None];
        let lab = extend_low_sum_edge(&g, 2, 12, 0, &partial, &lists).unwrap();
        assert!(is_valid(&g, 2, &lab).unwrap());
    }

    #[test]
    fn low_sum_edge_with_equal_endpoints_is_repaired() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let lists: ListAssignment = vec![(0..16).collect(); 3];
        let lab = extend_low_sum_edge(&g, 2, 12, 0, &vec![Some(0), Some(0), None], &lists).unwrap();
        assert!(is_valid(&g, 2, &lab).unwrap());
    }

    #[test]
    fn low_sum_guard() {
        let g = star(12);
        let lists = lists_for(&g, 16, 1);
        let mut partial: Labelling = vec![None; g.element_count()];
        partial[0] = Some(0);
        let r = extend_low_sum_edge(&g, 2, 12, 0, &partial, &lists);
        assert!(matches!(r, Err(Error::Precondition(_))));
    }

    #[test]
    fn low_vertex_edge_on_a_star() {
        let g = star(12);
        let lists: ListAssignment = (0..g.element_count())
            .map(|i| (0..16).map(|c| c + i as Color % 5).collect())
            .collect();
        // colour G − e: centre, other leaves and other edges
        let mut partial: Labelling = vec![None; g.element_count()];
        partial[0] = Some(0);
        for v in 1..=12 {
            partial[v] = Some(1);
        }
        for e in 1..12 {
            partial[13 + e] = Some(2 + e as Color);
        }
        let lab = extend_low_vertex_edge(&g, 2, 12, 0, 1, &partial, &lists).unwrap();
        assert!(is_valid(&g, 2, &lab).unwrap());
        let r = extend_low_vertex_edge(&g, 2, 12, 0, 0, &partial, &lists);
        assert!(matches!(r, Err(Error::Precondition(_))));
    }

    #[test]
    fn alternator_on_a_star() {
        let g = star(12);
        let lists = lists_for(&g, 16, 2);
        let alt = Alternator::spanned_by(&g, 3, (1..=12).collect());
        let mut partial: Labelling = vec![None; g.element_count()];
        partial[0] = Some(lists[0][3]);
        let lab = reduce_alternator(&g, 2, 12, &alt, &partial, &lists).unwrap();
        assert!(is_valid(&g, 2, &lab).unwrap());
        let mut short = alt.clone();
        short.b.pop();
        assert!(matches!(
            reduce_alternator(&g, 2, 12, &short, &partial, &lists),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn alternator_on_k2() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let lists: ListAssignment = vec![(0..16).collect(); 3];
        let alt = Alternator::spanned_by(&g, 3, vec![0]);
        let lab = reduce_alternator(&g, 2, 12, &alt, &vec![None, Some(5), None], &lists).unwrap();
        assert!(is_valid(&g, 2, &lab).unwrap());
    }
}
