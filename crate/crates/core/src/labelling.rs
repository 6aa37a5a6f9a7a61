//! Labellings, list assignments and the three validity rules.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Element, Graph};

pub type Color = u32;

/// Colour per element index (vertices first, then edges); `None` is uncoloured.
pub type Labelling = Vec<Option<Color>>;

/// Permitted colours per element index, kept sorted and deduplicated by the
/// functions in this crate.
pub type ListAssignment = Vec<Vec<Color>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// Adjacent vertices share a colour.
    V1,
    /// Adjacent edges share a colour.
    V2,
    /// A vertex and an incident edge are closer than `d`.
    V3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub first: Element,
    pub second: Element,
}

/// How two elements constrain each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Relation {
    /// Colours must differ.
    Distinct,
    /// Colours must differ by at least `d`.
    Far,
}

/// The conflict structure of a graph: for each element, the elements it
/// constrains and how. Pairs appear in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraints {
    adj: Vec<Vec<(usize, Relation)>>,
}

impl Constraints {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut adj = Vec::with_capacity(g.element_count());
        for v in 0..n {
            let mut row: Vec<(usize, Relation)> = g
                .neighbors(v)
                .iter()
                .map(|&u| (u, Relation::Distinct))
                .collect();
            row.extend(g.incident(v).iter().map(|&e| (n + e, Relation::Far)));
            adj.push(row);
        }
        for e in 0..g.edge_count() {
            let (a, b) = g.endpoints(e);
            let mut row = alloc::vec![(a, Relation::Far), (b, Relation::Far)];
            for &f in g.incident(a).iter().chain(g.incident(b)) {
                if f != e {
                    row.push((n + f, Relation::Distinct));
                }
            }
            row.sort_unstable();
            adj.push(row);
        }
        Constraints { adj }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn of(&self, x: usize) -> &[(usize, Relation)] {
        &self.adj[x]
    }
}

/// Whether colours `a` and `b` are compatible under `rel`.
#[inline]
pub fn compatible(rel: Relation, d: u32, a: Color, b: Color) -> bool {
    match rel {
        Relation::Distinct => a != b,
        Relation::Far => a.abs_diff(b) >= d,
    }
}

fn rule_for(g: &Graph, x: usize, y: usize) -> Rule {
    let n = g.vertex_count();
    match (x < n, y < n) {
        (true, true) => Rule::V1,
        (false, false) => Rule::V2,
        _ => Rule::V3,
    }
}

fn check_len(g: &Graph, lab: &Labelling) -> Result<()> {
    if lab.len() != g.element_count() {
        return Err(Error::InvalidGraph(format!(
            "labelling has {} entries but the graph has {} elements",
            lab.len(),
            g.element_count()
        )));
    }
    Ok(())
}

/// First violated pair, scanning elements in index order and pairing each with
/// later elements only.
pub fn first_violation(g: &Graph, d: u32, lab: &Labelling) -> Result<Option<Violation>> {
    check_len(g, lab)?;
    let cons = Constraints::new(g);
    for x in 0..lab.len() {
        let Some(a) = lab[x] else { continue };
        for &(y, rel) in cons.of(x) {
            if y <= x {
                continue;
            }
            if let Some(b) = lab[y] {
                if !compatible(rel, d, a, b) {
                    return Ok(Some(Violation {
                        rule: rule_for(g, x, y),
                        first: g.element(x),
                        second: g.element(y),
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// True when no two coloured elements break V1, V2 or V3.
pub fn is_valid(g: &Graph, d: u32, lab: &Labelling) -> Result<bool> {
    Ok(first_violation(g, d, lab)?.is_none())
}

/// True when every element is coloured and the labelling is valid.
pub fn is_complete_and_valid(g: &Graph, d: u32, lab: &Labelling) -> Result<bool> {
    Ok(lab.iter().all(Option::is_some) && is_valid(g, d, lab)?)
}

/// True when the labelling is complete, valid and takes every colour from the
/// element's list.
pub fn respects_lists(g: &Graph, d: u32, lists: &ListAssignment, lab: &Labelling) -> Result<bool> {
    check_len(g, lab)?;
    if lists.len() != lab.len() {
        return Ok(false);
    }
    let in_lists = lab
        .iter()
        .zip(lists)
        .all(|(c, l)| c.is_some_and(|c| l.contains(&c)));
    Ok(in_lists && is_valid(g, d, lab)?)
}

/// The candidates that `x` may take without conflicting with the coloured part
/// of `partial`.
pub fn available_colors(
    g: &Graph,
    d: u32,
    partial: &Labelling,
    x: Element,
    candidates: &[Color],
) -> Result<Vec<Color>> {
    check_len(g, partial)?;
    if !g.contains(x) {
        return Err(Error::InvalidGraph(format!(
            "{x:?} is not an element of the graph"
        )));
    }
    let i = g.element_index(x);
    if partial[i].is_some() {
        return Err(Error::Precondition(format!("{x:?} is already coloured")));
    }
    let cons = Constraints::new(g);
    Ok(available_at(&cons, d, partial, i, candidates))
}

pub(crate) fn available_at(
    cons: &Constraints,
    d: u32,
    partial: &Labelling,
    i: usize,
    candidates: &[Color],
) -> Vec<Color> {
    candidates
        .iter()
        .copied()
        .filter(|&a| {
            cons.of(i)
                .iter()
                .all(|&(y, rel)| partial[y].is_none_or(|b| compatible(rel, d, a, b)))
        })
        .collect()
}

/// Lists sorted and deduplicated.
pub fn canonical_lists(lists: &ListAssignment) -> ListAssignment {
    lists
        .iter()
        .map(|l| {
            let mut l = l.clone();
            l.sort_unstable();
            l.dedup();
            l
        })
        .collect()
}

pub(crate) fn check_lists(g: &Graph, lists: &ListAssignment) -> Result<()> {
    if lists.len() != g.element_count() {
        return Err(Error::InvalidGraph(format!(
            "list assignment has {} entries but the graph has {} elements",
            lists.len(),
            g.element_count()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn k2() -> Graph {
        Graph::new(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn k2_labellings() {
        let g = k2();
        assert!(is_valid(&g, 2, &vec![Some(0), Some(1), Some(3)]).unwrap());
        let v = first_violation(&g, 2, &vec![Some(0), Some(1), Some(2)])
            .unwrap()
            .unwrap();
        assert_eq!(
            v,
            Violation {
                rule: Rule::V3,
                first: Element::Vertex(1),
                second: Element::Edge(0)
            }
        );
    }

    #[test]
    fn equal_edges_at_a_star_centre() {
        let g = Graph::new(3, &[(0, 1), (0, 2)]).unwrap();
        let v = first_violation(&g, 2, &vec![None, None, None, Some(4), Some(4)])
            .unwrap()
            .unwrap();
        assert_eq!(v.rule, Rule::V2);
    }

    #[test]
    fn wrong_length_is_an_error() {
        assert!(is_valid(&k2(), 2, &vec![Some(0)]).is_err());
    }

    #[test]
    fn available_on_a_path() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let mut lab = vec![None; 5];
        lab[0] = Some(0);
        lab[3] = Some(3);
        let cands: Vec<Color> = (0..=6).collect();
        assert_eq!(
            available_colors(&g, 2, &lab, Element::Vertex(1), &cands).unwrap(),
            vec![1, 5, 6]
        );
        // vertex 2 sees nothing coloured
        assert_eq!(
            available_colors(&g, 2, &lab, Element::Vertex(2), &cands).unwrap(),
            cands
        );
        assert!(available_colors(&g, 2, &lab, Element::Vertex(0), &cands).is_err());
    }

    #[test]
    fn available_on_k2_edge() {
        let g = k2();
        let lab = vec![Some(0), Some(1), None];
        let cands: Vec<Color> = (0..=5).collect();
        assert_eq!(
            available_colors(&g, 2, &lab, Element::Edge(0), &cands).unwrap(),
            vec![3, 4, 5]
        );
    }
}
