//! Backtracking search for list labellings and the exact labelling number.
//!
//! Elements are picked most-constrained first (fewest surviving colours, ties
//! to the lowest index) and colours are tried in increasing order. Every
//! assignment filters the domains of the constrained neighbours, so a wiped
//! out domain is detected one step early.

use alloc::vec;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;
use crate::labelling::{
    canonical_lists, check_lists, compatible, Color, Constraints, Labelling, ListAssignment,
};

/// A labelling with `c(x) ∈ L(x)` for every element, or `None` after an
/// exhausted search.
pub fn find_list_labelling(
    g: &Graph,
    d: u32,
    lists: &ListAssignment,
    budget: &mut Budget,
) -> Result<Option<Labelling>> {
    check_lists(g, lists)?;
    let cons = Constraints::new(g);
    let domains = canonical_lists(lists);
    let mut lab: Labelling = vec![None; g.element_count()];
    let found = Search {
        cons: &cons,
        d,
        budget,
    }
    .run(domains, &mut lab)?;
    Ok(found.then_some(lab))
}

/// Like [`find_list_labelling`] but extends a fixed partial labelling.
pub fn extend_list_labelling(
    g: &Graph,
    d: u32,
    lists: &ListAssignment,
    partial: &Labelling,
    budget: &mut Budget,
) -> Result<Option<Labelling>> {
    check_lists(g, lists)?;
    let cons = Constraints::new(g);
    let mut domains = canonical_lists(lists);
    for (i, c) in partial.iter().enumerate() {
        if let Some(c) = c {
            domains[i] = vec![*c];
        }
    }
    let mut lab: Labelling = vec![None; g.element_count()];
    let found = Search {
        cons: &cons,
        d,
        budget,
    }
    .run(domains, &mut lab)?;
    Ok(found.then_some(lab))
}

/// Smallest `k` with a valid labelling into `{0, …, k}`, with a witness.
///
/// The search starts at `Δ + d − 1` (for `Δ ≥ 1`): the `Δ` edges at a maximum
/// degree vertex need distinct colours at distance `d` from the vertex.
pub fn lambda_exact(g: &Graph, d: u32, budget: &mut Budget) -> Result<(u32, Labelling)> {
    let delta = g.max_degree() as u32;
    let mut k = if delta == 0 { 0 } else { delta + d - 1 };
    loop {
        let lists: ListAssignment = vec![(0..=k).collect(); g.element_count()];
        if let Some(lab) = find_list_labelling(g, d, &lists, budget)? {
            return Ok((k, lab));
        }
        k += 1;
    }
}

struct Search<'a> {
    cons: &'a Constraints,
    d: u32,
    budget: &'a mut Budget,
}

impl Search<'_> {
    fn run(&mut self, mut domains: Vec<Vec<Color>>, lab: &mut Labelling) -> Result<bool> {
        // pre-filter against nothing: only an empty list can fail here
        if domains.iter().any(Vec::is_empty) {
            return Ok(false);
        }
        self.budget.tick()?;
        self.dfs(&mut domains, lab)
    }

    fn dfs(&mut self, domains: &mut [Vec<Color>], lab: &mut Labelling) -> Result<bool> {
        let mut pick: Option<usize> = None;
        for i in 0..lab.len() {
            if lab[i].is_none() && pick.is_none_or(|p| domains[i].len() < domains[p].len()) {
                pick = Some(i);
            }
        }
        let Some(x) = pick else { return Ok(true) };
        let choices = domains[x].clone();
        for a in choices {
            self.budget.tick()?;
            let mut saved: Vec<(usize, Vec<Color>)> = Vec::new();
            let mut dead = false;
            for &(y, rel) in self.cons.of(x) {
                if lab[y].is_some() {
                    continue;
                }
                if domains[y].iter().any(|&b| !compatible(rel, self.d, a, b)) {
                    let kept: Vec<Color> = domains[y]
                        .iter()
                        .copied()
                        .filter(|&b| compatible(rel, self.d, a, b))
                        .collect();
                    let empty = kept.is_empty();
                    saved.push((y, core::mem::replace(&mut domains[y], kept)));
                    if empty {
                        dead = true;
                        break;
                    }
                }
            }
            if !dead {
                lab[x] = Some(a);
                if self.dfs(domains, lab)? {
                    return Ok(true);
                }
                lab[x] = None;
            }
            for (y, old) in saved.into_iter().rev() {
                domains[y] = old;
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::labelling::{is_complete_and_valid, respects_lists};

    fn k2() -> Graph {
        Graph::new(2, &[(0, 1)]).unwrap()
    }

    /// Plain fixed-order enumeration of all labellings into `{0..=k}`.
    fn oracle_feasible(g: &Graph, d: u32, k: u32) -> bool {
        fn rec(g: &Graph, d: u32, k: u32, lab: &mut Labelling, i: usize) -> bool {
            if i == lab.len() {
                return true;
            }
            for c in 0..=k {
                lab[i] = Some(c);
                if is_complete_and_valid_prefix(g, d, lab) && rec(g, d, k, lab, i + 1) {
                    return true;
                }
            }
            lab[i] = None;
            false
        }
        fn is_complete_and_valid_prefix(g: &Graph, d: u32, lab: &Labelling) -> bool {
            crate::labelling::is_valid(g, d, lab).unwrap()
        }
        rec(g, d, k, &mut vec![None; g.element_count()], 0)
    }

    fn oracle_lambda(g: &Graph, d: u32) -> u32 {
        (0..).find(|&k| oracle_feasible(g, d, k)).unwrap()
    }

    #[test]
    fn small_lambdas() {
        let mut b = Budget::default();
        assert_eq!(lambda_exact(&Graph::empty(1), 3, &mut b).unwrap().0, 0);
        let (k, lab) = lambda_exact(&k2(), 2, &mut b).unwrap();
        assert_eq!(k, 3);
        assert!(is_complete_and_valid(&k2(), 2, &lab).unwrap());
        assert!(!oracle_feasible(&k2(), 2, 2));
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(lambda_exact(&star, 2, &mut b).unwrap().0, 4);
        assert_eq!(oracle_lambda(&star, 2), 4);
    }

    #[test]
    fn agrees_with_oracle_on_small_graphs() {
        let graphs = [
            Graph::new(3, &[(0, 1), (1, 2)]).unwrap(),
            Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
            Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
            Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap(),
        ];
        for g in &graphs {
            for d in 1..=3 {
                let (k, lab) = lambda_exact(g, d, &mut Budget::default()).unwrap();
                assert_eq!(k, oracle_lambda(g, d), "{g:?} d={d}");
                assert!(is_complete_and_valid(g, d, &lab).unwrap());
            }
        }
    }

    #[test]
    fn list_examples() {
        let g = k2();
        let mut b = Budget::default();
        let lists = vec![vec![0], vec![1], vec![3]];
        let lab = find_list_labelling(&g, 2, &lists, &mut b).unwrap().unwrap();
        assert_eq!(lab, vec![Some(0), Some(1), Some(3)]);
        assert!(respects_lists(&g, 2, &lists, &lab).unwrap());
        assert_eq!(
            find_list_labelling(&g, 2, &vec![vec![0], vec![1], vec![2]], &mut b).unwrap(),
            None
        );
        assert_eq!(
            find_list_labelling(&g, 2, &vec![vec![0, 1, 2]; 3], &mut b).unwrap(),
            None
        );
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        let r = lambda_exact(&g, 3, &mut Budget::new(5));
        assert!(matches!(r, Err(Error::BudgetExceeded { limit: 5 })));
    }
}
