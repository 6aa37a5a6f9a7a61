//! List normalisation and exhaustive choosability checking.
//!
//! Only the relative order of colours and which gaps are shorter than `d`
//! affect labelability, so every list assignment is equivalent to one whose
//! sorted colour union starts at 0 and has consecutive gaps in `1..=d`.
//! [`is_k_choosable`] enumerates exactly those assignments, position by
//! position along the colour line, as a game: an adversary decides which
//! elements get the current colour in their list, and the labeller keeps the
//! set of all partial labellings still alive (up to dominance). The adversary
//! wins a branch once every partial labelling has left some element with a
//! full list and no colour.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labelling::{Color, Constraints, ListAssignment, Relation};
use crate::search::{find_list_labelling, lambda_exact};

/// Shift the colour union to start at 0 and cap every gap between consecutive
/// colours at `d`.
pub fn normalize_lists(lists: &ListAssignment, d: u32) -> ListAssignment {
    let union: BTreeSet<Color> = lists.iter().flatten().copied().collect();
    let mut map = BTreeMap::new();
    let mut prev: Option<(Color, Color)> = None;
    for c in union {
        let image = match prev {
            None => 0,
            Some((old, new)) => new + (c - old).min(d),
        };
        map.insert(c, image);
        prev = Some((c, image));
    }
    lists
        .iter()
        .map(|l| {
            let mut out: Vec<Color> = l.iter().map(|c| map[c]).collect();
            out.sort_unstable();
            out.dedup();
            out
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Choosability {
    Choosable,
    /// A size-`k` assignment admitting no labelling.
    NotChoosable(ListAssignment),
}

impl Choosability {
    pub fn is_choosable(&self) -> bool {
        matches!(self, Choosability::Choosable)
    }
}

/// Elements per graph handled by the bitmask search.
pub const MAX_ELEMENTS: usize = 64;

/// Decides whether every assignment of `k`-lists admits a labelling.
pub fn is_k_choosable(g: &Graph, d: u32, k: u32, budget: &mut Budget) -> Result<Choosability> {
    let m = g.element_count();
    if m == 0 {
        return Ok(Choosability::Choosable);
    }
    if k == 0 {
        return Ok(Choosability::NotChoosable(vec![Vec::new(); m]));
    }
    if m > MAX_ELEMENTS {
        return Err(Error::Precondition(alloc::format!(
            "choosability search handles at most {MAX_ELEMENTS} elements"
        )));
    }
    if k > u8::MAX as u32 {
        return Err(Error::Precondition(alloc::format!(
            "list size {k} is too large"
        )));
    }
    let cons = Constraints::new(g);
    let mut any = vec![0u64; m];
    let mut far = vec![0u64; m];
    for x in 0..m {
        for &(y, rel) in cons.of(x) {
            any[x] |= 1 << y;
            if rel == Relation::Far {
                far[x] |= 1 << y;
            }
        }
    }
    let symmetries = element_automorphisms(g);
    let mut game = Game {
        m,
        d,
        k: k as u8,
        any,
        far,
        symmetries,
        budget,
        losing: BTreeMap::new(),
        path: Vec::new(),
    };
    let start = Node {
        counts: vec![0; m],
        offsets: Vec::new(),
        states: vec![State {
            coloured: 0,
            recent: Vec::new(),
        }],
    };
    if !game.adversary_wins(&start, true)? {
        return Ok(Choosability::Choosable);
    }
    let lists = game.witness();
    if find_list_labelling(g, d, &lists, &mut Budget::unlimited())?.is_some() {
        return Err(Error::Defect(
            "choosability witness admits a labelling".into(),
        ));
    }
    Ok(Choosability::NotChoosable(lists))
}

/// Least `k` for which the graph is `k`-choosable. The search starts at
/// `λ + 1`, since the lists `{0, …, λ − 1}` cannot be labelled.
pub fn choosability_exact(g: &Graph, d: u32, budget: &mut Budget) -> Result<u32> {
    if g.element_count() == 0 {
        return Ok(0);
    }
    let (lambda, _) = lambda_exact(g, d, budget)?;
    let mut k = lambda + 1;
    while !is_k_choosable(g, d, k, budget)?.is_choosable() {
        k += 1;
    }
    Ok(k)
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct State {
    coloured: u64,
    /// Elements coloured at each recent position, aligned with `Node::offsets`.
    recent: Vec<u64>,
}

impl State {
    fn dominates(&self, other: &State) -> bool {
        self.coloured & other.coloured == other.coloured
            && self
                .recent
                .iter()
                .zip(&other.recent)
                .all(|(a, b)| a & b == *a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Node {
    counts: Vec<u8>,
    /// Distances back to the recent positions that may still conflict.
    offsets: Vec<u32>,
    states: Vec<State>,
}

struct Game<'a> {
    m: usize,
    d: u32,
    k: u8,
    any: Vec<u64>,
    far: Vec<u64>,
    /// Element permutations induced by graph automorphisms, identity excluded.
    symmetries: Vec<Vec<usize>>,
    budget: &'a mut Budget,
    /// Nodes the labeller wins from, grouped by their recent offsets.
    losing: BTreeMap<Vec<u32>, Vec<Node>>,
    /// Winning line for the adversary: (gap, elements receiving the colour).
    path: Vec<(u32, u64)>,
}

impl Game<'_> {
    fn full(&self) -> u64 {
        if self.m == 64 {
            u64::MAX
        } else {
            (1u64 << self.m) - 1
        }
    }

    fn adversary_wins(&mut self, node: &Node, first: bool) -> Result<bool> {
        if node.states.iter().any(|s| self.greedy_completes(node, s)) {
            return Ok(false);
        }
        let key = self.orbit_key(node);
        if self.known_losing(&key) {
            return Ok(false);
        }
        let open: u64 = (0..self.m)
            .filter(|&x| node.counts[x] < self.k)
            .fold(0, |acc, x| acc | 1 << x);
        let gaps: Vec<u32> = if first {
            vec![0]
        } else {
            (1..=self.d).collect()
        };
        for gap in gaps {
            let (offsets, states) = shift(node, gap, self.d);
            let mut t = open;
            while t != 0 {
                self.budget.tick()?;
                let next = self.play(&node.counts, &offsets, &states, t);
                self.path.push((gap, t));
                match next {
                    None => return Ok(true),
                    Some(child) => {
                        if self.adversary_wins(&child, false)? {
                            return Ok(true);
                        }
                    }
                }
                self.path.pop();
                t = (t - 1) & open;
            }
        }
        self.remember_losing(key);
        Ok(false)
    }

    fn known_losing(&self, node: &Node) -> bool {
        self.losing
            .get(&node.offsets)
            .is_some_and(|known| known.iter().any(|l| at_least_as_good(node, l)))
    }

    fn remember_losing(&mut self, node: Node) {
        let known = self.losing.entry(node.offsets.clone()).or_default();
        known.retain(|l| !at_least_as_good(l, &node));
        known.push(node);
    }

    /// Labeller's reply to the adversary putting the current colour on `t`.
    /// `None` when no partial labelling survives.
    fn play(&mut self, counts: &[u8], offsets: &[u32], states: &[State], t: u64) -> Option<Node> {
        let mut counts = counts.to_vec();
        let mut filled = 0u64;
        for x in 0..self.m {
            if t >> x & 1 == 1 {
                counts[x] += 1;
                if counts[x] == self.k {
                    filled |= 1 << x;
                }
            }
        }
        let mut next: Vec<State> = Vec::new();
        for s in states {
            let blocked = s
                .recent
                .iter()
                .fold(0u64, |acc, &mask| acc | self.spread(&self.far, mask));
            let allowed = t & !s.coloured & !blocked;
            let must = filled & !s.coloured;
            if must & !allowed != 0 || self.spread(&self.any, must) & must != 0 {
                continue;
            }
            let rest = allowed & !must & !self.spread(&self.any, must);
            let mut choices = Vec::new();
            self.independent_subsets(rest, must, &mut choices);
            for u in choices {
                let mut recent = s.recent.clone();
                recent.push(u);
                next.push(State {
                    coloured: s.coloured | u,
                    recent,
                });
            }
        }
        if next.is_empty() {
            return None;
        }
        let settled = next.iter().fold(self.full(), |acc, s| acc & s.coloured);
        for (x, c) in counts.iter_mut().enumerate() {
            if settled >> x & 1 == 1 {
                *c = self.k;
            }
        }
        let mut offsets = offsets.to_vec();
        offsets.push(0);
        self.settle_last(&mut counts, &offsets, &mut next);
        Some(canonical(counts, offsets, next))
    }

    /// Colours an element can still be denied by neighbours already coloured
    /// within the last `d` positions of `s`.
    fn fixed_blocks(&self, offsets: &[u32], s: &State) -> Vec<usize> {
        let d = self.d as usize;
        let mut fixed = vec![0usize; self.m];
        for (i, &mask) in s.recent.iter().enumerate() {
            let reach = d - 1 - offsets[i] as usize;
            let mut rest = mask;
            while rest != 0 {
                let y = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let mut hit = self.far[y];
                while hit != 0 {
                    let x = hit.trailing_zeros() as usize;
                    hit &= hit - 1;
                    fixed[x] += reach;
                }
            }
        }
        fixed
    }

    /// Marks as coloured every element that, in each state, has more list
    /// entries to come than its uncoloured neighbours and recent colours can
    /// block. Such an element can be coloured after all the others, so it
    /// stops constraining them; peeling repeats until nothing changes.
    fn settle_last(&self, counts: &mut [u8], offsets: &[u32], states: &mut [State]) {
        let d = self.d as usize;
        let fixed: Vec<Vec<usize>> = states.iter().map(|s| self.fixed_blocks(offsets, s)).collect();
        loop {
            let mut progress = false;
            for x in 0..self.m {
                if counts[x] == self.k {
                    continue;
                }
                let remaining = (self.k - counts[x]) as usize;
                let safe = states.iter().zip(&fixed).all(|(s, f)| {
                    if s.coloured >> x & 1 == 1 {
                        return true;
                    }
                    let left = !s.coloured;
                    let near_far = (self.far[x] & left).count_ones() as usize;
                    let near_eq = (self.any[x] & !self.far[x] & left).count_ones() as usize;
                    remaining > f[x] + near_eq + near_far * (2 * d - 1)
                });
                if safe {
                    counts[x] = self.k;
                    for s in states.iter_mut() {
                        s.coloured |= 1 << x;
                    }
                    progress = true;
                }
            }
            if !progress {
                return;
            }
        }
    }

    /// Sufficient condition for the labeller: the uncoloured elements can be
    /// coloured greedily in some order whatever colours the rest of the lists
    /// hold. An element is safe to colour last when its remaining list is
    /// longer than everything its neighbours could block.
    fn greedy_completes(&self, node: &Node, s: &State) -> bool {
        let d = self.d as usize;
        let mut left = self.full() & !s.coloured;
        let mut fixed = vec![0usize; self.m];
        for (i, &mask) in s.recent.iter().enumerate() {
            let reach = d - 1 - node.offsets[i] as usize;
            let mut rest = mask;
            while rest != 0 {
                let y = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let mut hit = self.far[y] & left;
                while hit != 0 {
                    let x = hit.trailing_zeros() as usize;
                    hit &= hit - 1;
                    fixed[x] += reach;
                }
            }
        }
        loop {
            if left == 0 {
                return true;
            }
            let mut progress = false;
            let mut scan = left;
            while scan != 0 {
                let x = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                let near_far = (self.far[x] & left).count_ones() as usize;
                let near_eq = (self.any[x] & !self.far[x] & left).count_ones() as usize;
                let blocked = fixed[x] + near_eq + near_far * (2 * d - 1);
                if (self.k - node.counts[x]) as usize > blocked {
                    left &= !(1 << x);
                    progress = true;
                }
            }
            if !progress {
                return false;
            }
        }
    }

    /// Smallest image of the node under the graph's symmetries.
    fn orbit_key(&self, node: &Node) -> Node {
        let mut best = node.clone();
        for perm in &self.symmetries {
            let move_mask = |mask: u64| {
                let mut out = 0u64;
                let mut rest = mask;
                while rest != 0 {
                    let x = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    out |= 1 << perm[x];
                }
                out
            };
            let mut counts = vec![0u8; self.m];
            for (x, &c) in node.counts.iter().enumerate() {
                counts[perm[x]] = c;
            }
            let mut states: Vec<State> = node
                .states
                .iter()
                .map(|s| State {
                    coloured: move_mask(s.coloured),
                    recent: s.recent.iter().map(|&r| move_mask(r)).collect(),
                })
                .collect();
            states.sort_unstable();
            let image = Node {
                counts,
                offsets: node.offsets.clone(),
                states,
            };
            if image < best {
                best = image;
            }
        }
        best
    }

    fn spread(&self, table: &[u64], mask: u64) -> u64 {
        let mut out = 0;
        let mut rest = mask;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            out |= table[x];
            rest &= rest - 1;
        }
        out
    }

    fn independent_subsets(&self, rest: u64, base: u64, out: &mut Vec<u64>) {
        if rest == 0 {
            out.push(base);
            return;
        }
        let x = rest.trailing_zeros() as usize;
        let rest = rest & (rest - 1);
        self.independent_subsets(rest & !self.any[x], base | 1 << x, out);
        self.independent_subsets(rest, base, out);
    }

    /// Lists from the adversary's winning line, padded to size `k` with fresh
    /// colours spaced `d` apart.
    fn witness(&self) -> ListAssignment {
        let mut lists: ListAssignment = vec![Vec::new(); self.m];
        let mut pos: Color = 0;
        for &(gap, t) in &self.path {
            pos += gap;
            for (x, l) in lists.iter_mut().enumerate() {
                if t >> x & 1 == 1 {
                    l.push(pos);
                }
            }
        }
        while lists.iter().any(|l| l.len() < self.k as usize) {
            pos += self.d;
            for l in lists.iter_mut() {
                if l.len() < self.k as usize {
                    l.push(pos);
                }
            }
        }
        lists
    }
}

/// Vertex counts up to which automorphisms are enumerated by brute force.
const SYMMETRY_LIMIT: usize = 7;

fn element_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    if n > SYMMETRY_LIMIT {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    permute(g, 0, &mut perm, &mut used, &mut out);
    out
}

fn permute(
    g: &Graph,
    i: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let n = g.vertex_count();
    if i == n {
        if perm.iter().enumerate().all(|(v, &p)| v == p) {
            return;
        }
        let mut map: Vec<usize> = perm.clone();
        for &(a, b) in g.edges() {
            match g.edge_between(perm[a], perm[b]) {
                Some(e) => map.push(n + e),
                None => return,
            }
        }
        out.push(map);
        return;
    }
    for p in 0..n {
        if used[p] || g.degree(p) != g.degree(i) {
            continue;
        }
        // adjacency to earlier vertices must be preserved
        if (0..i).any(|j| g.adjacent(i, j) != g.adjacent(p, perm[j])) {
            continue;
        }
        used[p] = true;
        perm[i] = p;
        permute(g, i + 1, perm, used, out);
        used[p] = false;
    }
}

/// Whether the labeller is at least as well placed in `a` as in `b`: no
/// fewer list entries still to come for any element, and every state of `b`
/// matched by a state of `a` that dominates it. Extra entries can be ignored
/// by the labeller, so a win from `b` transfers to `a`.
fn at_least_as_good(a: &Node, b: &Node) -> bool {
    a.offsets == b.offsets
        && a.counts.iter().zip(&b.counts).all(|(x, y)| x <= y)
        && b.states.iter().all(|sb| a.states.iter().any(|sa| sa.dominates(sb)))
}

/// Advance every recent position by `gap`, dropping those now `d` or more
/// behind.
fn shift(node: &Node, gap: u32, d: u32) -> (Vec<u32>, Vec<State>) {
    let keep: Vec<usize> = (0..node.offsets.len())
        .filter(|&i| node.offsets[i] + gap < d)
        .collect();
    let offsets = keep.iter().map(|&i| node.offsets[i] + gap).collect();
    let states = node
        .states
        .iter()
        .map(|s| State {
            coloured: s.coloured,
            recent: keep.iter().map(|&i| s.recent[i]).collect(),
        })
        .collect();
    (offsets, states)
}

fn canonical(counts: Vec<u8>, offsets: Vec<u32>, states: Vec<State>) -> Node {
    let live: Vec<usize> = (0..offsets.len())
        .filter(|&i| states.iter().any(|s| s.recent[i] != 0))
        .collect();
    let offsets = live.iter().map(|&i| offsets[i]).collect();
    let mut states: Vec<State> = states
        .into_iter()
        .map(|s| State {
            coloured: s.coloured,
            recent: live.iter().map(|&i| s.recent[i]).collect(),
        })
        .collect();
    // a dominating state has at least as many coloured elements and, on a
    // tie, no more recent ones, so it sorts first
    let weight = |s: &State| {
        let recent: u32 = s.recent.iter().map(|m| m.count_ones()).sum();
        (core::cmp::Reverse(s.coloured.count_ones()), recent)
    };
    states.sort_unstable_by(|a, b| weight(a).cmp(&weight(b)).then_with(|| a.cmp(b)));
    states.dedup();
    let mut kept: Vec<State> = Vec::with_capacity(states.len());
    for s in states {
        if !kept.iter().any(|o| o.dominates(&s)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    Node {
        counts,
        offsets,
        states: kept,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> Graph {
        Graph::new(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn normalisation_examples() {
        let lists = vec![vec![0, 7], vec![9], vec![3]];
        assert_eq!(
            normalize_lists(&lists, 2),
            vec![vec![0, 4], vec![6], vec![2]]
        );
        let tight = vec![vec![0, 1], vec![2, 3]];
        assert_eq!(normalize_lists(&tight, 2), tight);
        assert_eq!(normalize_lists(&vec![vec![100]], 2), vec![vec![0]]);
    }

    #[test]
    fn k1_is_one_choosable() {
        let g = Graph::empty(1);
        assert!(is_k_choosable(&g, 2, 1, &mut Budget::default())
            .unwrap()
            .is_choosable());
        assert_eq!(
            choosability_exact(&g, 2, &mut Budget::default()).unwrap(),
            1
        );
    }

    #[test]
    fn k2_with_d2() {
        let mut b = Budget::default();
        match is_k_choosable(&k2(), 2, 3, &mut b).unwrap() {
            Choosability::NotChoosable(w) => assert_eq!(w, vec![vec![0, 1, 2]; 3]),
            Choosability::Choosable => panic!("K2 is not 3-choosable"),
        }
        assert!(is_k_choosable(&k2(), 2, 4, &mut b).unwrap().is_choosable());
        assert_eq!(choosability_exact(&k2(), 2, &mut b).unwrap(), 4);
    }

    /// Brute force over all assignments of `k`-subsets of `{0..u}`.
    fn oracle_choosable(g: &Graph, d: u32, k: usize, u: u32) -> bool {
        let subsets: Vec<Vec<Color>> = (0u32..1 << u)
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| (0..u).filter(|c| s >> c & 1 == 1).collect())
            .collect();
        let m = g.element_count();
        let mut idx = vec![0usize; m];
        loop {
            let lists: ListAssignment = idx.iter().map(|&i| subsets[i].clone()).collect();
            if find_list_labelling(g, d, &lists, &mut Budget::unlimited())
                .unwrap()
                .is_none()
            {
                return false;
            }
            let mut p = 0;
            while p < m {
                idx[p] += 1;
                if idx[p] < subsets.len() {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
            if p == m {
                return true;
            }
        }
    }

    #[test]
    fn agrees_with_brute_force_on_k2() {
        // normalised assignments of K2 with k ≤ 3 live in a universe of 3k·d colours
        for d in 1..=3u32 {
            for k in 1..=3u32 {
                let u = (3 * k * d).min(9);
                let fast = is_k_choosable(&k2(), d, k, &mut Budget::default())
                    .unwrap()
                    .is_choosable();
                assert_eq!(
                    fast,
                    oracle_choosable(&k2(), d, k as usize, u),
                    "d={d} k={k}"
                );
            }
        }
    }

    #[test]
    fn path_of_three_vertices() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let c = choosability_exact(&p3, 2, &mut Budget::default()).unwrap();
        assert!(c <= 2 + 4);
        assert!(!is_k_choosable(&p3, 2, c - 1, &mut Budget::default())
            .unwrap()
            .is_choosable());
    }
}
