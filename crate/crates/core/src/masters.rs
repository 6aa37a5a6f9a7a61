//! Master assignments: every vertex of degree at most `k` picks one neighbour
//! as its k-master, and no vertex masters more than `k − 2` others.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MasterAssignment {
    pub k: usize,
    /// Each low-degree vertex mapped to its master.
    pub pairs: BTreeMap<usize, usize>,
}

impl MasterAssignment {
    /// Number of vertices each vertex masters.
    pub fn loads(&self, n: usize) -> Vec<usize> {
        let mut load = vec![0; n];
        for &y in self.pairs.values() {
            load[y] += 1;
        }
        load
    }

    pub fn master_of(&self, x: usize) -> Option<usize> {
        self.pairs.get(&x).copied()
    }
}

/// Vertices of degree at most `k`.
pub fn low_vertices(g: &Graph, k: usize) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&v| g.degree(v) <= k)
        .collect()
}

/// Capacity of each master.
pub fn capacity(k: usize) -> usize {
    k.saturating_sub(2)
}

/// Solves the assignment as a bipartite flow (unit demand per low vertex,
/// capacity `k − 2` per master) by augmenting paths. `None` when no assignment
/// exists, which includes any isolated low vertex.
pub fn find_master_assignment(g: &Graph, k: usize) -> Option<MasterAssignment> {
    let n = g.vertex_count();
    let cap = capacity(k);
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut served: Vec<Vec<usize>> = vec![Vec::new(); n];
    for x in low_vertices(g, k) {
        let mut seen = vec![false; n];
        if !augment(g, cap, x, &mut owner, &mut served, &mut seen) {
            return None;
        }
    }
    let pairs = owner
        .iter()
        .enumerate()
        .filter_map(|(x, y)| y.map(|y| (x, y)))
        .collect();
    Some(MasterAssignment { k, pairs })
}

fn augment(
    g: &Graph,
    cap: usize,
    x: usize,
    owner: &mut [Option<usize>],
    served: &mut [Vec<usize>],
    seen: &mut [bool],
) -> bool {
    for &y in g.neighbors(x) {
        if seen[y] {
            continue;
        }
        seen[y] = true;
        if served[y].len() < cap {
            owner[x] = Some(y);
            served[y].push(x);
            return true;
        }
        for i in 0..served[y].len() {
            let other = served[y][i];
            if augment(g, cap, other, owner, served, seen) {
                // `other` moved elsewhere; take its slot at y
                served[y][i] = x;
                owner[x] = Some(y);
                return true;
            }
        }
    }
    false
}

/// Checks the defining conditions: exactly the vertices of degree at most `k`
/// have a master, each master is a neighbour, and no load exceeds `k − 2`.
pub fn check_master_assignment(g: &Graph, ma: &MasterAssignment) -> bool {
    let low = low_vertices(g, ma.k);
    if ma.pairs.len() != low.len() || !low.iter().all(|x| ma.pairs.contains_key(x)) {
        return false;
    }
    if !ma
        .pairs
        .iter()
        .all(|(&x, &y)| y < g.vertex_count() && g.adjacent(x, y))
    {
        return false;
    }
    ma.loads(g.vertex_count())
        .iter()
        .all(|&l| l <= capacity(ma.k))
}
