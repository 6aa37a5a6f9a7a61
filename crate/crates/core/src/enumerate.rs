//! Isomorph-free enumeration of small connected graphs.
//!
//! Every connected graph on `n + 1` vertices has a vertex whose removal leaves
//! it connected, so extending each connected graph on `n` vertices by a new
//! vertex joined to every nonempty subset, then keeping one representative per
//! canonical form, reaches them all.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Largest vertex count handled: adjacency rows are bitmasks and the canonical
/// form packs the upper triangle into a `u64`.
pub const MAX_VERTICES: usize = 8;

/// Connected graphs on exactly `n` vertices, one per isomorphism class, in
/// increasing order of canonical code.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(
        n <= MAX_VERTICES,
        "enumeration supports at most {MAX_VERTICES} vertices"
    );
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeSet<u64> = BTreeSet::new();
    level.insert(0);
    for size in 1..n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let adj = decode(code, size);
            for subset in 1u32..(1 << size) {
                let mut grown = adj.clone();
                grown.push(subset);
                for (v, row) in grown.iter_mut().enumerate().take(size) {
                    if subset >> v & 1 == 1 {
                        *row |= 1 << size;
                    }
                }
                next.insert(canonical_code(&grown));
            }
        }
        level = next;
    }
    level.into_iter().map(|c| to_graph(&decode(c, n))).collect()
}

/// Connected graphs with `1..=max_n` vertices, smallest first.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

fn bit_index(i: usize, j: usize) -> usize {
    // position of pair (i, j), i < j, in row-major upper-triangle order
    j * (j - 1) / 2 + i
}

fn encode(adj: &[u32], perm: &[usize]) -> u64 {
    let n = adj.len();
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            if adj[perm[i]] >> perm[j] & 1 == 1 {
                code |= 1 << bit_index(i, j);
            }
        }
    }
    code
}

fn decode(code: u64, n: usize) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for j in 1..n {
        for i in 0..j {
            if code >> bit_index(i, j) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// Smallest code over vertex orders that list vertices by nondecreasing
/// degree; isomorphic graphs share it.
pub fn canonical_code(adj: &[u32]) -> u64 {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| deg[v]);
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(adj, &deg, &order, &mut perm, &mut used, &mut best);
    best
}

fn search(
    adj: &[u32],
    deg: &[u32],
    order: &[usize],
    perm: &mut Vec<usize>,
    used: &mut [bool],
    best: &mut u64,
) {
    let n = adj.len();
    let i = perm.len();
    if i == n {
        *best = (*best).min(encode(adj, perm));
        return;
    }
    let want = deg[order[i]];
    for v in 0..n {
        if used[v] || deg[v] != want {
            continue;
        }
        used[v] = true;
        perm.push(v);
        search(adj, deg, order, perm, used, best);
        perm.pop();
        used[v] = false;
    }
}

fn to_graph(adj: &[u32]) -> Graph {
    let n = adj.len();
    let mut edges = Vec::new();
    for (u, &row) in adj.iter().enumerate() {
        for v in u + 1..n {
            if row >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("decoded adjacency is simple")
}
