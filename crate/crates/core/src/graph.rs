use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A vertex or an edge: the things a total labelling colours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(usize),
    Edge(usize),
}

/// Simple undirected graph on vertices `0..n`.
///
/// Edges keep their input order, which is also their index. Endpoints are
/// stored with the smaller vertex first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
    lookup: BTreeMap<(usize, usize), usize>,
}

impl Graph {
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut lookup = BTreeMap::new();
        let mut neighbors = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        for (i, &(a, b)) in edge_list.iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} ({a},{b}) references a vertex outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("edge {i} is a loop at {a}")));
            }
            let key = (a.min(b), a.max(b));
            if lookup.insert(key, i).is_some() {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} ({a},{b}) repeats an earlier edge"
                )));
            }
            edges.push(key);
            neighbors[a].push(b);
            neighbors[b].push(a);
            incident[a].push(i);
            incident[b].push(i);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            neighbors,
            incident,
            lookup,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, &[]).expect("edgeless graph is valid")
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `|V| + |E|`.
    #[inline]
    pub fn element_count(&self) -> usize {
        self.n + self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    #[inline]
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Neighbours in increasing order.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Incident edge indices in increasing order.
    #[inline]
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.lookup.get(&(u.min(v), u.max(v))).copied()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn degree_sum(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum()
    }

    #[inline]
    pub fn element_index(&self, x: Element) -> usize {
        match x {
            Element::Vertex(v) => v,
            Element::Edge(e) => self.n + e,
        }
    }

    #[inline]
    pub fn element(&self, i: usize) -> Element {
        if i < self.n {
            Element::Vertex(i)
        } else {
            Element::Edge(i - self.n)
        }
    }

    pub fn contains(&self, x: Element) -> bool {
        match x {
            Element::Vertex(v) => v < self.n,
            Element::Edge(e) => e < self.edges.len(),
        }
    }

    /// Component id per vertex, numbered in order of smallest vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in &self.neighbors[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// Two-colouring of the vertices (`true` = first side), or `None` when an
    /// odd cycle exists. Each component starts its smallest vertex on side `true`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut stack = Vec::new();
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(true);
            stack.push(s);
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for &w in &self.neighbors[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            stack.push(w);
                        }
                        Some(sw) if sw == sv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    /// `G - e`. Returns the new graph and, for each new edge index, the old one.
    pub fn without_edge(&self, e: usize) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.edge_count()).filter(|&i| i != e).collect();
        let list: Vec<(usize, usize)> = keep.iter().map(|&i| self.edges[i]).collect();
        (
            Graph::new(self.n, &list).expect("subgraph of a simple graph"),
            keep,
        )
    }

    /// Subgraph induced by the vertices with `keep[v]`. Returns the graph, the
    /// old index of each new vertex, and the old index of each new edge.
    pub fn induced(&self, keep: &[bool]) -> (Graph, Vec<usize>, Vec<usize>) {
        let mut new_index = vec![usize::MAX; self.n];
        let mut vmap = Vec::new();
        for v in 0..self.n {
            if keep[v] {
                new_index[v] = vmap.len();
                vmap.push(v);
            }
        }
        let mut emap = Vec::new();
        let mut list = Vec::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if keep[a] && keep[b] {
                emap.push(i);
                list.push((new_index[a], new_index[b]));
            }
        }
        (
            Graph::new(vmap.len(), &list).expect("subgraph of a simple graph"),
            vmap,
            emap,
        )
    }
}
