//! Rotation systems (combinatorial maps) and face tracing.
//!
//! A rotation gives, for every vertex, the cyclic order of its incident
//! edges. Faces are traced with the rule: after walking `u -> v` along edge
//! `e`, leave `v` along the edge that follows `e` in the rotation at `v`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    order: Vec<Vec<usize>>,
}

/// A directed traversal of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Dart {
    pub edge: usize,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub walk: Vec<Dart>,
}

impl Face {
    /// Number of edge-sides on the boundary walk; a cut edge counts twice.
    pub fn degree(&self) -> usize {
        self.walk.len()
    }

    /// Corner vertices in walk order (with repetition for non-simple walks).
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.walk.iter().map(|d| d.from)
    }
}

impl RotationSystem {
    /// Per-vertex cyclic orders of incident edge indices. Checked against the graph.
    pub fn new(graph: &Graph, order: Vec<Vec<usize>>) -> Result<Self> {
        let rot = RotationSystem { order };
        rot.validate(graph)?;
        Ok(rot)
    }

    /// Rotation given by cyclic orders of neighbouring vertices.
    pub fn from_neighbor_orders(graph: &Graph, orders: &[Vec<usize>]) -> Result<Self> {
        if orders.len() != graph.vertex_count() {
            return Err(Error::MalformedEmbedding(format!(
                "{} vertex orders for {} vertices",
                orders.len(),
                graph.vertex_count()
            )));
        }
        let mut order = Vec::with_capacity(orders.len());
        for (v, nbrs) in orders.iter().enumerate() {
            let mut row = Vec::with_capacity(nbrs.len());
            for &w in nbrs {
                let e = graph.edge_between(v, w).ok_or_else(|| {
                    Error::MalformedEmbedding(format!("{v} and {w} are not adjacent"))
                })?;
                row.push(e);
            }
            order.push(row);
        }
        RotationSystem::new(graph, order)
    }

    /// Counter-clockwise rotation of a straight-line drawing with integer coordinates.
    pub fn from_coordinates(graph: &Graph, coords: &[(i64, i64)]) -> Result<Self> {
        let orders: Vec<Vec<usize>> = (0..graph.vertex_count())
            .map(|v| {
                let (x, y) = coords[v];
                let mut nbrs = graph.neighbors(v).to_vec();
                nbrs.sort_by(|&a, &b| {
                    angle_cmp(
                        (coords[a].0 - x, coords[a].1 - y),
                        (coords[b].0 - x, coords[b].1 - y),
                    )
                });
                nbrs
            })
            .collect();
        RotationSystem::from_neighbor_orders(graph, &orders)
    }

    pub fn order(&self, v: usize) -> &[usize] {
        &self.order[v]
    }

    pub fn orders(&self) -> &[Vec<usize>] {
        &self.order
    }

    pub fn validate(&self, graph: &Graph) -> Result<()> {
        if self.order.len() != graph.vertex_count() {
            return Err(Error::MalformedEmbedding(format!(
                "rotation has {} vertices, graph has {}",
                self.order.len(),
                graph.vertex_count()
            )));
        }
        for (v, row) in self.order.iter().enumerate() {
            let mut seen: Vec<usize> = row.clone();
            seen.sort_unstable();
            if seen != graph.incident(v) {
                return Err(Error::MalformedEmbedding(format!(
                    "rotation at vertex {v} is not a permutation of its incident edges"
                )));
            }
        }
        Ok(())
    }

    fn successor_table(&self) -> BTreeMap<(usize, usize), usize> {
        let mut next = BTreeMap::new();
        for (v, row) in self.order.iter().enumerate() {
            for (i, &e) in row.iter().enumerate() {
                next.insert((v, e), row[(i + 1) % row.len()]);
            }
        }
        next
    }
}

/// Counter-clockwise angle order starting from the positive x axis.
fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |p: (i64, i64)| {
        if p.1 > 0 || (p.1 == 0 && p.0 > 0) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128;
        0.cmp(&cross)
    })
}

/// All faces of the embedding, each directed edge-side on exactly one face.
pub fn trace_faces(graph: &Graph, rotation: &RotationSystem) -> Result<Vec<Face>> {
    rotation.validate(graph)?;
    if graph.edge_count() == 0 {
        // Isolated vertices: one empty face per vertex (the sphere around it).
        return Ok((0..graph.vertex_count())
            .map(|_| Face { walk: Vec::new() })
            .collect());
    }
    let next = rotation.successor_table();
    let m = graph.edge_count();
    let dart = |id: usize| {
        let (a, b) = graph.endpoints(id / 2);
        if id.is_multiple_of(2) {
            Dart {
                edge: id / 2,
                from: a,
                to: b,
            }
        } else {
            Dart {
                edge: id / 2,
                from: b,
                to: a,
            }
        }
    };
    let dart_id = |d: Dart| 2 * d.edge + usize::from(d.from > d.to);
    let mut used = vec![false; 2 * m];
    let mut faces = Vec::new();
    for start in 0..2 * m {
        if used[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut cur = start;
        while !used[cur] {
            used[cur] = true;
            let d = dart(cur);
            walk.push(d);
            let f = next[&(d.to, d.edge)];
            let w = graph.other_end(f, d.to);
            cur = dart_id(Dart {
                edge: f,
                from: d.to,
                to: w,
            });
        }
        if cur != start {
            return Err(Error::MalformedEmbedding("face walk did not close".into()));
        }
        faces.push(Face { walk });
    }
    Ok(faces)
}

/// `|V| - |E| + |F|` of a connected embedded graph.
pub fn euler_characteristic(graph: &Graph, rotation: &RotationSystem) -> Result<i64> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let faces = trace_faces(graph, rotation)?;
    Ok(graph.vertex_count() as i64 - graph.edge_count() as i64 + faces.len() as i64)
}

/// A graph together with a rotation system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedded {
    pub graph: Graph,
    pub rotation: RotationSystem,
}

impl Embedded {
    pub fn new(graph: Graph, rotation: RotationSystem) -> Result<Self> {
        rotation.validate(&graph)?;
        Ok(Embedded { graph, rotation })
    }

    pub fn faces(&self) -> Vec<Face> {
        trace_faces(&self.graph, &self.rotation).expect("validated at construction")
    }

    pub fn euler_characteristic(&self) -> Result<i64> {
        euler_characteristic(&self.graph, &self.rotation)
    }
}

/// Incremental construction of embeddings by local surgery on neighbour
/// orders. Used by the generators.
#[derive(Debug, Clone)]
pub(crate) struct MapBuilder {
    nbrs: Vec<Vec<usize>>,
}

impl MapBuilder {
    pub(crate) fn new(nbrs: Vec<Vec<usize>>) -> Self {
        MapBuilder { nbrs }
    }

    pub(crate) fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub(crate) fn vertex_total(&self) -> usize {
        self.nbrs.len()
    }

    /// Flip the edge `ab` shared by faces `a b c` and `b a d` into `cd`.
    /// Skipped (returns false) when it would create a parallel edge, push a
    /// degree past `max_degree`, or drop one below 3.
    pub(crate) fn try_flip(&mut self, a: usize, b: usize, c: usize, max_degree: usize) -> bool {
        if self.succ(b, a) != c || self.succ(c, b) != a {
            return false;
        }
        let d = self.succ(a, b);
        if d == c || self.nbrs[c].contains(&d) {
            return false;
        }
        if self.degree(a) <= 3
            || self.degree(b) <= 3
            || self.degree(c) >= max_degree
            || self.degree(d) >= max_degree
        {
            return false;
        }
        self.nbrs[a].retain(|&x| x != b);
        self.nbrs[b].retain(|&x| x != a);
        let p = self.nbrs[d].iter().position(|&x| x == a).unwrap();
        self.nbrs[d].insert(p + 1, c);
        let p = self.nbrs[c].iter().position(|&x| x == b).unwrap();
        self.nbrs[c].insert(p + 1, d);
        true
    }

    fn succ(&self, v: usize, u: usize) -> usize {
        let row = &self.nbrs[v];
        let i = row.iter().position(|&x| x == u).expect("adjacent");
        row[(i + 1) % row.len()]
    }

    /// Boundary vertex cycles of all faces (for a graph with at least one edge).
    pub(crate) fn faces(&self) -> Vec<Vec<usize>> {
        let mut used = BTreeMap::new();
        let mut faces = Vec::new();
        for u in 0..self.nbrs.len() {
            for &v in &self.nbrs[u] {
                if used.contains_key(&(u, v)) {
                    continue;
                }
                let mut cycle = Vec::new();
                let (mut a, mut b) = (u, v);
                while !used.contains_key(&(a, b)) {
                    used.insert((a, b), ());
                    cycle.push(a);
                    let c = self.succ(b, a);
                    a = b;
                    b = c;
                }
                faces.push(cycle);
            }
        }
        faces
    }

    /// New vertex inside the face whose boundary walk is `face`, joined to
    /// every boundary vertex. The boundary must be a simple cycle.
    pub(crate) fn insert_vertex_in_face(&mut self, face: &[usize]) -> usize {
        let x = self.nbrs.len();
        let t = face.len();
        for i in 0..t {
            let w = face[i];
            let prev = face[(i + t - 1) % t];
            let row = &mut self.nbrs[w];
            let p = row
                .iter()
                .position(|&y| y == prev)
                .expect("face walk follows edges");
            row.insert(p + 1, x);
        }
        self.nbrs.push(face.iter().rev().copied().collect());
        x
    }

    /// Replace edge `uv` by a path `u x v`.
    pub(crate) fn subdivide_edge(&mut self, u: usize, v: usize) -> usize {
        let x = self.nbrs.len();
        for (a, b) in [(u, v), (v, u)] {
            let slot = self.nbrs[a]
                .iter_mut()
                .find(|y| **y == b)
                .expect("edge exists");
            *slot = x;
        }
        self.nbrs.push(vec![u, v]);
        x
    }

    pub(crate) fn build(self) -> Result<Embedded> {
        let mut list = Vec::new();
        for (u, row) in self.nbrs.iter().enumerate() {
            for &v in row {
                if u < v {
                    list.push((u, v));
                }
            }
        }
        list.sort_unstable();
        let graph = Graph::new(self.nbrs.len(), &list)?;
        let rotation = RotationSystem::from_neighbor_orders(&graph, &self.nbrs)?;
        Embedded::new(graph, rotation)
    }
}
