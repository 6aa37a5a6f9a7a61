//! Deterministic generators of embedded graphs.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::{Embedded, MapBuilder, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    /// `K_{1,k}`: centre 0, leaves `1..=k`.
    Star(usize),
    /// Rim `0..k` in order, hub `k`.
    Wheel(usize),
    Complete(usize),
    PlanarGrid(usize, usize),
    TorusGrid(usize, usize),
    /// Stacked triangulation grown to `vertices` with every degree at most
    /// `max_degree`, then shuffled by random edge flips.
    RandomPlanarTriangulation {
        vertices: usize,
        max_degree: usize,
        seed: u64,
    },
    Cube,
    Icosahedron,
    /// Torus grid with one face subdivided to length `hub_degree` and a hub
    /// vertex placed inside it.
    TorusHub {
        rows: usize,
        cols: usize,
        hub_degree: usize,
    },
}

impl Family {
    /// Parses a family name with integer parameters, e.g. `("wheel", [8])`.
    pub fn parse(name: &str, params: &[u64], seed: u64) -> Result<Family> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::Usage(format!(
                    "family {name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let p = |i: usize| params[i] as usize;
        Ok(match name {
            "path" => {
                want(1)?;
                Family::Path(p(0))
            }
            "cycle" => {
                want(1)?;
                Family::Cycle(p(0))
            }
            "star" => {
                want(1)?;
                Family::Star(p(0))
            }
            "wheel" => {
                want(1)?;
                Family::Wheel(p(0))
            }
            "complete" => {
                want(1)?;
                Family::Complete(p(0))
            }
            "planar_grid" => {
                want(2)?;
                Family::PlanarGrid(p(0), p(1))
            }
            "torus_grid" => {
                want(2)?;
                Family::TorusGrid(p(0), p(1))
            }
            "random_planar_triangulation" => {
                if params.is_empty() || params.len() > 2 {
                    return Err(Error::Usage(format!(
                        "{name} takes <vertices> [max_degree]"
                    )));
                }
                Family::RandomPlanarTriangulation {
                    vertices: p(0),
                    max_degree: params.get(1).map(|&x| x as usize).unwrap_or(usize::MAX),
                    seed,
                }
            }
            "cube" => {
                want(0)?;
                Family::Cube
            }
            "icosahedron" => {
                want(0)?;
                Family::Icosahedron
            }
            "torus_hub" => {
                want(3)?;
                Family::TorusHub {
                    rows: p(0),
                    cols: p(1),
                    hub_degree: p(2),
                }
            }
            other => return Err(Error::Usage(format!("unknown family {other:?}"))),
        })
    }

    pub fn names() -> &'static [&'static str] {
        &[
            "path",
            "cycle",
            "star",
            "wheel",
            "complete",
            "planar_grid",
            "torus_grid",
            "random_planar_triangulation",
            "cube",
            "icosahedron",
            "torus_hub",
        ]
    }

    /// Euler characteristic of the produced embedding, when fixed by the family.
    pub fn advertised_euler(&self) -> Option<i64> {
        match self {
            Family::TorusGrid(..) | Family::TorusHub { .. } => Some(0),
            Family::Complete(n) if *n > 4 => None,
            _ => Some(2),
        }
    }
}

fn usage(msg: String) -> Error {
    Error::Usage(msg)
}

pub fn generate(family: &Family) -> Result<Embedded> {
    match *family {
        Family::Path(n) => {
            if n == 0 {
                return Err(usage("path needs at least one vertex".into()));
            }
            let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
            tree(n, &edges)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(usage(format!("cycle needs at least 3 vertices, got {n}")));
            }
            cycle_builder(n).build()
        }
        Family::Star(k) => {
            let edges: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
            tree(k + 1, &edges)
        }
        Family::Wheel(k) => {
            if k < 3 {
                return Err(usage(format!("wheel needs a rim of at least 3, got {k}")));
            }
            let mut b = cycle_builder(k);
            let face = b.faces()[0].clone();
            b.insert_vertex_in_face(&face);
            b.build()
        }
        Family::Complete(n) => complete(n),
        Family::PlanarGrid(r, c) => {
            if r == 0 || c == 0 {
                return Err(usage("planar_grid needs positive dimensions".into()));
            }
            let id = |i: usize, j: usize| i * c + j;
            let mut edges = Vec::new();
            for i in 0..r {
                for j in 0..c {
                    if j + 1 < c {
                        edges.push((id(i, j), id(i, j + 1)));
                    }
                    if i + 1 < r {
                        edges.push((id(i, j), id(i + 1, j)));
                    }
                }
            }
            let g = Graph::new(r * c, &edges)?;
            let coords: Vec<(i64, i64)> = (0..r * c)
                .map(|v| ((v % c) as i64, (v / c) as i64))
                .collect();
            let rot = RotationSystem::from_coordinates(&g, &coords)?;
            Embedded::new(g, rot)
        }
        Family::TorusGrid(r, c) => torus_builder(r, c)?.build(),
        Family::RandomPlanarTriangulation {
            vertices,
            max_degree,
            seed,
        } => random_triangulation(vertices, max_degree, seed),
        Family::Cube => {
            let edges = [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ];
            let coords = [
                (0, 0),
                (4, 0),
                (4, 4),
                (0, 4),
                (1, 1),
                (3, 1),
                (3, 3),
                (1, 3),
            ];
            let g = Graph::new(8, &edges)?;
            let rot = RotationSystem::from_coordinates(&g, &coords)?;
            Embedded::new(g, rot)
        }
        Family::Icosahedron => icosahedron(),
        Family::TorusHub {
            rows,
            cols,
            hub_degree,
        } => {
            if hub_degree < 4 {
                return Err(usage(format!(
                    "torus_hub needs hub degree at least 4, got {hub_degree}"
                )));
            }
            let mut b = torus_builder(rows, cols)?;
            // face around the square with corners (0,0),(0,1),(1,1),(1,0)
            let mut face = b
                .faces()
                .into_iter()
                .find(|f| f.contains(&0) && f.len() == 4 && f.contains(&(cols + 1)))
                .ok_or_else(|| Error::Defect("torus grid lost its unit square".into()))?;
            let mut i = 0;
            while face.len() < hub_degree {
                let t = face.len();
                let (u, v) = (face[i % t], face[(i + 1) % t]);
                let x = b.subdivide_edge(u, v);
                face.insert(i % t + 1, x);
                i += 2;
            }
            b.insert_vertex_in_face(&face);
            b.build()
        }
    }
}

fn tree(n: usize, edges: &[(usize, usize)]) -> Result<Embedded> {
    let g = Graph::new(n, edges)?;
    let order: Vec<Vec<usize>> = (0..n).map(|v| g.incident(v).to_vec()).collect();
    let rot = RotationSystem::new(&g, order)?;
    Embedded::new(g, rot)
}

fn cycle_builder(n: usize) -> MapBuilder {
    MapBuilder::new((0..n).map(|i| vec![(i + n - 1) % n, (i + 1) % n]).collect())
}

fn torus_builder(r: usize, c: usize) -> Result<MapBuilder> {
    if r < 3 || c < 3 {
        return Err(usage(format!(
            "torus_grid needs both dimensions at least 3, got {r}x{c}"
        )));
    }
    let id = |i: usize, j: usize| (i % r) * c + (j % c);
    let nbrs = (0..r * c)
        .map(|v| {
            let (i, j) = (v / c, v % c);
            // right, up, left, down
            vec![
                id(i, j + 1),
                id(i + 1, j),
                id(i, j + c - 1),
                id(i + r - 1, j),
            ]
        })
        .collect();
    Ok(MapBuilder::new(nbrs))
}

fn complete(n: usize) -> Result<Embedded> {
    match n {
        0 => Err(usage("complete graph needs at least one vertex".into())),
        1 => tree(1, &[]),
        2 => tree(2, &[(0, 1)]),
        3 => cycle_builder(3).build(),
        4 => {
            let mut b = cycle_builder(3);
            let face = b.faces()[0].clone();
            b.insert_vertex_in_face(&face);
            b.build()
        }
        _ => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            let g = Graph::new(n, &edges)?;
            let orders: Vec<Vec<usize>> = (0..n)
                .map(|v| (1..n).map(|k| (v + k) % n).collect())
                .collect();
            let rot = RotationSystem::from_neighbor_orders(&g, &orders)?;
            Embedded::new(g, rot)
        }
    }
}

fn icosahedron() -> Result<Embedded> {
    // top 0, upper ring 1..=5, lower ring 6..=10 (lower j sits between upper j and j+1), bottom 11
    let up = |i: usize| 1 + (i % 5);
    let lo = |i: usize| 6 + (i % 5);
    let mut nbrs = vec![Vec::new(); 12];
    nbrs[0] = (0..5).map(up).collect();
    for i in 0..5 {
        nbrs[up(i)] = vec![0, up(i + 4), lo(i + 4), lo(i), up(i + 1)];
        nbrs[lo(i)] = vec![up(i), lo(i + 4), 11, lo(i + 1), up(i + 1)];
    }
    nbrs[11] = (0..5).rev().map(lo).collect();
    MapBuilder::new(nbrs).build()
}

fn random_triangulation(n: usize, max_degree: usize, seed: u64) -> Result<Embedded> {
    if n < 3 {
        return Err(usage(format!(
            "triangulation needs at least 3 vertices, got {n}"
        )));
    }
    if max_degree < 4 && n > 3 {
        return Err(usage(format!(
            "max degree {max_degree} is too small to grow a triangulation"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = cycle_builder(3);
    while b.degree_count() < n {
        let faces: Vec<Vec<usize>> = b
            .faces()
            .into_iter()
            .filter(|f| f.iter().all(|&v| b.degree(v) < max_degree))
            .collect();
        let face = faces
            .choose(&mut rng)
            .ok_or_else(|| {
                usage(format!(
                    "cannot reach {n} vertices with max degree {max_degree}"
                ))
            })?
            .clone();
        b.insert_vertex_in_face(&face);
    }
    let flips = 4 * n;
    for _ in 0..flips {
        let faces = b.faces();
        let f = &faces[rng.gen_range(0..faces.len())];
        let k = rng.gen_range(0..3);
        let (a, bb, c) = (f[k], f[(k + 1) % 3], f[(k + 2) % 3]);
        b.try_flip(a, bb, c, max_degree);
    }
    b.build()
}

impl MapBuilder {
    fn degree_count(&self) -> usize {
        self.vertex_total()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(e: &Embedded, euler: i64) {
        let faces = e.faces();
        let sides: usize = faces.iter().map(|f| f.degree()).sum();
        assert_eq!(sides, 2 * e.graph.edge_count());
        assert_eq!(e.euler_characteristic().unwrap(), euler);
    }

    #[test]
    fn star_and_wheel_shapes() {
        let s = generate(&Family::Star(12)).unwrap();
        assert_eq!(
            (
                s.graph.vertex_count(),
                s.graph.edge_count(),
                s.graph.degree(0)
            ),
            (13, 12, 12)
        );
        check(&s, 2);
        let w = generate(&Family::Wheel(8)).unwrap();
        assert_eq!((w.graph.vertex_count(), w.graph.edge_count()), (9, 16));
        assert_eq!(w.graph.degree(8), 8);
        assert!((0..8).all(|v| w.graph.degree(v) == 3));
        check(&w, 2);
        assert!(w.faces().iter().all(|f| f.degree() == 3 || f.degree() == 8));
    }

    #[test]
    fn torus_grid_has_euler_zero() {
        let t = generate(&Family::TorusGrid(4, 4)).unwrap();
        assert_eq!((t.graph.vertex_count(), t.graph.edge_count()), (16, 32));
        check(&t, 0);
        assert!(t.faces().iter().all(|f| f.degree() == 4));
    }

    #[test]
    fn planar_families_are_spheres() {
        for fam in [
            Family::Path(5),
            Family::Cycle(6),
            Family::Complete(4),
            Family::PlanarGrid(3, 4),
            Family::Cube,
            Family::Icosahedron,
            Family::RandomPlanarTriangulation {
                vertices: 30,
                max_degree: 12,
                seed: 7,
            },
        ] {
            let e = generate(&fam).unwrap();
            check(&e, 2);
        }
        let ico = generate(&Family::Icosahedron).unwrap();
        assert!(ico.faces().iter().all(|f| f.degree() == 3));
        assert_eq!(ico.faces().len(), 20);
        let cube = generate(&Family::Cube).unwrap();
        assert_eq!(cube.faces().len(), 6);
    }

    #[test]
    fn torus_hub_reaches_requested_degree() {
        let e = generate(&Family::TorusHub {
            rows: 4,
            cols: 4,
            hub_degree: 21,
        })
        .unwrap();
        assert_eq!(e.graph.max_degree(), 21);
        check(&e, 0);
    }

    #[test]
    fn triangulations_respect_the_degree_cap_and_seed() {
        let fam = Family::RandomPlanarTriangulation {
            vertices: 40,
            max_degree: 8,
            seed: 3,
        };
        let a = generate(&fam).unwrap();
        let b = generate(&fam).unwrap();
        assert_eq!(a, b);
        assert!(a.graph.max_degree() <= 8);
        assert_eq!(a.graph.edge_count(), 3 * 40 - 6);
    }

    #[test]
    fn bad_parameters_are_usage_errors() {
        assert!(matches!(
            Family::parse("moebius", &[3], 0),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            Family::parse("star", &[], 0),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            generate(&Family::TorusGrid(2, 5)),
            Err(Error::Usage(_))
        ));
        assert!(matches!(generate(&Family::Cycle(2)), Err(Error::Usage(_))));
    }
}
