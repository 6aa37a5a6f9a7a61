//! Exhaustive probe of small connected graphs for `C > λ + 1` and for
//! violations of `C ≤ Δ + 2d`.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use serde_json::{json, Value};

use dlab_core::choosability::choosability_exact;
use dlab_core::enumerate::connected_graphs_up_to;
use dlab_core::search::lambda_exact;
use dlab_core::{Budget, Error, Graph};

use crate::error::{CliError, CliResult};
use crate::io::graph_json;

pub const MAX_HUNT_VERTICES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Done { lambda: u32, choosability: u32 },
    /// A solver ran out of budget; `lambda` is kept if it finished.
    Skipped { lambda: Option<u32>, limit: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub graph: Graph,
    pub outcome: Outcome,
}

impl Entry {
    /// `C − (λ + 1)`.
    pub fn gap(&self) -> Option<i64> {
        match self.outcome {
            Outcome::Done { lambda, choosability } => Some(choosability as i64 - lambda as i64 - 1),
            Outcome::Skipped { .. } => None,
        }
    }

    /// `C > Δ + 2d`.
    pub fn violates_bound(&self, d: u32) -> bool {
        match self.outcome {
            Outcome::Done { choosability, .. } => choosability as usize > self.graph.max_degree() + 2 * d as usize,
            Outcome::Skipped { .. } => false,
        }
    }
}

fn probe(g: &Graph, d: u32, limit: u64) -> CliResult<Outcome> {
    let skipped = |lambda| Ok(Outcome::Skipped { lambda, limit });
    let lambda = match lambda_exact(g, d, &mut Budget::new(limit)) {
        Ok((l, _)) => l,
        Err(Error::BudgetExceeded { .. }) => return skipped(None),
        Err(e) => return Err(e.into()),
    };
    match choosability_exact(g, d, &mut Budget::new(limit)) {
        Ok(c) => Ok(Outcome::Done { lambda, choosability: c }),
        Err(Error::BudgetExceeded { .. }) => skipped(Some(lambda)),
        Err(e) => Err(e.into()),
    }
}

/// Runs every connected graph on at most `max_vertices` vertices, one budget
/// of `limit` per solver call. Graphs are spread over worker threads; the
/// result keeps enumeration order.
pub fn hunt(max_vertices: usize, d: u32, limit: u64) -> CliResult<Vec<Entry>> {
    if max_vertices > MAX_HUNT_VERTICES {
        return Err(CliError::Usage(format!("hunt enumerates at most {MAX_HUNT_VERTICES} vertices")));
    }
    if d == 0 {
        return Err(CliError::Usage("d must be at least 1".into()));
    }
    let graphs = connected_graphs_up_to(max_vertices);
    let workers = thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(graphs.len().max(1));
    let next = AtomicUsize::new(0);
    let mut results: Vec<Option<CliResult<Outcome>>> = (0..graphs.len()).map(|_| None).collect();
    thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                s.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= graphs.len() {
                            break done;
                        }
                        done.push((i, probe(&graphs[i], d, limit)));
                    }
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("hunt worker panicked") {
                results[i] = Some(r);
            }
        }
    });
    graphs
        .into_iter()
        .zip(results)
        .map(|(graph, r)| Ok(Entry { graph, outcome: r.expect("every graph probed")? }))
        .collect()
}

pub fn entry_json(e: &Entry) -> Value {
    let mut v = json!({ "graph": graph_json(&e.graph, None), "max_degree": e.graph.max_degree() });
    match e.outcome {
        Outcome::Done { lambda, choosability } => {
            v["status"] = json!("ok");
            v["lambda"] = json!(lambda);
            v["choosability"] = json!(choosability);
            v["gap"] = json!(e.gap());
        }
        Outcome::Skipped { lambda, limit } => {
            v["status"] = json!("skipped");
            v["lambda"] = json!(lambda);
            v["budget"] = json!(limit);
        }
    }
    v
}
