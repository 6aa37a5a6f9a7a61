//! Core algorithms for (d,1)-total labellings of graphs and their list version.
//!
//! The crate is `no_std` (it needs `alloc`). It holds the graph and embedding
//! model, the labelling solvers, the reducible-configuration machinery used by
//! the constructive labeller, and the exact-rational discharging audit. File
//! formats, the CLI and anything touching IO live in the `dlab` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod budget;
pub mod embedding;
pub mod enumerate;
pub mod error;
pub mod generate;
pub mod graph;

pub mod choosability;
pub mod labelling;
pub mod search;

pub mod alternator;
pub mod extend;
pub mod galvin;
pub mod labeller;
pub mod masters;
pub mod reducible;

pub mod audit;
pub mod charges;
pub mod rational;
pub mod structure;
pub mod threshold;

pub use budget::Budget;
pub use embedding::{Dart, Embedded, Face, RotationSystem};
pub use error::{Error, Result};
pub use graph::{Element, Graph};
pub use labelling::{Color, Labelling, ListAssignment, Violation};
