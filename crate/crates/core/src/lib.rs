//! Forcing and anti-forcing invariants of perfect matchings.
//!
//! The crate computes forcing numbers `f(G, M)`, anti-forcing numbers
//! `af(G, M)`, their spectra over all perfect matchings, maximum disjoint and
//! compatible alternating-cycle families, and, for hexagonal systems, Clar
//! and Fries numbers together with the structural recognizers needed to check
//! the relations between them on generated instance families.

pub mod antiforcing;
pub mod error;
pub mod exec;
pub mod forcing;
pub mod generators;
pub mod graph;
pub mod hexsys;
pub mod io;
pub mod report;
pub mod setsys;
pub mod verify;

pub use error::{Error, Result};
pub use exec::{Config, Exec, Limits};
pub use forcing::{EdgeWitness, Spectrum};
pub use hexsys::HexSystem;
pub use graph::{Color, EdgeId, Graph, Matching};

