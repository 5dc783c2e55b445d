//! Finite-ring module theory workbench: rings, modules, preradicals,
//! submodule products, co-first/second predicates and conatural classes,
//! all evaluated exhaustively over small module universes.

pub mod bitset;
pub mod cofirst;
pub mod conat;
pub mod config;
pub mod cover;
pub mod enumerate;
pub mod error;
pub mod hom;
pub mod module;
pub mod prerad;
pub mod products;
pub mod report;
pub mod ring;
pub mod snf;
pub mod suites;
pub mod universe;

pub use error::{Error, Result};
