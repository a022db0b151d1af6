//! Zero-divisor graphs of Z_n, their joins and Cartesian products, and
//! distance antimagic labelings on them.
//!
//! The crate builds the graphs ([`rings`], [`ops`]), evaluates labelings
//! ([`labeling`]), reproduces the published constructions for each theorem
//! family ([`constructions`]), and settles small instances independently
//! with an exhaustive search ([`search`]). [`expr`] parses the compact
//! expression language used by the command-line tool.

pub mod constructions;
pub mod error;
pub mod expr;
pub mod graph;
pub mod labeling;
pub mod ops;
pub mod rings;
pub mod search;
pub mod suite;

pub use error::{Error, Result};
pub use graph::{Graph, TwinPair};
pub use labeling::{Labeling, WeightProfile};
