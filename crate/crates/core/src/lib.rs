//! Domination polynomials of small simple graphs and the average size of a
//! dominating set, with exhaustive verifiers for the identities and bounds
//! that govern it.
//!
//! Graphs are bitset adjacency lists of order at most 62. All averages are
//! exact rationals; floating point appears only in the asymptotic constants.

pub mod bounds;
pub mod cli;

pub mod dompoly;
pub mod domstruct;
pub mod experiments;
pub mod error;

pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod recurrence;

pub use dompoly::{avd, domination_polynomial, navd, Cap, DomPolynomial, Rational};
pub use error::{Error, Result};
pub use graph::{Family, Graph, VertexSet};
pub use graph6::{from_graph6, to_graph6};
