//! Independent domination polynomials of simple graphs.
//!
//! The crate computes `D_i(G, x)`, the generating polynomial of independent
//! dominating sets (equivalently maximal independent sets) of a graph, by
//! exact enumeration, and provides:
//!
//! * graph constructors and the products that act predictably on `D_i`
//!   (join, lexicographic product, corona, clique-cover compound, expansion),
//! * exact integer polynomial arithmetic with shape checks and root analysis
//!   (Sturm certification, real root isolation, Aberth–Ehrlich complex roots),
//! * closed forms for paths, books, friendship graphs and related families,
//!   together with a harness comparing each closed form against enumeration.

pub mod enumeration;
mod error;
pub mod families;
pub mod graph;
pub mod parallel;
pub mod poly;

pub use error::{Error, Result};
pub use graph::{CliqueCover, FamilySpec, Graph};
pub use poly::{IntPoly, RootReport};
