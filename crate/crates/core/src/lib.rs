//! Matroids given by circuits, their minors and binarity, and decisions
//! about tropical bases of their Bergman fans.
//!
//! Elements are labelled `1..=n`. Every circuit family is kept in canonical
//! order (by size, then lexicographically), and every search that returns a
//! witness returns the canonical one, so results do not depend on how many
//! threads rayon uses.

pub mod binary;
pub mod constructors;
pub mod error;
pub mod limits;
pub mod matroid;
pub mod rank;
pub mod set;
pub mod tropical;

pub use binary::{has_u24_minor, is_binary, symdiff_counterexample, symdiff_decompose, BinaryMethod};
pub use constructors::{
    catalog, cycle_matroid, gf2_matroid, induced_cycles, splitting_edge_cuts, uniform, CatalogName,
    Gf2Matrix, Graph,
};
pub use error::{Axiom, Error, Result};
pub use limits::Limits;
pub use matroid::{validate_circuits, CircuitMatroid, MinorReport};
pub use rank::{dual, rank_and_bases};
pub use set::ElementSet;
