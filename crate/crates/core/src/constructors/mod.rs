//! Ways to build matroids: uniform parameters, graphs, GF(2) matrices and
//! a fixed catalog of named examples.

mod catalog;
mod gf2;
mod graph;

pub use catalog::{catalog, CatalogName};
pub use gf2::{gf2_matroid, Gf2Matrix};
pub use graph::{cycle_matroid, induced_cycles, splitting_edge_cuts, Graph};

use crate::error::{Error, Result};
use crate::matroid::CircuitMatroid;
use crate::set::{k_subsets, MAX_GROUND};

/// `U_{d,n}`: every `(d+1)`-subset of `[n]` is a circuit.
pub fn uniform(d: usize, n: usize) -> Result<CircuitMatroid> {
    if d > n {
        return Err(Error::InvalidParams(format!("uniform matroid needs d <= n, got d={d}, n={n}")));
    }
    if n > MAX_GROUND {
        return Err(Error::LimitExceeded {
            what: "ground set size",
            value: n,
            limit: MAX_GROUND,
        });
    }
    Ok(CircuitMatroid::from_trusted(n, k_subsets(n, d + 1)))
}
