//! Bergman fans and their tropical bases.
//!
//! Decisions run over 0/1 points: the indicator point of `S ⊆ [n]` lies
//! outside `V(C)` exactly when `|C ∩ S| = 1`. A subset `B` of the circuits
//! is a tropical basis iff every support separated by some circuit is also
//! separated by a member of `B`.

mod basis;
mod greedy;
mod hitting;
mod mask;
mod pasting;
mod point;

pub use basis::{compute_bm, is_tropical_basis, BasisCheck, BmMember, BmResult};
pub use greedy::{greedy_minimal_basis, has_unique_minimal_basis, GreedyTrace, UniquenessReport};
pub use hitting::{enumerate_minimal_bases, hitting_instance, HittingInstance};
pub use mask::CircuitMask;
pub use pasting::{nonpasting_set, pasting_closure, pasting_pairs};
pub use point::{point_in_hyperplane, support_separates, Coord, Support, TropicalPoint};

use std::ops::Range;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matroid::CircuitMatroid;
use crate::set::ElementSet;

const CHUNK_BITS: u32 = 10;

/// Splits `0..2^n` into ranges for parallel scanning. The split depends
/// only on `n`, never on the thread count.
fn support_chunks(n: usize) -> impl ParallelIterator<Item = Range<u64>> {
    let total = 1u64 << n;
    let chunk = 1u64 << CHUNK_BITS.min(n as u32);
    (0..total / chunk)
        .into_par_iter()
        .map(move |i| i * chunk..(i + 1) * chunk)
}

/// The lexicographically smaller of two optional supports.
fn lex_min(a: Option<ElementSet>, b: Option<ElementSet>) -> Option<ElementSet> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.lex_cmp(x).is_lt() { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Maps a family of circuits to a mask over `m`'s canonical circuit list.
pub(crate) fn mask_of(m: &CircuitMatroid, family: &[ElementSet]) -> Result<CircuitMask> {
    let mut mask = CircuitMask::empty(m.circuit_count());
    for &set in family {
        let i = m.circuit_index(set).ok_or(Error::NotASubset { set })?;
        mask.insert(i);
    }
    Ok(mask)
}

pub(crate) fn circuits_of(m: &CircuitMatroid, mask: &CircuitMask) -> Vec<ElementSet> {
    mask.iter().map(|i| m.circuits()[i]).collect()
}
