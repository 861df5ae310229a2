use rayon::prelude::*;

use super::{lex_min, mask_of, support_chunks, CircuitMask, Support};
use crate::error::Result;
use crate::limits::Limits;
use crate::matroid::CircuitMatroid;
use crate::set::ElementSet;

/// Outcome of a tropical-basis test. `witness` is present iff the family is
/// not a basis: some circuit separates it, no member of the family does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisCheck {
    pub is_basis: bool,
    pub witness: Option<Support>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BmMember {
    pub circuit: ElementSet,
    /// Separated by `circuit` and by no other circuit.
    pub witness: Support,
}

/// The intersection of all tropical bases, with one certificate per member.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BmResult {
    pub members: Vec<BmMember>,
}

impl BmResult {
    pub fn circuits(&self) -> Vec<ElementSet> {
        self.members.iter().map(|m| m.circuit).collect()
    }
}

fn separates(c: ElementSet, s: ElementSet) -> bool {
    c.intersection(s).len() == 1
}

/// Decides `V(family) = V(𝒞)` on 0/1 points. On failure the witness is the
/// lexicographically least violating support.
pub fn is_tropical_basis(
    m: &CircuitMatroid,
    family: &[ElementSet],
    limits: &Limits,
) -> Result<BasisCheck> {
    m.require_simple()?;
    let chosen = mask_of(m, family)?;
    limits.check_support(m.n())?;

    let circuits = m.circuits();
    let pick = |want: bool| -> Vec<ElementSet> {
        circuits
            .iter()
            .enumerate()
            .filter(|(i, _)| chosen.contains(*i) == want)
            .map(|(_, &c)| c)
            .collect()
    };
    let (inside, outside) = (pick(true), pick(false));

    let witness = support_chunks(m.n())
        .map(|range| {
            let mut best = None;
            for bits in range {
                let s = ElementSet::from_bits(bits);
                if inside.iter().any(|&c| separates(c, s)) {
                    continue;
                }
                if outside.iter().any(|&c| separates(c, s)) {
                    best = lex_min(best, Some(s));
                }
            }
            best
        })
        .reduce(|| None, lex_min);

    Ok(BasisCheck {
        is_basis: witness.is_none(),
        witness: witness.map(Support::new),
    })
}

/// `C ∈ B_M` iff some support is separated by `C` and by no other circuit.
pub fn compute_bm(m: &CircuitMatroid, limits: &Limits) -> Result<BmResult> {
    m.require_simple()?;
    limits.check_support(m.n())?;
    let circuits = m.circuits();
    let k = circuits.len();

    let witnesses = support_chunks(m.n())
        .map(|range| {
            let mut best: Vec<Option<ElementSet>> = vec![None; k];
            for bits in range {
                let s = ElementSet::from_bits(bits);
                let mut hit = None;
                let mut twice = false;
                for (i, &c) in circuits.iter().enumerate() {
                    if separates(c, s) {
                        if hit.is_some() {
                            twice = true;
                            break;
                        }
                        hit = Some(i);
                    }
                }
                if let (Some(i), false) = (hit, twice) {
                    best[i] = lex_min(best[i], Some(s));
                }
            }
            best
        })
        .reduce(
            || vec![None; k],
            |a, b| a.into_iter().zip(b).map(|(x, y)| lex_min(x, y)).collect(),
        );

    let members = circuits
        .iter()
        .zip(witnesses)
        .filter_map(|(&circuit, w)| {
            w.map(|ones| BmMember {
                circuit,
                witness: Support::new(ones),
            })
        })
        .collect();
    Ok(BmResult { members })
}

/// Mask of every circuit separating `s`.
pub(super) fn separating_mask(circuits: &[ElementSet], s: ElementSet) -> CircuitMask {
    let mut mask = CircuitMask::empty(circuits.len());
    for (i, &c) in circuits.iter().enumerate() {
        if separates(c, s) {
            mask.insert(i);
        }
    }
    mask
}
