//! Two independent binarity tests: circuit symmetric differences splitting
//! into disjoint circuits, and absence of a U_{2,4} minor.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matroid::{minimal_nonempty, CircuitMatroid, MinorReport};
use crate::set::{k_subsets, ElementSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryMethod {
    SymDiff,
    Minor,
    CrossCheck,
}

/// Partitions `c1 △ c2` into pairwise-disjoint circuits, if possible.
///
/// Backtracks on the smallest uncovered element, trying circuits through it
/// in canonical order, so the returned partition is deterministic.
pub fn symdiff_decompose(
    m: &CircuitMatroid,
    c1: ElementSet,
    c2: ElementSet,
) -> Result<Option<Vec<ElementSet>>> {
    m.require_circuit(c1)?;
    m.require_circuit(c2)?;
    Ok(partition_into_circuits(m.circuits(), c1.symmetric_difference(c2)))
}

fn partition_into_circuits(circuits: &[ElementSet], target: ElementSet) -> Option<Vec<ElementSet>> {
    let inside: Vec<ElementSet> = circuits
        .iter()
        .copied()
        .filter(|c| c.is_subset(target))
        .collect();
    let mut chosen = Vec::new();
    cover(&inside, target, &mut chosen).then_some(chosen)
}

fn cover(inside: &[ElementSet], rest: ElementSet, chosen: &mut Vec<ElementSet>) -> bool {
    let Some(e) = rest.min() else {
        return true;
    };
    for &c in inside {
        if c.contains(e) && c.is_subset(rest) {
            chosen.push(c);
            if cover(inside, rest.difference(c), chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// First circuit pair (in canonical pair order) whose symmetric difference
/// is not a disjoint union of circuits.
pub fn symdiff_counterexample(m: &CircuitMatroid) -> Option<(ElementSet, ElementSet)> {
    let cs = m.circuits();
    (0..cs.len())
        .into_par_iter()
        .filter_map(|i| {
            cs[i + 1..]
                .iter()
                .find(|&&b| partition_into_circuits(cs, cs[i].symmetric_difference(b)).is_none())
                .map(|&b| (cs[i], b))
        })
        .min_by_key(|&(a, _)| m.circuit_index(a))
}

fn binary_by_symdiff(m: &CircuitMatroid) -> bool {
    symdiff_counterexample(m).is_none()
}

pub fn is_binary(m: &CircuitMatroid, method: BinaryMethod, limits: &Limits) -> Result<bool> {
    match method {
        BinaryMethod::SymDiff => Ok(binary_by_symdiff(m)),
        BinaryMethod::Minor => Ok(has_u24_minor(m, limits)?.is_none()),
        BinaryMethod::CrossCheck => {
            let symdiff = binary_by_symdiff(m);
            let minor = has_u24_minor(m, limits)?.is_none();
            if symdiff != minor {
                return Err(Error::MethodDisagreement { symdiff, minor });
            }
            Ok(symdiff)
        }
    }
}

fn pair_cmp(a: (ElementSet, ElementSet), b: (ElementSet, ElementSet)) -> Ordering {
    a.0.lex_cmp(b.0).then_with(|| a.1.lex_cmp(b.1))
}

/// Looks for deletion/contraction sets leaving a U_{2,4}.
///
/// Every split of `[n]` into a delete set, a contract set and four
/// survivors is examined; the reported pair is the lexicographically least
/// `(delete_set, contract_set)` among the hits.
pub fn has_u24_minor(m: &CircuitMatroid, limits: &Limits) -> Result<Option<MinorReport>> {
    let n = m.n();
    limits.check_minor(n)?;
    if n < 4 {
        return Ok(None);
    }
    let ground = m.ground();
    let circuits = m.circuits();
    let best = k_subsets(n, 4)
        .into_par_iter()
        .filter_map(|keep| {
            let others: Vec<usize> = ground.difference(keep).to_vec();
            let mut best: Option<(ElementSet, ElementSet)> = None;
            for mask in 0u64..1u64 << others.len() {
                let mut del = ElementSet::EMPTY;
                for (bit, &e) in others.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        del.insert(e);
                    }
                }
                let con = ground.difference(keep).difference(del);
                if is_u24_on(circuits, keep, del, con)
                    && best.is_none_or(|b| pair_cmp((del, con), b) == Ordering::Less)
                {
                    best = Some((del, con));
                }
            }
            best
        })
        .min_by(|a, b| pair_cmp(*a, *b));
    best.map(|(del, con)| m.minor(del, con)).transpose()
}

/// Whether `M \ del / con`, living on `keep`, has exactly the 3-subsets of
/// `keep` as circuits.
fn is_u24_on(circuits: &[ElementSet], keep: ElementSet, del: ElementSet, con: ElementSet) -> bool {
    let minor = minimal_nonempty(
        circuits
            .iter()
            .filter(|c| c.is_disjoint(del))
            .map(|c| c.difference(con)),
    );
    minor.len() == 4 && minor.iter().all(|c| c.len() == 3 && c.is_subset(keep))
}
