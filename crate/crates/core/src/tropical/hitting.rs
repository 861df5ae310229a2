//! Tropical bases as hitting sets.
//!
//! Every support `S` separated by some circuit forces any tropical basis to
//! contain a member of `H_S = {C : |C ∩ S| = 1}`, and a family meeting every
//! `H_S` is a basis. Minimal tropical bases are therefore exactly the
//! minimal transversals of the inclusion-minimal `H_S`.

use std::collections::HashSet;

use rayon::prelude::*;

use super::basis::separating_mask;
use super::{circuits_of, support_chunks, CircuitMask};
use crate::error::Result;
use crate::limits::Limits;
use crate::matroid::CircuitMatroid;
use crate::set::ElementSet;

/// Inclusion-minimal, deduplicated separator families in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingInstance {
    pub circuit_count: usize,
    pub families: Vec<CircuitMask>,
}

impl HittingInstance {
    /// Whether `chosen` meets every family.
    pub fn is_hit_by(&self, chosen: &CircuitMask) -> bool {
        self.families.iter().all(|f| f.intersects(chosen))
    }
}

pub fn hitting_instance(m: &CircuitMatroid, limits: &Limits) -> Result<HittingInstance> {
    m.require_simple()?;
    limits.check_support(m.n())?;
    let circuits = m.circuits();
    let distinct = support_chunks(m.n())
        .map(|range| {
            let mut seen = HashSet::new();
            for bits in range {
                let h = separating_mask(circuits, ElementSet::from_bits(bits));
                if !h.is_empty() {
                    seen.insert(h);
                }
            }
            seen
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });

    let mut all: Vec<CircuitMask> = distinct.into_iter().collect();
    all.sort_by(|a, b| a.canonical_cmp(b));
    let mut families: Vec<CircuitMask> = Vec::with_capacity(all.len());
    for f in all {
        if !families.iter().any(|g| g.is_subset(&f)) {
            families.push(f);
        }
    }
    Ok(HittingInstance {
        circuit_count: circuits.len(),
        families,
    })
}

struct Search<'a> {
    families: &'a [CircuitMask],
    limits: &'a Limits,
    found: Vec<CircuitMask>,
}

impl Search<'_> {
    /// Every chosen circuit still meets some family alone. Adding circuits
    /// only removes such private families, so a failure here is final.
    fn all_critical(&self, chosen: &CircuitMask) -> bool {
        chosen.iter().all(|c| {
            self.families
                .iter()
                .any(|f| f.contains(c) && f.intersection_count(chosen) == 1)
        })
    }

    fn run(&mut self, chosen: &mut CircuitMask, forbidden: &mut CircuitMask) -> Result<()> {
        // unhit family with the fewest allowed candidates
        let mut pick: Option<(usize, &CircuitMask)> = None;
        for f in self.families.iter().filter(|f| !f.intersects(chosen)) {
            let free = f.count() - f.intersection_count(forbidden);
            if free == 0 {
                return Ok(());
            }
            if pick.is_none_or(|(best, _)| free < best) {
                pick = Some((free, f));
            }
        }
        let Some((_, family)) = pick else {
            self.found.push(chosen.clone());
            return self.limits.check_bases(self.found.len());
        };

        let candidates: Vec<usize> = family.iter().filter(|&c| !forbidden.contains(c)).collect();
        let mut newly_forbidden = Vec::new();
        for c in candidates {
            chosen.insert(c);
            if self.all_critical(chosen) {
                self.run(chosen, forbidden)?;
            }
            chosen.remove(c);
            // later branches exclude `c`; solutions containing it were
            // covered in this branch
            forbidden.insert(c);
            newly_forbidden.push(c);
        }
        for c in newly_forbidden {
            forbidden.remove(c);
        }
        Ok(())
    }
}

/// All minimal tropical bases, each as a canonical list of circuits; the
/// list of bases is sorted by size, then lexicographically by circuit
/// position.
pub fn enumerate_minimal_bases(m: &CircuitMatroid, limits: &Limits) -> Result<Vec<Vec<ElementSet>>> {
    let instance = hitting_instance(m, limits)?;
    let k = instance.circuit_count;
    let mut search = Search {
        families: &instance.families,
        limits,
        found: Vec::new(),
    };
    search.run(&mut CircuitMask::empty(k), &mut CircuitMask::empty(k))?;
    let mut found = search.found;
    found.sort_by(|a, b| a.canonical_cmp(b));
    Ok(found.iter().map(|mask| circuits_of(m, mask)).collect())
}
