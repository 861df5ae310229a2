//! Pasting: the symmetric difference of two circuits meeting in exactly one
//! element.

use super::{circuits_of, mask_of};
use crate::error::Result;
use crate::matroid::CircuitMatroid;
use crate::set::ElementSet;

fn pastes(a: ElementSet, b: ElementSet) -> Option<ElementSet> {
    (a.intersection(b).len() == 1).then(|| a.symmetric_difference(b))
}

/// Unordered circuit pairs that paste to `c`, in canonical pair order.
pub fn pasting_pairs(m: &CircuitMatroid, c: ElementSet) -> Result<Vec<(ElementSet, ElementSet)>> {
    m.require_circuit(c)?;
    let cs = m.circuits();
    let mut out = Vec::new();
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            if pastes(cs[i], cs[j]) == Some(c) {
                out.push((cs[i], cs[j]));
            }
        }
    }
    Ok(out)
}

/// Circuits that are not a pasting of two circuits. Always a tropical
/// basis of a simple matroid, though not necessarily a minimal one.
pub fn nonpasting_set(m: &CircuitMatroid) -> Result<Vec<ElementSet>> {
    m.require_simple()?;
    let cs = m.circuits();
    let mut pasted = vec![false; cs.len()];
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            if let Some(idx) = pastes(cs[i], cs[j]).and_then(|d| m.circuit_index(d)) {
                pasted[idx] = true;
            }
        }
    }
    Ok(cs
        .iter()
        .zip(pasted)
        .filter(|(_, p)| !p)
        .map(|(&c, _)| c)
        .collect())
}

/// Least superset of `seed` closed under pasting within the circuit set.
/// Reaching every circuit certifies that `seed` is a tropical basis.
pub fn pasting_closure(m: &CircuitMatroid, seed: &[ElementSet]) -> Result<Vec<ElementSet>> {
    let mut mask = mask_of(m, seed)?;
    let cs = m.circuits();
    loop {
        let current: Vec<usize> = mask.iter().collect();
        let mut grew = false;
        for (a, &i) in current.iter().enumerate() {
            for &j in &current[a + 1..] {
                if let Some(idx) = pastes(cs[i], cs[j]).and_then(|d| m.circuit_index(d)) {
                    if !mask.contains(idx) {
                        mask.insert(idx);
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return Ok(circuits_of(m, &mask));
        }
    }
}
