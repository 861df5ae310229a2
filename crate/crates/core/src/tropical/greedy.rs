use std::collections::HashSet;

use super::{compute_bm, hitting_instance, mask_of, BmResult, CircuitMask};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matroid::CircuitMatroid;
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTrace {
    /// The order in which circuits were offered for removal.
    pub order: Vec<ElementSet>,
    /// The resulting minimal tropical basis, canonical order.
    pub kept: Vec<ElementSet>,
    /// Circuits actually removed, in removal order.
    pub removed: Vec<ElementSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquenessReport {
    pub unique: bool,
    pub bm: BmResult,
    pub trace: GreedyTrace,
}

fn check_permutation(m: &CircuitMatroid, order: &[ElementSet]) -> Result<()> {
    if order.len() != m.circuit_count() {
        return Err(Error::BadPermutation {
            reason: format!("{} entries for {} circuits", order.len(), m.circuit_count()),
        });
    }
    let mut seen = HashSet::new();
    for &c in order {
        if !m.is_circuit(c) {
            return Err(Error::BadPermutation {
                reason: format!("{c} is not a circuit"),
            });
        }
        if !seen.insert(c) {
            return Err(Error::BadPermutation {
                reason: format!("{c} appears twice"),
            });
        }
    }
    Ok(())
}

/// Starts from all circuits and drops each one in `order` whenever the rest
/// is still a tropical basis. The survivors form a minimal tropical basis.
pub fn greedy_minimal_basis(
    m: &CircuitMatroid,
    order: &[ElementSet],
    limits: &Limits,
) -> Result<GreedyTrace> {
    m.require_simple()?;
    check_permutation(m, order)?;
    let instance = hitting_instance(m, limits)?;

    let mut current = CircuitMask::full(m.circuit_count());
    let mut removed = Vec::new();
    for &c in order {
        let i = m.circuit_index(c).expect("checked above");
        current.remove(i);
        if instance.is_hit_by(&current) {
            removed.push(c);
        } else {
            current.insert(i);
        }
    }
    Ok(GreedyTrace {
        order: order.to_vec(),
        kept: super::circuits_of(m, &current),
        removed,
    })
}

/// Runs the greedy pass in canonical order and compares the result with
/// `B_M`: equal iff the minimal tropical basis is unique.
pub fn has_unique_minimal_basis(m: &CircuitMatroid, limits: &Limits) -> Result<UniquenessReport> {
    let bm = compute_bm(m, limits)?;
    let trace = greedy_minimal_basis(m, m.circuits(), limits)?;
    let unique = mask_of(m, &trace.kept)? == mask_of(m, &bm.circuits())?;
    Ok(UniquenessReport { unique, bm, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{catalog, uniform, CatalogName};
    use crate::tropical::is_tropical_basis;

    #[test]
    fn fano_keeps_the_lines() {
        let fano = catalog(CatalogName::Fano).unwrap();
        let t = greedy_minimal_basis(&fano, fano.circuits(), &Limits::default()).unwrap();
        let lines: Vec<ElementSet> = fano.circuits()[..7].to_vec();
        assert_eq!(t.kept, lines);
        assert_eq!(t.removed, fano.circuits()[7..].to_vec());
    }

    #[test]
    fn u24_canonical_order_keeps_b4() {
        let u = uniform(2, 4).unwrap();
        let t = greedy_minimal_basis(&u, u.circuits(), &Limits::default()).unwrap();
        assert_eq!(t.kept, vec![[1, 2, 4], [1, 3, 4], [2, 3, 4]].into_iter().map(ElementSet::from).collect::<Vec<_>>());
        assert_eq!(t.removed, vec![ElementSet::from([1, 2, 3])]);
    }

    #[test]
    fn single_circuit_is_kept() {
        let m = uniform(4, 5).unwrap();
        let t = greedy_minimal_basis(&m, m.circuits(), &Limits::default()).unwrap();
        assert_eq!(t.kept, m.circuits());
    }

    #[test]
    fn bad_permutations() {
        let u = uniform(2, 4).unwrap();
        let c = u.circuits();
        let l = Limits::default();
        assert!(matches!(greedy_minimal_basis(&u, &c[..3], &l), Err(Error::BadPermutation { .. })));
        let dup = [c[0], c[0], c[1], c[2]];
        assert!(matches!(greedy_minimal_basis(&u, &dup, &l), Err(Error::BadPermutation { .. })));
        let alien = [c[0], c[1], c[2], ElementSet::from([1, 2])];
        assert!(matches!(greedy_minimal_basis(&u, &alien, &l), Err(Error::BadPermutation { .. })));
    }

    #[test]
    fn greedy_decisions_match_direct_support_scan() {
        let l = Limits::default();
        for name in CatalogName::ALL {
            let m = catalog(name).unwrap();
            let mut order = m.circuits().to_vec();
            order.reverse();
            let t = greedy_minimal_basis(&m, &order, &l).unwrap();
            assert!(is_tropical_basis(&m, &t.kept, &l).unwrap().is_basis, "{name}");
            for (i, _) in t.kept.iter().enumerate() {
                let mut fewer = t.kept.clone();
                fewer.remove(i);
                assert!(!is_tropical_basis(&m, &fewer, &l).unwrap().is_basis, "{name}");
            }
        }
    }

    #[test]
    fn uniqueness_on_small_examples() {
        let l = Limits::default();
        assert!(has_unique_minimal_basis(&catalog(CatalogName::Fano).unwrap(), &l).unwrap().unique);
        assert!(!has_unique_minimal_basis(&catalog(CatalogName::NonFano).unwrap(), &l).unwrap().unique);
        assert!(!has_unique_minimal_basis(&uniform(2, 4).unwrap(), &l).unwrap().unique);
        assert!(has_unique_minimal_basis(&CircuitMatroid::free(3), &l).unwrap().unique);
    }
}
