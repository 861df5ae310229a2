//! Rank, bases and the dual matroid by exhaustive subset enumeration.

use rayon::prelude::*;

use crate::limits::Limits;
use crate::error::Result;
use crate::matroid::{canonicalize, CircuitMatroid};
use crate::set::ElementSet;

/// `dependent[S]` for every `S ⊆ [n]`: true iff `S` contains a circuit.
fn dependence_table(m: &CircuitMatroid) -> Vec<bool> {
    let size = 1usize << m.n();
    let mut dep = vec![false; size];
    for c in m.circuits() {
        dep[c.bits() as usize] = true;
    }
    // containing a circuit is inherited by supersets; visiting masks in
    // increasing order sees every `S - e` before `S`
    for s in 1..size {
        if dep[s] {
            continue;
        }
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if dep[s ^ bit] {
                dep[s] = true;
                break;
            }
            rest ^= bit;
        }
    }
    dep
}

/// Rank and the full list of bases, in canonical order.
pub fn rank_and_bases(m: &CircuitMatroid, limits: &Limits) -> Result<(usize, Vec<ElementSet>)> {
    limits.check_enum(m.n())?;
    let dep = dependence_table(m);
    let rank = (0..dep.len())
        .filter(|&s| !dep[s])
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0);
    let mut bases: Vec<ElementSet> = (0..dep.len())
        .filter(|&s| !dep[s] && s.count_ones() as usize == rank)
        .map(|s| ElementSet::from_bits(s as u64))
        .collect();
    canonicalize(&mut bases);
    Ok((rank, bases))
}

/// The dual matroid: its circuits are the inclusion-minimal nonempty sets
/// meeting every basis.
///
/// A set meets every basis exactly when its complement spans nothing of
/// full rank, so the search runs over complements of non-spanning sets.
pub fn dual(m: &CircuitMatroid, limits: &Limits) -> Result<CircuitMatroid> {
    let n = m.n();
    limits.check_enum(n)?;
    let dep = dependence_table(m);
    let size = dep.len();
    let rank = (0..size)
        .filter(|&s| !dep[s])
        .map(|s| s.count_ones())
        .max()
        .unwrap_or(0);

    let mut spanning = vec![false; size];
    for s in 0..size {
        if !dep[s] && s.count_ones() == rank {
            spanning[s] = true;
        }
    }
    for s in 1..size {
        if spanning[s] {
            continue;
        }
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if spanning[s ^ bit] {
                spanning[s] = true;
                break;
            }
            rest ^= bit;
        }
    }

    let full = size - 1;
    let hits_every_basis = |x: usize| !spanning[full ^ x];
    let cocircuits: Vec<ElementSet> = (1..size)
        .into_par_iter()
        .filter(|&x| {
            if !hits_every_basis(x) {
                return false;
            }
            let mut rest = x;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if hits_every_basis(x ^ bit) {
                    return false;
                }
                rest ^= bit;
            }
            true
        })
        .map(|x| ElementSet::from_bits(x as u64))
        .collect();
    Ok(CircuitMatroid::from_trusted(n, cocircuits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{catalog, cycle_matroid, uniform, CatalogName, Graph};
    use crate::matroid::minimal_nonempty;
    use crate::set::k_subsets;

    #[test]
    fn uniform_rank_and_bases() {
        let (r, b) = rank_and_bases(&uniform(2, 4).unwrap(), &Limits::default()).unwrap();
        assert_eq!(r, 2);
        let mut expected = k_subsets(4, 2);
        canonicalize(&mut expected);
        assert_eq!(b, expected);
    }

    #[test]
    fn fano_has_28_bases() {
        let (r, b) = rank_and_bases(&catalog(CatalogName::Fano).unwrap(), &Limits::default()).unwrap();
        assert_eq!((r, b.len()), (3, 28));
    }

    #[test]
    fn free_matroid_has_one_basis() {
        let (r, b) = rank_and_bases(&CircuitMatroid::free(5), &Limits::default()).unwrap();
        assert_eq!(r, 5);
        assert_eq!(b, vec![ElementSet::full(5)]);
    }

    /// Minimal transversals of the basis family, straight from the definition.
    fn transversal_oracle(n: usize, bases: &[ElementSet]) -> Vec<ElementSet> {
        let hitting = (1u64..1 << n)
            .map(ElementSet::from_bits)
            .filter(|x| bases.iter().all(|b| !b.is_disjoint(*x)));
        minimal_nonempty(hitting)
    }

    #[test]
    fn dual_matches_transversal_oracle() {
        let l = Limits::default();
        for name in CatalogName::ALL {
            let m = catalog(name).unwrap();
            if m.n() > 10 {
                continue;
            }
            let (_, bases) = rank_and_bases(&m, &l).unwrap();
            let d = dual(&m, &l).unwrap();
            assert_eq!(d.circuits(), &transversal_oracle(m.n(), &bases)[..], "{name:?}");
        }
    }

    #[test]
    fn u24_is_self_dual() {
        let u = uniform(2, 4).unwrap();
        assert_eq!(dual(&u, &Limits::default()).unwrap(), u);
    }

    #[test]
    fn k4_cocircuits_are_its_bonds() {
        let k4 = cycle_matroid(&Graph::complete(4), &Limits::default()).unwrap();
        let d = dual(&k4, &Limits::default()).unwrap();
        // edges 12,13,14,23,24,34 -> 1..6
        let stars = [[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]];
        let splits = [[2, 3, 4, 5], [1, 3, 4, 6], [1, 2, 5, 6]];
        assert_eq!(d.circuit_count(), 7);
        for s in stars {
            assert!(d.is_circuit(ElementSet::from(s)), "{s:?}");
        }
        for s in splits {
            assert!(d.is_circuit(ElementSet::from(s)), "{s:?}");
        }
    }

    #[test]
    fn dual_is_an_involution_on_the_catalog() {
        let l = Limits::default();
        for name in CatalogName::ALL {
            let m = catalog(name).unwrap();
            assert_eq!(dual(&dual(&m, &l).unwrap(), &l).unwrap(), m, "{name:?}");
        }
    }

    #[test]
    fn caps_apply() {
        let m = CircuitMatroid::free(23);
        assert!(rank_and_bases(&m, &Limits::default()).is_err());
        assert!(dual(&m, &Limits::default()).is_err());
    }
}
