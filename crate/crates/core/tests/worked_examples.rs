use tropbasis_core::tropical::{
    compute_bm, enumerate_minimal_bases, has_unique_minimal_basis, is_tropical_basis, nonpasting_set,
};
use tropbasis_core::{catalog, uniform, CatalogName, CircuitMatroid, ElementSet, Limits};

/// Every minimal tropical basis, found by testing every subset of the
/// circuits against every 0/1 support. Circuit subsets are `u32` masks, so
/// this only handles matroids with at most 24 circuits.
fn brute_force_minimal_bases(m: &CircuitMatroid) -> Vec<Vec<ElementSet>> {
    let cs = m.circuits();
    let k = cs.len();
    assert!(k <= 24);
    let separators: Vec<u32> = (0u64..1 << m.n())
        .map(|s| {
            cs.iter().enumerate().fold(0u32, |acc, (i, c)| {
                if (c.bits() & s).count_ones() == 1 {
                    acc | 1 << i
                } else {
                    acc
                }
            })
        })
        .filter(|&h| h != 0)
        .collect();
    let is_basis = |b: u32| separators.iter().all(|&h| h & b != 0);
    let mut out: Vec<u32> = (0u32..1 << k)
        .filter(|&b| is_basis(b) && (0..k).all(|i| b >> i & 1 == 0 || !is_basis(b & !(1 << i))))
        .collect();
    out.sort_by_key(|b| (b.count_ones(), (0..k).filter(|i| b >> i & 1 == 1).collect::<Vec<_>>()));
    out.iter()
        .map(|b| (0..k).filter(|i| b >> i & 1 == 1).map(|i| cs[i]).collect())
        .collect()
}

fn lines(m: &CircuitMatroid) -> Vec<ElementSet> {
    m.circuits().iter().copied().filter(|c| c.len() == 3).collect()
}

fn set(items: &[usize]) -> ElementSet {
    items.iter().copied().collect()
}

#[test]
fn enumeration_matches_brute_force_on_catalog() {
    let l = Limits::default();
    for name in [
        CatalogName::Fano,
        CatalogName::NonFano,
        CatalogName::P7,
        CatalogName::R6,
        CatalogName::U24,
        CatalogName::K4Graphic,
    ] {
        let m = catalog(name).unwrap();
        assert_eq!(enumerate_minimal_bases(&m, &l).unwrap(), brute_force_minimal_bases(&m), "{name}");
    }
    for (d, n) in [(2, 5), (3, 5), (2, 6)] {
        let m = uniform(d, n).unwrap();
        assert_eq!(enumerate_minimal_bases(&m, &l).unwrap(), brute_force_minimal_bases(&m), "U_{d},{n}");
    }
}

#[test]
fn fano_unique_basis_is_the_lines() {
    let l = Limits::default();
    let fano = catalog(CatalogName::Fano).unwrap();
    assert_eq!(compute_bm(&fano, &l).unwrap().circuits(), lines(&fano));
    assert!(is_tropical_basis(&fano, &lines(&fano), &l).unwrap().is_basis);
    assert_eq!(enumerate_minimal_bases(&fano, &l).unwrap(), vec![lines(&fano)]);
    let six = &lines(&fano)[..6];
    assert!(!is_tropical_basis(&fano, six, &l).unwrap().is_basis);
}

#[test]
fn nonfano_bases_add_one_special_circuit() {
    let l = Limits::default();
    let nf = catalog(CatalogName::NonFano).unwrap();
    let six = lines(&nf);
    let check = is_tropical_basis(&nf, &six, &l).unwrap();
    assert!(!check.is_basis);
    assert!(check.witness.is_some());
    assert_eq!(compute_bm(&nf, &l).unwrap().circuits(), six);

    let expected: Vec<Vec<ElementSet>> = [[1, 4, 5, 6], [2, 4, 5, 6], [3, 4, 5, 6], [4, 5, 6, 7]]
        .iter()
        .map(|extra| {
            let mut b = six.clone();
            b.push(set(extra));
            b
        })
        .collect();
    assert_eq!(enumerate_minimal_bases(&nf, &l).unwrap(), expected);
    assert_eq!(brute_force_minimal_bases(&nf), expected);
}

#[test]
fn u24_bm_is_empty() {
    let l = Limits::default();
    let u = uniform(2, 4).unwrap();
    assert!(compute_bm(&u, &l).unwrap().members.is_empty());
}

#[test]
fn bm_witnesses_certify_membership() {
    let l = Limits::default();
    for name in CatalogName::ALL {
        let m = catalog(name).unwrap();
        for member in compute_bm(&m, &l).unwrap().members {
            let ones = member.witness.ones;
            assert_eq!(member.circuit.intersection(ones).len(), 1);
            for &other in m.circuits() {
                if other != member.circuit {
                    assert_ne!(other.intersection(ones).len(), 1, "{name}");
                }
            }
        }
    }
}

#[test]
fn p7_unique_r6_not() {
    let l = Limits::default();
    let p7 = catalog(CatalogName::P7).unwrap();
    let r6 = catalog(CatalogName::R6).unwrap();
    assert!(has_unique_minimal_basis(&p7, &l).unwrap().unique);
    assert!(!has_unique_minimal_basis(&r6, &l).unwrap().unique);
    assert_eq!(brute_force_minimal_bases(&p7).len(), 1);
    assert!(brute_force_minimal_bases(&r6).len() > 1);
}

#[test]
fn nonpasting_set_can_be_larger_than_every_minimal_basis() {
    let nf = catalog(CatalogName::NonFano).unwrap();
    let np = nonpasting_set(&nf).unwrap();
    assert_eq!(np.len(), 10);
    assert!(is_tropical_basis(&nf, &np, &Limits::default()).unwrap().is_basis);
}

#[test]
fn witness_is_lexicographically_least_violation() {
    let l = Limits::default();
    let nf = catalog(CatalogName::NonFano).unwrap();
    let six = lines(&nf);
    let got = is_tropical_basis(&nf, &six, &l).unwrap().witness.unwrap().ones;
    let mut violators: Vec<ElementSet> = (0u64..1 << 7)
        .map(ElementSet::from_bits)
        .filter(|s| {
            !six.iter().any(|c| c.intersection(*s).len() == 1)
                && nf.circuits().iter().any(|c| c.intersection(*s).len() == 1)
        })
        .collect();
    violators.sort_by_key(|s| s.to_vec());
    assert_eq!(got, violators[0]);
}

#[test]
fn tropical_decisions_require_simple_matroids() {
    let l = Limits::default();
    let m = uniform(1, 3).unwrap();
    assert!(compute_bm(&m, &l).is_err());
    assert!(is_tropical_basis(&m, &[], &l).is_err());
    assert!(nonpasting_set(&m).is_err());
}
