//! Matroids given by their circuit family.

use crate::error::{Axiom, Error, Result};
use crate::set::{ElementSet, MAX_GROUND};

/// A matroid on `[n]` given by its circuits, kept in canonical order
/// (ascending size, then lexicographic) without duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CircuitMatroid {
    n: usize,
    circuits: Vec<ElementSet>,
}

/// Result of deleting and contracting disjoint sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorReport {
    pub delete_set: ElementSet,
    pub contract_set: ElementSet,
    pub result: CircuitMatroid,
}

/// Sorts into canonical order and drops duplicates.
pub fn canonicalize(sets: &mut Vec<ElementSet>) {
    sets.sort_by(|a, b| a.canonical_cmp(*b));
    sets.dedup();
}

/// Inclusion-minimal nonempty members of `sets`, canonical order.
pub fn minimal_nonempty(sets: impl IntoIterator<Item = ElementSet>) -> Vec<ElementSet> {
    let mut all: Vec<ElementSet> = sets.into_iter().filter(|s| !s.is_empty()).collect();
    canonicalize(&mut all);
    let mut out: Vec<ElementSet> = Vec::with_capacity(all.len());
    for s in all {
        // proper subsets are strictly smaller, hence already in `out`
        if !out.iter().any(|m| m.is_subset(s)) {
            out.push(s);
        }
    }
    out
}

/// Checks the three circuit axioms and returns the canonical matroid.
pub fn validate_circuits(n: usize, circuits: &[ElementSet]) -> Result<CircuitMatroid> {
    if n > MAX_GROUND {
        return Err(Error::LimitExceeded {
            what: "ground set size",
            value: n,
            limit: MAX_GROUND,
        });
    }
    let full = ElementSet::full(n);
    for c in circuits {
        if !c.is_subset(full) {
            let element = c.difference(full).min().unwrap_or(0);
            return Err(Error::OutOfRange { element, n });
        }
    }
    let mut cs = circuits.to_vec();
    canonicalize(&mut cs);

    if cs.first().is_some_and(|c| c.is_empty()) {
        return Err(Error::AxiomViolation {
            axiom: Axiom::NonEmpty,
            circuits: vec![ElementSet::EMPTY],
            detail: "the empty set is listed as a circuit".into(),
        });
    }

    for (j, &big) in cs.iter().enumerate() {
        if let Some(&small) = cs[..j].iter().find(|s| s.is_proper_subset(big)) {
            return Err(Error::AxiomViolation {
                axiom: Axiom::Incomparable,
                circuits: vec![small, big],
                detail: format!("{small} is a proper subset of {big}"),
            });
        }
    }

    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            let (a, b) = (cs[i], cs[j]);
            let shared = a.intersection(b);
            if shared.is_empty() {
                continue;
            }
            let union = a.union(b);
            let inside: Vec<ElementSet> = cs.iter().copied().filter(|c| c.is_subset(union)).collect();
            for e in shared.iter() {
                if !inside.iter().any(|c| !c.contains(e)) {
                    return Err(Error::AxiomViolation {
                        axiom: Axiom::Elimination,
                        circuits: vec![a, b],
                        detail: format!(
                            "no circuit inside ({a} ∪ {b}) minus {e}"
                        ),
                    });
                }
            }
        }
    }

    Ok(CircuitMatroid { n, circuits: cs })
}

impl CircuitMatroid {
    /// Same as [`validate_circuits`].
    pub fn new(n: usize, circuits: &[ElementSet]) -> Result<Self> {
        validate_circuits(n, circuits)
    }

    /// Wraps a circuit family already known to satisfy the axioms,
    /// canonicalizing it. Used for constructions (minors, duals, linear
    /// matroids) that are matroids by theory.
    pub(crate) fn from_trusted(n: usize, mut circuits: Vec<ElementSet>) -> Self {
        debug_assert!(n <= MAX_GROUND);
        canonicalize(&mut circuits);
        CircuitMatroid { n, circuits }
    }

    /// The free matroid on `[n]`.
    pub fn free(n: usize) -> Self {
        CircuitMatroid { n, circuits: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn circuits(&self) -> &[ElementSet] {
        &self.circuits
    }

    pub fn circuit_count(&self) -> usize {
        self.circuits.len()
    }

    /// Position of `set` in the canonical circuit list.
    pub fn circuit_index(&self, set: ElementSet) -> Option<usize> {
        self.circuits
            .binary_search_by(|c| c.canonical_cmp(set))
            .ok()
    }

    pub fn is_circuit(&self, set: ElementSet) -> bool {
        self.circuit_index(set).is_some()
    }

    pub(crate) fn require_circuit(&self, set: ElementSet) -> Result<usize> {
        self.circuit_index(set).ok_or(Error::NotACircuit { set })
    }

    pub fn is_simple(&self) -> bool {
        self.circuits.iter().all(|c| c.len() >= 3)
    }

    pub(crate) fn require_simple(&self) -> Result<()> {
        match self.circuits.iter().find(|c| c.len() < 3) {
            Some(&circuit) => Err(Error::NotSimple { circuit }),
            None => Ok(()),
        }
    }

    fn check_subset(&self, t: ElementSet) -> Result<()> {
        let outside = t.difference(self.ground());
        match outside.min() {
            Some(element) => Err(Error::OutOfRange { element, n: self.n }),
            None => Ok(()),
        }
    }

    /// Restricts circuits to the complement of `removed` and relabels the
    /// survivors to `1..=m`. Returns the new-to-old label map.
    fn relabel(&self, removed: ElementSet, circuits: Vec<ElementSet>) -> (CircuitMatroid, Vec<usize>) {
        let kept = self.ground().difference(removed);
        let cs = circuits.into_iter().map(|c| c.compress(kept)).collect();
        (CircuitMatroid::from_trusted(kept.len(), cs), kept.to_vec())
    }

    /// `M \ T`, with the map from new labels to old labels.
    pub fn delete_mapped(&self, t: ElementSet) -> Result<(CircuitMatroid, Vec<usize>)> {
        self.check_subset(t)?;
        let cs = self
            .circuits
            .iter()
            .copied()
            .filter(|c| c.is_disjoint(t))
            .collect();
        Ok(self.relabel(t, cs))
    }

    pub fn delete(&self, t: ElementSet) -> Result<CircuitMatroid> {
        self.delete_mapped(t).map(|(m, _)| m)
    }

    /// `M / T`, with the map from new labels to old labels.
    pub fn contract_mapped(&self, t: ElementSet) -> Result<(CircuitMatroid, Vec<usize>)> {
        self.check_subset(t)?;
        let cs = minimal_nonempty(self.circuits.iter().map(|c| c.difference(t)));
        Ok(self.relabel(t, cs))
    }

    pub fn contract(&self, t: ElementSet) -> Result<CircuitMatroid> {
        self.contract_mapped(t).map(|(m, _)| m)
    }

    /// `M \ D / K` for disjoint `D` and `K`, labels relabeled to `1..=m`.
    pub fn minor(&self, delete_set: ElementSet, contract_set: ElementSet) -> Result<MinorReport> {
        self.check_subset(delete_set)?;
        self.check_subset(contract_set)?;
        if !delete_set.is_disjoint(contract_set) {
            return Err(Error::InvalidParams(format!(
                "delete set {delete_set} and contract set {contract_set} overlap"
            )));
        }
        let cs = minimal_nonempty(
            self.circuits
                .iter()
                .filter(|c| c.is_disjoint(delete_set))
                .map(|c| c.difference(contract_set)),
        );
        let (result, _) = self.relabel(delete_set.union(contract_set), cs);
        Ok(MinorReport {
            delete_set,
            contract_set,
            result,
        })
    }

    /// Removes loops and all but the lowest-labelled element of each
    /// parallel class. Returns the simple matroid and the new-to-old map.
    pub fn simplify(&self) -> (CircuitMatroid, Vec<usize>) {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut x = x;
            while parent[x] != r {
                let next = parent[x];
                parent[x] = r;
                x = next;
            }
            r
        }

        let mut removed = ElementSet::EMPTY;
        for c in &self.circuits {
            match c.len() {
                1 => removed = removed.union(*c),
                2 => {
                    let mut it = c.iter();
                    let (a, b) = (it.next().unwrap(), it.next().unwrap());
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    // the root is always the smallest label of its class
                    if ra != rb {
                        parent[ra.max(rb)] = ra.min(rb);
                    }
                }
                _ => {}
            }
        }
        for e in 1..=self.n {
            if find(&mut parent, e) != e {
                removed.insert(e);
            }
        }
        self.delete_mapped(removed)
            .expect("simplification removes elements of the ground set")
    }

    /// `Some((d, n))` when the circuits are exactly the `(d+1)`-subsets of `[n]`.
    pub fn is_uniform(&self) -> Option<(usize, usize)> {
        let n = self.n;
        if self.circuits.is_empty() {
            return Some((n, n));
        }
        let k = self.circuits[0].len();
        if self.circuits.iter().any(|c| c.len() != k) {
            return None;
        }
        let expected = binomial(n, k);
        (self.circuits.len() as u128 == expected).then(|| (k - 1, n))
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
