use thiserror::Error;

use crate::set::ElementSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which of the three circuit axioms an input broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// The empty set is listed as a circuit.
    NonEmpty,
    /// One circuit properly contains another.
    Incomparable,
    /// Circuit elimination fails for some pair and shared element.
    Elimination,
}

impl Axiom {
    pub fn number(self) -> u8 {
        match self {
            Axiom::NonEmpty => 1,
            Axiom::Incomparable => 2,
            Axiom::Elimination => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("circuit axiom ({}) violated by {circuits:?}: {detail}", axiom.number())]
    AxiomViolation {
        axiom: Axiom,
        circuits: Vec<ElementSet>,
        detail: String,
    },

    #[error("element {element} is outside the ground set 1..={n}")]
    OutOfRange { element: usize, n: usize },

    #[error("element {element} listed twice")]
    DuplicateElement { element: usize },

    #[error("{set} is not a circuit of the matroid")]
    NotACircuit { set: ElementSet },

    #[error("{set} is not among the matroid's circuits, so the family is not a subset")]
    NotASubset { set: ElementSet },

    #[error("matroid is not simple (circuit {circuit} has fewer than 3 elements)")]
    NotSimple { circuit: ElementSet },

    #[error("circuit {circuit} has fewer than 2 elements")]
    SmallCircuit { circuit: ElementSet },

    #[error("circuit must be nonempty")]
    EmptyCircuit,

    #[error("tropical point must have length {expected}, got {actual}")]
    PointLength { expected: usize, actual: usize },

    #[error("tropical point has every coordinate at bottom")]
    AllBottom,

    #[error("{what} exceeds the limit ({value} > {limit}); raise the cap or force")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("binarity methods disagree: symmetric-difference says {symdiff}, minor search says {minor}")]
    MethodDisagreement { symdiff: bool, minor: bool },

    #[error("order is not a permutation of the circuits: {reason}")]
    BadPermutation { reason: String },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("graph is not simple: {0}")]
    NotSimpleGraph(String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("unknown catalog name {0:?}")]
    UnknownName(String),

    #[error("construction fingerprint mismatch for {name}: {detail}")]
    Fingerprint { name: &'static str, detail: String },
}
