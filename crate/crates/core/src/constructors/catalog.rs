use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matroid::{validate_circuits, CircuitMatroid};
use crate::rank::dual;
use crate::set::{k_subsets, ElementSet};

use super::{cycle_matroid, gf2_matroid, uniform, Gf2Matrix, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogName {
    Fano,
    NonFano,
    P7,
    R6,
    R10,
    U24,
    K4Graphic,
}

impl CatalogName {
    pub const ALL: [CatalogName; 7] = [
        CatalogName::Fano,
        CatalogName::NonFano,
        CatalogName::P7,
        CatalogName::R6,
        CatalogName::R10,
        CatalogName::U24,
        CatalogName::K4Graphic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CatalogName::Fano => "fano",
            CatalogName::NonFano => "nonfano",
            CatalogName::P7 => "p7",
            CatalogName::R6 => "r6",
            CatalogName::R10 => "r10",
            CatalogName::U24 => "u24",
            CatalogName::K4Graphic => "k4_graphic",
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CatalogName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

const FANO_LINES: [[usize; 3]; 7] = [
    [1, 2, 4],
    [1, 3, 5],
    [2, 3, 6],
    [1, 6, 7],
    [2, 5, 7],
    [3, 4, 7],
    [4, 5, 6],
];

const P7_LINES: [[usize; 3]; 5] = [[1, 2, 4], [1, 3, 6], [2, 3, 5], [1, 5, 7], [4, 6, 7]];

const R6_LINES: [[usize; 3]; 2] = [[1, 2, 3], [4, 5, 6]];

/// Rank-3 matroid from a point-line configuration: circuits are the
/// 3-point lines and every 4-subset that contains no line.
fn rank3_from_lines(n: usize, lines: &[[usize; 3]]) -> Result<CircuitMatroid> {
    let lines: Vec<ElementSet> = lines.iter().map(|l| ElementSet::from(*l)).collect();
    let mut circuits = lines.clone();
    circuits.extend(
        k_subsets(n, 4)
            .into_iter()
            .filter(|q| !lines.iter().any(|l| l.is_subset(*q))),
    );
    validate_circuits(n, &circuits)
}

/// Columns are the ten weight-3 vectors of GF(2)^5, ordered by their
/// supports lexicographically ({1,2,3}, {1,2,4}, .., {3,4,5}).
fn r10() -> Result<CircuitMatroid> {
    let columns = k_subsets(5, 3).into_iter().map(|s| s.bits()).collect();
    let m = gf2_matroid(&Gf2Matrix::from_columns(5, columns)?, &Limits::default())?;

    let fail = |detail: String| Error::Fingerprint { name: "r10", detail };
    if m.n() != 10 || !m.is_simple() {
        return Err(fail(format!("expected a simple 10-element matroid, got n={}", m.n())));
    }
    let fours = m.circuits().iter().filter(|c| c.len() == 4).count();
    if fours != 15 {
        return Err(fail(format!("expected fifteen 4-circuits, found {fours}")));
    }
    let profile = |m: &CircuitMatroid| {
        let mut sizes: Vec<usize> = m.circuits().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        sizes
    };
    let d = dual(&m, &Limits::default())?;
    if profile(&d) != profile(&m) {
        return Err(fail("dual has a different circuit-size profile".into()));
    }
    Ok(m)
}

pub fn catalog(name: CatalogName) -> Result<CircuitMatroid> {
    match name {
        CatalogName::Fano => rank3_from_lines(7, &FANO_LINES),
        CatalogName::NonFano => rank3_from_lines(7, &FANO_LINES[..6]),
        CatalogName::P7 => rank3_from_lines(7, &P7_LINES),
        CatalogName::R6 => rank3_from_lines(6, &R6_LINES),
        CatalogName::R10 => r10(),
        CatalogName::U24 => uniform(2, 4),
        CatalogName::K4Graphic => cycle_matroid(&Graph::complete(4), &Limits::default()),
    }
}
