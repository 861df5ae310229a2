use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// A coordinate of tropical projective space: `None` is bottom (−∞).
pub type Coord = Option<Ratio<i64>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalPoint {
    coords: Vec<Coord>,
}

impl TropicalPoint {
    pub fn new(coords: Vec<Coord>) -> Result<Self> {
        if coords.iter().all(Option::is_none) {
            return Err(Error::AllBottom);
        }
        Ok(TropicalPoint { coords })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Some(Ratio::from_integer(v))).collect())
    }

    /// The 0/1 point with ones exactly on `s`.
    pub fn indicator(s: ElementSet, n: usize) -> Self {
        let coords = (1..=n)
            .map(|i| Some(Ratio::from_integer(s.contains(i) as i64)))
            .collect();
        TropicalPoint { coords }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// 1-based.
    pub fn coord(&self, i: usize) -> Coord {
        self.coords[i - 1]
    }
}

/// Whether the maximum of `x` over `c` is attained at least twice, i.e.
/// `x ∈ V(c)`. Bottom counts as a value like any other, so a maximum of
/// bottom attained twice qualifies.
pub fn point_in_hyperplane(x: &TropicalPoint, c: ElementSet) -> Result<bool> {
    if c.is_empty() {
        return Err(Error::EmptyCircuit);
    }
    if c.max().unwrap() > x.len() {
        return Err(Error::PointLength {
            expected: c.max().unwrap(),
            actual: x.len(),
        });
    }
    let max = c.iter().map(|i| x.coord(i)).max().unwrap();
    Ok(c.iter().filter(|&i| x.coord(i) == max).count() >= 2)
}

/// A 0/1 point of tropical projective space, given by its ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Support {
    pub ones: ElementSet,
}

impl Support {
    pub fn new(ones: ElementSet) -> Self {
        Support { ones }
    }
}

/// `|c ∩ ones| = 1`: the indicator point of `s` is not in `V(c)`.
pub fn support_separates(s: Support, c: ElementSet) -> Result<bool> {
    if c.len() < 2 {
        return Err(Error::SmallCircuit { circuit: c });
    }
    Ok(c.intersection(s.ones).len() == 1)
}
