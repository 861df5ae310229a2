use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matroid::CircuitMatroid;
use crate::set::{ElementSet, MAX_GROUND};

/// A 0/1 matrix over GF(2). Column `j` (1-based) is ground element `j`;
/// each column is stored as a bit vector over the rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    row_count: usize,
    columns: Vec<u64>,
}

impl Gf2Matrix {
    /// Parses rows written as strings of `'0'`/`'1'`.
    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::InvalidParams("matrix has no rows".into()));
        };
        let col_count = first.as_ref().len();
        if col_count == 0 {
            return Err(Error::InvalidParams("matrix has no columns".into()));
        }
        if rows.len() > 64 {
            return Err(Error::LimitExceeded {
                what: "GF(2) row count",
                value: rows.len(),
                limit: 64,
            });
        }
        let mut columns = vec![0u64; col_count];
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != col_count {
                return Err(Error::InvalidParams(format!(
                    "row {} has length {}, expected {col_count}",
                    r + 1,
                    row.len()
                )));
            }
            for (c, ch) in row.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => columns[c] |= 1 << r,
                    other => {
                        return Err(Error::InvalidParams(format!(
                            "row {} contains {other:?}; only '0' and '1' are allowed",
                            r + 1
                        )))
                    }
                }
            }
        }
        Ok(Gf2Matrix {
            row_count: rows.len(),
            columns,
        })
    }

    /// Builds from column bit vectors (bit `i` = row `i+1`).
    pub fn from_columns(row_count: usize, columns: Vec<u64>) -> Result<Self> {
        if row_count == 0 || row_count > 64 || columns.is_empty() {
            return Err(Error::InvalidParams(format!(
                "need 1..=64 rows and at least one column, got {row_count} x {}",
                columns.len()
            )));
        }
        if row_count < 64 && columns.iter().any(|&c| c >> row_count != 0) {
            return Err(Error::InvalidParams("column has bits beyond the row count".into()));
        }
        Ok(Gf2Matrix { row_count, columns })
    }

    pub fn row_count(&self) -> usize {
        self.row_count
    }

    pub fn col_count(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[u64] {
        &self.columns
    }

    pub fn rows(&self) -> Vec<String> {
        (0..self.row_count)
            .map(|r| {
                self.columns
                    .iter()
                    .map(|c| if c >> r & 1 == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

/// Whether the chosen columns are linearly independent over GF(2).
fn independent(columns: &[u64], subset: usize) -> bool {
    // xor basis keyed by leading bit
    let mut basis = [0u64; 64];
    let mut rest = subset;
    while rest != 0 {
        let j = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut v = columns[j];
        while v != 0 {
            let lead = 63 - v.leading_zeros() as usize;
            if basis[lead] == 0 {
                basis[lead] = v;
                break;
            }
            v ^= basis[lead];
        }
        if v == 0 {
            return false;
        }
    }
    true
}

/// Circuits are the minimal linearly dependent column sets.
pub fn gf2_matroid(m: &Gf2Matrix, limits: &Limits) -> Result<CircuitMatroid> {
    let n = m.col_count();
    if n > MAX_GROUND {
        return Err(Error::LimitExceeded {
            what: "ground set size",
            value: n,
            limit: MAX_GROUND,
        });
    }
    limits.check_enum(n)?;
    let size = 1usize << n;
    let mut dependent = vec![false; size];
    let mut circuits = Vec::new();
    for s in 1..size {
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if dependent[s ^ bit] {
                dependent[s] = true;
                break;
            }
            rest ^= bit;
        }
        // every maximal proper subset is independent here, so a dependent
        // `s` is minimal
        if !dependent[s] && !independent(&m.columns, s) {
            dependent[s] = true;
            circuits.push(ElementSet::from_bits(s as u64));
        }
    }
    Ok(CircuitMatroid::from_trusted(n, circuits))
}
