use crate::error::{Error, Result};

/// Resource caps for the exponential searches.
///
/// `force` lifts every cap up to the hard ceiling imposed by the 64-bit
/// set encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Ground-set size for 0/1 support enumeration (`2^n` supports).
    pub max_support_n: usize,
    /// Ground-set size for the U_{2,4} minor search (`~3^n` minors).
    pub max_minor_n: usize,
    /// Ground-set size for subset enumeration in bases, duals and GF(2) circuits.
    pub max_enum_n: usize,
    /// Edge count for exhaustive cycle enumeration.
    pub max_graph_edges: usize,
    /// Vertex count for bipartition enumeration in edge-cut searches.
    pub max_graph_vertices: usize,
    /// Number of minimal tropical bases `enumerate_minimal_bases` may return.
    pub max_bases: usize,
    pub force: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_support_n: 24,
            max_minor_n: 16,
            max_enum_n: 22,
            max_graph_edges: 20,
            max_graph_vertices: 24,
            max_bases: 100_000,
            force: false,
        }
    }
}

/// Ceiling for anything enumerated as `0..2^n` in a `u64` counter.
const HARD_ENUM_CEILING: usize = 40;

impl Limits {
    pub fn forced() -> Self {
        Limits {
            force: true,
            ..Limits::default()
        }
    }

    fn check(&self, what: &'static str, value: usize, limit: usize) -> Result<()> {
        let limit = if self.force { HARD_ENUM_CEILING } else { limit };
        if value > limit {
            return Err(Error::LimitExceeded { what, value, limit });
        }
        Ok(())
    }

    pub fn check_support(&self, n: usize) -> Result<()> {
        self.check("ground set for support enumeration", n, self.max_support_n)
    }

    pub fn check_minor(&self, n: usize) -> Result<()> {
        self.check("ground set for minor search", n, self.max_minor_n)
    }

    pub fn check_enum(&self, n: usize) -> Result<()> {
        self.check("ground set for subset enumeration", n, self.max_enum_n)
    }

    pub fn check_graph_edges(&self, m: usize) -> Result<()> {
        self.check("edge count for cycle enumeration", m, self.max_graph_edges)
    }

    pub fn check_graph_vertices(&self, v: usize) -> Result<()> {
        self.check("vertex count for cut enumeration", v, self.max_graph_vertices)
    }

    pub fn check_bases(&self, count: usize) -> Result<()> {
        if !self.force && count > self.max_bases {
            return Err(Error::LimitExceeded {
                what: "number of minimal tropical bases",
                value: count,
                limit: self.max_bases,
            });
        }
        Ok(())
    }
}
