//! Unmixedness and Cohen-Macaulayness of edge-weighted edge ideals of very
//! well-covered graphs: combinatorial criteria plus independent algebraic
//! checks (polarization, minimal primes, Stanley-Reisner homology).

pub mod bits;
pub mod criteria;
pub mod datasets;
pub mod error;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod io;
pub mod report;

pub use error::{Error, Result};
pub use report::{CriterionReport, Violation};

/// Caps on the size of computations whose cost grows exponentially in the
/// number of (polarized) variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_vars: usize,
}

impl Limits {
    pub const DEFAULT_MAX_VARS: usize = 26;
    /// Bit-mask representations stop here regardless of configuration.
    pub const HARD_MAX_VARS: usize = 64;

    pub fn new(max_vars: usize) -> Self {
        Self { max_vars: max_vars.min(Self::HARD_MAX_VARS) }
    }

    pub fn check_vars(&self, n: usize) -> Result<()> {
        if n > self.max_vars {
            return Err(Error::ResourceCap { what: "polarized variables", got: n, limit: self.max_vars });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self::new(Self::DEFAULT_MAX_VARS)
    }
}
