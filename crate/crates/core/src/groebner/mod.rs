//! Gröbner bases and the ideal calculus built on them.

mod basis;
mod buchberger;
mod dimension;
mod ideal;
mod ops;
mod store;

pub use basis::{normal_form, GroebnerBasis};
pub use dimension::{codim, min_hitting_set};
pub use ideal::Ideal;
pub use ops::{
    eliminate, ideals_equal, intersect, intersect_all, is_member, min_generators, quotient,
    quotient_by_poly,
};

use std::path::PathBuf;

use crate::poly::PolyError;

/// Resource limits and optional persistence for Gröbner computations.
#[derive(Clone, Debug)]
pub struct GbConfig {
    /// Maximum number of single-term reduction steps per basis computation.
    pub max_reductions: u64,
    /// Maximum bit length of a coefficient met during reduction.
    pub max_coeff_bits: u64,
    /// Maximum number of simultaneously pending critical pairs.
    pub max_pairs: usize,
    /// When set, reduced bases are persisted here keyed by a content digest.
    pub cache_dir: Option<PathBuf>,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            max_reductions: 200_000_000,
            max_coeff_bits: 1 << 16,
            max_pairs: 2_000_000,
            cache_dir: None,
        }
    }
}

impl GbConfig {
    pub fn with_max_reductions(mut self, n: u64) -> Self {
        self.max_reductions = n;
        self
    }

    pub fn with_max_coeff_bits(mut self, bits: u64) -> Self {
        self.max_coeff_bits = bits;
        self
    }

    pub fn with_cache_dir(mut self, dir: Option<PathBuf>) -> Self {
        self.cache_dir = dir;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("computation exceeded the {what} budget of {limit}")]
    BudgetExceeded { what: &'static str, limit: u64 },
    #[error("ideals live in different rings")]
    RingMismatch,
    #[error("colon by the zero ideal")]
    ZeroIdealDivisor,
    #[error("operation undefined for the unit ideal")]
    UnitIdeal,
    #[error("minimal generators require homogeneous generators")]
    NonHomogeneous,
    #[error("ring too large for this operation ({0} variables)")]
    TooManyVariables(usize),
}
