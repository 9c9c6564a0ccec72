//! Exact linear algebra over prime fields `F_p` with `2 <= p <= 251`.
//!
//! Pivoting is deterministic (first nonzero entry at the smallest index), so
//! every basis returned here is reproducible bit for bit.

mod enumerate;
mod field;
mod mat;

pub use enumerate::{check_cap, count_points, enumerate_space, gl_order, CoeffIter, SpaceIter};
pub use field::Fp;
pub use mat::{Echelon, Frame, Mat, Vector};

use thiserror::Error;

/// Default cap on the number of points a single enumeration may visit.
pub const DEFAULT_CAP: u64 = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FflaError {
    #[error("modulus {0} is not a prime in 2..=251")]
    BadModulus(u32),
    #[error("dimension mismatch: {0}")]
    Dim(String),
    #[error("capacity: {p}^{dim} points exceeds the enumeration cap {cap}")]
    Capacity { p: u32, dim: usize, cap: u64 },
}

pub type Result<T> = std::result::Result<T, FflaError>;
