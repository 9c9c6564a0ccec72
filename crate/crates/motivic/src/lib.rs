//! Counting polynomials: point counts at several primes are fitted by a
//! polynomial in `q`, checked on a held-out prime, rewritten in `t` with
//! `q = t^2`, twisted by powers of `-t` and evaluated at `t = -1`.

mod count;
mod limit;
mod poly;
mod twist;

pub use count::{count_series, interpolate, CountSeries, Counter, Obj};
pub use limit::{lie_limit_check, LimitReport};
pub use poly::{classical_limit, classical_limit_of, h_limit, interpolate_values, to_t, QPolynomial, TPolynomial};
pub use twist::{b_commutation_check, b_exponent, regular_check, twist_exponent, BFactor, BReport, BSymbol};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MotivicError {
    #[error("input: {0}")]
    Input(String),
    #[error("interpolation failed: {0}")]
    Poisoned(String),
    #[error(transparent)]
    Complex(#[from] hall2p_complex2::ComplexError),
    #[error(transparent)]
    Hall(#[from] hall2p_hall::HallError),
    #[error(transparent)]
    Lie(#[from] hall2p_lie::LieError),
}

pub type Result<T> = std::result::Result<T, MotivicError>;
