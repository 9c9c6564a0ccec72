//! Bound quiver algebras `F_p Q / J`, their representations, projectives and
//! Euler forms.
//!
//! Representations are right modules: `P_i(v)` is spanned by residue classes
//! of paths from `i` to `v` and an arrow acts by appending itself. A path
//! `a.b` means "a then b", which acts as the matrix `x_b x_a`.

mod algebra;
mod euler;
mod rep;
mod spec;

pub use algebra::Algebra;
pub use euler::{euler_form, sym_euler_form, EulerForm};
pub use rep::{
    gldim_probe, hom_basis, kernel, projective_cover, projective_resolution, radical, subrep, top_lifts, yoneda,
    Rep, RepMor, Resolution, Subrep,
};
pub use spec::{AlgebraSpec, Arrow, Path, Relation};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("configuration: {0}")]
    Config(String),
    #[error("invalid algebra: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, QuiverError>;
