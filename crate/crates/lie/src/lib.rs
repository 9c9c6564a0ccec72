//! Lie algebras from structure constants: the exact side from extension
//! counts, the triangulated side from triangle orbit counts, both on root
//! vectors of indecomposable radical complexes plus a Cartan part indexed by
//! the simples.

mod build;
mod check;
mod form;
mod table;

pub use build::{build_at, build_in, build_lie_table, classical_table};
pub use check::{chevalley_compare, compare_tables, jacobi_check, ChevalleyReport, CompareReport, JacobiReport};
pub use form::{kclass, simple_complexes, sym_form, sym_form_k, KClass0, SymForm};
pub use table::{cartan_label, LieTable, Provenance, Side};

use hall2p_complex2::ComplexError;
use hall2p_hall::HallError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error(transparent)]
    Hall(#[from] HallError),
    #[error("parse: {0}")]
    Parse(String),
    #[error("basis mismatch: {0}")]
    Basis(String),
    #[error("classical limit: {0}")]
    Limit(String),
}

impl From<ComplexError> for LieError {
    fn from(e: ComplexError) -> Self {
        LieError::Hall(HallError::Complex(e))
    }
}

pub type Result<T> = std::result::Result<T, LieError>;
