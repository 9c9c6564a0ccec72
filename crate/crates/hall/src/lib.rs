//! Structure constants on both sides: Hall numbers `g^Z_{XY}` of the exact
//! category of two-periodic projective complexes, and orbit counts `F^Z_{XY}`
//! of distinguished triangles in its homotopy category.

mod ctx;
mod ext;
mod residue;
mod structural;
mod subobj;
mod sweep;
mod tri;

pub use ctx::{HallCtx, Units};
pub use ext::{ext1_classes, ext1_count_to, ext1_dim, ext1_stratified, homk_classes, ExtStratum};
pub use residue::{mod_residue, Frac};
pub use structural::structural_suite;
pub use subobj::{hall_number_brute, hall_number_rp};
pub use sweep::{congruence_sweep, SweepReport, Triple};
pub use tri::{is_distinguished, is_k_iso, triangle_count_brute, triangle_count_residue, triangle_counts, TriCount};

use hall2p_complex2::ComplexError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HallError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("internal consistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, HallError>;
