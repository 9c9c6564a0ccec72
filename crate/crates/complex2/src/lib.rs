//! Two-periodic complexes of projectives `X = (X^1, X^0, d^1, d^0)` over a
//! bound quiver algebra, chain maps, homotopies, cones, the radical plus
//! contractible decomposition, isomorphism tests and class enumeration.
//!
//! Every complex handed out by this crate is in standard form: `X^j` is
//! `⊕ P_i^{e^j_i}` laid out by `Algebra::proj_sum`.

mod catalog;
mod complex;
mod decomp;
mod enumerate;
mod exec;
mod iso;
mod maps;
mod phom;

pub use catalog::{proj_aut_order, Catalog, Entry, KsDecomp};
pub use complex::{Complex2, Pdvp};
pub use decomp::{classify_contractible, decompose, Decomposition};
pub use enumerate::{aut_generators, enumerate_all, enumerate_radical, radical_point_count, ClassRep, PointSpace};
pub use exec::Exec;
pub use iso::{aut_from_mults, aut_orders, eigenvalue, index_coords, is_homotopy_equivalent, is_indecomposable, is_isomorphic, AutOrders, LocalEnd};
pub use maps::{assemble, cone_of, homotopy_space, sum_maps, ChainMap, Cone, HomC, HomK};
pub use phom::{Layout, PHom};

use hall2p_quiver::Algebra;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("capacity: {what} needs {points} points, cap is {cap}")]
    Capacity { what: String, points: u128, cap: u64 },
    #[error("input: {0}")]
    Input(String),
    #[error("internal consistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Quiver(#[from] hall2p_quiver::QuiverError),
}

pub type Result<T> = std::result::Result<T, ComplexError>;

/// The algebra together with enumeration limits and a cache of projective Hom spaces.
pub struct Env {
    pub alg: Algebra,
    pub cap: u64,
    pub exec: Exec,
    homs: Mutex<HashMap<(Vec<usize>, Vec<usize>), Arc<PHom>>>,
}

impl Env {
    pub fn new(alg: Algebra) -> Self {
        Env { alg, cap: hall2p_ffla::DEFAULT_CAP, exec: Exec::default(), homs: Mutex::new(HashMap::new()) }
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn q(&self) -> u32 {
        self.alg.q()
    }

    pub fn field(&self) -> hall2p_ffla::Fp {
        self.alg.field()
    }

    /// `Hom_A(P^src, P^dst)`, cached.
    pub fn phom(&self, src: &[usize], dst: &[usize]) -> Arc<PHom> {
        let key = (src.to_vec(), dst.to_vec());
        if let Some(h) = self.homs.lock().unwrap().get(&key) {
            return h.clone();
        }
        let h = Arc::new(PHom::new(&self.alg, src, dst));
        self.homs.lock().unwrap().entry(key).or_insert(h).clone()
    }

    /// Fails if `q^k` exceeds the cap.
    pub fn check_points(&self, what: &str, k: usize) -> Result<u64> {
        let n = (self.q() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        if n > self.cap as u128 {
            return Err(ComplexError::Capacity { what: what.to_string(), points: n, cap: self.cap });
        }
        Ok(n as u64)
    }
}
