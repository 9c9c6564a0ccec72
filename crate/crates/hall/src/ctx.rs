use crate::{HallError, Result};
use hall2p_complex2::{Catalog, ChainMap, Complex2, Env, HomK, KsDecomp};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Units of `End_{K_2}(Z)` for a radical `Z`, with inverses.
#[derive(Debug)]
pub struct Units {
    pub z: Complex2,
    pub end: HomK,
    pub units: Vec<(ChainMap, ChainMap)>,
}

/// The algebra, a certified catalog, and caches shared by a sweep.
pub struct HallCtx<'a> {
    pub env: &'a Env,
    pub cat: &'a Catalog,
    aut_c: Mutex<HashMap<KsDecomp, u128>>,
    units: Mutex<HashMap<KsDecomp, Arc<Units>>>,
}

impl<'a> HallCtx<'a> {
    pub fn new(env: &'a Env, cat: &'a Catalog) -> Self {
        HallCtx { env, cat, aut_c: Mutex::default(), units: Mutex::default() }
    }

    pub fn q(&self) -> u32 {
        self.env.q()
    }

    pub fn classify(&self, z: &Complex2) -> Result<KsDecomp> {
        Ok(self.cat.classify(self.env, z)?)
    }

    pub fn entry_key(&self, a: usize) -> KsDecomp {
        let n = self.env.alg.n();
        KsDecomp { rad: vec![(a, 1)], p: vec![0; n], q: vec![0; n] }
    }

    /// `|Aut_{C_2}(Z)|` of a class.
    pub fn aut_c(&self, key: &KsDecomp) -> Result<u128> {
        if let Some(&v) = self.aut_c.lock().unwrap().get(key) {
            return Ok(v);
        }
        let v = self.cat.aut_c(self.env, key)?;
        self.aut_c.lock().unwrap().insert(key.clone(), v);
        Ok(v)
    }

    /// Units of `End_{K_2}` of a radical class, by enumeration.
    pub fn units(&self, key: &KsDecomp) -> Result<Arc<Units>> {
        if let Some(u) = self.units.lock().unwrap().get(key) {
            return Ok(u.clone());
        }
        if !key.is_radical() {
            return Err(HallError::Internal("units requested for a non-radical class".into()));
        }
        let env = self.env;
        let z = self.cat.realize(env, key);
        let end = HomK::new(env, &z, &z);
        let k = end.dim();
        let pts = env.check_points("End_K enumeration", k)?;
        let found: Vec<Option<(ChainMap, ChainMap)>> = env.exec.map_range(pts, |i| {
            let c = hall2p_complex2::index_coords(env.q(), k, i);
            let m = end.rep(env, &z, &z, &c);
            // radical complexes: a chain map is invertible iff it is a homotopy equivalence
            m.inverse().map(|inv| (m, inv))
        });
        let units = found.into_iter().flatten().collect();
        let u = Arc::new(Units { z, end, units });
        self.units.lock().unwrap().insert(key.clone(), u.clone());
        Ok(u)
    }
}
