use crate::maps::{homotopy_space, ChainMap, HomC};
use crate::{decompose, Complex2, ComplexError, Env, Result};
use hall2p_ffla::{gl_order, CoeffIter, Echelon, Fp, Mat, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Enumeration of `End` is attempted only below this many points.
const END_ENUM_LIMIT: u64 = 1 << 16;

fn is_nilpotent_map(m: &ChainMap) -> bool {
    m.f1.blocks.iter().chain(&m.f0.blocks).all(|b| b.is_nilpotent())
}

fn scalar_sub(m: &ChainMap, lambda: u32) -> ChainMap {
    let f = |b: &Mat| b.sub(&Mat::scalar(b.field(), b.rows(), lambda));
    ChainMap {
        f1: hall2p_quiver::RepMor { blocks: m.f1.blocks.iter().map(f).collect() },
        f0: hall2p_quiver::RepMor { blocks: m.f0.blocks.iter().map(f).collect() },
    }
}

/// The unique `λ` with `m - λ` nilpotent, if any.
pub fn eigenvalue(fp: Fp, m: &ChainMap) -> Option<u32> {
    (0..fp.p()).find(|&l| is_nilpotent_map(&scalar_sub(m, l)))
}

/// A local endomorphism ring with residue field `F_q` and its residue map.
#[derive(Clone, Debug)]
pub struct LocalEnd {
    pub end: HomC,
    /// residue of each basis element
    pub phi: Vec<u32>,
}

impl LocalEnd {
    /// `None` unless `End_{C_2}(X)` is local with residue field `F_q`.
    pub fn new(env: &Env, x: &Complex2) -> Option<LocalEnd> {
        if x.is_zero() {
            return None;
        }
        let fp = env.field();
        let end = HomC::new(env, x, x);
        let mut phi = vec![];
        for b in &end.basis {
            phi.push(eigenvalue(fp, b)?);
        }
        let le = LocalEnd { end, phi };
        // the kernel of phi must be a two-sided ideal and nilpotent
        let k = le.end.dim();
        let ideal: Vec<Vector> = le.kernel_basis(fp);
        for i in 0..k {
            for j in 0..k {
                let prod = le.end.basis[i].then(&le.end.basis[j]);
                let pr = le.residue(fp, &prod);
                if pr != fp.mul(le.phi[i], le.phi[j]) {
                    return None;
                }
            }
        }
        let len = le.end.ech.dim_ambient;
        let mut power = Echelon::from_vectors(fp, len, &ideal);
        let gens: Vec<ChainMap> = ideal.iter().map(|v| ChainMap::from_flat(env, x, x, v)).collect();
        let mut steps = 0;
        while power.dim() > 0 {
            steps += 1;
            if steps > len + 1 {
                return None;
            }
            let cur: Vec<ChainMap> = power.basis.iter().map(|v| ChainMap::from_flat(env, x, x, v)).collect();
            let mut next = vec![];
            for a in &cur {
                for g in &gens {
                    next.push(g.then(a).flatten());
                }
            }
            let np = Echelon::from_vectors(fp, len, &next);
            if np.dim() == power.dim() {
                return None;
            }
            power = np;
        }
        Some(le)
    }

    /// Residue of an endomorphism.
    pub fn residue(&self, fp: Fp, m: &ChainMap) -> u32 {
        let c = self.end.coords(m).expect("endomorphism lies in End");
        c.iter().zip(&self.phi).fold(0, |acc, (&a, &b)| fp.add(acc, fp.mul(a, b)))
    }

    /// Basis of the residue kernel in flattened coordinates.
    pub fn kernel_basis(&self, fp: Fp) -> Vec<Vector> {
        let k = self.end.dim();
        let row = Mat::from_vec(fp, 1, k, self.phi.clone());
        row.kernel_basis().iter().map(|c| self.end.ech.combine(c)).collect()
    }
}

/// `End` is local: decided by enumeration when small, else by the residue-ideal test.
pub fn is_indecomposable(env: &Env, x: &Complex2) -> Result<bool> {
    let d = decompose(env, x)?;
    let xr = &d.xr;
    if xr.is_zero() {
        return Ok(false);
    }
    let end = HomC::new(env, xr, xr);
    let k = end.dim();
    let pts = (env.q() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if pts <= END_ENUM_LIMIT.min(env.cap) as u128 {
        for c in CoeffIter::new(env.q(), k) {
            let m = end.combine(env, xr, xr, &c);
            if !is_nilpotent_map(&m) && !m.is_iso() {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    // Fitting: a basis element that is neither nilpotent nor invertible splits X
    for b in &end.basis {
        if eigenvalue(env.field(), b).is_none() {
            return Ok(false);
        }
    }
    Ok(LocalEnd::new(env, xr).is_some())
}

/// Group orders attached to `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutOrders {
    pub aut_c: u128,
    pub aut_k: u128,
    pub htp_dim: usize,
    pub end_dim: usize,
}

/// `|Aut_{C_2}(X)|` by filtering `End` for invertible maps, and
/// `|Aut_{K_2}(X)| = |Aut_{C_2}(X_r)| / q^{dim Htp(X_r, X_r)}`.
pub fn aut_orders(env: &Env, x: &Complex2) -> Result<AutOrders> {
    let count = |c: &Complex2| -> Result<(u128, usize)> {
        let end = HomC::new(env, c, c);
        let k = end.dim();
        env.check_points("End enumeration", k)?;
        let n = env.exec.sum_range((env.q() as u64).pow(k as u32), |i| {
            let co = index_coords(env.q(), k, i);
            end.combine(env, c, c, &co).is_iso() as u128
        });
        Ok((n, k))
    };
    let (aut_c, end_dim) = count(x)?;
    let d = decompose(env, x)?;
    let htp_r = homotopy_space(env, &d.xr, &d.xr).dim();
    let (aut_cr, _) = if d.p.iter().chain(&d.q).all(|&v| v == 0) { (aut_c, end_dim) } else { count(&d.xr)? };
    let qh = (env.q() as u128).pow(htp_r as u32);
    if aut_cr % qh != 0 {
        return Err(ComplexError::Internal("|Aut_C(X_r)| not divisible by q^dim Htp".into()));
    }
    let htp_dim = homotopy_space(env, x, x).dim();
    Ok(AutOrders { aut_c, aut_k: aut_cr / qh, htp_dim, end_dim })
}

/// `(x_0, .., x_{k-1})` with `i = Σ x_j q^{k-1-j}`.
pub fn index_coords(q: u32, k: usize, mut i: u64) -> Vec<u32> {
    let mut c = vec![0; k];
    for j in (0..k).rev() {
        c[j] = (i % q as u64) as u32;
        i /= q as u64;
    }
    c
}

/// `|Aut(⊕ T_k^{m_k})| = q^{dim End - Σ m_k^2} ∏ |GL_{m_k}|` for local `End(T_k)` with residue `F_q`.
pub fn aut_from_mults(q: u32, end_dim: usize, mults: &[usize]) -> u128 {
    let sq: usize = mults.iter().map(|m| m * m).sum();
    let mut r = (q as u128).pow((end_dim - sq) as u32);
    for &m in mults {
        r *= gl_order(q, m);
    }
    r
}

/// Search `Hom_{C_2}(X, Y)` for an invertible chain map.
pub fn is_isomorphic(env: &Env, x: &Complex2, y: &Complex2) -> Result<Option<ChainMap>> {
    if x.pdvp != y.pdvp {
        return Ok(None);
    }
    let hxy = HomC::new(env, x, y);
    let hyx = HomC::new(env, y, x);
    let exx = HomC::new(env, x, x);
    let eyy = HomC::new(env, y, y);
    let d = hxy.dim();
    if d != hyx.dim() || d != exx.dim() || d != eyy.dim() {
        return Ok(None);
    }
    if homotopy_space(env, x, x).dim() != homotopy_space(env, y, y).dim() {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..64 {
        let c: Vec<u32> = (0..d).map(|_| rng.gen_range(0..env.q())).collect();
        let m = hxy.combine(env, x, y, &c);
        if m.is_iso() {
            return Ok(Some(m));
        }
    }
    env.check_points("isomorphism search", d)?;
    for c in CoeffIter::new(env.q(), d) {
        let m = hxy.combine(env, x, y, &c);
        if m.is_iso() {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Isomorphism of radical parts.
pub fn is_homotopy_equivalent(env: &Env, x: &Complex2, y: &Complex2) -> Result<bool> {
    let (a, b) = (decompose(env, x)?, decompose(env, y)?);
    Ok(is_isomorphic(env, &a.xr, &b.xr)?.is_some())
}
