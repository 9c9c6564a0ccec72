use crate::enumerate::PointSpace;
use crate::iso::aut_from_mults;
use crate::maps::{homotopy_space, HomC};
use crate::{decompose, Complex2, ComplexError, Env, LocalEnd, Pdvp, Result};
use hall2p_ffla::{gl_order, Mat};

/// An indecomposable radical complex, labelled by its least point.
#[derive(Clone, Debug)]
pub struct Entry {
    pub label: String,
    pub x: Complex2,
    pub local: LocalEnd,
    pub end_dim: usize,
    pub htp_dim: usize,
}

impl Entry {
    pub fn pdvp(&self) -> &Pdvp {
        &self.x.pdvp
    }
}

/// Krull-Schmidt data of a complex: multiplicities of catalog entries in the
/// radical part, plus the contractible shape `K_P ⊕ K_Q^*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KsDecomp {
    /// `(entry index, multiplicity)`, sorted, multiplicities positive
    pub rad: Vec<(usize, usize)>,
    pub p: Vec<usize>,
    pub q: Vec<usize>,
}

impl KsDecomp {
    pub fn is_radical(&self) -> bool {
        self.p.iter().chain(&self.q).all(|&v| v == 0)
    }
    pub fn radical_part(&self) -> KsDecomp {
        let n = self.p.len();
        KsDecomp { rad: self.rad.clone(), p: vec![0; n], q: vec![0; n] }
    }
}

/// All indecomposable radical complexes up to a pdvp bound, certified by point counts.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub cap: Pdvp,
    pub entries: Vec<Entry>,
    /// `dim Hom_{C_2}(T_a, T_b)`
    pub homdim: Vec<Vec<usize>>,
    /// `(e, |radical points with pdvp e|)` for every nonzero `e` below the cap
    pub counts: Vec<(Pdvp, u128)>,
}

fn overflow() -> ComplexError {
    ComplexError::Internal("group order exceeds 128 bits".into())
}

fn qpow(q: u32, k: usize) -> Result<u128> {
    (q as u128).checked_pow(k as u32).ok_or_else(overflow)
}

/// `|Aut_A(P^e)|`.
pub fn proj_aut_order(env: &Env, e: &[usize]) -> Result<u128> {
    let h = env.phom(e, e);
    let sq: usize = e.iter().map(|m| m * m).sum();
    let mut r = qpow(env.q(), h.dim() - sq)?;
    for &m in e {
        r = r.checked_mul(gl_order(env.q(), m)).ok_or_else(overflow)?;
    }
    Ok(r)
}

impl Catalog {
    pub fn empty(env: &Env, cap: Pdvp) -> Catalog {
        let _ = env;
        Catalog { cap, entries: vec![], homdim: vec![], counts: vec![] }
    }

    /// Walk the pdvps below `cap` by increasing size; at each one compare the
    /// number of radical points against the orbit mass of the known classes and
    /// scan points in lex order until the two agree.
    pub fn build(env: &Env, cap: &Pdvp) -> Result<Catalog> {
        let mut cat = Catalog::empty(env, cap.clone());
        for e in Pdvp::all_below(cap) {
            if e.is_zero() {
                continue;
            }
            let space = PointSpace::new(env, &e, true);
            let count = space.count(env)?;
            cat.counts.push((e.clone(), count));
            let mut mass = cat.mass(env, &e)?;
            if mass == count {
                continue;
            }
            for (c1, c0) in space.scan(env)? {
                let z = space.complex(env, &c1, &c0);
                if cat.ks(env, &z).is_some() {
                    continue;
                }
                let local = LocalEnd::new(env, &z).ok_or_else(|| {
                    ComplexError::Input(format!("{} has an endomorphism ring with residue field larger than F_q", z.serialize()))
                })?;
                cat.push(env, z, local);
                mass = cat.mass(env, &e)?;
                if mass >= count {
                    break;
                }
            }
            if mass != count {
                return Err(ComplexError::Internal(format!("orbit mass {mass} != point count {count} at {e}")));
            }
        }
        Ok(cat)
    }

    fn push(&mut self, env: &Env, x: Complex2, local: LocalEnd) {
        let k = self.entries.len();
        let mut row = vec![];
        for (b, t) in self.entries.iter().enumerate() {
            self.homdim[b].push(HomC::new(env, &t.x, &x).dim());
            row.push(HomC::new(env, &x, &t.x).dim());
        }
        let end_dim = local.end.dim();
        row.push(end_dim);
        self.homdim.push(row);
        debug_assert_eq!(self.homdim[k].len(), k + 1);
        let htp_dim = homotopy_space(env, &x, &x).dim();
        self.entries.push(Entry { label: x.serialize(), x, local, end_dim, htp_dim });
    }

    /// `Σ_D |G_e| / |Aut D|` over multisets of known entries with total pdvp `e`.
    pub fn mass(&self, env: &Env, e: &Pdvp) -> Result<u128> {
        let g = proj_aut_order(env, &e.e1)?.checked_mul(proj_aut_order(env, &e.e0)?).ok_or_else(overflow)?;
        let mut total = 0u128;
        for ms in self.multisets(e) {
            let a = self.aut_of_mults(env, &ms)?;
            if g % a != 0 {
                return Err(ComplexError::Internal("automorphism order does not divide |G_e|".into()));
            }
            total += g / a;
        }
        Ok(total)
    }

    /// Multisets of entries (as `(index, mult)` lists) with total pdvp `e`.
    pub fn multisets(&self, e: &Pdvp) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![];
        self.multisets_from(0, e, &mut vec![], &mut out);
        out
    }

    fn multisets_from(&self, start: usize, rest: &Pdvp, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if rest.is_zero() {
            out.push(cur.clone());
            return;
        }
        for a in start..self.entries.len() {
            let mut r = rest.clone();
            let mut m = 0;
            while let Some(s) = r.checked_sub(self.entries[a].pdvp()) {
                m += 1;
                r = s;
                cur.push((a, m));
                self.multisets_from(a + 1, &r, cur, out);
                cur.pop();
            }
        }
    }

    fn aut_of_mults(&self, env: &Env, ms: &[(usize, usize)]) -> Result<u128> {
        let mut dim = 0;
        for &(a, ma) in ms {
            for &(b, mb) in ms {
                dim += ma * mb * self.homdim[a][b];
            }
        }
        let mults: Vec<usize> = ms.iter().map(|t| t.1).collect();
        let sq: usize = mults.iter().map(|m| m * m).sum();
        qpow(env.q(), dim - sq)?;
        Ok(aut_from_mults(env.q(), dim, &mults))
    }

    /// Multiplicity of each entry in a radical complex `z`; `None` if the
    /// entries found do not account for all of `z`.
    pub fn ks(&self, env: &Env, z: &Complex2) -> Option<Vec<(usize, usize)>> {
        let fp = env.field();
        let mut out = vec![];
        let mut acc = Pdvp::zero(env.alg.n());
        for (a, t) in self.entries.iter().enumerate() {
            if !t.pdvp().le(&z.pdvp) {
                continue;
            }
            let to = HomC::new(env, &t.x, z);
            let from = HomC::new(env, z, &t.x);
            if to.dim() == 0 || from.dim() == 0 {
                continue;
            }
            let mut m = Mat::zeros(fp, from.dim(), to.dim());
            for (i, g) in from.basis.iter().enumerate() {
                for (j, f) in to.basis.iter().enumerate() {
                    m.set(i, j, t.local.residue(fp, &f.then(g)));
                }
            }
            let mu = m.rank();
            if mu > 0 {
                out.push((a, mu));
                for _ in 0..mu {
                    acc = acc.add(t.pdvp());
                }
            }
        }
        (acc == z.pdvp).then_some(out)
    }

    /// Full Krull-Schmidt data of any complex whose radical part lies below the cap.
    pub fn classify(&self, env: &Env, z: &Complex2) -> Result<KsDecomp> {
        let d = decompose(env, z)?;
        let rad = self
            .ks(env, &d.xr)
            .ok_or_else(|| ComplexError::Input(format!("radical part {} lies outside the catalog {}", d.xr.pdvp, self.cap)))?;
        Ok(KsDecomp { rad, p: d.p, q: d.q })
    }

    /// A standard-form complex with the given decomposition.
    pub fn realize(&self, env: &Env, key: &KsDecomp) -> Complex2 {
        let alg = &env.alg;
        let mut z = Complex2::zero(alg);
        for &(a, m) in &key.rad {
            for _ in 0..m {
                z = z.direct_sum(alg, &self.entries[a].x);
            }
        }
        z.direct_sum(alg, &Complex2::contractible(alg, &key.p, &key.q))
    }

    pub fn pdvp_of(&self, key: &KsDecomp) -> Pdvp {
        let mut e = Pdvp { e1: key.p.clone(), e0: key.p.clone() };
        e = e.add(&Pdvp { e1: key.q.clone(), e0: key.q.clone() });
        for &(a, m) in &key.rad {
            for _ in 0..m {
                e = e.add(self.entries[a].pdvp());
            }
        }
        e
    }

    /// `|Aut_{C_2}(Z)|`.
    pub fn aut_c(&self, env: &Env, key: &KsDecomp) -> Result<u128> {
        let z = self.realize(env, key);
        let dim = HomC::new(env, &z, &z).dim();
        let mut mults: Vec<usize> = key.rad.iter().map(|t| t.1).collect();
        mults.extend(key.p.iter().chain(&key.q).filter(|&&m| m > 0));
        let sq: usize = mults.iter().map(|m| m * m).sum();
        qpow(env.q(), dim - sq)?;
        Ok(aut_from_mults(env.q(), dim, &mults))
    }

    /// `|Aut_{K_2}(Z)| = |Aut_{C_2}(Z_r)| / q^{dim Htp(Z_r, Z_r)}`.
    pub fn aut_k(&self, env: &Env, key: &KsDecomp) -> Result<u128> {
        let r = key.radical_part();
        let ac = self.aut_of_mults(env, &r.rad)?;
        let z = self.realize(env, &r);
        let h = qpow(env.q(), homotopy_space(env, &z, &z).dim())?;
        if ac % h != 0 {
            return Err(ComplexError::Internal("|Aut_C| not divisible by q^dim Htp".into()));
        }
        Ok(ac / h)
    }

    /// Radical classes with total pdvp `e`, as decompositions.
    pub fn radical_classes(&self, e: &Pdvp) -> Vec<KsDecomp> {
        let n = e.e1.len();
        self.multisets(e).into_iter().map(|rad| KsDecomp { rad, p: vec![0; n], q: vec![0; n] }).collect()
    }

    /// Human-readable name of a class.
    pub fn name(&self, key: &KsDecomp) -> String {
        let mut parts: Vec<String> = key
            .rad
            .iter()
            .map(|&(a, m)| if m == 1 { format!("T{a}") } else { format!("T{a}^{m}") })
            .collect();
        if key.p.iter().any(|&v| v > 0) {
            parts.push(format!("K{:?}", key.p));
        }
        if key.q.iter().any(|&v| v > 0) {
            parts.push(format!("K*{:?}", key.q));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}
