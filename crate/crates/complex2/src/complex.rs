use crate::phom::sum_perm;
use crate::{ComplexError, Env, Result};
use hall2p_ffla::Mat;
use hall2p_quiver::{projective_resolution, Algebra, Rep, RepMor};
use std::fmt;

/// Projective dimension vector pair `(e^1, e^0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pdvp {
    pub e1: Vec<usize>,
    pub e0: Vec<usize>,
}

impl Pdvp {
    pub fn zero(n: usize) -> Self {
        Pdvp { e1: vec![0; n], e0: vec![0; n] }
    }
    pub fn total(&self) -> usize {
        self.e1.iter().sum::<usize>() + self.e0.iter().sum::<usize>()
    }
    pub fn add(&self, o: &Pdvp) -> Pdvp {
        Pdvp {
            e1: self.e1.iter().zip(&o.e1).map(|(a, b)| a + b).collect(),
            e0: self.e0.iter().zip(&o.e0).map(|(a, b)| a + b).collect(),
        }
    }
    pub fn checked_sub(&self, o: &Pdvp) -> Option<Pdvp> {
        let sub = |a: &[usize], b: &[usize]| a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect::<Option<Vec<_>>>();
        Some(Pdvp { e1: sub(&self.e1, &o.e1)?, e0: sub(&self.e0, &o.e0)? })
    }
    pub fn le(&self, o: &Pdvp) -> bool {
        o.checked_sub(self).is_some()
    }
    pub fn is_zero(&self) -> bool {
        self.total() == 0
    }
    pub fn shift(&self) -> Pdvp {
        Pdvp { e1: self.e0.clone(), e0: self.e1.clone() }
    }
    /// All pdvps componentwise below `cap`, by increasing total then lex.
    pub fn all_below(cap: &Pdvp) -> Vec<Pdvp> {
        let caps: Vec<usize> = cap.e1.iter().chain(&cap.e0).copied().collect();
        let n = cap.e1.len();
        let mut out = vec![];
        let mut cur = vec![0usize; caps.len()];
        loop {
            out.push(Pdvp { e1: cur[..n].to_vec(), e0: cur[n..].to_vec() });
            let mut k = caps.len();
            loop {
                if k == 0 {
                    out.sort_by(|a, b| (a.total(), a).cmp(&(b.total(), b)));
                    return out;
                }
                k -= 1;
                if cur[k] < caps[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = 0;
            }
        }
    }
}

impl fmt::Display for Pdvp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.e1, self.e0)
    }
}

/// A two-periodic complex `X^1 -d1-> X^0 -d0-> X^1` in standard form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Complex2 {
    pub pdvp: Pdvp,
    pub x1: Rep,
    pub x0: Rep,
    pub d1: RepMor,
    pub d0: RepMor,
}

fn list(v: impl Iterator<Item = String>) -> String {
    format!("[{}]", v.collect::<Vec<_>>().join(","))
}

impl Complex2 {
    pub fn from_parts(alg: &Algebra, pdvp: Pdvp, d1: RepMor, d0: RepMor) -> Complex2 {
        let x1 = alg.proj_sum(&pdvp.e1);
        let x0 = alg.proj_sum(&pdvp.e0);
        Complex2 { pdvp, x1, x0, d1, d0 }
    }

    pub fn zero(alg: &Algebra) -> Complex2 {
        Complex2::zero_diff(alg, Pdvp::zero(alg.n()))
    }

    /// `(P^{e1}, P^{e0}, 0, 0)`.
    pub fn zero_diff(alg: &Algebra, pdvp: Pdvp) -> Complex2 {
        let f = alg.field();
        let x1 = alg.proj_sum(&pdvp.e1);
        let x0 = alg.proj_sum(&pdvp.e0);
        let d1 = RepMor::zero(f, &x1, &x0);
        let d0 = RepMor::zero(f, &x0, &x1);
        Complex2 { pdvp, x1, x0, d1, d0 }
    }

    /// `K_P = (P, P, 1, 0)`.
    pub fn k(alg: &Algebra, p: &[usize]) -> Complex2 {
        let f = alg.field();
        let x = alg.proj_sum(p);
        let pdvp = Pdvp { e1: p.to_vec(), e0: p.to_vec() };
        Complex2 { pdvp, d1: RepMor::identity(f, &x), d0: RepMor::zero(f, &x, &x), x1: x.clone(), x0: x }
    }

    /// `K_Q^* = (Q, Q, 0, 1)`.
    pub fn k_star(alg: &Algebra, q: &[usize]) -> Complex2 {
        let f = alg.field();
        let x = alg.proj_sum(q);
        let pdvp = Pdvp { e1: q.to_vec(), e0: q.to_vec() };
        Complex2 { pdvp, d1: RepMor::zero(f, &x, &x), d0: RepMor::identity(f, &x), x1: x.clone(), x0: x }
    }

    /// `K_P ⊕ K_Q^*` in standard form.
    pub fn contractible(alg: &Algebra, p: &[usize], q: &[usize]) -> Complex2 {
        Complex2::k(alg, p).direct_sum(alg, &Complex2::k_star(alg, q))
    }

    /// The fold of a minimal projective resolution of `m`: even terms in
    /// degree 0, odd terms in degree 1.
    pub fn from_module(alg: &Algebra, m: &Rep) -> Result<Complex2> {
        let res = projective_resolution(alg, m, 4 * alg.n() + 4)?;
        let n = alg.n();
        let f = alg.field();
        let mut pd = Pdvp::zero(n);
        for (k, t) in res.terms.iter().enumerate() {
            let e = if k % 2 == 0 { &mut pd.e0 } else { &mut pd.e1 };
            for i in 0..n {
                e[i] += t[i];
            }
        }
        // term k lives in degree k%2, after earlier terms of the same parity
        let mut acc = [vec![0; n], vec![0; n]];
        let mut offsets = vec![];
        for (k, t) in res.terms.iter().enumerate() {
            offsets.push(acc[k % 2].clone());
            for i in 0..n {
                acc[k % 2][i] += t[i];
            }
        }
        let x1 = alg.proj_sum(&pd.e1);
        let x0 = alg.proj_sum(&pd.e0);
        let mut d1 = RepMor::zero(f, &x1, &x0);
        let mut d0 = RepMor::zero(f, &x0, &x1);
        let l1 = crate::Layout::new(alg, &pd.e1);
        let l0 = crate::Layout::new(alg, &pd.e0);
        for (k, map) in res.maps.iter().enumerate() {
            // map: term k+1 -> term k
            let (src_t, dst_t) = (&res.terms[k + 1], &res.terms[k]);
            let (ls, ld) = if (k + 1) % 2 == 1 { (&l1, &l0) } else { (&l0, &l1) };
            let src_sum = crate::Layout::new(alg, src_t);
            let dst_sum = crate::Layout::new(alg, dst_t);
            let target = if (k + 1) % 2 == 1 { &mut d1 } else { &mut d0 };
            for v in 0..n {
                for (sk, &i) in src_sum.summands.iter().enumerate() {
                    let cs = sk - src_sum.summand(i, 0);
                    let gs = ls.summand(i, offsets[k + 1][i] + cs);
                    for (dk, &j) in dst_sum.summands.iter().enumerate() {
                        let cd = dk - dst_sum.summand(j, 0);
                        let gd = ld.summand(j, offsets[k][j] + cd);
                        for r in 0..alg.pdim(j, v) {
                            for cc in 0..alg.pdim(i, v) {
                                let val = map.blocks[v].get(dst_sum.offs[v][dk] + r, src_sum.offs[v][sk] + cc);
                                target.blocks[v].set(ld.offs[v][gd] + r, ls.offs[v][gs] + cc, val);
                            }
                        }
                    }
                }
            }
        }
        let c = Complex2 { pdvp: pd, x1, x0, d1, d0 };
        if !c.is_valid(alg) {
            return Err(ComplexError::Internal("folded resolution is not a complex".into()));
        }
        Ok(c)
    }

    pub fn is_valid(&self, alg: &Algebra) -> bool {
        let f = alg.field();
        self.d1.then(&self.d0).is_zero()
            && self.d0.then(&self.d1).is_zero()
            && self.d1.is_morphism(alg, &self.x1, &self.x0)
            && self.d0.is_morphism(alg, &self.x0, &self.x1)
            && self.x1 == alg.proj_sum(&self.pdvp.e1)
            && self.x0 == alg.proj_sum(&self.pdvp.e0)
            && self.d1.blocks.iter().all(|b| b.field() == f)
    }

    pub fn is_radical(&self, env: &Env) -> bool {
        env.phom(&self.pdvp.e1, &self.pdvp.e0).is_radical(&self.d1)
            && env.phom(&self.pdvp.e0, &self.pdvp.e1).is_radical(&self.d0)
    }

    /// Degree swap with negated differentials.
    pub fn shift(&self) -> Complex2 {
        Complex2 {
            pdvp: self.pdvp.shift(),
            x1: self.x0.clone(),
            x0: self.x1.clone(),
            d1: self.d0.neg(),
            d0: self.d1.neg(),
        }
    }

    /// Block sum conjugated into standard layout.
    pub fn direct_sum(&self, alg: &Algebra, o: &Complex2) -> Complex2 {
        let (s1, s0) = self.sum_perms(alg, o);
        let i1 = s1.inverse().unwrap();
        let i0 = s0.inverse().unwrap();
        let d1 = RepMor { blocks: self.d1.blocks.iter().zip(&o.d1.blocks).map(|(a, b)| Mat::block_diag(a, b)).collect() };
        let d0 = RepMor { blocks: self.d0.blocks.iter().zip(&o.d0.blocks).map(|(a, b)| Mat::block_diag(a, b)).collect() };
        let pdvp = self.pdvp.add(&o.pdvp);
        Complex2::from_parts(alg, pdvp, i1.then(&d1).then(&s0), i0.then(&d0).then(&s1))
    }

    /// Permutations from block layout `self ⊕ o` to the standard layout, per degree.
    pub fn sum_perms(&self, alg: &Algebra, o: &Complex2) -> (RepMor, RepMor) {
        (sum_perm(alg, &self.pdvp.e1, &o.pdvp.e1), sum_perm(alg, &self.pdvp.e0, &o.pdvp.e0))
    }

    /// Class in `K(A)` (simple basis) of `X^0` minus `X^1`.
    pub fn kclass(&self) -> Vec<i64> {
        self.x0.dims.iter().zip(&self.x1.dims).map(|(&a, &b)| a as i64 - b as i64).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.pdvp.is_zero()
    }

    /// Flattened `(d1, d0)`.
    pub fn point(&self) -> Vec<u32> {
        let mut v = self.d1.flatten();
        v.extend(self.d0.flatten());
        v
    }

    /// `e1=[..];e0=[..];d1=[..];d0=[..]`.
    pub fn serialize(&self) -> String {
        let nums = |v: &[usize]| list(v.iter().map(|x| x.to_string()));
        let ents = |m: &RepMor| list(m.flatten().iter().map(|x| x.to_string()));
        format!("e1={};e0={};d1={};d0={}", nums(&self.pdvp.e1), nums(&self.pdvp.e0), ents(&self.d1), ents(&self.d0))
    }

    pub fn parse(alg: &Algebra, s: &str) -> Result<Complex2> {
        let bad = |m: &str| ComplexError::Input(format!("complex id `{s}`: {m}"));
        let mut fields = std::collections::HashMap::new();
        for part in s.trim().split(';') {
            let (k, v) = part.split_once('=').ok_or_else(|| bad("expected key=[..]"))?;
            let v = v.trim().strip_prefix('[').and_then(|x| x.strip_suffix(']')).ok_or_else(|| bad("missing brackets"))?;
            let nums: std::result::Result<Vec<i64>, _> =
                v.split(',').filter(|x| !x.trim().is_empty()).map(|x| x.trim().parse::<i64>()).collect();
            fields.insert(k.trim().to_string(), nums.map_err(|_| bad("bad number"))?);
        }
        let get = |k: &str| fields.get(k).cloned().ok_or_else(|| bad(&format!("missing `{k}`")));
        let n = alg.n();
        let to_e = |v: Vec<i64>| -> Result<Vec<usize>> {
            if v.len() != n || v.iter().any(|&x| x < 0) {
                return Err(bad("multiplicity vector has wrong length"));
            }
            Ok(v.into_iter().map(|x| x as usize).collect())
        };
        let pdvp = Pdvp { e1: to_e(get("e1")?)?, e0: to_e(get("e0")?)? };
        let f = alg.field();
        let x1 = alg.proj_sum(&pdvp.e1);
        let x0 = alg.proj_sum(&pdvp.e0);
        let mk = |flat: Vec<i64>, src: &Rep, dst: &Rep| -> Result<RepMor> {
            let need: usize = (0..n).map(|v| src.dims[v] * dst.dims[v]).sum();
            if flat.len() != need {
                return Err(bad(&format!("expected {need} entries, found {}", flat.len())));
            }
            let mut o = 0;
            let blocks = (0..n)
                .map(|v| {
                    let (r, c) = (dst.dims[v], src.dims[v]);
                    let m = Mat::from_i64(f, r, c, &flat[o..o + r * c]);
                    o += r * c;
                    m
                })
                .collect();
            Ok(RepMor { blocks })
        };
        let d1 = mk(get("d1")?, &x1, &x0)?;
        let d0 = mk(get("d0")?, &x0, &x1)?;
        let c = Complex2 { pdvp, x1, x0, d1, d0 };
        if !c.is_valid(alg) {
            return Err(bad("not a complex of A-modules (d not A-linear or d^2 != 0)"));
        }
        Ok(c)
    }
}
