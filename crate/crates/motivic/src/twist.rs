use crate::count::envs;
use crate::{count_series, interpolate, to_t, Counter, MotivicError, Obj, Result, TPolynomial};
use hall2p_complex2::{Complex2, Env, Pdvp};
use hall2p_hall::ext1_count_to;
use hall2p_quiver::Algebra;

const MORE: [u32; 8] = [11, 13, 17, 19, 23, 29, 31, 37];

fn with_primes(primes: &[u32], n: usize) -> Vec<u32> {
    let mut ps = primes.to_vec();
    for &p in &MORE {
        if ps.len() >= n {
            break;
        }
        if !ps.contains(&p) && ps.iter().all(|&x| x < p) {
            ps.push(p);
        }
    }
    ps
}

fn hom_p(env: &Env, a: &[usize], b: &[usize]) -> i64 {
    env.phom(a, b).dim() as i64
}

/// `<P'^1, P''^1> + <P'^0, P''^0>`.
pub fn twist_exponent(env: &Env, e1: &Pdvp, e2: &Pdvp) -> i64 {
    hom_p(env, &e1.e1, &e2.e1) + hom_p(env, &e1.e0, &e2.e0)
}

/// `(P̂, X̂^0 - X̂^1)` for the symmetric Euler form; every argument is projective.
pub fn b_exponent(env: &Env, p: &[usize], x: &Pdvp) -> i64 {
    let s = |a: &[usize]| hom_p(env, p, a) + hom_p(env, a, p);
    s(&x.e0) - s(&x.e1)
}

/// `b_α` for `α = P̂ - Q̂`, kept as a formal symbol: multiplicities of
/// `P` minus those of `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BSymbol(pub Vec<i64>);

impl BSymbol {
    pub fn new(p: &[usize], q: &[usize]) -> Self {
        BSymbol(p.iter().zip(q).map(|(&a, &b)| a as i64 - b as i64).collect())
    }

    pub fn mul(&self, o: &BSymbol) -> BSymbol {
        BSymbol(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn inverse(&self) -> BSymbol {
        BSymbol(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Exponent of `-t` picked up when `b_α` moves past a class of pdvp `x`.
    pub fn exponent(&self, env: &Env, x: &Pdvp) -> i64 {
        let split = |sign: i64| -> Vec<usize> { self.0.iter().map(|&a| (a * sign).max(0) as usize).collect() };
        b_exponent(env, &split(1), x) - b_exponent(env, &split(-1), x)
    }
}

/// Both sides of `b_P * [X] = (-t)^e [X] * b_P` after clearing the common
/// factors, for one projective `P`.
#[derive(Clone, Debug)]
pub struct BFactor {
    pub p: Vec<usize>,
    pub exponent: i64,
    pub lhs: TPolynomial,
    pub rhs: TPolynomial,
}

#[derive(Clone, Debug, Default)]
pub struct BReport {
    pub alpha: Vec<i64>,
    pub x: String,
    pub exponent: i64,
    pub factors: Vec<BFactor>,
    pub violations: Vec<String>,
    /// interpolation failures; a poisoned report is not a pass
    pub poisoned: Vec<String>,
}

impl BReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty() && self.poisoned.is_empty()
    }
}

/// Fit a Hom or Ext count, adding primes when its dimension needs a higher
/// degree bound than `primes` can carry with one held out.
fn fit(alg: &Algebra, c: Counter, primes: &[u32], cap: u64, rep: &mut BReport) -> Result<Option<TPolynomial>> {
    let env = &envs(alg, &primes[..1], cap)?[0];
    let bound = c.dim(env)?.unwrap_or(0).max(primes.len() - 2);
    let ps = with_primes(primes, bound + 2);
    let s = count_series(alg, &c, &ps, cap)?;
    let q = interpolate(&s, bound)?;
    if !q.verified {
        rep.poisoned.push(q.warning.unwrap_or_default());
        return Ok(None);
    }
    Ok(Some(to_t(&q)))
}

fn factor(alg: &Algebra, env: &Env, p: &[usize], x: &Obj, xp: &Pdvp, primes: &[u32], cap: u64, rep: &mut BReport) -> Result<Option<BFactor>> {
    let k = Obj::K(p.to_vec());
    let kp = Pdvp { e1: p.to_vec(), e0: p.to_vec() };
    for (a, b) in [(&k, x), (x, &k)] {
        if let Some(e) = fit(alg, Counter::Ext1(a.clone(), b.clone()), primes, cap, rep)? {
            if e != TPolynomial::constant(1) {
                rep.violations.push(format!("|Ext^1({}, {})| = {e}, expected 1", a.label(), b.label()));
            }
        }
    }
    let h1 = fit(alg, Counter::HomC(k.clone(), x.clone()), primes, cap, rep)?;
    let h2 = fit(alg, Counter::HomC(x.clone(), k.clone()), primes, cap, rep)?;
    let (Some(h1), Some(h2)) = (h1, h2) else { return Ok(None) };
    let tw1 = twist_exponent(env, &kp, xp);
    let tw2 = twist_exponent(env, xp, &kp);
    let e = b_exponent(env, p, xp);
    // b_P ⋄ [X] = (-t)^{tw1} / Υ(Hom(K_P, X)) [K_P ⊕ X] and the same with the
    // roles swapped, each up to the common factor Υ(Aut K_P)Υ(Aut K_P)^{-1}Υ(Aut X)^{-1};
    // multiply through by both Hom factors and a power of -t
    let s = (-(e + tw2)).max(0);
    let lhs = TPolynomial::minus_t_pow((tw1 + s) as u32).mul(&h2);
    let rhs = TPolynomial::minus_t_pow((e + tw2 + s) as u32).mul(&h1);
    Ok(Some(BFactor { p: p.to_vec(), exponent: e, lhs, rhs }))
}

/// `b_α * [X] = (-t)^{(α, X̂^0 - X̂^1)} [X] * b_α` for `α = P̂ - Q̂`, checked
/// on counting polynomials of `Hom` and `Ext^1` against `K_P` and `K_Q`.
pub fn b_commutation_check(alg: &Algebra, p: &[usize], q: &[usize], x: &Obj, primes: &[u32], cap: u64) -> Result<BReport> {
    if primes.len() < 3 {
        return Err(MotivicError::Input("need at least 3 primes".into()));
    }
    let env = &envs(alg, &primes[..1], cap)?[0];
    let xc = x.at(env)?;
    let alpha = BSymbol::new(p, q);
    let mut rep = BReport { alpha: alpha.0.clone(), x: x.label(), exponent: alpha.exponent(env, &xc.pdvp), ..Default::default() };
    let mut total = 0;
    for (v, sign) in [(p, 1), (q, -1)] {
        if v.iter().all(|&a| a == 0) {
            continue;
        }
        if let Some(f) = factor(alg, env, v, x, &xc.pdvp, primes, cap, &mut rep)? {
            if f.lhs != f.rhs {
                rep.violations.push(format!("P{:?}: b_P [X] gives {} but (-t)^{} [X] b_P gives {}", f.p, f.lhs, f.exponent, f.rhs));
            }
            total += sign * f.exponent;
            rep.factors.push(f);
        }
    }
    if rep.poisoned.is_empty() && total != rep.exponent {
        rep.violations.push(format!("exponents of b_P and b_Q combine to {total}, expected {}", rep.exponent));
    }
    Ok(rep)
}

/// `b_P * b_Q = b_{P ⊕ Q}`: `Ext^1(K_P, K_Q)` is a point whose middle term is
/// `K_{P ⊕ Q}`, and the twist cancels `Υ(Hom(K_P, K_Q)) = t^{2<P, Q>}`.
pub fn regular_check(alg: &Algebra, p: &[usize], q: &[usize], primes: &[u32], cap: u64) -> Result<BReport> {
    let mut rep = BReport { alpha: BSymbol::new(p, &vec![0; p.len()]).mul(&BSymbol::new(q, &vec![0; q.len()])).0, ..Default::default() };
    let (kp, kq) = (Obj::K(p.to_vec()), Obj::K(q.to_vec()));
    let sum: Vec<usize> = p.iter().zip(q).map(|(a, b)| a + b).collect();
    let envs = envs(alg, primes, cap)?;
    for env in &envs {
        let n = ext1_count_to(env, &kp.at(env)?, &kq.at(env)?, &Complex2::k(&env.alg, &sum))?;
        if n != 1 {
            rep.violations.push(format!("q={}: {n} extensions with middle term K{sum:?}", env.q()));
        }
    }
    let env = &envs[0];
    let tw = twist_exponent(env, &Pdvp { e1: p.to_vec(), e0: p.to_vec() }, &Pdvp { e1: q.to_vec(), e0: q.to_vec() });
    if let Some(h) = fit(alg, Counter::HomC(kp.clone(), kq.clone()), primes, cap, &mut rep)? {
        let hp = 2 * hom_p(env, p, q);
        if h != TPolynomial::minus_t_pow(hp as u32) || tw != hp {
            rep.violations.push(format!("Υ(Hom(K_P, K_Q)) = {h}, twist exponent {tw}, <P, Q> = {}", hp / 2));
        }
    }
    if let Some(e) = fit(alg, Counter::Ext1(kp, kq), primes, cap, &mut rep)? {
        if e != TPolynomial::constant(1) {
            rep.violations.push(format!("|Ext^1(K_P, K_Q)| = {e}"));
        }
    }
    Ok(rep)
}
