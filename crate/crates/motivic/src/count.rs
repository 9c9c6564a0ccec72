use crate::{interpolate_values, MotivicError, QPolynomial, Result};
use hall2p_complex2::{aut_orders, radical_point_count, Complex2, Env, Exec, HomC, HomK, Pdvp};
use hall2p_hall::{ext1_count_to, ext1_dim};
use hall2p_quiver::Algebra;

/// A complex given independently of the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obj {
    /// complex id with integer entries, reduced mod each prime
    Id(String),
    /// `K_P`
    K(Vec<usize>),
    /// `K_P^*`
    KStar(Vec<usize>),
}

impl Obj {
    pub fn at(&self, env: &Env) -> Result<Complex2> {
        match self {
            Obj::Id(s) => Complex2::parse(&env.alg, s)
                .map_err(|e| MotivicError::Input(format!("not definable over F_{}: {e}", env.q()))),
            Obj::K(p) => Ok(Complex2::k(&env.alg, p)),
            Obj::KStar(p) => Ok(Complex2::k_star(&env.alg, p)),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Obj::Id(s) => s.clone(),
            Obj::K(p) => format!("K{p:?}"),
            Obj::KStar(p) => format!("K*{p:?}"),
        }
    }
}

/// The registered point counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counter {
    /// `|Hom_A(P, Q)|` for projectives given by multiplicities
    HomA(Vec<usize>, Vec<usize>),
    HomC(Obj, Obj),
    HomK(Obj, Obj),
    Ext1(Obj, Obj),
    /// `|Ext^1(X, Y)_Z|`
    Ext1Z(Obj, Obj, Obj),
    AutC(Obj),
    AutK(Obj),
    /// points of the radical stratum of a pdvp
    RadicalPoints(Pdvp),
}

impl Counter {
    pub fn label(&self) -> String {
        match self {
            Counter::HomA(p, q) => format!("|Hom_A(P{p:?}, P{q:?})|"),
            Counter::HomC(x, y) => format!("|Hom_C({}, {})|", x.label(), y.label()),
            Counter::HomK(x, y) => format!("|Hom_K({}, {})|", x.label(), y.label()),
            Counter::Ext1(x, y) => format!("|Ext^1({}, {})|", x.label(), y.label()),
            Counter::Ext1Z(x, y, z) => format!("|Ext^1({}, {})_{}|", x.label(), y.label(), z.label()),
            Counter::AutC(x) => format!("|Aut_C({})|", x.label()),
            Counter::AutK(x) => format!("|Aut_K({})|", x.label()),
            Counter::RadicalPoints(e) => format!("|rad points {e:?}|"),
        }
    }

    /// Dimension of the underlying space for Hom and Ext counters.
    pub fn dim(&self, env: &Env) -> Result<Option<usize>> {
        Ok(Some(match self {
            Counter::HomA(p, q) => env.phom(p, q).dim(),
            Counter::HomC(x, y) => HomC::new(env, &x.at(env)?, &y.at(env)?).dim(),
            Counter::HomK(x, y) => HomK::new(env, &x.at(env)?, &y.at(env)?).dim(),
            Counter::Ext1(x, y) => ext1_dim(env, &x.at(env)?, &y.at(env)?),
            _ => return Ok(None),
        }))
    }

    pub fn count(&self, env: &Env) -> Result<u128> {
        let q = env.q() as u128;
        Ok(match self {
            Counter::AutC(x) => aut_orders(env, &x.at(env)?)?.aut_c,
            Counter::AutK(x) => aut_orders(env, &x.at(env)?)?.aut_k,
            Counter::Ext1Z(x, y, z) => ext1_count_to(env, &x.at(env)?, &y.at(env)?, &z.at(env)?)? as u128,
            Counter::RadicalPoints(e) => radical_point_count(env, e)?,
            _ => q.pow(self.dim(env)?.unwrap() as u32),
        })
    }
}

/// Exact counts of one counter at several primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSeries {
    pub label: String,
    pub primes: Vec<u32>,
    pub values: Vec<u128>,
}

pub(crate) fn envs(alg: &Algebra, primes: &[u32], cap: u64) -> Result<Vec<Env>> {
    let mut seen = primes.to_vec();
    seen.sort();
    seen.dedup();
    if seen.len() != primes.len() {
        return Err(MotivicError::Input(format!("repeated prime in {primes:?}")));
    }
    primes
        .iter()
        .map(|&p| Ok(Env::new(alg.with_prime(p).map_err(hall2p_complex2::ComplexError::from)?).with_cap(cap)))
        .collect()
}

/// Counts at each prime, computed in parallel across primes.
pub fn count_series(alg: &Algebra, counter: &Counter, primes: &[u32], cap: u64) -> Result<CountSeries> {
    let envs = envs(alg, primes, cap)?;
    let values = Exec::default().map(&envs, |env| counter.count(env)).into_iter().collect::<Result<Vec<_>>>()?;
    Ok(CountSeries { label: counter.label(), primes: primes.to_vec(), values })
}

/// Fit a series, holding out its largest prime.
pub fn interpolate(s: &CountSeries, bound: usize) -> Result<QPolynomial> {
    let v: Vec<i128> = s.values.iter().map(|&x| x as i128).collect();
    let mut p = interpolate_values(&s.primes, &v, bound)?;
    if let Some(w) = &mut p.warning {
        *w = format!("{}: {w}", s.label);
    }
    Ok(p)
}
