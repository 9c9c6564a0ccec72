use crate::{MotivicError, Result};
use num_rational::Ratio;
use std::fmt;

/// Integer polynomial in `q`, fitted on all but the largest prime and
/// checked on that one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPolynomial {
    /// `coeffs[k]` is the coefficient of `q^k`
    pub coeffs: Vec<i128>,
    pub bound: usize,
    pub fit: Vec<u32>,
    pub held_out: u32,
    pub verified: bool,
    pub warning: Option<String>,
}

/// Integer polynomial in `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TPolynomial {
    pub coeffs: Vec<i128>,
}

fn trim(mut v: Vec<i128>) -> Vec<i128> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn eval_int(c: &[i128], x: i128) -> i128 {
    c.iter().rev().fold(0, |acc, &a| acc * x + a)
}

/// Lagrange interpolation over the rationals.
fn lagrange(pts: &[(i128, i128)]) -> Vec<Ratio<i128>> {
    let n = pts.len();
    let mut out = vec![Ratio::from_integer(0); n];
    for (i, &(xi, yi)) in pts.iter().enumerate() {
        let mut basis = vec![Ratio::from_integer(1)];
        let mut den = 1i128;
        for (j, &(xj, _)) in pts.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Ratio::from_integer(0); basis.len() + 1];
            for (k, &b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * xj;
            }
            basis = next;
            den *= xi - xj;
        }
        for (o, b) in out.iter_mut().zip(&basis) {
            *o += *b * Ratio::new(yi, den);
        }
    }
    out
}

/// Fit `values` observed at `primes` by a polynomial of degree at most `bound`.
pub fn interpolate_values(primes: &[u32], values: &[i128], bound: usize) -> Result<QPolynomial> {
    if primes.len() != values.len() {
        return Err(MotivicError::Input("primes and values differ in length".into()));
    }
    if primes.len() < bound + 2 {
        return Err(MotivicError::Input(format!("degree bound {bound} needs {} primes, got {}", bound + 2, primes.len())));
    }
    let mut pts: Vec<(u32, i128)> = primes.iter().copied().zip(values.iter().copied()).collect();
    pts.sort();
    let (last, rest) = pts.split_last().unwrap();
    let fit: Vec<(i128, i128)> = rest.iter().map(|&(p, v)| (p as i128, v)).collect();
    let rat = lagrange(&fit);
    let mut q = QPolynomial {
        coeffs: vec![],
        bound,
        fit: rest.iter().map(|x| x.0).collect(),
        held_out: last.0,
        verified: false,
        warning: None,
    };
    if let Some(c) = rat.iter().find(|c| !c.is_integer()) {
        q.warning = Some(format!("non-integral coefficient {c}"));
        return Ok(q);
    }
    q.coeffs = trim(rat.iter().map(|c| c.to_integer()).collect());
    if q.degree().unwrap_or(0) > bound {
        q.warning = Some(format!("degree {} exceeds bound {bound}", q.degree().unwrap()));
        return Ok(q);
    }
    let got = q.eval(last.0 as i128);
    if got != last.1 {
        q.warning = Some(format!("held-out prime {}: fit gives {got}, observed {}", last.0, last.1));
        return Ok(q);
    }
    q.verified = true;
    Ok(q)
}

impl QPolynomial {
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: i128) -> i128 {
        eval_int(&self.coeffs, q)
    }

    /// `Some(d)` when the polynomial is `q^d`.
    pub fn monomial_degree(&self) -> Option<usize> {
        let d = self.degree()?;
        (self.coeffs[d] == 1 && self.coeffs[..d].iter().all(|&c| c == 0)).then_some(d)
    }

    /// `Err` for a fit that failed its held-out check.
    pub fn checked(&self) -> Result<&QPolynomial> {
        if self.verified {
            Ok(self)
        } else {
            Err(MotivicError::Poisoned(self.warning.clone().unwrap_or_default()))
        }
    }
}

/// `q ↦ t^2`.
pub fn to_t(p: &QPolynomial) -> TPolynomial {
    let mut c = vec![0; (2 * p.coeffs.len()).saturating_sub(1)];
    for (k, &a) in p.coeffs.iter().enumerate() {
        c[2 * k] = a;
    }
    TPolynomial::new(c)
}

impl TPolynomial {
    pub fn new(c: Vec<i128>) -> Self {
        TPolynomial { coeffs: trim(c) }
    }

    pub fn constant(c: i128) -> Self {
        TPolynomial::new(vec![c])
    }

    pub fn t() -> Self {
        TPolynomial::new(vec![0, 1])
    }

    /// `(-t)^k`.
    pub fn minus_t_pow(k: u32) -> Self {
        let mut c = vec![0; k as usize + 1];
        c[k as usize] = if k % 2 == 0 { 1 } else { -1 };
        TPolynomial::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: i128) -> i128 {
        eval_int(&self.coeffs, t)
    }

    pub fn add(&self, o: &TPolynomial) -> TPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        let g = |v: &[i128], i: usize| v.get(i).copied().unwrap_or(0);
        TPolynomial::new((0..n).map(|i| g(&self.coeffs, i) + g(&o.coeffs, i)).collect())
    }

    pub fn neg(&self) -> TPolynomial {
        TPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &TPolynomial) -> TPolynomial {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &TPolynomial) -> TPolynomial {
        if self.is_zero() || o.is_zero() {
            return TPolynomial::default();
        }
        let mut c = vec![0; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        TPolynomial::new(c)
    }

    /// Exact quotient in `Z[t]`, `None` when `d` does not divide.
    pub fn div_exact(&self, d: &TPolynomial) -> Option<TPolynomial> {
        let dd = d.degree()?;
        let lead = d.coeffs[dd];
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return r.iter().all(|&c| c == 0).then(TPolynomial::default);
        }
        let mut q = vec![0; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd];
            if c % lead != 0 {
                return None;
            }
            let m = c / lead;
            q[k] = m;
            for (i, &b) in d.coeffs.iter().enumerate() {
                r[k + i] -= m * b;
            }
        }
        r.iter().all(|&c| c == 0).then(|| TPolynomial::new(q))
    }
}

/// Value at `t = -1`.
pub fn classical_limit(p: &TPolynomial) -> i128 {
    p.eval(-1)
}

/// Classical limit of a fitted count; refuses fits that failed verification.
pub fn classical_limit_of(p: &QPolynomial) -> Result<i128> {
    Ok(classical_limit(&to_t(p.checked()?)))
}

/// Limit of `((-t)^k - 1) / (-t - 1)` at `t = -1`, by division in `Z[t]`.
pub fn h_limit(k: i64) -> i128 {
    let den = TPolynomial::new(vec![-1, -1]);
    let num = TPolynomial::minus_t_pow(k.unsigned_abs() as u32).sub(&TPolynomial::constant(1));
    let quot = num.div_exact(&den).expect("-t - 1 divides (-t)^k - 1");
    // (-t)^{-k} - 1 = -(-t)^{-k} ((-t)^k - 1), and (-t)^{-k} is 1 at t = -1
    if k >= 0 {
        classical_limit(&quot)
    } else {
        -classical_limit(&quot)
    }
}

fn fmt_poly(f: &mut fmt::Formatter<'_>, c: &[i128], var: &str) -> fmt::Result {
    if c.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (k, &a) in c.iter().enumerate().rev() {
        if a == 0 {
            continue;
        }
        let (sign, abs) = if a < 0 { ("-", -a) } else { ("+", a) };
        if first {
            if a < 0 {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        match (k, abs) {
            (0, _) => write!(f, "{abs}")?,
            (1, 1) => write!(f, "{var}")?,
            (1, _) => write!(f, "{abs}{var}")?,
            (_, 1) => write!(f, "{var}^{k}")?,
            _ => write!(f, "{abs}{var}^{k}")?,
        }
    }
    Ok(())
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, &self.coeffs, "q")
    }
}

impl fmt::Display for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, &self.coeffs, "t")
    }
}
