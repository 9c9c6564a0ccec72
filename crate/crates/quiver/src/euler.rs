use crate::{Algebra, QuiverError, Result};
use num_rational::Ratio;

/// The Euler form on `K(A)` in the basis of simples: `<a, b> = a D^{-1} b^T`
/// where `D[i][v] = dim P_i(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerForm {
    pub gram: Vec<Vec<i64>>,
}

impl EulerForm {
    pub fn new(alg: &Algebra) -> Result<Self> {
        let d = alg.cartan();
        let inv = invert(&d).ok_or_else(|| QuiverError::Invalid("Cartan matrix is singular".into()))?;
        let mut gram = vec![];
        for row in inv {
            let mut r = vec![];
            for x in row {
                if !x.is_integer() {
                    return Err(QuiverError::Invalid("Cartan matrix is not unimodular".into()));
                }
                r.push(x.to_integer());
            }
            gram.push(r);
        }
        Ok(EulerForm { gram })
    }

    pub fn eval(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.gram.len();
        (0..n).map(|i| (0..n).map(|j| a[i] * self.gram[i][j] * b[j]).sum::<i64>()).sum()
    }

    pub fn sym(&self, a: &[i64], b: &[i64]) -> i64 {
        self.eval(a, b) + self.eval(b, a)
    }
}

pub fn euler_form(alg: &Algebra, a: &[i64], b: &[i64]) -> Result<i64> {
    Ok(EulerForm::new(alg)?.eval(a, b))
}

pub fn sym_euler_form(alg: &Algebra, a: &[i64], b: &[i64]) -> Result<i64> {
    Ok(EulerForm::new(alg)?.sym(a, b))
}

fn invert(d: &[Vec<i64>]) -> Option<Vec<Vec<Ratio<i64>>>> {
    let n = d.len();
    let mut a: Vec<Vec<Ratio<i64>>> = d
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i64>> = row.iter().map(|&x| Ratio::from_integer(x)).collect();
            r.extend((0..n).map(|j| Ratio::from_integer((i == j) as i64)));
            r
        })
        .collect();
    for c in 0..n {
        let pr = (c..n).find(|&r| a[r][c] != Ratio::from_integer(0))?;
        a.swap(c, pr);
        let piv = a[c][c];
        for x in a[c].iter_mut() {
            *x /= piv;
        }
        for r in 0..n {
            if r != c {
                let k = a[r][c];
                if k != Ratio::from_integer(0) {
                    let src = a[c].clone();
                    for (x, y) in a[r].iter_mut().zip(src) {
                        *x -= k * y;
                    }
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
