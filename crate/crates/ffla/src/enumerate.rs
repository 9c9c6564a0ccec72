use crate::{FflaError, Fp, Result, Vector};

/// Odometer over all coefficient tuples in `F_p^k`, last coordinate fastest.
#[derive(Clone, Debug)]
pub struct CoeffIter {
    p: u32,
    cur: Vec<u32>,
    done: bool,
}

impl CoeffIter {
    pub fn new(p: u32, k: usize) -> Self {
        CoeffIter { p, cur: vec![0; k], done: false }
    }
}

impl Iterator for CoeffIter {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        let mut i = self.cur.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.cur[i] += 1;
            if self.cur[i] < self.p {
                break;
            }
            self.cur[i] = 0;
        }
        Some(out)
    }
}

/// All vectors in the span of a basis, in lex order of coefficient tuples.
#[derive(Clone, Debug)]
pub struct SpaceIter {
    f: Fp,
    dim: usize,
    basis: Vec<Vector>,
    coeffs: CoeffIter,
}

impl Iterator for SpaceIter {
    type Item = Vector;

    fn next(&mut self) -> Option<Vector> {
        let c = self.coeffs.next()?;
        let f = self.f;
        let mut v = vec![0; self.dim];
        for (b, &a) in self.basis.iter().zip(&c) {
            if a != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = f.add(*x, f.mul(a, y));
                }
            }
        }
        Some(v)
    }
}

pub fn count_points(p: u32, k: usize) -> u128 {
    (p as u128).pow(k as u32)
}

/// Fails with a capacity error when `p^k > cap`.
pub fn check_cap(p: u32, k: usize, cap: u64) -> Result<()> {
    let ok = (p as u128).checked_pow(k as u32).is_some_and(|n| n <= cap as u128);
    if ok {
        Ok(())
    } else {
        Err(FflaError::Capacity { p, dim: k, cap })
    }
}

pub fn enumerate_space(f: Fp, dim: usize, basis: &[Vector], cap: u64) -> Result<SpaceIter> {
    check_cap(f.p(), basis.len(), cap)?;
    if let Some(b) = basis.iter().find(|b| b.len() != dim) {
        return Err(FflaError::Dim(format!("basis vector of length {} in ambient dimension {}", b.len(), dim)));
    }
    debug_assert_eq!(
        crate::Echelon::from_vectors(f, dim, basis).dim(),
        basis.len(),
        "enumerate_space basis must be independent"
    );
    Ok(SpaceIter { f, dim, basis: basis.to_vec(), coeffs: CoeffIter::new(f.p(), basis.len()) })
}

/// `|GL_n(F_q)|`.
pub fn gl_order(q: u32, n: usize) -> u128 {
    let q = q as u128;
    let qn = q.pow(n as u32);
    (0..n as u32).map(|i| qn - q.pow(i)).product()
}
