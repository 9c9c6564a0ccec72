use crate::Result;
use hall2p_complex2::{Complex2, Env, HomK};
use hall2p_quiver::{EulerForm, Rep};

/// A class in `K_0`, in the basis of simples through `X -> X^0 - X^1`.
pub type KClass0 = Vec<i64>;

pub fn kclass(x: &Complex2) -> KClass0 {
    x.kclass()
}

/// `dim Hom(X,Y) - dim Hom(X,Y*) + dim Hom(Y,X) - dim Hom(Y,X*)` in the homotopy category.
pub fn sym_form_k(env: &Env, x: &Complex2, y: &Complex2) -> i64 {
    let d = |a: &Complex2, b: &Complex2| HomK::new(env, a, b).dim() as i64;
    d(x, y) - d(x, &y.shift()) + d(y, x) - d(y, &x.shift())
}

/// Gram matrix of the symmetric form on the classes of the simples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymForm {
    pub gram: Vec<Vec<i64>>,
}

impl SymForm {
    /// From homotopy-category Hom dimensions between the complexes `C_{S_i}`.
    pub fn from_homotopy(env: &Env) -> Result<SymForm> {
        let simples = simple_complexes(env)?;
        let gram = simples.iter().map(|a| simples.iter().map(|b| sym_form_k(env, a, b)).collect()).collect();
        Ok(SymForm { gram })
    }

    /// The symmetric Euler form of the algebra.
    pub fn euler(env: &Env) -> Result<SymForm> {
        let e = EulerForm::new(&env.alg).map_err(hall2p_complex2::ComplexError::from)?;
        let n = env.alg.n();
        let unit = |i: usize| (0..n).map(|j| (i == j) as i64).collect::<Vec<_>>();
        let gram = (0..n).map(|i| (0..n).map(|j| e.sym(&unit(i), &unit(j))).collect()).collect();
        Ok(SymForm { gram })
    }

    pub fn eval(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.gram.len();
        (0..n).map(|i| (0..n).map(|j| a[i] * self.gram[i][j] * b[j]).sum::<i64>()).sum()
    }
}

/// `sym_form(d, d')` through the homotopy-category Gram matrix.
pub fn sym_form(env: &Env, d: &[i64], d2: &[i64]) -> Result<i64> {
    Ok(SymForm::from_homotopy(env)?.eval(d, d2))
}

/// The complexes `C_{S_i}` from minimal projective resolutions.
pub fn simple_complexes(env: &Env) -> Result<Vec<Complex2>> {
    (0..env.alg.n())
        .map(|i| Ok(Complex2::from_module(&env.alg, &Rep::simple(&env.alg, i))?))
        .collect()
}
