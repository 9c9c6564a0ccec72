use crate::phom::sum_perm;
use crate::{Complex2, ComplexError, Env, Pdvp, Result};
use hall2p_ffla::{Echelon, Frame, Mat, Vector};
use hall2p_quiver::{Algebra, RepMor};

/// A chain map `(f^1, f^0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainMap {
    pub f1: RepMor,
    pub f0: RepMor,
}

impl ChainMap {
    pub fn zero(env: &Env, x: &Complex2, y: &Complex2) -> ChainMap {
        let f = env.field();
        ChainMap { f1: RepMor::zero(f, &x.x1, &y.x1), f0: RepMor::zero(f, &x.x0, &y.x0) }
    }

    pub fn identity(env: &Env, x: &Complex2) -> ChainMap {
        let f = env.field();
        ChainMap { f1: RepMor::identity(f, &x.x1), f0: RepMor::identity(f, &x.x0) }
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &ChainMap) -> ChainMap {
        ChainMap { f1: self.f1.then(&g.f1), f0: self.f0.then(&g.f0) }
    }

    pub fn add(&self, o: &ChainMap) -> ChainMap {
        ChainMap { f1: self.f1.add(&o.f1), f0: self.f0.add(&o.f0) }
    }

    pub fn sub(&self, o: &ChainMap) -> ChainMap {
        ChainMap { f1: self.f1.sub(&o.f1), f0: self.f0.sub(&o.f0) }
    }

    pub fn scale(&self, c: u32) -> ChainMap {
        ChainMap { f1: self.f1.scale(c), f0: self.f0.scale(c) }
    }

    pub fn neg(&self) -> ChainMap {
        ChainMap { f1: self.f1.neg(), f0: self.f0.neg() }
    }

    pub fn flatten(&self) -> Vector {
        let mut v = self.f1.flatten();
        v.extend(self.f0.flatten());
        v
    }

    pub fn is_chain_map(&self, x: &Complex2, y: &Complex2) -> bool {
        y.d1.then_left(&self.f1) == x.d1.then(&self.f0) && y.d0.then_left(&self.f0) == x.d0.then(&self.f1)
    }

    pub fn is_iso(&self) -> bool {
        self.f1.is_iso() && self.f0.is_iso()
    }

    pub fn inverse(&self) -> Option<ChainMap> {
        Some(ChainMap { f1: self.f1.inverse()?, f0: self.f0.inverse()? })
    }

    /// The same matrices read as a map `X* -> Y*`.
    pub fn shifted(&self) -> ChainMap {
        ChainMap { f1: self.f0.clone(), f0: self.f1.clone() }
    }

    pub fn from_flat(env: &Env, x: &Complex2, y: &Complex2, flat: &[u32]) -> ChainMap {
        let h1 = env.phom(&x.pdvp.e1, &y.pdvp.e1);
        let n1 = h1.flat_len();
        let h0 = env.phom(&x.pdvp.e0, &y.pdvp.e0);
        ChainMap { f1: h1.to_mor(&env.alg, &flat[..n1]), f0: h0.to_mor(&env.alg, &flat[n1..]) }
    }
}

trait ThenLeft {
    fn then_left(&self, first: &RepMor) -> RepMor;
}

impl ThenLeft for RepMor {
    /// `self ∘ first`.
    fn then_left(&self, first: &RepMor) -> RepMor {
        first.then(self)
    }
}

/// `Hom_{C_2}(X, Y)` with an echelon basis in flattened coordinates.
#[derive(Clone, Debug)]
pub struct HomC {
    pub ech: Echelon,
    pub basis: Vec<ChainMap>,
}

fn solve_kernel(f: hall2p_ffla::Fp, cols: &[Vector], rows: usize) -> Vec<Vector> {
    if cols.is_empty() {
        return vec![];
    }
    Mat::from_cols(f, rows, cols).kernel_basis()
}

impl HomC {
    pub fn new(env: &Env, x: &Complex2, y: &Complex2) -> HomC {
        let alg = &env.alg;
        let f = env.field();
        let h1 = env.phom(&x.pdvp.e1, &y.pdvp.e1);
        let h0 = env.phom(&x.pdvp.e0, &y.pdvp.e0);
        let mut gens: Vec<ChainMap> = vec![];
        for k in 0..h1.dim() {
            gens.push(ChainMap { f1: h1.basis_mor(alg, k), f0: RepMor::zero(f, &x.x0, &y.x0) });
        }
        for k in 0..h0.dim() {
            gens.push(ChainMap { f1: RepMor::zero(f, &x.x1, &y.x1), f0: h0.basis_mor(alg, k) });
        }
        let eqs: Vec<Vector> = gens
            .iter()
            .map(|g| {
                let mut v = g.f1.then(&y.d1).sub(&x.d1.then(&g.f0)).flatten();
                v.extend(g.f0.then(&y.d0).sub(&x.d0.then(&g.f1)).flatten());
                v
            })
            .collect();
        let rows = eqs.first().map_or(0, |v| v.len());
        let ker = solve_kernel(f, &eqs, rows);
        let flats: Vec<Vector> = ker
            .iter()
            .map(|c| {
                let mut acc = ChainMap::zero(env, x, y);
                for (g, &a) in gens.iter().zip(c) {
                    if a != 0 {
                        acc = acc.add(&g.scale(a));
                    }
                }
                acc.flatten()
            })
            .collect();
        let flat_len = h1.flat_len() + h0.flat_len();
        let ech = Echelon::from_vectors(f, flat_len, &flats);
        let basis = ech.basis.iter().map(|v| ChainMap::from_flat(env, x, y, v)).collect();
        HomC { ech, basis }
    }

    pub fn dim(&self) -> usize {
        self.ech.dim()
    }

    pub fn coords(&self, m: &ChainMap) -> Option<Vector> {
        self.ech.coords(&m.flatten())
    }

    pub fn combine(&self, env: &Env, x: &Complex2, y: &Complex2, c: &[u32]) -> ChainMap {
        ChainMap::from_flat(env, x, y, &self.ech.combine(c))
    }
}

/// `Htp(X, Y)` inside the flattened chain-map space.
pub fn homotopy_space(env: &Env, x: &Complex2, y: &Complex2) -> Echelon {
    let alg = &env.alg;
    let f = env.field();
    let a = env.phom(&x.pdvp.e1, &y.pdvp.e0);
    let b = env.phom(&x.pdvp.e0, &y.pdvp.e1);
    let mut flats = vec![];
    for k in 0..a.dim() {
        let h1 = a.basis_mor(alg, k);
        // f1 = d0_Y h1, f0 = h1 d0_X
        flats.push(ChainMap { f1: h1.then(&y.d0), f0: x.d0.then(&h1) }.flatten());
    }
    for k in 0..b.dim() {
        let h0 = b.basis_mor(alg, k);
        // f1 = h0 d1_X, f0 = d1_Y h0
        flats.push(ChainMap { f1: x.d1.then(&h0), f0: h0.then(&y.d1) }.flatten());
    }
    let len = env.phom(&x.pdvp.e1, &y.pdvp.e1).flat_len() + env.phom(&x.pdvp.e0, &y.pdvp.e0).flat_len();
    Echelon::from_vectors(f, len, &flats)
}

/// `Hom_{K_2}(X, Y) = Hom_{C_2}(X, Y) / Htp(X, Y)` with a fixed transversal.
#[derive(Clone, Debug)]
pub struct HomK {
    pub homc: HomC,
    pub htp: Echelon,
    /// representatives of a basis of the quotient
    pub reps: Vec<ChainMap>,
    frame: Frame,
}

impl HomK {
    pub fn new(env: &Env, x: &Complex2, y: &Complex2) -> HomK {
        let homc = HomC::new(env, x, y);
        let htp = homotopy_space(env, x, y);
        let f = env.field();
        let mut grow = htp.clone();
        let mut comp = vec![];
        for v in &homc.ech.basis {
            if grow.insert(v) {
                comp.push(v.clone());
            }
        }
        let mut vecs = htp.basis.clone();
        vecs.extend(comp.iter().cloned());
        let frame = Frame::new(f, homc.ech.dim_ambient, vecs);
        let reps = comp.iter().map(|v| ChainMap::from_flat(env, x, y, v)).collect();
        HomK { homc, htp, reps, frame }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Coordinates of the class of `m` in the transversal basis.
    pub fn coords(&self, m: &ChainMap) -> Vector {
        let c = self.frame.coords_unchecked(&m.flatten());
        c[self.htp.dim()..].to_vec()
    }

    pub fn rep(&self, env: &Env, x: &Complex2, y: &Complex2, c: &[u32]) -> ChainMap {
        let f = env.field();
        let mut v = vec![0; self.homc.ech.dim_ambient];
        for (r, &a) in self.reps.iter().zip(c) {
            if a != 0 {
                for (t, s) in v.iter_mut().zip(r.flatten()) {
                    *t = f.add(*t, f.mul(a, s));
                }
            }
        }
        ChainMap::from_flat(env, x, y, &v)
    }

    pub fn is_nullhomotopic(&self, m: &ChainMap) -> bool {
        self.htp.contains(&m.flatten())
    }
}

/// Middle term of the standard triangle `Y -ι-> Z_h -π-> X -h-> Y*`.
#[derive(Clone, Debug)]
pub struct Cone {
    pub z: Complex2,
    pub iota: ChainMap,
    pub pi: ChainMap,
}

/// Assemble a complex on `X ⊕ Y` given block differentials, and return it in
/// standard form together with the layout permutations.
pub fn assemble(alg: &Algebra, px: &Pdvp, py: &Pdvp, d1: RepMor, d0: RepMor) -> (Complex2, RepMor, RepMor) {
    let s1 = sum_perm(alg, &px.e1, &py.e1);
    let s0 = sum_perm(alg, &px.e0, &py.e0);
    let (i1, i0) = (s1.inverse().unwrap(), s0.inverse().unwrap());
    let z = Complex2::from_parts(alg, px.add(py), i1.then(&d1).then(&s0), i0.then(&d0).then(&s1));
    (z, s1, s0)
}

fn inj(f: hall2p_ffla::Fp, a: &hall2p_quiver::Rep, b: &hall2p_quiver::Rep, second: bool) -> RepMor {
    // a or b into a ⊕ b
    RepMor {
        blocks: (0..a.dims.len())
            .map(|v| {
                let (da, db) = (a.dims[v], b.dims[v]);
                let mut m = Mat::zeros(f, da + db, if second { db } else { da });
                let (o, n) = if second { (da, db) } else { (0, da) };
                for k in 0..n {
                    m.set(o + k, k, 1);
                }
                m
            })
            .collect(),
    }
}

/// Cone of a chain map `f: X -> Y*`: `d^1 = [[d^1_X, 0], [-f^1, d^1_Y]]`,
/// `d^0 = [[d^0_X, 0], [-f^0, d^0_Y]]`, `ι = (0, 1)^T`, `π = (1, 0)`.
pub fn cone_of(env: &Env, x: &Complex2, y: &Complex2, h: &ChainMap) -> Result<Cone> {
    let ys = y.shift();
    if !h.is_chain_map(x, &ys) {
        return Err(ComplexError::Input("cone_of: representative is not a chain map X -> Y*".into()));
    }
    let alg = &env.alg;
    let f = env.field();
    let z10 = RepMor::zero(f, &y.x1, &x.x0);
    let z01 = RepMor::zero(f, &y.x0, &x.x1);
    let d1 = RepMor::blocks2(&x.d1, &z10, &h.f1.neg(), &y.d1);
    let d0 = RepMor::blocks2(&x.d0, &z01, &h.f0.neg(), &y.d0);
    let (z, s1, s0) = assemble(alg, &x.pdvp, &y.pdvp, d1, d0);
    let iota = ChainMap { f1: inj(f, &x.x1, &y.x1, true).then(&s1), f0: inj(f, &x.x0, &y.x0, true).then(&s0) };
    let pt1 = inj(f, &x.x1, &y.x1, false);
    let pt0 = inj(f, &x.x0, &y.x0, false);
    let pi = ChainMap {
        f1: s1.inverse().unwrap().then(&transpose_mor(&pt1)),
        f0: s0.inverse().unwrap().then(&transpose_mor(&pt0)),
    };
    debug_assert!(z.is_valid(alg));
    Ok(Cone { z, iota, pi })
}

pub(crate) fn transpose_mor(m: &RepMor) -> RepMor {
    RepMor { blocks: m.blocks.iter().map(|b| b.transpose()).collect() }
}

/// Direct sum of two chain maps `X ⊕ X' -> Y ⊕ Y'`, all in standard layout.
pub fn sum_maps(env: &Env, x: (&Complex2, &Complex2), y: (&Complex2, &Complex2), f: &ChainMap, g: &ChainMap) -> ChainMap {
    let alg = &env.alg;
    let (sx1, sx0) = x.0.sum_perms(alg, x.1);
    let (sy1, sy0) = y.0.sum_perms(alg, y.1);
    let bd = |a: &RepMor, b: &RepMor| RepMor {
        blocks: a.blocks.iter().zip(&b.blocks).map(|(p, q)| Mat::block_diag(p, q)).collect(),
    };
    ChainMap {
        f1: sx1.inverse().unwrap().then(&bd(&f.f1, &g.f1)).then(&sy1),
        f0: sx0.inverse().unwrap().then(&bd(&f.f0, &g.f0)).then(&sy0),
    }
}
