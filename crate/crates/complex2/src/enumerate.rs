use crate::iso::index_coords;
use crate::phom::placed;
use crate::{Complex2, Env, Layout, Pdvp, PHom, Result};
use hall2p_ffla::{enumerate_space, Echelon, Mat, Vector};
use hall2p_quiver::RepMor;
use std::sync::{Arc, OnceLock};

fn unit(n: usize, k: usize) -> Vec<u32> {
    let mut c = vec![0; n];
    c[k] = 1;
    c
}

/// Differential pairs `(d^1, d^0)` in coordinates over fixed bases of
/// `Hom_A(X^1, X^0)` and `Hom_A(X^0, X^1)` (or their radicals).
#[derive(Clone, Debug)]
pub struct PointSpace {
    pub pdvp: Pdvp,
    pub radical: bool,
    h1: Arc<PHom>,
    h0: Arc<PHom>,
    prods: OnceLock<Vec<Vec<Vector>>>,
}

impl PointSpace {
    pub fn new(env: &Env, pdvp: &Pdvp, radical: bool) -> Self {
        PointSpace {
            pdvp: pdvp.clone(),
            radical,
            h1: env.phom(&pdvp.e1, &pdvp.e0),
            h0: env.phom(&pdvp.e0, &pdvp.e1),
            prods: OnceLock::new(),
        }
    }

    fn basis1(&self) -> &Echelon {
        if self.radical {
            &self.h1.rad
        } else {
            &self.h1.ech
        }
    }

    fn basis0(&self) -> &Echelon {
        if self.radical {
            &self.h0.rad
        } else {
            &self.h0.ech
        }
    }

    pub fn n1(&self) -> usize {
        self.basis1().dim()
    }

    pub fn n0(&self) -> usize {
        self.basis0().dim()
    }

    pub fn d1(&self, env: &Env, c1: &[u32]) -> RepMor {
        self.h1.to_mor(&env.alg, &self.basis1().combine(c1))
    }

    pub fn d0(&self, env: &Env, c0: &[u32]) -> RepMor {
        self.h0.to_mor(&env.alg, &self.basis0().combine(c0))
    }

    pub fn complex(&self, env: &Env, c1: &[u32], c0: &[u32]) -> Complex2 {
        Complex2::from_parts(&env.alg, self.pdvp.clone(), self.d1(env, c1), self.d0(env, c0))
    }

    /// Coordinates of a complex with this pdvp, if its differentials lie in the bases.
    pub fn coords(&self, x: &Complex2) -> Option<(Vector, Vector)> {
        Some((self.basis1().coords(&x.d1.flatten())?, self.basis0().coords(&x.d0.flatten())?))
    }

    /// `(d1 d0, d0 d1)` flattened, for basis elements `k` of the first side and `l` of the second.
    fn products(&self, env: &Env) -> &Vec<Vec<Vector>> {
        self.prods.get_or_init(|| {
            let (n1, n0) = (self.n1(), self.n0());
            let d1s: Vec<RepMor> = (0..n1).map(|k| self.d1(env, &unit(n1, k))).collect();
            let d0s: Vec<RepMor> = (0..n0).map(|l| self.d0(env, &unit(n0, l))).collect();
            d1s.iter()
                .map(|d1| {
                    d0s.iter()
                        .map(|d0| {
                            let mut v = d1.then(d0).flatten();
                            v.extend(d0.then(d1).flatten());
                            v
                        })
                        .collect()
                })
                .collect()
        })
    }

    fn rows(&self, env: &Env) -> usize {
        let (a, b) = (Layout::new(&env.alg, &self.pdvp.e1), Layout::new(&env.alg, &self.pdvp.e0));
        let sq = |l: &Layout| l.dims.iter().map(|d| d * d).sum::<usize>();
        sq(&a) + sq(&b)
    }

    /// Echelon basis (in `c0` coordinates) of the admissible `d^0` for `d^1 = Σ c1_k b_k`.
    pub fn d0_kernel(&self, env: &Env, c1: &[u32]) -> Vec<Vector> {
        let (n1, n0) = (self.n1(), self.n0());
        if n0 == 0 {
            return vec![];
        }
        let f = env.field();
        let rows = self.rows(env);
        let pr = self.products(env);
        let mut m = Mat::zeros(f, rows, n0);
        for k in 0..n1 {
            if c1[k] == 0 {
                continue;
            }
            for l in 0..n0 {
                for (r, &x) in pr[k][l].iter().enumerate() {
                    if x != 0 {
                        m.set(r, l, f.add(m.get(r, l), f.mul(c1[k], x)));
                    }
                }
            }
        }
        m.kernel_basis()
    }

    /// Symmetric counterpart: admissible `d^1` for `d^0 = Σ c0_l b_l`.
    pub fn d1_kernel(&self, env: &Env, c0: &[u32]) -> Vec<Vector> {
        let (n1, n0) = (self.n1(), self.n0());
        if n1 == 0 {
            return vec![];
        }
        let f = env.field();
        let rows = self.rows(env);
        let pr = self.products(env);
        let mut m = Mat::zeros(f, rows, n1);
        for l in 0..n0 {
            if c0[l] == 0 {
                continue;
            }
            for k in 0..n1 {
                for (r, &x) in pr[k][l].iter().enumerate() {
                    if x != 0 {
                        m.set(r, k, f.add(m.get(r, k), f.mul(c0[l], x)));
                    }
                }
            }
        }
        m.kernel_basis()
    }

    /// Number of valid points, summing over the smaller side.
    pub fn count(&self, env: &Env) -> Result<u128> {
        let q = env.q();
        let (n1, n0) = (self.n1(), self.n0());
        if n1 <= n0 {
            let pts = env.check_points("point count", n1)?;
            Ok(env.exec.sum_range(pts, |i| {
                let c1 = index_coords(q, n1, i);
                (q as u128).pow(self.d0_kernel(env, &c1).len() as u32)
            }))
        } else {
            let pts = env.check_points("point count", n0)?;
            Ok(env.exec.sum_range(pts, |i| {
                let c0 = index_coords(q, n0, i);
                (q as u128).pow(self.d1_kernel(env, &c0).len() as u32)
            }))
        }
    }

    /// Valid points in lexicographic order of `(c1, c0)`.
    pub fn scan<'a>(&'a self, env: &'a Env) -> Result<impl Iterator<Item = (Vector, Vector)> + 'a> {
        let q = env.q();
        let n1 = self.n1();
        let pts = env.check_points("point scan", n1)?;
        Ok((0..pts).flat_map(move |i| {
            let c1 = index_coords(q, n1, i);
            let ker = self.d0_kernel(env, &c1);
            let n0 = self.n0();
            let it = enumerate_space(env.field(), n0, &ker, u64::MAX).expect("kernel fits");
            it.map(move |c0| (c1.clone(), c0))
        }))
    }

    /// Action of `Aut(P^{e1}) x Aut(P^{e0})` generators as matrices on `(c1, c0)`.
    fn generators(&self, env: &Env) -> Vec<Mat> {
        let f = env.field();
        let (n1, n0) = (self.n1(), self.n0());
        let mut out = vec![];
        for (deg, e) in [(1, &self.pdvp.e1), (0, &self.pdvp.e0)] {
            for g in aut_generators(env, e) {
                let gi = g.inverse().expect("generator is invertible");
                let mut m = Mat::zeros(f, n1 + n0, n1 + n0);
                for k in 0..n1 + n0 {
                    let mut c = vec![0; n1 + n0];
                    c[k] = 1;
                    let d1 = self.d1(env, &c[..n1]);
                    let d0 = self.d0(env, &c[n1..]);
                    // (d1, d0) -> (g0 d1 g1^-1, g1 d0 g0^-1)
                    let (nd1, nd0) = if deg == 1 { (gi.then(&d1), d0.then(&g)) } else { (d1.then(&g), gi.then(&d0)) };
                    let a = self.basis1().coords(&nd1.flatten()).expect("orbit stays in the space");
                    let b = self.basis0().coords(&nd0.flatten()).expect("orbit stays in the space");
                    for (r, &x) in a.iter().chain(&b).enumerate() {
                        m.set(r, k, x);
                    }
                }
                out.push(m);
            }
        }
        out
    }
}

/// Generators of `Aut_A(P^e)`: scalings, transvections between copies, and `1 + radical path`.
pub fn aut_generators(env: &Env, e: &[usize]) -> Vec<RepMor> {
    let alg = &env.alg;
    let f = env.field();
    let h = env.phom(e, e);
    let lay = &h.src;
    let id = RepMor::identity(f, &alg.proj_sum(e));
    let w = f.primitive_root();
    let mut out = vec![];
    let ns = lay.summands.len();
    for s in 0..ns {
        let i = lay.summands[s];
        let mut x = vec![0; alg.pdim(i, i)];
        x[0] = f.sub(w, 1);
        if w != 1 {
            out.push(id.add(&placed(alg, lay, lay, s, s, &x)));
        }
    }
    for t in 0..ns {
        for s in 0..ns {
            let (i, j) = (lay.summands[s], lay.summands[t]);
            for (k, p) in alg.path_basis(j, i).iter().enumerate() {
                if p.is_empty() && s == t {
                    continue;
                }
                let mut x = vec![0; alg.pdim(j, i)];
                x[k] = 1;
                out.push(id.add(&placed(alg, lay, lay, t, s, &x)));
            }
        }
    }
    out
}

/// Total number of radical points with the given pdvp.
pub fn radical_point_count(env: &Env, pdvp: &Pdvp) -> Result<u128> {
    PointSpace::new(env, pdvp, true).count(env)
}

/// An isomorphism class found by exhaustive orbit enumeration.
#[derive(Clone, Debug)]
pub struct ClassRep {
    pub label: String,
    pub complex: Complex2,
    pub orbit: u64,
}

fn find(parent: &mut [u32], mut a: u32) -> u32 {
    while parent[a as usize] != a {
        parent[a as usize] = parent[parent[a as usize] as usize];
        a = parent[a as usize];
    }
    a
}

fn orbits(env: &Env, space: &PointSpace) -> Result<Vec<ClassRep>> {
    let q = env.q();
    let (n1, n0) = (space.n1(), space.n0());
    let total = env.check_points("orbit enumeration", n1 + n0)?;
    let mut valid = vec![false; total as usize];
    let q0 = (q as u64).pow(n0 as u32);
    for (c1, c0) in space.scan(env)? {
        let idx = index_of(q, &c1) * q0 + index_of(q, &c0);
        valid[idx as usize] = true;
    }
    let gens = space.generators(env);
    let mut parent: Vec<u32> = (0..total as u32).collect();
    for i in 0..total {
        if !valid[i as usize] {
            continue;
        }
        let c = index_coords(q, n1 + n0, i);
        for g in &gens {
            let img = g.mul_vec(&c);
            let j = index_of(q, &img);
            debug_assert!(valid[j as usize]);
            let (a, b) = (find(&mut parent, i as u32), find(&mut parent, j as u32));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
    }
    let mut sizes = std::collections::BTreeMap::new();
    for i in 0..total {
        if valid[i as usize] {
            *sizes.entry(find(&mut parent, i as u32)).or_insert(0u64) += 1;
        }
    }
    Ok(sizes
        .into_iter()
        .map(|(root, orbit)| {
            let c = index_coords(q, n1 + n0, root as u64);
            let complex = space.complex(env, &c[..n1], &c[n1..]);
            ClassRep { label: complex.serialize(), complex, orbit }
        })
        .collect())
}

fn index_of(q: u32, c: &[u32]) -> u64 {
    c.iter().fold(0u64, |acc, &x| acc * q as u64 + x as u64)
}

/// Isomorphism classes of radical complexes with pdvp `e`, each labelled by
/// its lexicographically least point.
pub fn enumerate_radical(env: &Env, pdvp: &Pdvp) -> Result<Vec<ClassRep>> {
    orbits(env, &PointSpace::new(env, pdvp, true))
}

/// Isomorphism classes of all complexes with pdvp `e`.
pub fn enumerate_all(env: &Env, pdvp: &Pdvp) -> Result<Vec<ClassRep>> {
    orbits(env, &PointSpace::new(env, pdvp, false))
}
