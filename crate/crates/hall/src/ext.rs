use crate::{HallCtx, Result};
use hall2p_complex2::{assemble, cone_of, index_coords, is_isomorphic, Complex2, Env, HomK, KsDecomp};
use hall2p_ffla::{Echelon, Mat, Vector};
use hall2p_quiver::RepMor;
use std::collections::BTreeMap;

/// One middle-term class of `Ext^1(X, Y)`, counted by cocycles and by cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtStratum {
    pub key: KsDecomp,
    pub ext: u64,
    pub hom_k: u64,
}

/// Cocycles `φ = (φ^1: X^1 -> Y^0, φ^0: X^0 -> Y^1)` making
/// `[[d_X, 0], [φ, d_Y]]` square to zero, modulo changes of splitting.
struct Cocycles {
    a_dim: usize,
    n: usize,
    reps: Vec<Vector>,
}

fn cocycles(env: &Env, x: &Complex2, y: &Complex2) -> Cocycles {
    let alg = &env.alg;
    let f = env.field();
    let a = env.phom(&x.pdvp.e1, &y.pdvp.e0);
    let b = env.phom(&x.pdvp.e0, &y.pdvp.e1);
    let (na, nb) = (a.dim(), b.dim());
    let n = na + nb;
    let split = |c: &[u32]| -> (RepMor, RepMor) {
        let p1 = if na > 0 { a.combine(alg, &c[..na]) } else { RepMor::zero(f, &x.x1, &y.x0) };
        let p0 = if nb > 0 { b.combine(alg, &c[na..]) } else { RepMor::zero(f, &x.x0, &y.x1) };
        (p1, p0)
    };
    let mut eqs = vec![];
    for k in 0..n {
        let mut c = vec![0; n];
        c[k] = 1;
        let (p1, p0) = split(&c);
        let mut v = x.d1.then(&p0).add(&p1.then(&y.d0)).flatten();
        v.extend(x.d0.then(&p1).add(&p0.then(&y.d1)).flatten());
        eqs.push(v);
    }
    let rows = eqs.first().map_or(0, |v| v.len());
    let z = if n == 0 {
        vec![]
    } else if rows == 0 {
        (0..n).map(|k| Mat::identity(f, n).row(k).to_vec()).collect()
    } else {
        Mat::from_cols(f, rows, &eqs).kernel_basis()
    };
    let s1 = env.phom(&x.pdvp.e1, &y.pdvp.e1);
    let s0 = env.phom(&x.pdvp.e0, &y.pdvp.e0);
    let mut bnd = vec![];
    let mut push = |p1: RepMor, p0: RepMor| {
        let mut c = a.coords(&p1).expect("coboundary lies in Hom");
        c.extend(b.coords(&p0).expect("coboundary lies in Hom"));
        bnd.push(c);
    };
    for k in 0..s1.dim() {
        let s = s1.basis_mor(alg, k);
        push(s.then(&y.d1), x.d0.then(&s).neg());
    }
    for k in 0..s0.dim() {
        let s = s0.basis_mor(alg, k);
        push(x.d1.then(&s).neg(), s.then(&y.d0));
    }
    let mut grow = Echelon::from_vectors(f, n, &bnd);
    debug_assert!({
        let ze = Echelon::from_vectors(f, n, &z);
        bnd.iter().all(|v| ze.contains(v))
    });
    let mut reps = vec![];
    for v in &z {
        if grow.insert(v) {
            reps.push(v.clone());
        }
    }
    Cocycles { a_dim: na, n, reps }
}

/// Middle terms of all classes in `Ext^1_{C_2}(X, Y)`, in coordinate order.
fn ext1_middles<T: Send>(
    env: &Env,
    x: &Complex2,
    y: &Complex2,
    each: impl Fn(Complex2) -> Result<T> + Sync,
) -> Result<Vec<Result<T>>> {
    let alg = &env.alg;
    let f = env.field();
    let co = cocycles(env, x, y);
    let a = env.phom(&x.pdvp.e1, &y.pdvp.e0);
    let b = env.phom(&x.pdvp.e0, &y.pdvp.e1);
    let k = co.reps.len();
    let n = co.n;
    let pts = env.check_points("Ext^1 enumeration", k)?;
    Ok(env.exec.map_range(pts, |i| -> Result<T> {
        let c = index_coords(env.q(), k, i);
        let mut v = vec![0; n];
        for (r, &s) in co.reps.iter().zip(&c) {
            for (t, &e) in v.iter_mut().zip(r) {
                *t = f.add(*t, f.mul(s, e));
            }
        }
        let p1 = if co.a_dim > 0 { a.combine(alg, &v[..co.a_dim]) } else { RepMor::zero(f, &x.x1, &y.x0) };
        let p0 = if n > co.a_dim { b.combine(alg, &v[co.a_dim..]) } else { RepMor::zero(f, &x.x0, &y.x1) };
        let d1 = RepMor::blocks2(&x.d1, &RepMor::zero(f, &y.x1, &x.x0), &p1, &y.d1);
        let d0 = RepMor::blocks2(&x.d0, &RepMor::zero(f, &y.x0, &x.x1), &p0, &y.d0);
        let (z, _, _) = assemble(alg, &x.pdvp, &y.pdvp, d1, d0);
        each(z)
    }))
}

/// Middle-term classes of `Ext^1_{C_2}(X, Y)` with their sizes.
pub fn ext1_classes(ctx: &HallCtx, x: &Complex2, y: &Complex2) -> Result<BTreeMap<KsDecomp, u64>> {
    let mut out = BTreeMap::new();
    for key in ext1_middles(ctx.env, x, y, |z| ctx.classify(&z))? {
        *out.entry(key?).or_insert(0) += 1;
    }
    Ok(out)
}

/// `dim Ext^1_{C_2}(X, Y)`.
pub fn ext1_dim(env: &Env, x: &Complex2, y: &Complex2) -> usize {
    cocycles(env, x, y).reps.len()
}

/// `|Ext^1_{C_2}(X, Y)_Z|` for a given middle term, without a catalog.
pub fn ext1_count_to(env: &Env, x: &Complex2, y: &Complex2, z: &Complex2) -> Result<u64> {
    if x.pdvp.add(&y.pdvp) != z.pdvp {
        return Ok(0);
    }
    let mut n = 0;
    for hit in ext1_middles(env, x, y, |m| Ok(is_isomorphic(env, &m, z)?.is_some()))? {
        n += hit? as u64;
    }
    Ok(n)
}

/// Classes of `Hom_{K_2}(X, Y*)` grouped by the middle term of their cone.
pub fn homk_classes(ctx: &HallCtx, x: &Complex2, y: &Complex2) -> Result<BTreeMap<KsDecomp, u64>> {
    let env = ctx.env;
    let ys = y.shift();
    let hk = HomK::new(env, x, &ys);
    let k = hk.dim();
    let pts = env.check_points("Hom_K enumeration", k)?;
    let keys = env.exec.map_range(pts, |i| -> Result<KsDecomp> {
        let c = index_coords(env.q(), k, i);
        let h = hk.rep(env, x, &ys, &c);
        let cone = cone_of(env, x, y, &h)?;
        ctx.classify(&cone.z)
    });
    let mut out = BTreeMap::new();
    for key in keys {
        *out.entry(key?).or_insert(0) += 1;
    }
    Ok(out)
}

/// Both stratifications side by side, keyed by middle class.
pub fn ext1_stratified(ctx: &HallCtx, x: &Complex2, y: &Complex2) -> Result<Vec<ExtStratum>> {
    let e = ext1_classes(ctx, x, y)?;
    let h = homk_classes(ctx, x, y)?;
    let mut keys: Vec<&KsDecomp> = e.keys().chain(h.keys()).collect();
    keys.sort();
    keys.dedup();
    Ok(keys
        .into_iter()
        .map(|k| ExtStratum {
            key: k.clone(),
            ext: e.get(k).copied().unwrap_or(0),
            hom_k: h.get(k).copied().unwrap_or(0),
        })
        .collect())
}
