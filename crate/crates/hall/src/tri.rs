use crate::ctx::Units;
use crate::{mod_residue, Frac, HallCtx, HallError, Result};
use hall2p_complex2::{
    cone_of, decompose, homotopy_space, index_coords, is_isomorphic, ChainMap, Complex2, Env, HomK, KsDecomp,
};
use hall2p_ffla::{Mat, Vector};
use std::collections::{BTreeMap, HashMap};

/// Whether `m: A -> B` is an isomorphism in the homotopy category.
pub fn is_k_iso(env: &Env, m: &ChainMap, a: &Complex2, b: &Complex2) -> Result<bool> {
    let (da, db) = (decompose(env, a)?, decompose(env, b)?);
    if da.xr.pdvp != db.xr.pdvp {
        return Ok(false);
    }
    Ok(da.incl_r.then(m).then(&db.proj_r).is_iso())
}

/// `Y -f-> Z -g-> X -h-> Y*` is isomorphic to the standard triangle of `h`.
pub fn is_distinguished(
    env: &Env,
    x: &Complex2,
    y: &Complex2,
    z: &Complex2,
    f: &ChainMap,
    g: &ChainMap,
    h: &ChainMap,
) -> Result<bool> {
    let cone = cone_of(env, x, y, h)?;
    let zh = &cone.z;
    let lam = HomK::new(env, zh, z);
    let k = lam.dim();
    let hf = homotopy_space(env, y, z);
    let hg = homotopy_space(env, zh, x);
    let pts = env.check_points("triangle morphism search", k)?;
    for i in 0..pts {
        let c = index_coords(env.q(), k, i);
        let l = lam.rep(env, zh, z, &c);
        if !hf.contains(&cone.iota.then(&l).sub(f).flatten()) {
            continue;
        }
        if !hg.contains(&l.then(g).sub(&cone.pi).flatten()) {
            continue;
        }
        if is_k_iso(env, &l, zh, z)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Triangles `Y -> Z -> X -> Y*` with `Z` in one homotopy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriCount {
    /// `|Hom_{K_2}(X, Y*)_Z|`
    pub hom_k: u64,
    /// `|W(X, Y; Z)|`
    pub w: u64,
    /// `F^Z_{XY}`
    pub orbits: u64,
    /// `|Hom_{K_2}(X, Y*)_Z| |Aut_K Z| / (|Aut_K X| |Aut_K Y|)`
    pub ratio: Frac,
    /// the ratio modulo `q - 1`, when its denominator allows
    pub residue: Option<u32>,
}

/// Linear action on HomK coordinates, from images of the transversal basis.
fn action(env: &Env, hk: &HomK, a: &Complex2, b: &Complex2, op: impl Fn(&ChainMap) -> ChainMap) -> Mat {
    let n = hk.dim();
    let cols: Vec<Vector> = (0..n)
        .map(|j| {
            let mut c = vec![0; n];
            c[j] = 1;
            hk.coords(&op(&hk.rep(env, a, b, &c)))
        })
        .collect();
    if n == 0 {
        return Mat::zeros(env.field(), 0, 0);
    }
    Mat::from_cols(env.field(), n, &cols)
}

fn apply(m: &Mat, v: &[u32]) -> Vector {
    if v.is_empty() {
        vec![]
    } else {
        m.mul_vec(v)
    }
}

/// Orbits of `Aut_K(X) × Aut_K(Y)` on a stable set of `(h, f, g)` coordinates.
#[allow(clippy::too_many_arguments)]
fn orbit_count(
    env: &Env,
    ux: &Units,
    uy: &Units,
    gh: &[Mat],
    (hk, kf, kg): (&HomK, &HomK, &HomK),
    (x, y, z): (&Complex2, &Complex2, &Complex2),
    w: &[Vector],
    index: &HashMap<Vector, usize>,
) -> Result<u64> {
    let gf: Vec<Mat> = ux
        .units
        .iter()
        .map(|_| Mat::identity(env.field(), kf.dim()))
        .chain(uy.units.iter().map(|(_, bi)| action(env, kf, y, z, |f| bi.then(f))))
        .collect();
    let gg: Vec<Mat> = ux
        .units
        .iter()
        .map(|(a, _)| action(env, kg, z, x, |g| g.then(a)))
        .chain(uy.units.iter().map(|_| Mat::identity(env.field(), kg.dim())))
        .collect();
    let (nh, nf) = (hk.dim(), kf.dim());
    let mut parent: Vec<usize> = (0..w.len()).collect();
    for i in 0..w.len() {
        for j in 0..gh.len() {
            let e = &w[i];
            let mut img = apply(&gh[j], &e[..nh]);
            img.extend(apply(&gf[j], &e[nh..nh + nf]));
            img.extend(apply(&gg[j], &e[nh + nf..]));
            let t = *index
                .get(&img)
                .ok_or_else(|| HallError::Internal("triangle set not stable under automorphisms".into()))?;
            let (a, b) = (find(&mut parent, i), find(&mut parent, t));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    Ok((0..w.len()).filter(|&i| find(&mut parent, i) == i).count() as u64)
}

fn h_action(env: &Env, ux: &Units, uy: &Units, hk: &HomK, x: &Complex2, ys: &Complex2) -> Vec<Mat> {
    ux.units
        .iter()
        .map(|(_, ai)| action(env, hk, x, ys, |h| ai.then(h)))
        .chain(uy.units.iter().map(|(b, _)| action(env, hk, x, ys, |h| h.then(&b.shifted()))))
        .collect()
}

fn find(parent: &mut [usize], mut a: usize) -> usize {
    while parent[a] != a {
        parent[a] = parent[parent[a]];
        a = parent[a];
    }
    a
}

/// `F^Z_{XY}` for every homotopy class `Z`, by building `W(X, Y; Z)` from the
/// standard triangles of all `h` and counting `Aut_K(X) × Aut_K(Y)` orbits.
/// `X` and `Y` must be catalog representatives.
pub fn triangle_counts(ctx: &HallCtx, x: &Complex2, y: &Complex2) -> Result<BTreeMap<KsDecomp, TriCount>> {
    let env = ctx.env;
    let (ux, uy) = catalog_units(ctx, x, y)?;
    let ys = y.shift();
    let hk = HomK::new(env, x, &ys);
    let k = hk.dim();
    let pts = env.check_points("Hom_K(X, Y*) enumeration", k)?;
    let cones = env.exec.map_range(pts, |i| -> Result<(Vector, KsDecomp)> {
        let c = index_coords(env.q(), k, i);
        let cone = cone_of(env, x, y, &hk.rep(env, x, &ys, &c))?;
        let d = decompose(env, &cone.z)?;
        let rad = ctx
            .cat
            .ks(env, &d.xr)
            .ok_or_else(|| HallError::Internal(format!("cone {} outside the catalog", cone.z.serialize())))?;
        let n = env.alg.n();
        Ok((c, KsDecomp { rad, p: vec![0; n], q: vec![0; n] }))
    });
    let mut groups: BTreeMap<KsDecomp, Vec<Vector>> = BTreeMap::new();
    for r in cones {
        let (c, key) = r?;
        groups.entry(key).or_default().push(c);
    }

    // Aut_K(X) × Aut_K(Y) generators acting on (h, f, g) for a given Z
    let gh = h_action(env, &ux, &uy, &hk, x, &ys);
    let (ax, ay) = (ux.units.len() as i128, uy.units.len() as i128);

    let mut out = BTreeMap::new();
    for (key, hs) in groups {
        let uz = ctx.units(&key)?;
        let z = &uz.z;
        let kf = HomK::new(env, y, z);
        let kg = HomK::new(env, z, x);
        let zf: Vec<Mat> = uz.units.iter().map(|(u, _)| action(env, &kf, y, z, |f| f.then(u))).collect();
        let zg: Vec<Mat> = uz.units.iter().map(|(_, ui)| action(env, &kg, z, x, |g| ui.then(g))).collect();
        let mut w: Vec<Vector> = vec![];
        let mut index: HashMap<Vector, usize> = HashMap::new();
        for hc in &hs {
            let h = hk.rep(env, x, &ys, hc);
            let cone = cone_of(env, x, y, &h)?;
            let d = decompose(env, &cone.z)?;
            let psi = is_isomorphic(env, &d.xr, z)?
                .ok_or_else(|| HallError::Internal("radical part of a cone is not isomorphic to its class".into()))?;
            let psi_inv = psi.inverse().expect("isomorphism");
            let lam = d.proj_r.then(&psi);
            let lam_inv = psi_inv.then(&d.incl_r);
            let f0 = kf.coords(&cone.iota.then(&lam));
            let g0 = kg.coords(&lam_inv.then(&cone.pi));
            for (mf, mg) in zf.iter().zip(&zg) {
                let mut e = hc.clone();
                e.extend(apply(mf, &f0));
                e.extend(apply(mg, &g0));
                if !index.contains_key(&e) {
                    index.insert(e.clone(), w.len());
                    w.push(e);
                }
            }
        }
        let orbits = orbit_count(env, &ux, &uy, &gh, (&hk, &kf, &kg), (x, y, z), &w, &index)?;
        let ratio = Frac::new(hs.len() as i128 * uz.units.len() as i128, ax * ay);
        let residue = mod_residue(&ratio, env.q() - 1);
        out.insert(key, TriCount { hom_k: hs.len() as u64, w: w.len() as u64, orbits, ratio, residue });
    }
    Ok(out)
}

fn catalog_units(ctx: &HallCtx, x: &Complex2, y: &Complex2) -> Result<(std::sync::Arc<Units>, std::sync::Arc<Units>)> {
    let (ux, uy) = (ctx.units(&ctx.classify(x)?)?, ctx.units(&ctx.classify(y)?)?);
    if ux.z.serialize() != x.serialize() || uy.z.serialize() != y.serialize() {
        return Err(HallError::Internal("triangle counts need catalog representatives".into()));
    }
    Ok((ux, uy))
}

/// `F^Z_{XY}` by enumerating every `(f, g, h)` of homotopy classes and keeping
/// the distinguished ones. Slow; `triangle_counts` is the working route.
pub fn triangle_count_brute(ctx: &HallCtx, x: &Complex2, y: &Complex2, z: &KsDecomp) -> Result<u64> {
    let env = ctx.env;
    let (ux, uy) = catalog_units(ctx, x, y)?;
    let uz = ctx.units(z)?;
    let zc = &uz.z;
    let ys = y.shift();
    let hk = HomK::new(env, x, &ys);
    let kf = HomK::new(env, y, zc);
    let kg = HomK::new(env, zc, x);
    let (nh, nf, ng) = (hk.dim(), kf.dim(), kg.dim());
    let pts = env.check_points("triangle enumeration", nh + nf + ng)?;
    let hits = env.exec.map_range(pts, |i| -> Result<Option<Vector>> {
        let e = index_coords(env.q(), nh + nf + ng, i);
        let h = hk.rep(env, x, &ys, &e[..nh]);
        let f = kf.rep(env, y, zc, &e[nh..nh + nf]);
        let g = kg.rep(env, zc, x, &e[nh + nf..]);
        Ok(is_distinguished(env, x, y, zc, &f, &g, &h)?.then_some(e))
    });
    let mut w = vec![];
    for r in hits {
        if let Some(e) = r? {
            w.push(e);
        }
    }
    let index: HashMap<Vector, usize> = w.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let gh = h_action(env, &ux, &uy, &hk, x, &ys);
    orbit_count(env, &ux, &uy, &gh, (&hk, &kf, &kg), (x, y, zc), &w, &index)
}

/// `F^Z_{XY}` mod `q - 1` from `|Hom_K(X, Y*)_Z| |Aut_K Z| / (|Aut_K X| |Aut_K Y|)`.
/// `None` when the denominator is not invertible mod `q - 1`.
pub fn triangle_count_residue(ctx: &HallCtx, x: &Complex2, y: &Complex2, z: &KsDecomp) -> Result<Option<u32>> {
    let t = triangle_counts(ctx, x, y)?;
    Ok(match t.get(z) {
        Some(t) => t.residue,
        None => Some(0),
    })
}
