use crate::{ext1_classes, ext1_dim, homk_classes, HallCtx, HallError, Result, SweepReport};
use crate::sweep::classes_with_pdvp;
use hall2p_complex2::{
    aut_generators, aut_orders, classify_contractible, cone_of, decompose, index_coords, ChainMap, Complex2,
    ComplexError, Env, HomC, HomK, KsDecomp, Pdvp,
};
use hall2p_quiver::RepMor;

fn skip_capacity<T, E: Into<HallError>>(r: std::result::Result<T, E>, rep: &mut SweepReport) -> Result<Option<T>> {
    match r.map_err(Into::into) {
        Ok(v) => Ok(Some(v)),
        Err(HallError::Complex(ComplexError::Capacity { .. })) => {
            rep.skipped += 1;
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// A product of automorphism generators of `P^e`, varied by `seed`.
fn scramble_aut(env: &Env, e: &[usize], seed: usize) -> (RepMor, RepMor) {
    let gens = aut_generators(env, e);
    let f = env.field();
    let mut g = RepMor::identity(f, &env.alg.proj_sum(e));
    for i in 0..gens.len() {
        g = g.then(&gens[(seed * 7 + i * 3) % gens.len()]);
    }
    let inv = g.inverse().expect("product of units");
    (g, inv)
}

/// `X` with both terms moved by automorphisms, so it is no longer in block form.
fn scramble(env: &Env, x: &Complex2, seed: usize) -> Complex2 {
    let (g1, i1) = scramble_aut(env, &x.pdvp.e1, seed);
    let (g0, i0) = scramble_aut(env, &x.pdvp.e0, seed + 1);
    Complex2::from_parts(&env.alg, x.pdvp.clone(), i1.then(&x.d1).then(&g0), i0.then(&x.d0).then(&g1))
}

/// Whether some `f` in `Hom_K(X, Y)` has a contractible cone; `None` over budget.
fn homotopy_equivalent(ctx: &HallCtx, x: &Complex2, y: &Complex2, budget: u64) -> Result<Option<bool>> {
    let env = ctx.env;
    let hk = HomK::new(env, x, y);
    let k = hk.dim();
    if (env.q() as f64).powi(k as i32) > budget as f64 {
        return Ok(None);
    }
    let ys = y.shift();
    let found = env.exec.map_range((env.q() as u64).pow(k as u32), |i| -> Result<bool> {
        let f = hk.rep(env, x, y, &index_coords(env.q(), k, i));
        Ok(classify_contractible(env, &cone_of(env, x, &ys, &f)?.z)?.is_some())
    });
    let mut any = false;
    for h in found {
        any |= h?;
    }
    Ok(Some(any))
}

/// Every class in the window: decomposition round trip, the contractible
/// shape and `|Aut_C| = |Aut_K| q^{dim Htp}` for radical classes. On radical
/// pairs with at most `pair_summands` indecomposable summands between them:
/// homotopy equivalence only of isomorphic classes, Ext vs Hom_K strata and
/// the contractible stratum of `Ext^1(X, X*)`. Checks needing more than
/// `budget` points are counted as skipped.
pub fn structural_suite(ctx: &HallCtx, cap: &Pdvp, budget: u64, pair_summands: usize) -> Result<SweepReport> {
    let env = ctx.env;
    let fits = |dims: &[usize]| dims.iter().map(|&d| (env.q() as f64).powi(d as i32)).sum::<f64>() <= budget as f64;
    let alg = &env.alg;
    let mut rep = SweepReport::default();
    let mut radical: Vec<(Complex2, usize)> = vec![];
    let mut seed = 0;
    for e in Pdvp::all_below(cap) {
        for key in classes_with_pdvp(ctx, &e) {
            seed += 1;
            let c = scramble(env, &ctx.cat.realize(env, &key), seed);
            let x = &c;
            let name = x.serialize();
            let d = decompose(env, x)?;
            rep.checked += 2;
            let sum = d.xr.direct_sum(alg, &Complex2::contractible(alg, &d.p, &d.q));
            let id = ChainMap::identity(env, x);
            let witness = d.sum == sum
                && d.to_sum.is_chain_map(x, &sum)
                && d.from_sum.is_chain_map(&sum, x)
                && d.to_sum.then(&d.from_sum) == id;
            if !witness || !d.to_sum.is_iso() {
                rep.violations.push(format!("{name}: not isomorphic to X_r ⊕ K_P ⊕ K_Q^*"));
            }
            if classify_contractible(env, &Complex2::contractible(alg, &d.p, &d.q))? != Some((d.p.clone(), d.q.clone())) {
                rep.violations.push(format!("{name}: contractible part K{:?} ⊕ K*{:?} not recovered", d.p, d.q));
            }
            if !x.is_radical(env) {
                continue;
            }
            let end = HomC::new(env, x, x).dim();
            if !fits(&[end, HomK::new(env, x, x).dim()]) {
                rep.skipped += 1;
            } else if let Some(a) = skip_capacity(aut_orders(env, x), &mut rep)? {
                let units = ctx.units(&ctx.classify(x)?)?.units.len() as u128;
                rep.checked += 1;
                if a.aut_c != units * (env.q() as u128).pow(a.htp_dim as u32) {
                    rep.violations.push(format!("{name}: |Aut_C| = {} but |Aut_K| q^{} = {units} q^{}", a.aut_c, a.htp_dim, a.htp_dim));
                }
            }
            let summands = ctx.classify(x)?.rad.iter().map(|t| t.1).sum::<usize>();
            radical.push((c, summands));
        }
    }
    // dim Hom_K(T, X) over indecomposables T and their shifts separates most classes
    let tests: Vec<Complex2> = ctx.cat.entries.iter().flat_map(|e| [e.x.clone(), e.x.shift()]).collect();
    let profiles: Vec<Vec<usize>> = radical.iter().map(|(x, _)| tests.iter().map(|t| HomK::new(env, t, x).dim()).collect()).collect();
    for (x, _) in &radical {
        rep.checked += 1;
        let id = ChainMap::identity(env, x);
        if classify_contractible(env, &cone_of(env, x, &x.shift(), &id)?.z)?.is_none() {
            rep.violations.push(format!("{}: cone of the identity is not contractible", x.serialize()));
        }
    }
    for (i, (x, xi)) in radical.iter().enumerate() {
        for (j, (y, yi)) in radical.iter().enumerate() {
            if xi + yi > pair_summands {
                continue;
            }
            if j > i && x.pdvp == y.pdvp {
                rep.checked += 1;
                if profiles[i] == profiles[j] {
                    match homotopy_equivalent(ctx, x, y, budget)? {
                        None => rep.skipped += 1,
                        Some(true) => rep.violations.push(format!("{} and {}: homotopy equivalent but not isomorphic", x.serialize(), y.serialize())),
                        Some(false) => {}
                    }
                }
            }
            if !x.pdvp.add(&y.pdvp).le(&ctx.cat.cap) {
                continue;
            }
            if !fits(&[ext1_dim(env, x, y), HomK::new(env, x, &y.shift()).dim()]) {
                rep.skipped += 1;
                continue;
            }
            let (Some(ext), Some(homk)) = (
                skip_capacity(ext1_classes(ctx, x, y), &mut rep)?,
                skip_capacity(homk_classes(ctx, x, y), &mut rep)?,
            ) else {
                continue;
            };
            rep.checked += 1;
            if ext != homk {
                rep.violations.push(format!("{} {}: Ext strata {ext:?} != Hom_K strata {homk:?}", x.serialize(), y.serialize()));
            }
            if ctx.classify(&x.shift())? == ctx.classify(y)? {
                let key = KsDecomp { rad: vec![], p: x.pdvp.e1.clone(), q: x.pdvp.e0.clone() };
                let aut_k = ctx.units(&ctx.classify(x)?)?.units.len() as u64;
                rep.checked += 1;
                if ext.get(&key).copied().unwrap_or(0) != aut_k {
                    rep.violations.push(format!("{}: contractible stratum {:?} != |Aut_K| = {aut_k}", x.serialize(), ext.get(&key)));
                }
            }
        }
    }
    Ok(rep)
}
