use crate::{HallCtx, HallError, Result};
use hall2p_complex2::{aut_orders, index_coords, ChainMap, Complex2, HomC, KsDecomp, LocalEnd};
use hall2p_ffla::{enumerate_space, Mat, Vector};
use hall2p_quiver::RepMor;

fn full_rank(m: &RepMor, rows: bool) -> bool {
    m.blocks.iter().all(|b| b.rank() == if rows { b.rows() } else { b.cols() })
}

fn injective(m: &ChainMap) -> bool {
    full_rank(&m.f1, false) && full_rank(&m.f0, false)
}

fn surjective(m: &ChainMap) -> bool {
    full_rank(&m.f1, true) && full_rank(&m.f0, true)
}

/// `g^Z_{XY}`: subcomplexes `Z' ⊆ Z` with `Z' ≅ Y` and `Z/Z' ≅ X`.
///
/// A mono `f: Y -> Z` has cokernel `≅ X` iff `{p: Z -> X | p f = 0}` contains
/// an epimorphism; that space is `Hom(coker f, X)`, and when `End(X)` is local
/// it contains an epimorphism iff one of its basis vectors is one. Counting
/// such monos and dividing by `|Aut Y|` gives the number of images. The dual
/// count over epis `Z -> X` is used when it is cheaper.
pub fn hall_number_brute(ctx: &HallCtx, x: &Complex2, y: &Complex2, z: &Complex2) -> Result<u128> {
    let env = ctx.env;
    if x.pdvp.add(&y.pdvp) != z.pdvp {
        return Ok(0);
    }
    let hyz = HomC::new(env, y, z);
    let hzx = HomC::new(env, z, x);
    let lx = LocalEnd::new(env, x).is_some();
    let ly = LocalEnd::new(env, y).is_some();
    let use_monos = match (lx, ly) {
        (true, true) => hyz.dim() <= hzx.dim(),
        (true, false) => true,
        (false, true) => false,
        (false, false) => hyz.dim() <= hzx.dim(),
    };
    let (count, aut) = if use_monos {
        let n = count_pairs(ctx, &hyz, &hzx, y, z, x, true, lx)?;
        (n, aut_orders(env, y)?.aut_c)
    } else {
        let n = count_pairs(ctx, &hzx, &hyz, z, x, y, false, ly)?;
        (n, aut_orders(env, x)?.aut_c)
    };
    if count % aut != 0 {
        return Err(HallError::Internal(format!("{count} monos not divisible by |Aut| = {aut}")));
    }
    Ok(count / aut)
}

/// Outer maps `m` in `outer` (mono `Y -> Z` or epi `Z -> X`) whose annihilator
/// in `inner` contains a map of the complementary kind.
#[allow(clippy::too_many_arguments)]
fn count_pairs(
    ctx: &HallCtx,
    outer: &HomC,
    inner: &HomC,
    a: &Complex2,
    b: &Complex2,
    c: &Complex2,
    monos: bool,
    local: bool,
) -> Result<u128> {
    let env = ctx.env;
    let f = env.field();
    let (no, ni) = (outer.dim(), inner.dim());
    // outer: a -> b; inner: b -> c (monos) or c -> a (epis)
    let comp = |m: &ChainMap, k: usize| -> Vector {
        if monos {
            m.then(&inner.basis[k]).flatten()
        } else {
            inner.basis[k].then(m).flatten()
        }
    };
    let prods: Vec<Vec<Vector>> = outer.basis.iter().map(|m| (0..ni).map(|k| comp(m, k)).collect()).collect();
    let rows = prods.first().and_then(|r| r.first()).map_or(0, |v| v.len());
    let (src, dst) = if monos { (b, c) } else { (c, a) };
    let pts = env.check_points("subobject enumeration", no)?;
    let hits = env.exec.map_range(pts, |i| -> Result<bool> {
        let co = index_coords(env.q(), no, i);
        let m = outer.combine(env, a, b, &co);
        if !(if monos { injective(&m) } else { surjective(&m) }) {
            return Ok(false);
        }
        let ann: Vec<Vector> = if ni == 0 {
            vec![]
        } else if rows == 0 {
            (0..ni).map(|k| Mat::identity(f, ni).row(k).to_vec()).collect()
        } else {
            let mut mat = Mat::zeros(f, rows, ni);
            for (ci, pr) in co.iter().zip(&prods) {
                if *ci == 0 {
                    continue;
                }
                for (k, v) in pr.iter().enumerate() {
                    for (r, &e) in v.iter().enumerate() {
                        if e != 0 {
                            mat.set(r, k, f.add(mat.get(r, k), f.mul(*ci, e)));
                        }
                    }
                }
            }
            mat.kernel_basis()
        };
        let good = |v: &[u32]| {
            let p = inner.combine(env, src, dst, v);
            if monos {
                surjective(&p)
            } else {
                injective(&p)
            }
        };
        if local {
            return Ok(ann.iter().any(|v| good(v)));
        }
        env.check_points("annihilator enumeration", ann.len())?;
        for v in enumerate_space(f, ni, &ann, env.cap).map_err(|e| HallError::Internal(e.to_string()))? {
            if good(&v) {
                return Ok(true);
            }
        }
        Ok(false)
    });
    let mut n = 0u128;
    for h in hits {
        n += h? as u128;
    }
    Ok(n)
}

/// `|Ext^1(X,Y)_Z| |Aut Z| / (|Hom(X,Y)| |Aut X| |Aut Y|)`, exact.
pub fn hall_number_rp(ctx: &HallCtx, x: &Complex2, y: &Complex2, z: &KsDecomp, ext_z: u64) -> Result<u128> {
    let env = ctx.env;
    if ext_z == 0 {
        return Ok(0);
    }
    let hom = (env.q() as u128).pow(HomC::new(env, x, y).dim() as u32);
    let num = (ext_z as u128).checked_mul(ctx.aut_c(z)?).ok_or_else(|| HallError::Internal("overflow".into()))?;
    let den = hom * aut_orders(env, x)?.aut_c * aut_orders(env, y)?.aut_c;
    if num % den != 0 {
        return Err(HallError::Internal(format!("Riedtmann-Peng quotient {num}/{den} is not integral")));
    }
    Ok(num / den)
}
