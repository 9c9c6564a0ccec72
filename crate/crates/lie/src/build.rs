use crate::form::{simple_complexes, sym_form_k, SymForm};
use crate::table::{axpy, cartan_label, LieTable, Provenance, Side};
use crate::{LieError, Result};
use hall2p_complex2::{is_homotopy_equivalent, Catalog, Env, Pdvp};
use hall2p_hall::{ext1_classes, triangle_counts, Frac, HallCtx, HallError};
use hall2p_quiver::Algebra;
use std::collections::BTreeMap;

/// Coefficients `c^Z_{XY}` on indecomposable `Z`, keyed by catalog index.
type Coeffs = BTreeMap<usize, i128>;

fn single(rad: &[(usize, usize)]) -> Option<usize> {
    match rad {
        [(z, 1)] => Some(*z),
        _ => None,
    }
}

/// `F^Z_{XY}` on the triangulated side; `sum_{Z ~ Z_r} |Ext^1(X,Y)_Z| |Aut Z_r| / (|Aut X| |Aut Y|)`
/// on the exact side.
fn coeffs(ctx: &HallCtx, side: Side, a: usize, b: usize) -> Result<Coeffs> {
    let cat = ctx.cat;
    let (x, y) = (&cat.entries[a].x, &cat.entries[b].x);
    let mut out = Coeffs::new();
    match side {
        Side::Tri => {
            for (key, t) in triangle_counts(ctx, x, y)? {
                if let Some(z) = single(&key.rad) {
                    out.insert(z, t.orbits as i128);
                }
            }
        }
        Side::Exact => {
            let mut sums: BTreeMap<usize, i128> = BTreeMap::new();
            for (key, n) in ext1_classes(ctx, x, y)? {
                if let Some(z) = single(&key.rad) {
                    *sums.entry(z).or_insert(0) += n as i128;
                }
            }
            let den = ctx.aut_c(&ctx.entry_key(a))? as i128 * ctx.aut_c(&ctx.entry_key(b))? as i128;
            for (z, n) in sums {
                let c = Frac::new(n * ctx.aut_c(&ctx.entry_key(z))? as i128, den);
                if !c.is_integer() {
                    return Err(HallError::Internal(format!("exact-side coefficient {c} is not integral")).into());
                }
                out.insert(z, c.to_integer());
            }
        }
    }
    Ok(out)
}

/// The integral table at the field of `ctx` (modulus 0, provenance `q`).
///
/// Root vectors are the catalog entries in label order, then `h_1..h_n`.
/// A pair of root vectors whose pdvps do not sum into `cap` is truncated.
pub fn build_lie_table(ctx: &HallCtx, cap: &Pdvp, side: Side) -> Result<LieTable> {
    let env = ctx.env;
    let cat = ctx.cat;
    let n = env.alg.n();
    let mut order: Vec<usize> = (0..cat.entries.len()).collect();
    order.sort_by(|&a, &b| cat.entries[a].label.cmp(&cat.entries[b].label));
    let mut pos = vec![0; order.len()];
    for (p, &a) in order.iter().enumerate() {
        pos[a] = p;
    }
    let r = order.len();
    let mut basis: Vec<String> = order.iter().map(|&a| cat.entries[a].label.clone()).collect();
    basis.extend((0..n).map(cartan_label));
    let mut degrees: Vec<Vec<i64>> = order.iter().map(|&a| cat.entries[a].x.kclass()).collect();
    degrees.extend((0..n).map(|_| vec![0; n]));

    let fits = |a: usize, b: usize| cat.entries[a].pdvp().add(cat.entries[b].pdvp()).le(cap);
    let pairs: Vec<(usize, usize)> =
        (0..r).flat_map(|a| (0..r).map(move |b| (a, b))).filter(|&(a, b)| a != b && fits(a, b)).collect();
    let computed = env.exec.map(&pairs, |&(a, b)| coeffs(ctx, side, a, b));
    let mut c: BTreeMap<(usize, usize), Coeffs> = BTreeMap::new();
    for (v, &k) in computed.into_iter().zip(&pairs) {
        c.insert(k, v?);
    }

    let mut t = LieTable {
        modulus: 0,
        provenance: Provenance {
            side,
            q: Some(env.q()),
            window: cap.e1.iter().chain(&cap.e0).copied().collect(),
        },
        basis,
        degrees,
        roots: r,
        brackets: BTreeMap::new(),
        truncated: Default::default(),
    };
    for a in 0..r {
        for b in a + 1..r {
            let (pa, pb) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
            if !fits(a, b) {
                t.truncated.insert((pa, pb));
                continue;
            }
            let (x, y) = (&cat.entries[a].x, &cat.entries[b].x);
            let mut v = BTreeMap::new();
            let empty = Coeffs::new();
            let (ab, ba) = (c.get(&(a, b)).unwrap_or(&empty), c.get(&(b, a)).unwrap_or(&empty));
            for (&z, &k) in ab {
                axpy(&mut v, k as i64, pos[z]);
            }
            for (&z, &k) in ba {
                axpy(&mut v, -k as i64, pos[z]);
            }
            let dual = match side {
                Side::Exact => ctx.classify(&x.shift())? == ctx.entry_key(b),
                Side::Tri => is_homotopy_equivalent(env, &x.shift(), y)?,
            };
            if dual {
                for (i, &d) in x.kclass().iter().enumerate() {
                    axpy(&mut v, -d, r + i);
                }
            }
            // stored as [u_pa, u_pb]
            if pos[a] > pos[b] {
                v.values_mut().for_each(|c| *c = -*c);
            }
            let v = t.sparse(v);
            if !v.is_empty() {
                t.brackets.insert((pa, pb), v);
            }
        }
    }
    let form_row: Vec<Vec<i64>> = match side {
        Side::Tri => {
            let s = simple_complexes(env)?;
            order.iter().map(|&a| s.iter().map(|si| sym_form_k(env, si, &cat.entries[a].x)).collect()).collect()
        }
        Side::Exact => {
            let g = SymForm::euler(env)?;
            let unit = |i: usize| (0..n).map(|j| (i == j) as i64).collect::<Vec<_>>();
            order.iter().map(|&a| (0..n).map(|i| g.eval(&unit(i), &cat.entries[a].x.kclass())).collect()).collect()
        }
    };
    for (p, row) in form_row.iter().enumerate() {
        for (i, &f) in row.iter().enumerate() {
            // [u_p, h_i] = -(e_i, d(u_p)) u_p
            if t.norm(f) != 0 {
                t.brackets.insert((p, r + i), vec![(-f, p)]);
            }
        }
    }
    Ok(t)
}

/// Builds the catalog for `cap` over `F_p` and the integral table there.
pub fn build_at(alg: &Algebra, p: u32, cap: &Pdvp, side: Side) -> Result<LieTable> {
    let env = Env::new(alg.with_prime(p).map_err(hall2p_complex2::ComplexError::from)?);
    build_in(&env, cap, side)
}

pub fn build_in(env: &Env, cap: &Pdvp, side: Side) -> Result<LieTable> {
    let cat = Catalog::build(env, cap)?;
    let ctx = HallCtx::new(env, &cat);
    build_lie_table(&ctx, cap, side)
}

/// The modulus-0 table: every constant must be the same integer at each prime.
pub fn classical_table(tables: &[LieTable]) -> Result<LieTable> {
    if tables.len() < 3 {
        return Err(LieError::Limit(format!("need at least 3 primes, got {}", tables.len())));
    }
    let first = &tables[0];
    let mut qs = vec![];
    for t in tables {
        let q = match (t.modulus, t.provenance.q) {
            (0, Some(q)) => q,
            _ => return Err(LieError::Limit("classical limit needs integral tables at single primes".into())),
        };
        if qs.contains(&q) {
            return Err(LieError::Limit(format!("prime {q} repeated")));
        }
        qs.push(q);
        if t.basis != first.basis || t.degrees != first.degrees || t.truncated != first.truncated {
            return Err(LieError::Limit(format!("basis at q={q} differs from q={}", qs[0])));
        }
        if t.provenance.side != first.provenance.side || t.provenance.window != first.provenance.window {
            return Err(LieError::Limit("tables come from different sides or windows".into()));
        }
        if t.brackets != first.brackets {
            let keys = t.brackets.keys().chain(first.brackets.keys());
            let k = keys.filter(|k| t.brackets.get(k) != first.brackets.get(k)).min().unwrap();
            return Err(LieError::Limit(format!(
                "bracket {} {} depends on q: {:?} at q={} but {:?} at q={q}",
                k.0,
                k.1,
                first.brackets.get(k),
                qs[0],
                t.brackets.get(k)
            )));
        }
    }
    let mut out = first.clone();
    out.provenance.q = None;
    Ok(out)
}
