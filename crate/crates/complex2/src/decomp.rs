use crate::maps::{assemble, ChainMap};
use crate::{Complex2, ComplexError, Env, Pdvp, Result};
use hall2p_ffla::{Echelon, Mat, Vector};
use hall2p_quiver::{hom_basis, kernel, projective_cover, radical, yoneda, Algebra, Rep, RepMor, Subrep};

/// `X ≅ X_r ⊕ K_P ⊕ K_Q^*` with an explicit chain isomorphism.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub xr: Complex2,
    pub p: Vec<usize>,
    pub q: Vec<usize>,
    /// `X_r ⊕ K_P ⊕ K_Q^*` in standard form
    pub sum: Complex2,
    /// `X -> sum`
    pub to_sum: ChainMap,
    /// `sum -> X`
    pub from_sum: ChainMap,
    /// `X_r -> X` and `X -> X_r`
    pub incl_r: ChainMap,
    pub proj_r: ChainMap,
}

/// A complex on arbitrary projective representations, with an embedding into the original.
struct Piece {
    x1: Rep,
    x0: Rep,
    d1: RepMor,
    d0: RepMor,
    inc1: RepMor,
    inc0: RepMor,
}

fn rad_space(alg: &Algebra, m: &Rep, v: usize) -> Echelon {
    let r = radical(alg, m);
    let cols: Vec<Vector> = (0..r.incl.blocks[v].cols()).map(|c| r.incl.blocks[v].col(c)).collect();
    Echelon::from_vectors(alg.field(), m.dims[v], &cols)
}

/// Coordinates of `g ∘ incl_s` in the basis of `t`, given `g(s) ⊆ t`.
fn restrict(alg: &Algebra, g: &RepMor, s: &Subrep, t: &Subrep) -> RepMor {
    let f = alg.field();
    let blocks = (0..alg.n())
        .map(|v| {
            let tc: Vec<Vector> = (0..t.incl.blocks[v].cols()).map(|c| t.incl.blocks[v].col(c)).collect();
            let te = Echelon::from_vectors(f, t.incl.blocks[v].rows(), &tc);
            let mut m = Mat::zeros(f, t.rep.dims[v], s.rep.dims[v]);
            for c in 0..s.rep.dims[v] {
                let img = g.blocks[v].mul_vec(&s.incl.blocks[v].col(c));
                let co = te.coords(&img).expect("image lies in the target subspace");
                for (r, &x) in co.iter().enumerate() {
                    m.set(r, c, x);
                }
            }
            m
        })
        .collect();
    RepMor { blocks }
}

/// Some `r ∈ Hom_A(M, P_v)` with `r(y) = e_v`.
fn retraction(alg: &Algebra, m: &Rep, v: usize, y: &[u32]) -> Result<RepMor> {
    let f = alg.field();
    let pv = alg.projective(v);
    let basis = hom_basis(alg, m, &pv);
    let cols: Vec<Vector> = basis.iter().map(|b| b.blocks[v].mul_vec(y)).collect();
    let mut target = vec![0; pv.dims[v]];
    // the trivial path is the first basis element of P_v(v)
    target[0] = 1;
    let sol = if cols.is_empty() {
        None
    } else {
        Mat::from_cols(f, pv.dims[v], &cols).solve_affine(&target).map_err(|e| ComplexError::Internal(e.to_string()))?
    };
    let (c, _) = sol.ok_or_else(|| ComplexError::Internal("top element has no retraction".into()))?;
    let mut r = RepMor::zero(f, m, &pv);
    for (b, &a) in basis.iter().zip(&c) {
        r.axpy(a, b);
    }
    Ok(r)
}

fn find_split(alg: &Algebra, src: &Rep, dst: &Rep, d: &RepMor) -> Option<(usize, Vector, Vector)> {
    for v in 0..alg.n() {
        if src.dims[v] == 0 || dst.dims[v] == 0 {
            continue;
        }
        let rad = rad_space(alg, dst, v);
        for k in 0..src.dims[v] {
            let mut x = vec![0; src.dims[v]];
            x[k] = 1;
            let y = d.blocks[v].mul_vec(&x);
            if !rad.contains(&y) {
                return Some((v, x, y));
            }
        }
    }
    None
}

/// Iso `P^e -> M` for a projective representation `M`.
fn standardize(alg: &Algebra, m: &Rep) -> (Vec<usize>, RepMor) {
    let (e, _, epi) = projective_cover(alg, m);
    debug_assert!(epi.is_iso());
    (e, epi)
}

/// Split `X` into its radical part and contractible summands (Krull-Schmidt
/// for the contractible part is unique, so the shape `(P, Q)` is an invariant).
pub fn decompose(env: &Env, x: &Complex2) -> Result<Decomposition> {
    let alg = &env.alg;
    let f = env.field();
    let n = alg.n();
    let mut piece = Piece {
        x1: x.x1.clone(),
        x0: x.x0.clone(),
        d1: x.d1.clone(),
        d0: x.d0.clone(),
        inc1: RepMor::identity(f, &x.x1),
        inc0: RepMor::identity(f, &x.x0),
    };
    // (vertex, embedding into X^1, embedding into X^0)
    let mut kp: Vec<(usize, RepMor, RepMor)> = vec![];
    let mut kq: Vec<(usize, RepMor, RepMor)> = vec![];
    loop {
        if let Some((v, xv, y)) = find_split(alg, &piece.x1, &piece.x0, &piece.d1) {
            let a1 = yoneda(alg, v, &piece.x1, &xv);
            let a0 = yoneda(alg, v, &piece.x0, &y);
            kp.push((v, a1.then(&piece.inc1), a0.then(&piece.inc0)));
            let r0 = retraction(alg, &piece.x0, v, &y)?;
            let s1 = kernel(alg, &piece.d1.then(&r0), &piece.x1);
            let s0 = kernel(alg, &r0, &piece.x0);
            piece = shrink(alg, &piece, &s1, &s0);
            continue;
        }
        if let Some((v, xv, y)) = find_split(alg, &piece.x0, &piece.x1, &piece.d0) {
            let a1 = yoneda(alg, v, &piece.x1, &y);
            let a0 = yoneda(alg, v, &piece.x0, &xv);
            kq.push((v, a1.then(&piece.inc1), a0.then(&piece.inc0)));
            let r1 = retraction(alg, &piece.x1, v, &y)?;
            let s1 = kernel(alg, &r1, &piece.x1);
            let s0 = kernel(alg, &piece.d0.then(&r1), &piece.x0);
            piece = shrink(alg, &piece, &s1, &s0);
            continue;
        }
        break;
    }
    let (e1, phi1) = standardize(alg, &piece.x1);
    let (e0, phi0) = standardize(alg, &piece.x0);
    let (p1i, p0i) = (phi1.inverse().unwrap(), phi0.inverse().unwrap());
    let xr = Complex2::from_parts(
        alg,
        Pdvp { e1, e0 },
        phi1.then(&piece.d1).then(&p0i),
        phi0.then(&piece.d0).then(&p1i),
    );
    let incl_r = ChainMap { f1: phi1.then(&piece.inc1), f0: phi0.then(&piece.inc0) };

    kp.sort_by_key(|t| t.0);
    kq.sort_by_key(|t| t.0);
    let mut p = vec![0; n];
    let mut q = vec![0; n];
    for t in &kp {
        p[t.0] += 1;
    }
    for t in &kq {
        q[t.0] += 1;
    }
    let kc = Complex2::contractible(alg, &p, &q);
    // K_P ⊕ K_Q^* block layout -> standard
    let (c1, c0) = Complex2::k(alg, &p).sum_perms(alg, &Complex2::k_star(alg, &q));
    let hcat = |parts: &[&RepMor], target: &Rep| -> RepMor {
        let mut acc = RepMor { blocks: target.dims.iter().map(|&d| Mat::zeros(f, d, 0)).collect() };
        for part in parts {
            acc = acc.hstack(part);
        }
        acc
    };
    let kp1: Vec<&RepMor> = kp.iter().map(|t| &t.1).collect();
    let kq1: Vec<&RepMor> = kq.iter().map(|t| &t.1).collect();
    let kp0: Vec<&RepMor> = kp.iter().map(|t| &t.2).collect();
    let kq0: Vec<&RepMor> = kq.iter().map(|t| &t.2).collect();
    let kc_to_x = ChainMap {
        f1: c1.inverse().unwrap().then(&hcat(&kp1, &x.x1).hstack(&hcat(&kq1, &x.x1))),
        f0: c0.inverse().unwrap().then(&hcat(&kp0, &x.x0).hstack(&hcat(&kq0, &x.x0))),
    };
    let (sum, s1, s0) = assemble(
        alg,
        &xr.pdvp,
        &kc.pdvp,
        RepMor::blocks2(&xr.d1, &RepMor::zero(f, &kc.x1, &xr.x0), &RepMor::zero(f, &xr.x1, &kc.x0), &kc.d1),
        RepMor::blocks2(&xr.d0, &RepMor::zero(f, &kc.x0, &xr.x1), &RepMor::zero(f, &xr.x0, &kc.x1), &kc.d0),
    );
    let from_sum = ChainMap {
        f1: s1.inverse().unwrap().then(&incl_r.f1.hstack(&kc_to_x.f1)),
        f0: s0.inverse().unwrap().then(&incl_r.f0.hstack(&kc_to_x.f0)),
    };
    if !from_sum.is_chain_map(&sum, x) {
        return Err(ComplexError::Internal("decomposition witness is not a chain map".into()));
    }
    let to_sum = from_sum
        .inverse()
        .ok_or_else(|| ComplexError::Internal("decomposition witness is not invertible".into()))?;
    let first = |a: &Rep, b: &Rep| -> RepMor {
        // projection a ⊕ b -> a
        RepMor {
            blocks: (0..n)
                .map(|v| {
                    let mut m = Mat::zeros(f, a.dims[v], a.dims[v] + b.dims[v]);
                    for k in 0..a.dims[v] {
                        m.set(k, k, 1);
                    }
                    m
                })
                .collect(),
        }
    };
    let proj_r = ChainMap {
        f1: to_sum.f1.then(&s1.inverse().unwrap()).then(&first(&xr.x1, &kc.x1)),
        f0: to_sum.f0.then(&s0.inverse().unwrap()).then(&first(&xr.x0, &kc.x0)),
    };
    Ok(Decomposition { xr, p, q, sum, to_sum, from_sum, incl_r, proj_r })
}

fn shrink(alg: &Algebra, piece: &Piece, s1: &Subrep, s0: &Subrep) -> Piece {
    let d1 = restrict(alg, &piece.d1, s1, s0);
    let d0 = restrict(alg, &piece.d0, s0, s1);
    Piece {
        x1: s1.rep.clone(),
        x0: s0.rep.clone(),
        d1,
        d0,
        inc1: s1.incl.then(&piece.inc1),
        inc0: s0.incl.then(&piece.inc0),
    }
}

/// `Some((P, Q))` when `X ≅ K_P ⊕ K_Q^*`.
pub fn classify_contractible(env: &Env, x: &Complex2) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let d = decompose(env, x)?;
    Ok(d.xr.is_zero().then_some((d.p, d.q)))
}
