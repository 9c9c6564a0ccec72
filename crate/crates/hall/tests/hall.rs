use hall2p_complex2::*;
use hall2p_hall::*;
use hall2p_quiver::{Algebra, Rep};
use proptest::prelude::*;

const A1: &str = "field 2\nvertex 1\n";
const A2: &str = "field 2\nvertex 1 2\narrow a 1 2\n";
const A3REL: &str = "field 2\nvertex 1 2 3\narrow a 1 2\narrow b 2 3\nrelation 1*a.b\n";

fn env(text: &str, p: u32) -> Env {
    Env::new(Algebra::parse(text).unwrap().with_prime(p).unwrap())
}

fn cap(env: &Env, c: usize) -> Pdvp {
    let n = env.alg.n();
    Pdvp { e1: vec![c; n], e0: vec![c; n] }
}

fn pd(e1: &[usize], e0: &[usize]) -> Pdvp {
    Pdvp { e1: e1.to_vec(), e0: e0.to_vec() }
}

/// catalog representative of an indecomposable radical complex
fn rep(ctx: &HallCtx, z: &Complex2) -> Complex2 {
    let key = ctx.classify(z).unwrap();
    ctx.cat.realize(ctx.env, &key)
}

fn simple(env: &Env, i: usize) -> Complex2 {
    Complex2::from_module(&env.alg, &Rep::simple(&env.alg, i)).unwrap()
}

#[test]
fn a1_strata() {
    for (p, want) in [(2, vec![1, 1]), (5, vec![1, 4])] {
        let env = env(A1, p);
        let cat = Catalog::build(&env, &cap(&env, 2)).unwrap();
        let ctx = HallCtx::new(&env, &cat);
        let x = Complex2::zero_diff(&env.alg, pd(&[1], &[0]));
        let y = Complex2::zero_diff(&env.alg, pd(&[0], &[1]));
        let st = ext1_stratified(&ctx, &x, &y).unwrap();
        let split = ctx.classify(&x.direct_sum(&env.alg, &y)).unwrap();
        let kp = ctx.classify(&Complex2::k(&env.alg, &[1])).unwrap();
        let mut got = vec![];
        for s in &st {
            assert_eq!(s.ext, s.hom_k);
            assert!(s.key == split || s.key == kp);
            got.push((s.key == kp, s.ext));
        }
        got.sort();
        assert_eq!(got.iter().map(|g| g.1).collect::<Vec<_>>(), want);
    }
}

#[test]
fn strata_total_is_hom_k() {
    let env = env(A2, 3);
    let cat = Catalog::build(&env, &cap(&env, 1)).unwrap();
    let ctx = HallCtx::new(&env, &cat);
    for a in &cat.entries {
        for b in &cat.entries {
            let d = HomK::new(&env, &a.x, &b.x.shift()).dim();
            let total: u64 = ext1_stratified(&ctx, &a.x, &b.x).unwrap().iter().map(|s| s.ext).sum();
            assert_eq!(total, 3u64.pow(d as u32));
        }
    }
}

#[test]
fn contractible_target_splits() {
    let env = env(A2, 3);
    let cat = Catalog::build(&env, &cap(&env, 1)).unwrap();
    let ctx = HallCtx::new(&env, &cat);
    let x = simple(&env, 0);
    let k = Complex2::k(&env.alg, &[0, 1]);
    let st = ext1_stratified(&ctx, &x, &k).unwrap();
    assert_eq!(st.len(), 1);
    assert_eq!(st[0].ext, 1);
    assert_eq!(st[0].key, ctx.classify(&x.direct_sum(&env.alg, &k)).unwrap());
}

#[test]
fn a1_hall_numbers() {
    for p in [2, 3, 5] {
        let env = env(A1, p);
        let cat = Catalog::build(&env, &cap(&env, 2)).unwrap();
        let ctx = HallCtx::new(&env, &cat);
        let x = Complex2::zero_diff(&env.alg, pd(&[1], &[0]));
        let y = Complex2::zero_diff(&env.alg, pd(&[0], &[1]));
        let ext = ext1_classes(&ctx, &x, &y).unwrap();
        for z in [Complex2::k(&env.alg, &[1]), x.direct_sum(&env.alg, &y)] {
            let key = ctx.classify(&z).unwrap();
            assert_eq!(hall_number_brute(&ctx, &x, &y, &z).unwrap(), 1);
            assert_eq!(hall_number_rp(&ctx, &x, &y, &key, ext[&key]).unwrap(), 1);
        }
        let wrong = Complex2::zero_diff(&env.alg, pd(&[2], &[0]));
        assert_eq!(hall_number_brute(&ctx, &x, &y, &wrong).unwrap(), 0);
    }
}

#[test]
fn a2_projective_cover_triple() {
    // the middle term is C_P1 plus a contractible summand, so g counts q - 1
    // filtrations; the triangle side and the normalized coefficient give 1
    for p in [2u32, 3, 5] {
        let env = env(A2, p);
        let cat = Catalog::build(&env, &cap(&env, 2)).unwrap();
        let ctx = HallCtx::new(&env, &cat);
        let (s1, s2) = (rep(&ctx, &simple(&env, 0)), rep(&ctx, &simple(&env, 1)));
        let p1 = Complex2::from_module(&env.alg, &env.alg.projective(0)).unwrap();
        let p1_key = ctx.classify(&p1).unwrap();
        let ext = ext1_classes(&ctx, &s1, &s2).unwrap();
        let key = ext.keys().find(|k| k.radical_part() == p1_key).expect("middle term over C_P1").clone();
        let z = cat.realize(&env, &key);
        let g = hall_number_brute(&ctx, &s1, &s2, &z).unwrap();
        assert_eq!(g, p as u128 - 1);
        assert_eq!(hall_number_rp(&ctx, &s1, &s2, &key, ext[&key]).unwrap(), g);
        assert_eq!(triangle_counts(&ctx, &s1, &s2).unwrap()[&p1_key].orbits, 1);
        let (ax, ay) = (ctx.aut_c(&ctx.classify(&s1).unwrap()).unwrap(), ctx.aut_c(&ctx.classify(&s2).unwrap()).unwrap());
        assert_eq!(ext[&key] as u128 * ctx.aut_c(&p1_key).unwrap(), ax * ay);
    }
}

#[test]
fn a1_triangle_through_zero() {
    let env = env(A1, 2);
    let cat = Catalog::build(&env, &cap(&env, 2)).unwrap();
    let ctx = HallCtx::new(&env, &cat);
    let x = rep(&ctx, &Complex2::zero_diff(&env.alg, pd(&[1], &[0])));
    let y = rep(&ctx, &Complex2::zero_diff(&env.alg, pd(&[0], &[1])));
    let zero = KsDecomp { rad: vec![], p: vec![0], q: vec![0] };
    let t = triangle_counts(&ctx, &x, &y).unwrap();
    assert_eq!(t[&zero].orbits, 1);
    assert_eq!(triangle_count_brute(&ctx, &x, &y, &zero).unwrap(), 1);
    assert_eq!(triangle_count_residue(&ctx, &x, &y, &zero).unwrap(), Some(0));
}

#[test]
fn triangle_routes_agree() {
    for (text, p) in [(A1, 2), (A1, 3), (A2, 2), (A2, 3)] {
        let env = env(text, p);
        let cat = Catalog::build(&env, &cap(&env, 1)).unwrap();
        let ctx = HallCtx::new(&env, &cat);
        for a in &cat.entries {
            for b in &cat.entries {
                let t = triangle_counts(&ctx, &a.x, &b.x).unwrap();
                let e = a.x.pdvp.add(&b.x.pdvp);
                let mut keys: Vec<KsDecomp> = t.keys().cloned().collect();
                keys.extend(cat.radical_classes(&e));
                for k in keys {
                    let want = t.get(&k).map_or(0, |t| t.orbits);
                    assert_eq!(triangle_count_brute(&ctx, &a.x, &b.x, &k).unwrap(), want, "{} {} {}", a.label, b.label, cat.name(&k));
                }
            }
        }
    }
}

#[test]
fn split_middle_term_counts_one_mod_q_minus_one() {
    for p in [2, 3, 5] {
        let env = env(A2, p);
        let cat = Catalog::build(&env, &cap(&env, 1)).unwrap();
        let ctx = HallCtx::new(&env, &cat);
        for (i, a) in cat.entries.iter().enumerate() {
            for (j, b) in cat.entries.iter().enumerate() {
                if i == j {
                    continue;
                }
                let key = ctx.classify(&a.x.direct_sum(&env.alg, &b.x)).unwrap();
                let f = triangle_counts(&ctx, &a.x, &b.x).unwrap()[&key].orbits;
                assert_eq!(f % (p as u64 - 1), 1 % (p as u64 - 1));
            }
        }
    }
}

#[test]
fn distinguished_examples() {
    let env = env(A1, 3);
    let x = Complex2::zero_diff(&env.alg, pd(&[1], &[0]));
    let y = Complex2::zero_diff(&env.alg, pd(&[0], &[1]));
    let ys = y.shift();
    let h = HomK::new(&env, &x, &ys).rep(&env, &x, &ys, &[1]);
    let cone = cone_of(&env, &x, &y, &h).unwrap();
    assert!(is_distinguished(&env, &x, &y, &cone.z, &cone.iota, &cone.pi, &h).unwrap());
    let z0 = Complex2::zero(&env.alg);
    let (f0, g0) = (ChainMap::zero(&env, &y, &z0), ChainMap::zero(&env, &z0, &x));
    assert!(is_distinguished(&env, &x, &y, &z0, &f0, &g0, &h).unwrap());
    let h0 = ChainMap::zero(&env, &x, &ys);
    assert!(!is_distinguished(&env, &x, &y, &z0, &f0, &g0, &h0).unwrap());
    let xy = x.direct_sum(&env.alg, &y);
    let split = cone_of(&env, &x, &y, &h0).unwrap();
    assert!(is_distinguished(&env, &x, &y, &xy, &split.iota, &split.pi, &h0).unwrap()
        || is_isomorphic(&env, &split.z, &xy).unwrap().is_some());
}

#[test]
fn sweeps_pass() {
    for (text, p, c) in [(A1, 2, 2), (A2, 3, 2), (A3REL, 2, 1)] {
        let env = env(text, p);
        let cap = cap(&env, c);
        let cat = Catalog::build(&env, &cap).unwrap();
        let ctx = HallCtx::new(&env, &cat);
        let r = congruence_sweep(&ctx, &cap).unwrap();
        assert!(r.pass(), "{:?}", r.violations);
        assert_eq!(r.skipped, 0);
        assert!(r.checked > 0);
        for t in &r.triples {
            assert_eq!(t.g_brute, Some(t.g_rp));
        }
    }
}

#[test]
fn structural_suite_passes() {
    for (text, p, c) in [(A1, 3, 2), (A2, 2, 1), (A3REL, 2, 1)] {
        let env = env(text, p);
        let cap = cap(&env, c);
        let cat = Catalog::build(&env, &cap).unwrap();
        let r = structural_suite(&HallCtx::new(&env, &cat), &cap, 256, 3).unwrap();
        assert!(r.pass(), "{:?}", r.violations);
        assert!(r.checked > 0);
    }
}

#[test]
fn ext1_dims_and_counts() {
    let env = env(A2, 3);
    let cat = Catalog::build(&env, &cap(&env, 1)).unwrap();
    let ctx = HallCtx::new(&env, &cat);
    let (s1, s2) = (rep(&ctx, &simple(&env, 0)), rep(&ctx, &simple(&env, 1)));
    assert_eq!(ext1_dim(&env, &s1, &s2), 1);
    let p1 = ctx.classify(&Complex2::from_module(&env.alg, &env.alg.projective(0)).unwrap()).unwrap();
    let z = cat.realize(&env, &p1);
    let with_k = ext1_classes(&ctx, &s1, &s2).unwrap();
    let total: u64 = with_k.values().sum();
    assert_eq!(total, 3);
    assert_eq!(ext1_count_to(&env, &s1, &s2, &z).unwrap(), 0);
    let zk = z.direct_sum(&env.alg, &Complex2::contractible(&env.alg, &[0, 1], &[0, 0]));
    assert_eq!(ext1_count_to(&env, &s1, &s2, &zk).unwrap(), 2);
    assert_eq!(ext1_count_to(&env, &s1, &s2, &s1.direct_sum(&env.alg, &s2)).unwrap(), 1);
}

#[test]
fn contractible_stratum_is_aut_k() {
    let env = env(A2, 3);
    let cat = Catalog::build(&env, &cap(&env, 1)).unwrap();
    let ctx = HallCtx::new(&env, &cat);
    for (i, e) in cat.entries.iter().enumerate() {
        let key = KsDecomp { rad: vec![], p: e.x.pdvp.e1.clone(), q: e.x.pdvp.e0.clone() };
        let ext = ext1_classes(&ctx, &e.x, &e.x.shift()).unwrap();
        assert_eq!(ext[&key], ctx.units(&ctx.entry_key(i)).unwrap().units.len() as u64);
    }
}

#[test]
fn residue_of_fractions() {
    assert_eq!(mod_residue(&Frac::new(3, 2), 4), None);
    assert_eq!(mod_residue(&Frac::new(3, 2), 5), Some(4));
    assert_eq!(mod_residue(&Frac::new(-1, 1), 4), Some(3));
    assert_eq!(mod_residue(&Frac::new(7, 3), 1), Some(0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn brute_matches_riedtmann_peng(p in prop::sample::select(vec![2u32, 3, 5]), a in 0usize..6, b in 0usize..6) {
        let env = env(A2, p);
        let cat = Catalog::build(&env, &cap(&env, 1)).unwrap();
        let ctx = HallCtx::new(&env, &cat);
        let (x, y) = (&cat.entries[a].x, &cat.entries[b].x);
        let ext = ext1_classes(&ctx, x, y).unwrap();
        let mut total = 0u64;
        for (key, &n) in &ext {
            let z = cat.realize(&env, key);
            prop_assert_eq!(hall_number_brute(&ctx, x, y, &z).unwrap(), hall_number_rp(&ctx, x, y, key, n).unwrap());
            total += n;
        }
        prop_assert_eq!(total, (p as u64).pow(ext1_total_dim(&env, x, y)));
    }
}

fn ext1_total_dim(env: &Env, x: &Complex2, y: &Complex2) -> u32 {
    HomK::new(env, x, &y.shift()).dim() as u32
}
