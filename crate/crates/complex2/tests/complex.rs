use hall2p_complex2::*;
use hall2p_quiver::{Algebra, Rep};
use proptest::prelude::*;

const A1: &str = "field 2\nvertex 1\n";
const A2: &str = "field 2\nvertex 1 2\narrow a 1 2\n";
const A3REL: &str = "field 2\nvertex 1 2 3\narrow a 1 2\narrow b 2 3\nrelation 1*a.b\n";

fn env(text: &str, p: u32) -> Env {
    Env::new(Algebra::parse(text).unwrap().with_prime(p).unwrap())
}

fn pd(e1: &[usize], e0: &[usize]) -> Pdvp {
    Pdvp { e1: e1.to_vec(), e0: e0.to_vec() }
}

fn c_p(env: &Env) -> Complex2 {
    Complex2::zero_diff(&env.alg, pd(&[1], &[0]))
}

#[test]
fn a1_hom_dims() {
    let env = env(A1, 2);
    let x = c_p(&env);
    let y = x.clone();
    assert_eq!(HomC::new(&env, &x, &y).dim(), 1);
    let k = HomK::new(&env, &x, &y);
    assert_eq!(k.htp.dim(), 0);
    assert_eq!(k.dim(), 1);
}

#[test]
fn contractible_has_no_k_homs() {
    let env = env(A2, 2);
    let kp = Complex2::k(&env.alg, &[1, 0]);
    let s1 = Complex2::from_module(&env.alg, &Rep::simple(&env.alg, 0)).unwrap();
    for y in [&kp, &s1, &s1.shift()] {
        assert_eq!(HomK::new(&env, &kp, y).dim(), 0);
    }
}

#[test]
fn shift_is_an_involution() {
    let env = env(A2, 2);
    let s1 = Complex2::from_module(&env.alg, &Rep::simple(&env.alg, 0)).unwrap();
    let back = s1.shift().shift();
    assert_eq!(back.serialize(), s1.serialize());
    assert!(Complex2::zero(&env.alg).shift().is_zero());
    let ks = Complex2::k(&env.alg, &[0, 1]).shift();
    assert!(is_isomorphic(&env, &ks, &Complex2::k_star(&env.alg, &[0, 1])).unwrap().is_some());
}

#[test]
fn cone_of_unit_is_contractible() {
    let env = env(A1, 2);
    let x = c_p(&env);
    let y = x.shift();
    let h = HomC::new(&env, &x, &y.shift()).basis[0].clone();
    let cone = cone_of(&env, &x, &y, &h).unwrap();
    assert_eq!(classify_contractible(&env, &cone.z).unwrap(), Some((vec![1], vec![0])));
    let split = cone_of(&env, &x, &y, &ChainMap::zero(&env, &x, &y.shift())).unwrap();
    assert!(is_isomorphic(&env, &split.z, &x.direct_sum(&env.alg, &y)).unwrap().is_some());
}

#[test]
fn cone_realizes_the_projective_cover_sequence() {
    let env = env(A2, 2);
    let s1 = Complex2::from_module(&env.alg, &Rep::simple(&env.alg, 0)).unwrap();
    let s2 = Complex2::from_module(&env.alg, &Rep::simple(&env.alg, 1)).unwrap();
    let hk = HomK::new(&env, &s1, &s2.shift());
    assert_eq!(hk.dim(), 1);
    let h = hk.rep(&env, &s1, &s2.shift(), &[1]);
    let cone = cone_of(&env, &s1, &s2, &h).unwrap();
    let p1 = Complex2::from_module(&env.alg, &env.alg.projective(0)).unwrap();
    assert!(is_homotopy_equivalent(&env, &cone.z, &p1).unwrap());
    assert!(cone.iota.is_chain_map(&s2, &cone.z));
    assert!(cone.pi.is_chain_map(&cone.z, &s1));
}

#[test]
fn cone_rejects_non_chain_maps() {
    let env = env(A2, 2);
    let s1 = Complex2::from_module(&env.alg, &Rep::simple(&env.alg, 0)).unwrap();
    let mut bad = ChainMap::identity(&env, &s1);
    bad.f1 = bad.f1.scale(0);
    assert!(cone_of(&env, &s1, &s1.shift(), &bad).is_err());
}

#[test]
fn decompose_examples() {
    let env = env(A1, 2);
    let d = decompose(&env, &Complex2::k(&env.alg, &[1])).unwrap();
    assert!(d.xr.is_zero());
    assert_eq!((d.p, d.q), (vec![1], vec![0]));

    let f = env.field();
    let e = pd(&[2], &[2]);
    let p2 = env.alg.proj_sum(&[2]);
    let mut d1 = hall2p_quiver::RepMor::zero(f, &p2, &p2);
    d1.blocks[0].set(0, 0, 1);
    let mut d0 = hall2p_quiver::RepMor::zero(f, &p2, &p2);
    d0.blocks[0].set(1, 1, 1);
    let x = Complex2::from_parts(&env.alg, e, d1, d0);
    assert!(x.is_valid(&env.alg));
    let d = decompose(&env, &x).unwrap();
    assert!(d.xr.is_zero());
    assert_eq!((d.p, d.q), (vec![1], vec![1]));
    assert!(d.to_sum.then(&d.from_sum).is_iso());

    let r = c_p(&env);
    let d = decompose(&env, &r).unwrap();
    assert_eq!(d.xr.serialize(), r.serialize());
}

#[test]
fn homotopy_equivalence_of_contractibles() {
    let env = env(A1, 2);
    let kp = Complex2::k(&env.alg, &[1]);
    let kq = Complex2::k_star(&env.alg, &[1]);
    assert!(is_homotopy_equivalent(&env, &kp, &kq).unwrap());
    assert!(is_isomorphic(&env, &kp, &kq).unwrap().is_none());
    let x = c_p(&env);
    assert!(is_isomorphic(&env, &x, &x.shift()).unwrap().is_none());
}

#[test]
fn aut_orders_on_a1() {
    let env = env(A1, 2);
    let x = c_p(&env);
    let a = aut_orders(&env, &x).unwrap();
    assert_eq!((a.aut_c, a.aut_k, a.htp_dim), (1, 1, 0));
    let xx = x.direct_sum(&env.alg, &x);
    assert_eq!(aut_orders(&env, &xx).unwrap().aut_c, 6);
}

#[test]
fn indecomposability() {
    let env = env(A1, 3);
    let x = c_p(&env);
    assert!(is_indecomposable(&env, &x).unwrap());
    assert!(!is_indecomposable(&env, &x.direct_sum(&env.alg, &x)).unwrap());
    assert!(!is_indecomposable(&env, &Complex2::k(&env.alg, &[1])).unwrap());
}

#[test]
fn enumerate_on_a1() {
    let env = env(A1, 2);
    let r = enumerate_radical(&env, &pd(&[1], &[0])).unwrap();
    assert_eq!(r.len(), 1);
    assert_eq!(r[0].label, "e1=[1];e0=[0];d1=[];d0=[]");
    let r = enumerate_radical(&env, &pd(&[1], &[1])).unwrap();
    assert_eq!(r.len(), 1);
    let all = enumerate_all(&env, &pd(&[1], &[1])).unwrap();
    assert_eq!(all.len(), 3);
    let mut shapes: Vec<_> = all.iter().map(|c| classify_contractible(&env, &c.complex).unwrap()).collect();
    shapes.sort();
    assert_eq!(shapes, vec![None, Some((vec![0], vec![1])), Some((vec![1], vec![0]))]);
}

#[test]
fn enumerate_finds_simple_resolution() {
    let env = env(A2, 2);
    let s1 = Complex2::from_module(&env.alg, &Rep::simple(&env.alg, 0)).unwrap();
    let r = enumerate_radical(&env, &s1.pdvp).unwrap();
    let hits = r.iter().filter(|c| is_isomorphic(&env, &c.complex, &s1).unwrap().is_some()).count();
    assert_eq!(hits, 1);
}

#[test]
fn orbit_sizes_match_point_counts() {
    let env = env(A3REL, 2);
    for e in Pdvp::all_below(&pd(&[1, 1, 1], &[1, 1, 0])) {
        let classes = enumerate_radical(&env, &e).unwrap();
        let total: u64 = classes.iter().map(|c| c.orbit).sum();
        assert_eq!(total as u128, radical_point_count(&env, &e).unwrap(), "{e}");
    }
}

#[test]
fn catalog_of_a2() {
    let env = env(A2, 3);
    let cat = Catalog::build(&env, &pd(&[1, 1], &[1, 1])).unwrap();
    // C_M and C_M^* for the three indecomposable modules
    assert_eq!(cat.entries.len(), 6);
    for t in &cat.entries {
        assert!(is_indecomposable(&env, &t.x).unwrap());
    }
}

#[test]
fn catalog_agrees_with_orbit_enumeration() {
    let env = env(A3REL, 2);
    let cap = pd(&[1, 1, 1], &[1, 1, 1]);
    let cat = Catalog::build(&env, &cap).unwrap();
    for e in Pdvp::all_below(&cap) {
        if e.is_zero() {
            continue;
        }
        let Ok(classes) = enumerate_radical(&env, &e) else { continue };
        let keys: std::collections::BTreeSet<_> =
            classes.iter().map(|c| cat.classify(&env, &c.complex).unwrap()).collect();
        assert_eq!(keys.len(), classes.len(), "{e}");
        assert_eq!(keys.len(), cat.radical_classes(&e).len(), "{e}");
        for c in &classes {
            let key = cat.classify(&env, &c.complex).unwrap();
            assert_eq!(cat.aut_c(&env, &key).unwrap(), aut_orders(&env, &c.complex).unwrap().aut_c);
        }
    }
}

#[test]
fn serialization_round_trip() {
    let env = env(A3REL, 2);
    let s1 = Complex2::from_module(&env.alg, &Rep::simple(&env.alg, 0)).unwrap();
    let s = s1.serialize();
    assert_eq!(Complex2::parse(&env.alg, &s).unwrap().serialize(), s);
}

fn a3_points() -> impl Strategy<Value = (usize, u64)> {
    (0usize..8).prop_flat_map(|k| (Just(k), 0u64..1024))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn decomposition_witness_and_aut_factorization((k, seed) in a3_points()) {
        let env = env(A3REL, 2);
        let pds = Pdvp::all_below(&pd(&[1, 1, 0], &[1, 1, 1]));
        let e = &pds[k % pds.len()];
        let space = PointSpace::new(&env, e, false);
        let pts: Vec<_> = space.scan(&env).unwrap().collect();
        let (c1, c0) = &pts[(seed as usize) % pts.len()];
        let x = space.complex(&env, c1, c0);
        prop_assert!(x.is_valid(&env.alg));
        let d = decompose(&env, &x).unwrap();
        prop_assert!(d.xr.is_radical(&env));
        prop_assert!(d.from_sum.is_chain_map(&d.sum, &x));
        prop_assert!(d.to_sum.then(&d.from_sum).sub(&ChainMap::identity(&env, &x)).flatten().iter().all(|&v| v == 0));
        prop_assert_eq!(x.shift().shift().serialize(), x.serialize());
        let a = aut_orders(&env, &d.xr).unwrap();
        prop_assert_eq!(a.aut_c, a.aut_k * 2u128.pow(a.htp_dim as u32));
    }

    #[test]
    fn contractible_shape_is_recovered(p in proptest::collection::vec(0usize..2, 3), q in proptest::collection::vec(0usize..2, 3)) {
        let env = env(A3REL, 2);
        let k = Complex2::contractible(&env.alg, &p, &q);
        prop_assert_eq!(classify_contractible(&env, &k).unwrap(), Some((p, q)));
    }
}
