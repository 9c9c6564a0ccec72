use hall2p_complex2::*;
use hall2p_hall::HallCtx;
use hall2p_lie::*;
use hall2p_quiver::{Algebra, EulerForm, Rep};
use proptest::prelude::*;

const A1: &str = "field 2\nvertex 1\n";
const A2: &str = "field 2\nvertex 1 2\narrow a 1 2\n";
const A3REL: &str = "field 2\nvertex 1 2 3\narrow a 1 2\narrow b 2 3\nrelation 1*a.b\n";
const KRONECKER: &str = "field 2\nvertex 1 2\narrow a 1 2\narrow b 1 2\n";

fn alg(text: &str) -> Algebra {
    Algebra::parse(text).unwrap()
}

fn env(text: &str, p: u32) -> Env {
    Env::new(alg(text).with_prime(p).unwrap())
}

fn cap(n: usize, c: usize) -> Pdvp {
    Pdvp { e1: vec![c; n], e0: vec![c; n] }
}

fn table(text: &str, p: u32, c: usize, side: Side) -> LieTable {
    let a = alg(text);
    build_at(&a, p, &cap(a.n(), c), side).unwrap()
}

fn index(t: &LieTable, x: &Complex2) -> usize {
    t.basis.iter().position(|l| *l == x.serialize()).unwrap()
}

#[test]
fn kclass_examples() {
    let env = env(A2, 3);
    let s1 = Complex2::from_module(&env.alg, &Rep::simple(&env.alg, 0)).unwrap();
    assert_eq!(kclass(&s1), vec![1, 0]);
    assert_eq!(kclass(&s1.shift()), vec![-1, 0]);
    assert_eq!(kclass(&Complex2::k(&env.alg, &[1, 1])), vec![0, 0]);
    let a3 = self::env(A3REL, 2);
    let s1 = Complex2::from_module(&a3.alg, &Rep::simple(&a3.alg, 0)).unwrap();
    assert_eq!(kclass(&s1), vec![1, 0, 0]);
}

#[test]
fn sym_form_examples() {
    let a2 = env(A2, 2);
    assert_eq!(sym_form(&a2, &[1, 0], &[0, 1]).unwrap(), -1);
    let s = simple_complexes(&a2).unwrap();
    assert_eq!(sym_form_k(&a2, &s[0], &s[1]), -1);
    let a1 = env(A1, 3);
    assert_eq!(sym_form(&a1, &[1], &[1]).unwrap(), 2);
}

#[test]
fn homotopy_form_is_the_symmetric_euler_form() {
    for (text, p) in [(A1, 2), (A2, 3), (A3REL, 2), (KRONECKER, 2)] {
        let env = env(text, p);
        let h = SymForm::from_homotopy(&env).unwrap();
        let e = SymForm::euler(&env).unwrap();
        assert_eq!(h, e, "{text}");
        let n = env.alg.n();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(h.gram[i][j], h.gram[j][i]);
            }
        }
        // on every complex in a window, not only on the simples
        let cat = Catalog::build(&env, &cap(n, 1)).unwrap();
        let euler = EulerForm::new(&env.alg).unwrap();
        for a in &cat.entries {
            for b in &cat.entries {
                assert_eq!(sym_form_k(&env, &a.x, &b.x), euler.sym(&a.x.kclass(), &b.x.kclass()));
            }
        }
    }
}

#[test]
fn a1_gives_sl2() {
    for p in [2, 3, 5] {
        let t = table(A1, p, 2, Side::Tri);
        assert_eq!(t.dim(), 3);
        let up = (0..2).find(|&i| t.degrees[i] == [1]).unwrap();
        let down = 1 - up;
        let h = 2;
        // [h, u+] = 2 u+
        let hu: Vec<(i64, usize)> = t.bracket(h, up).unwrap();
        assert_eq!(hu, vec![(2, up)]);
        assert_eq!(t.bracket(up, down).unwrap(), vec![(-1, h)]);
        assert!(chevalley_compare(&t, 1).pass());
    }
}

#[test]
fn a2_gives_sl3() {
    let env = env(A2, 5);
    let c = cap(2, 2);
    let cat = Catalog::build(&env, &c).unwrap();
    let ctx = HallCtx::new(&env, &cat);
    let t = build_lie_table(&ctx, &c, Side::Tri).unwrap();
    assert_eq!((t.dim(), t.roots), (8, 6));
    let rep = |m: &Rep| cat.realize(&env, &ctx.classify(&Complex2::from_module(&env.alg, m).unwrap()).unwrap());
    let s1 = index(&t, &rep(&Rep::simple(&env.alg, 0)));
    let s2 = index(&t, &rep(&Rep::simple(&env.alg, 1)));
    let p1 = index(&t, &rep(&env.alg.projective(0)));
    let b = t.bracket(s1, s2).unwrap();
    assert_eq!(b.len(), 1);
    assert_eq!((b[0].0.abs(), b[0].1), (1, p1));
    let dual = rep(&Rep::simple(&env.alg, 0)).shift();
    let s1_dual = index(&t, &cat.realize(&env, &ctx.classify(&dual).unwrap()));
    assert_eq!(t.bracket(s1, s1_dual).unwrap(), vec![(-1, 6)]);
    let r = chevalley_compare(&t.reduce(4), 2);
    assert!(r.pass(), "{}", r.reason);
    assert_eq!(r.signs.unwrap().len(), 6);
}

#[test]
fn jacobi_on_small_windows() {
    for (text, p) in [(A1, 5), (A1, 7), (A2, 5), (A2, 7)] {
        let t = table(text, p, 2, Side::Tri).reduce(p as u64 - 1);
        let j = jacobi_check(&t);
        assert!(j.pass(), "{:?}", j.residuals);
        assert_eq!(j.skipped, 0);
        assert!(j.checked > 0);
    }
}

#[test]
fn jacobi_with_relations() {
    for p in [2, 3] {
        let t = table(A3REL, p, 2, Side::Tri).reduce(p as u64 - 1);
        let j = jacobi_check(&t);
        assert!(j.pass());
        assert_eq!(j.checked + j.skipped, 15 * 14 * 13 / 6);
    }
}

#[test]
fn cartan_triples_vanish() {
    let t = table(A2, 5, 2, Side::Tri);
    assert_eq!(t.bracket(6, 7).unwrap(), vec![]);
    let j = jacobi_check(&t);
    assert!(!j.residuals.iter().any(|r| r.0 >= 6));
}

#[test]
fn sides_agree() {
    for (text, p, c) in [(A1, 2, 2), (A1, 3, 2), (A1, 5, 2), (A2, 5, 2), (A3REL, 2, 1), (A3REL, 3, 1)] {
        let m = p as u64 - 1;
        let e = table(text, p, c, Side::Exact).reduce(m);
        let t = table(text, p, c, Side::Tri).reduce(m);
        let r = compare_tables(&e, &t).unwrap();
        assert!(r.pass(), "{:?}", r.mismatches);
    }
}

#[test]
fn compare_rejects_mismatched_bases() {
    let a = table(A1, 3, 2, Side::Tri);
    let b = table(A2, 3, 2, Side::Tri);
    assert!(matches!(compare_tables(&a, &b), Err(LieError::Basis(_))));
    assert!(matches!(compare_tables(&a, &a.reduce(2)), Err(LieError::Basis(_))));
    let mut c = a.clone();
    c.brackets.insert((0, 1), vec![(1, 2)]);
    assert!(!compare_tables(&a, &c).unwrap().pass());
}

#[test]
fn kronecker_is_not_a2() {
    let t = table(KRONECKER, 3, 1, Side::Tri);
    assert!(!chevalley_compare(&t, 2).pass());
}

#[test]
fn truncation_is_flagged() {
    let t = table(A2, 3, 1, Side::Tri);
    assert!(!t.truncated.is_empty());
    let (i, j) = *t.truncated.iter().next().unwrap();
    assert_eq!(t.bracket(i, j), None);
    let text = t.to_text();
    assert!(text.contains(&format!("truncated {i} {j}")));
    let jr = jacobi_check(&t.reduce(2));
    assert!(jr.skipped > 0);
    assert!(jr.pass());
}

#[test]
fn text_round_trip() {
    for t in [table(A2, 5, 2, Side::Exact).reduce(4), table(A2, 3, 1, Side::Tri)] {
        let s = t.to_text();
        let back = LieTable::parse(&s).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.to_text(), s);
    }
    assert!(LieTable::parse("modulus 2\n").is_err());
    assert!(LieTable::parse("modulus 0\nprovenance tri q=3 window=1,1\nbasis a h1\ndegree 0 : 1\ndegree 1 : 0\nbracket 1 0 : 1*0\n").is_err());
}

#[test]
fn classical_tables() {
    let a = alg(A2);
    let c = cap(2, 2);
    let ts: Vec<LieTable> = [2, 3, 5].iter().map(|&p| build_at(&a, p, &c, Side::Tri).unwrap()).collect();
    let lim = classical_table(&ts).unwrap();
    assert_eq!(lim.modulus, 0);
    assert_eq!(lim.provenance.q, None);
    assert!(lim.to_text().contains("q=limit"));
    assert!(jacobi_check(&lim).pass());
    assert!(chevalley_compare(&lim, 2).pass());
    assert!(matches!(classical_table(&ts[..2]), Err(LieError::Limit(_))));
    let mut bad = ts.clone();
    bad[2].brackets.insert((0, 1), vec![(5, 3)]);
    assert!(matches!(classical_table(&bad), Err(LieError::Limit(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn antisymmetric_and_graded(p in prop::sample::select(vec![3u32, 5]), i in 0usize..8, j in 0usize..8) {
        let t = table(A2, p, 2, Side::Tri);
        let (u, v) = (t.bracket(i, j).unwrap(), t.bracket(j, i).unwrap());
        let neg: Vec<(i64, usize)> = v.iter().map(|&(c, k)| (-c, k)).collect();
        prop_assert_eq!(&u, &neg);
        let d: Vec<i64> = t.degrees[i].iter().zip(&t.degrees[j]).map(|(a, b)| a + b).collect();
        for (_, k) in u {
            if k < t.roots {
                prop_assert_eq!(&t.degrees[k], &d);
            } else {
                prop_assert!(d.iter().all(|&x| x == 0) || i >= t.roots || j >= t.roots);
            }
        }
    }
}
