use hall2p_ffla::Mat;
use hall2p_quiver::*;
use proptest::prelude::*;

const A2: &str = "field 2\nvertex 1 2\narrow a 1 2\n";
const A3REL: &str = "field 2\nvertex 1 2 3\narrow a 1 2\narrow b 2 3\nrelation 1*a.b\n";

fn alg(text: &str, p: u32) -> Algebra {
    Algebra::parse(text).unwrap().with_prime(p).unwrap()
}

#[test]
fn parse_a2() {
    let a = Algebra::parse(A2).unwrap();
    assert_eq!(a.n(), 2);
    assert_eq!(a.arrows().len(), 1);
    assert_eq!(a.q(), 2);
}

#[test]
fn a3_relation_has_gldim_two() {
    let a = Algebra::parse(A3REL).unwrap();
    assert_eq!(gldim_probe(&a, 10).unwrap(), 2);
    let r = projective_resolution(&a, &Rep::simple(&a, 0), 10).unwrap();
    assert_eq!(r.terms, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
}

#[test]
fn length_one_relation_rejected() {
    let e = Algebra::parse("field 2\nvertex 1 2\narrow a 1 2\nrelation 1*a\n").unwrap_err();
    assert!(matches!(e, QuiverError::Syntax { line: 4, .. }));
}

#[test]
fn syntax_errors_carry_lines() {
    let e = AlgebraSpec::parse("field 2\nvertex 1\nbogus\n").unwrap_err();
    assert_eq!(e, QuiverError::Syntax { line: 3, msg: "unknown keyword `bogus`".into() });
    assert!(AlgebraSpec::parse("field 2\nvertex 1 2\narrow a 1 2\narrow b 1 2\nrelation 1*a.b\n").is_err());
    assert!(AlgebraSpec::parse("field 2\nvertex 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 1 3\nrelation 1*a.b + 1*c.c\n").is_err());
}

#[test]
fn cyclic_needs_pathcap() {
    let t = "field 3\nvertex 1\narrow x 1 1\nrelation 1*x.x\n";
    assert!(matches!(Algebra::parse(t), Err(QuiverError::Config(_))));
    let a = Algebra::parse(&format!("pathcap 2\n{t}")).unwrap();
    assert_eq!(a.pdim(0, 0), 2);
    // no relation kills x.x.x.x at cap 4
    let b = Algebra::parse("field 3\npathcap 4\nvertex 1\narrow x 1 1\nrelation 1*x.x.x.x.x\n");
    assert!(matches!(b, Err(QuiverError::Config(_))));
}

#[test]
fn commutativity_relation() {
    let a = Algebra::parse(
        "field 5\nvertex 1 2 3 4\narrow a 1 2\narrow b 2 4\narrow c 1 3\narrow d 3 4\nrelation 1*a.b + -1*c.d\n",
    )
    .unwrap();
    assert_eq!(a.pdim(0, 3), 1);
    let p = a.projective(0);
    assert!(p.satisfies_relations(&a));
    assert_eq!(p.dims, vec![1, 1, 1, 1]);
}

#[test]
fn spec_roundtrip() {
    let s = AlgebraSpec::parse(A3REL).unwrap();
    assert_eq!(AlgebraSpec::parse(&s.to_text()).unwrap(), s);
}

#[test]
fn projectives_a2() {
    let a = alg(A2, 2);
    let p1 = a.projective(0);
    assert_eq!(p1.dims, vec![1, 1]);
    assert_eq!(p1.maps[0], Mat::from_rows(a.field(), &[vec![1]]));
    assert_eq!(a.projective(1).dims, vec![0, 1]);
}

#[test]
fn projective_a3_relation() {
    let a = alg(A3REL, 2);
    assert_eq!(a.projective(0).dims, vec![1, 1, 0]);
}

#[test]
fn hom_dims_a2() {
    let a = alg(A2, 3);
    let (p1, p2) = (a.projective(0), a.projective(1));
    assert_eq!(hom_basis(&a, &p1, &p2).len(), 0);
    assert_eq!(hom_basis(&a, &p2, &p1).len(), 1);
    assert!(!hom_basis(&a, &p1, &p1).is_empty());
}

#[test]
fn radicals() {
    let a = alg(A2, 2);
    let r = radical(&a, &a.projective(0));
    assert_eq!(r.rep.dims, vec![0, 1]);
    assert_eq!(radical(&a, &Rep::simple(&a, 0)).rep.dims, vec![0, 0]);
    let b = alg(A3REL, 3);
    assert_eq!(radical(&b, &b.projective(0)).rep.dims, vec![0, 1, 0]);
}

#[test]
fn covers() {
    let a = alg(A2, 5);
    for i in 0..2 {
        let (e, p, epi) = projective_cover(&a, &a.projective(i));
        assert_eq!(p, a.projective(i));
        assert_eq!(e[i], 1);
        assert!(epi.is_iso());
    }
    let (e, p, epi) = projective_cover(&a, &Rep::simple(&a, 0));
    assert_eq!(e, vec![1, 0]);
    assert_eq!(p.dims, vec![1, 1]);
    assert_eq!(epi.rank(), 1);
    assert!(epi.is_morphism(&a, &p, &Rep::simple(&a, 0)));
    let (e, _, epi) = projective_cover(&a, &Rep::simple(&a, 1));
    assert_eq!(e, vec![0, 1]);
    assert!(epi.is_iso());
}

#[test]
fn euler_a2() {
    let a = alg(A2, 2);
    assert_eq!(euler_form(&a, &[1, 0], &[0, 1]).unwrap(), -1);
    assert_eq!(euler_form(&a, &[0, 1], &[1, 0]).unwrap(), 0);
    assert_eq!(sym_euler_form(&a, &[1, 0], &[1, 0]).unwrap(), 2);
}

#[test]
fn euler_on_projectives_is_hom_dim() {
    for (t, p) in [(A2, 3), (A3REL, 2)] {
        let a = alg(t, p);
        let d = a.cartan();
        let ef = EulerForm::new(&a).unwrap();
        for i in 0..a.n() {
            for j in 0..a.n() {
                let h = hom_basis(&a, &a.projective(i), &a.projective(j)).len() as i64;
                assert_eq!(ef.eval(&d[i], &d[j]), h);
                let mut s = vec![0; a.n()];
                s[j] = 1;
                assert_eq!(ef.eval(&d[i], &s), (i == j) as i64);
            }
        }
    }
}

#[test]
fn singular_cartan_is_invalid() {
    let a = Algebra::parse("field 3\npathcap 2\nvertex 1\narrow x 1 1\nrelation 1*x.x\n").unwrap();
    assert!(matches!(EulerForm::new(&a), Err(QuiverError::Invalid(_))));
}

/// random representation of A2 or A3-with-relation
fn arb_rep() -> impl Strategy<Value = (bool, u32, Vec<usize>, Vec<u32>)> {
    (any::<bool>(), prop::sample::select(vec![2u32, 3]), prop::collection::vec(0usize..3, 3), prop::collection::vec(0u32..3, 18))
}

fn build(which: bool, p: u32, dims: Vec<usize>, seed: Vec<u32>) -> (Algebra, Rep) {
    let a = alg(if which { A2 } else { A3REL }, p);
    let f = a.field();
    let dims: Vec<usize> = dims.into_iter().take(a.n()).collect();
    let mut it = seed.into_iter().map(|x| x % p);
    let mut maps = vec![];
    for ar in a.arrows() {
        let (r, c) = (dims[ar.dst], dims[ar.src]);
        maps.push(Mat::from_vec(f, r, c, (0..r * c).map(|_| it.next().unwrap_or(1)).collect()));
    }
    if !which && maps[0].rows() > 0 {
        // force b.a-composite to vanish by killing b on im a
        let k = maps[0].clone();
        let ker = k.transpose().kernel_basis();
        let proj = if ker.is_empty() { Mat::zeros(f, dims[1], dims[1]) } else {
            let e = hall2p_ffla::Echelon::from_vectors(f, dims[1], &ker);
            let b = e.as_cols();
            b.mul(&b.transpose())
        };
        maps[1] = maps[1].mul(&proj);
        if !maps[1].mul(&maps[0]).is_zero() {
            maps[1] = Mat::zeros(f, dims[2], dims[1]);
        }
    }
    (a, Rep { dims, maps })
}

proptest! {
    #[test]
    fn yoneda_dimension((w, p, d, s) in arb_rep()) {
        let (a, m) = build(w, p, d, s);
        prop_assume!(m.satisfies_relations(&a));
        for i in 0..a.n() {
            prop_assert_eq!(hom_basis(&a, &a.projective(i), &m).len(), m.dims[i]);
        }
    }

    #[test]
    fn radical_is_meet_of_kernels_to_simples((w, p, d, s) in arb_rep()) {
        let (a, m) = build(w, p, d, s);
        prop_assume!(m.satisfies_relations(&a));
        let rad = radical(&a, &m);
        for v in 0..a.n() {
            let mut rows = vec![];
            for i in 0..a.n() {
                for g in hom_basis(&a, &m, &Rep::simple(&a, i)) {
                    for r in 0..g.blocks[v].rows() {
                        rows.push(g.blocks[v].row(r).to_vec());
                    }
                }
            }
            let f = a.field();
            let inter = if rows.is_empty() { m.dims[v] } else {
                Mat::from_vec(f, rows.len(), m.dims[v], rows.concat()).kernel_basis().len()
            };
            prop_assert_eq!(rad.rep.dims[v], inter);
        }
        prop_assert!(rad.rep.satisfies_relations(&a));
    }

    #[test]
    fn cover_is_iso_on_tops((w, p, d, s) in arb_rep()) {
        let (a, m) = build(w, p, d, s);
        prop_assume!(m.satisfies_relations(&a) && !m.is_zero());
        let (e, pc, epi) = projective_cover(&a, &m);
        prop_assert!(epi.is_morphism(&a, &pc, &m));
        for v in 0..a.n() {
            prop_assert_eq!(epi.blocks[v].rank(), m.dims[v]);
        }
        let rad = radical(&a, &m);
        let top: usize = m.total_dim() - rad.rep.total_dim();
        prop_assert_eq!(e.iter().sum::<usize>(), top);
    }
}
