use hall2p_ffla::*;
use proptest::prelude::*;

fn fp(p: u32) -> Fp {
    Fp::new(p).unwrap()
}

#[test]
fn rejects_bad_moduli() {
    assert!(Fp::new(1).is_err());
    assert!(Fp::new(4).is_err());
    assert!(Fp::new(257).is_err());
    assert!(Fp::new(251).is_ok());
}

#[test]
fn primitive_roots() {
    for p in [2u32, 3, 5, 7, 11, 13, 251] {
        let f = fp(p);
        let g = f.primitive_root();
        let mut seen = std::collections::HashSet::new();
        for e in 0..p - 1 {
            seen.insert(f.pow(g, e as u64));
        }
        assert_eq!(seen.len() as u32, p - 1);
    }
}

#[test]
fn kernel_of_identity_is_empty() {
    assert!(Mat::identity(fp(2), 2).kernel_basis().is_empty());
}

#[test]
fn kernel_of_all_ones() {
    let m = Mat::from_rows(fp(2), &[vec![1, 1], vec![1, 1]]);
    assert_eq!(m.kernel_basis(), vec![vec![1, 1]]);
}

#[test]
fn kernel_of_zero_map() {
    let m = Mat::zeros(fp(3), 3, 2);
    assert_eq!(m.kernel_basis(), vec![vec![1, 0], vec![0, 1]]);
}

#[test]
fn solve_identity() {
    let m = Mat::identity(fp(5), 2);
    assert_eq!(m.solve_affine(&[1, 0]).unwrap(), Some((vec![1, 0], vec![])));
}

#[test]
fn solve_unreachable() {
    let m = Mat::zeros(fp(2), 1, 1);
    assert_eq!(m.solve_affine(&[1]).unwrap(), None);
}

#[test]
fn solve_with_kernel() {
    let m = Mat::from_rows(fp(2), &[vec![1, 1]]);
    assert_eq!(m.solve_affine(&[0]).unwrap(), Some((vec![0, 0], vec![vec![1, 1]])));
}

#[test]
fn solve_shape_mismatch() {
    let m = Mat::identity(fp(3), 2);
    assert!(matches!(m.solve_affine(&[1]), Err(FflaError::Dim(_))));
}

#[test]
fn enumerate_empty_basis() {
    let v: Vec<_> = enumerate_space(fp(7), 3, &[], DEFAULT_CAP).unwrap().collect();
    assert_eq!(v, vec![vec![0, 0, 0]]);
}

#[test]
fn enumerate_two_dim_f2() {
    let b = vec![vec![1, 0], vec![0, 1]];
    let v: Vec<_> = enumerate_space(fp(2), 2, &b, DEFAULT_CAP).unwrap().collect();
    assert_eq!(v, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
}

#[test]
fn enumerate_cap() {
    let b: Vec<Vec<u32>> = (0..5).map(|i| (0..5).map(|j| (i == j) as u32).collect()).collect();
    assert!(matches!(enumerate_space(fp(3), 5, &b, 100), Err(FflaError::Capacity { .. })));
    assert!(enumerate_space(fp(3), 5, &b, 243).is_ok());
}

#[test]
fn gl2_f2_brute_force() {
    let f = fp(2);
    let basis: Vec<Vec<u32>> = (0..4).map(|i| (0..4).map(|j| (i == j) as u32).collect()).collect();
    let n = enumerate_space(f, 4, &basis, DEFAULT_CAP)
        .unwrap()
        .filter(|v| Mat::from_vec(f, 2, 2, v.clone()).is_invertible())
        .count();
    assert_eq!(n, 6);
    assert_eq!(gl_order(2, 2), 6);
    assert_eq!(gl_order(3, 2), 48);
    assert_eq!(gl_order(5, 0), 1);
}

#[test]
fn inverse_roundtrip() {
    let f = fp(7);
    let m = Mat::from_rows(f, &[vec![1, 2, 0], vec![0, 1, 3], vec![4, 0, 1]]);
    let inv = m.inverse().unwrap();
    assert_eq!(m.mul(&inv), Mat::identity(f, 3));
    assert!(Mat::from_rows(f, &[vec![1, 2], vec![2, 4]]).inverse().is_none());
}

#[test]
fn echelon_coords() {
    let f = fp(5);
    let e = Echelon::from_vectors(f, 3, &[vec![1, 2, 0], vec![0, 1, 1]]);
    let v = e.combine(&[3, 4]);
    assert_eq!(e.coords(&v), Some(vec![3, 4]));
    assert!(!e.contains(&[0, 0, 1]));
}

fn arb_mat() -> impl Strategy<Value = (u32, usize, usize, Vec<u32>)> {
    (prop::sample::select(vec![2u32, 3, 5, 7]), 0usize..6, 0usize..6).prop_flat_map(|(p, r, c)| {
        (Just(p), Just(r), Just(c), prop::collection::vec(0..p, r * c))
    })
}

proptest! {
    #[test]
    fn rank_nullity((p, r, c, d) in arb_mat()) {
        let m = Mat::from_vec(fp(p), r, c, d);
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.len(), c);
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn solve_none_iff_rank_jumps((p, r, c, d) in arb_mat(), seed in prop::collection::vec(0u32..7, 6)) {
        let f = fp(p);
        let m = Mat::from_vec(f, r, c, d);
        let b: Vec<u32> = seed.iter().take(r).map(|x| x % p).chain(std::iter::repeat(0)).take(r).collect();
        let aug = m.hstack(&Mat::from_cols(f, r, &[b.clone()]));
        let sol = m.solve_affine(&b).unwrap();
        prop_assert_eq!(sol.is_none(), aug.rank() > m.rank());
        if let Some((x, k)) = sol {
            prop_assert_eq!(m.mul_vec(&x), b);
            prop_assert_eq!(k.len() + m.rank(), c);
        }
    }

    #[test]
    fn enumeration_distinct((p, r, c, d) in arb_mat()) {
        let f = fp(p);
        let m = Mat::from_vec(f, r, c, d);
        let e = m.column_space();
        prop_assume!(count_points(p, e.dim()) <= 1 << 12);
        let pts: Vec<_> = enumerate_space(f, r, &e.basis, DEFAULT_CAP).unwrap().collect();
        let set: std::collections::HashSet<_> = pts.iter().cloned().collect();
        prop_assert_eq!(pts.len() as u128, count_points(p, e.dim()));
        prop_assert_eq!(set.len(), pts.len());
    }

    #[test]
    fn kernel_is_reduced((p, r, c, d) in arb_mat()) {
        let k = Mat::from_vec(fp(p), r, c, d).kernel_basis();
        let lead: Vec<usize> = k.iter().map(|v| v.iter().position(|&x| x != 0).unwrap()).collect();
        for (i, v) in k.iter().enumerate() {
            prop_assert_eq!(v[lead[i]], 1);
            for (j, w) in k.iter().enumerate() {
                if i != j {
                    prop_assert_eq!(w[lead[i]], 0);
                }
            }
        }
        prop_assert!(lead.windows(2).all(|w| w[0] < w[1]));
    }
}
