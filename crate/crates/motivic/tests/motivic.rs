use hall2p_complex2::*;
use hall2p_motivic::*;
use hall2p_quiver::{Algebra, Rep};
use proptest::prelude::*;

const A1: &str = "field 2\nvertex 1\n";
const A2: &str = "field 2\nvertex 1 2\narrow a 1 2\n";
const PRIMES: [u32; 4] = [2, 3, 5, 7];
const CAP: u64 = 1 << 24;

fn alg(text: &str) -> Algebra {
    Algebra::parse(text).unwrap()
}

fn env(text: &str, p: u32) -> Env {
    Env::new(alg(text).with_prime(p).unwrap())
}

fn simple_id(text: &str, i: usize) -> Obj {
    let a = alg(text);
    Obj::Id(Complex2::from_module(&a, &Rep::simple(&a, i)).unwrap().serialize())
}

fn shifted(o: &Obj, text: &str) -> Obj {
    let Obj::Id(s) = o else { unreachable!() };
    let a = alg(text);
    Obj::Id(Complex2::parse(&a, s).unwrap().shift().serialize())
}

/// Indecomposable radical complexes, as integral ids.
fn indecomposables(text: &str) -> Vec<Obj> {
    let env = env(text, 2);
    let n = env.alg.n();
    let cat = Catalog::build(&env, &Pdvp { e1: vec![1; n], e0: vec![1; n] }).unwrap();
    cat.entries.iter().map(|e| Obj::Id(e.x.serialize())).collect()
}

fn series(text: &str, c: Counter, primes: &[u32]) -> Vec<u128> {
    count_series(&alg(text), &c, primes, CAP).unwrap().values
}

fn fit(values: &[i128], bound: usize) -> QPolynomial {
    interpolate_values(&PRIMES[..values.len()], values, bound).unwrap()
}

#[test]
fn count_examples() {
    let p3 = [2, 3, 5];
    assert_eq!(series(A2, Counter::HomA(vec![1, 0], vec![1, 0]), &p3), vec![2, 3, 5]);
    let cs = simple_id(A1, 0);
    assert_eq!(series(A1, Counter::AutC(cs.clone()), &p3), vec![1, 2, 4]);
    let cs_star = shifted(&cs, A1);
    assert_eq!(series(A1, Counter::Ext1(cs.clone(), cs_star.clone()), &p3), vec![2, 3, 5]);
    assert_eq!(series(A1, Counter::HomK(cs.clone(), cs.clone()), &p3), vec![2, 3, 5]);
    // the contractible middle term carries the units of End_K
    let k = Obj::KStar(vec![1]);
    assert_eq!(series(A1, Counter::Ext1Z(cs.clone(), cs_star, k), &p3), vec![1, 2, 4]);
}

#[test]
fn counts_reject_undefinable_objects() {
    // d1 d0 = 2 vanishes only in characteristic 2
    let x = Obj::Id("e1=[1];e0=[1];d1=[1];d0=[2]".into());
    let err = count_series(&alg(A1), &Counter::AutC(x), &[2, 3], CAP).unwrap_err();
    assert!(matches!(err, MotivicError::Input(_)), "{err}");
    let err = count_series(&alg(A1), &Counter::HomA(vec![1], vec![1]), &[3, 3, 5], CAP).unwrap_err();
    assert!(matches!(err, MotivicError::Input(_)));
}

#[test]
fn interpolate_examples() {
    let q = interpolate_values(&[2, 3, 5], &[2, 3, 5], 1).unwrap();
    assert!(q.verified);
    assert_eq!(q.coeffs, vec![0, 1]);
    assert_eq!(q.held_out, 5);
    assert_eq!(q.to_string(), "q");
    let q = interpolate_values(&[2, 3, 5], &[1, 2, 4], 1).unwrap();
    assert!(q.verified);
    assert_eq!(q.to_string(), "q - 1");
    let q = interpolate_values(&[2, 3, 5], &[1, 1, 1], 1).unwrap();
    assert_eq!((q.coeffs.clone(), q.verified), (vec![1], true));
    assert!(interpolate_values(&[2, 3], &[2, 3], 1).is_err());
}

#[test]
fn failed_fits_poison_limits() {
    let q = fit(&[1, 2, 4, 100], 2);
    assert!(!q.verified);
    assert!(q.warning.as_deref().unwrap().contains("held-out prime 7"));
    assert!(matches!(classical_limit_of(&q), Err(MotivicError::Poisoned(_))));
    let q = fit(&[1, 2, 4], 1);
    assert_eq!(classical_limit_of(&q), Ok(0));
    // a non-integral fit
    let q = interpolate_values(&[2, 5, 7], &[0, 1, 2], 1).unwrap();
    assert!(q.warning.as_deref().unwrap().contains("non-integral"));
    assert!(!q.verified);
}

#[test]
fn to_t_examples() {
    assert_eq!(to_t(&fit(&[2, 3, 5], 1)).to_string(), "t^2");
    assert_eq!(to_t(&fit(&[1, 2, 4], 1)).to_string(), "t^2 - 1");
    assert_eq!(to_t(&fit(&[1, 1, 1], 1)).to_string(), "1");
    assert_eq!(to_t(&fit(&[4, 9, 25, 49], 2)).to_string(), "t^4");
}

#[test]
fn classical_limit_examples() {
    assert_eq!(classical_limit(&TPolynomial::new(vec![0, 0, 1])), 1);
    assert_eq!(classical_limit(&TPolynomial::new(vec![-1, 0, 1])), 0);
    let num = TPolynomial::minus_t_pow(2).sub(&TPolynomial::constant(1));
    let q = num.div_exact(&TPolynomial::new(vec![-1, -1])).unwrap();
    assert_eq!(q, TPolynomial::new(vec![1, -1]));
    assert_eq!(classical_limit(&q), 2);
    assert_eq!(TPolynomial::new(vec![1, 0, 1]).div_exact(&TPolynomial::new(vec![1, 1])), None);
    for k in -4..=4 {
        assert_eq!(h_limit(k), k as i128);
    }
}

#[test]
fn twist_exponent_examples() {
    let e = env(A1, 2);
    let one = Pdvp { e1: vec![1], e0: vec![1] };
    assert_eq!(twist_exponent(&e, &one, &one), 2);
    let e = env(A2, 2);
    let c1 = Pdvp { e1: vec![0, 1], e0: vec![1, 0] };
    assert_eq!(twist_exponent(&e, &c1, &c1), 2);
    assert_eq!(twist_exponent(&e, &Pdvp::zero(2), &c1), 0);
}

#[test]
fn hom_and_ext_counts_are_powers_of_q() {
    for text in [A1, A2] {
        let objs = indecomposables(text);
        let e = env(text, 2);
        for x in &objs {
            for y in &objs {
                for c in [
                    Counter::HomC(x.clone(), y.clone()),
                    Counter::HomK(x.clone(), y.clone()),
                    Counter::Ext1(x.clone(), y.clone()),
                ] {
                    let s = count_series(&alg(text), &c, &PRIMES, CAP).unwrap();
                    let q = interpolate(&s, 2).unwrap();
                    assert!(q.verified, "{}", s.label);
                    assert_eq!(q.monomial_degree(), c.dim(&e).unwrap(), "{}", s.label);
                }
            }
        }
    }
}

#[test]
fn units_of_one_dimensional_end() {
    let s = count_series(&alg(A1), &Counter::AutC(simple_id(A1, 0)), &PRIMES, CAP).unwrap();
    assert_eq!(to_t(&interpolate(&s, 2).unwrap()).to_string(), "t^2 - 1");
    let s = count_series(&alg(A1), &Counter::RadicalPoints(Pdvp { e1: vec![1], e0: vec![1] }), &PRIMES, CAP).unwrap();
    // d1 d0 = 0 with both differentials non-invertible
    assert_eq!(s.values, vec![1, 1, 1, 1]);
}

#[test]
fn b_commutes_past_indecomposables() {
    for text in [A1, A2] {
        let a = alg(text);
        let n = a.n();
        let window: Vec<Vec<usize>> = (0..1usize << n).map(|m| (0..n).map(|i| (m >> i) & 1).collect()).collect();
        for x in indecomposables(text) {
            for p in &window {
                for q in &window {
                    let r = b_commutation_check(&a, p, q, &x, &PRIMES, CAP).unwrap();
                    assert!(r.pass(), "{r:?}");
                }
            }
        }
    }
}

#[test]
fn b_exponent_example() {
    // A1, α = P̂, X = C_S with X^0 = P: (P̂, P̂) = 2
    let a = alg(A1);
    let r = b_commutation_check(&a, &[1], &[0], &simple_id(A1, 0), &PRIMES, CAP).unwrap();
    assert!(r.pass());
    assert_eq!(r.exponent, 2);
    let r = b_commutation_check(&a, &[0], &[1], &shifted(&simple_id(A1, 0), A1), &PRIMES, CAP).unwrap();
    assert_eq!(r.exponent, 2);
}

#[test]
fn regular_products() {
    for (text, p, q) in [(A1, vec![1], vec![1]), (A2, vec![1, 0], vec![0, 1]), (A2, vec![0, 1], vec![1, 1]), (A2, vec![1, 1], vec![1, 1])] {
        let r = regular_check(&alg(text), &p, &q, &PRIMES, CAP).unwrap();
        assert!(r.pass(), "{r:?}");
    }
}

#[test]
fn classical_limits_match_lie_tables() {
    for text in [A1, A2] {
        let a = alg(text);
        let n = a.n();
        let cap = Pdvp { e1: vec![1; n], e0: vec![1; n] };
        let r = lie_limit_check(&a, &cap, hall2p_lie::Side::Tri, &PRIMES).unwrap();
        assert!(r.pass(), "{r:?}");
        assert!(r.checked > 0);
    }
}

proptest! {
    #[test]
    fn b_symbols_form_a_group(a in prop::collection::vec(-3i64..4, 2), b in prop::collection::vec(-3i64..4, 2), x0 in 0usize..3, x1 in 0usize..3) {
        let e = env(A2, 2);
        let x = Pdvp { e1: vec![x1, 0], e0: vec![0, x0] };
        let (sa, sb) = (BSymbol(a), BSymbol(b));
        prop_assert!(sa.mul(&sa.inverse()).is_one());
        prop_assert_eq!(sa.mul(&sb), sb.mul(&sa));
        prop_assert_eq!(sa.mul(&sb).exponent(&e, &x), sa.exponent(&e, &x) + sb.exponent(&e, &x));
    }

    #[test]
    fn fits_recover_polynomials(c in prop::collection::vec(-20i128..20, 1..4)) {
        let primes = [2u32, 3, 5, 7, 11];
        let vals: Vec<i128> = primes.iter().map(|&p| c.iter().rev().fold(0, |a, &k| a * p as i128 + k)).collect();
        let q = interpolate_values(&primes, &vals, 3).unwrap();
        prop_assert!(q.verified);
        let mut want = c.clone();
        while want.last() == Some(&0) { want.pop(); }
        prop_assert_eq!(&q.coeffs, &want);
        prop_assert_eq!(classical_limit_of(&q).unwrap(), want.iter().sum::<i128>());
    }
}
