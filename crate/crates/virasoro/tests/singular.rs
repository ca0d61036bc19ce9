use virasoro::combinatorics::Partition;
use virasoro::scalars::{int, rat, RatFunc, Rational};
use virasoro::singular::*;
use virasoro::verma::{c_discrete, h_pq, PbwVector, VermaModule, VermaParams};

fn halves() -> Vec<Rational> {
    vec![rat(1, 2), int(1), rat(3, 2)]
}

fn factorial(n: i64) -> i64 {
    (1..=n).product()
}

#[test]
fn bdiz_constant_and_top_coefficients() {
    for j in [int(0), rat(1, 2), int(1), rat(3, 2), int(2)] {
        let v = bdiz_singular(&j).unwrap();
        let r = (j.clone() * int(2)).to_integer().try_into().unwrap_or(0i64) + 1;
        let two_j = (r - 1) as usize;
        for (p, c) in v.terms().iter() {
            assert!(c.degree().unwrap_or(0) <= two_j, "degree bound at {p}");
            let expect_const = if *p == Partition::ones(r as u32) { int(1) } else { int(0) };
            assert_eq!(c.coeff(0), expect_const, "constant term at {p}");
        }
        let top = v.coeff(&Partition::new(vec![r as u32])).coeff(two_j);
        let mag = factorial(r - 1).pow(2);
        let sign = if two_j.is_multiple_of(2) { 1 } else { -1 };
        assert_eq!(top, int(sign * mag), "t^2j coefficient for j = {j}");
    }
}

#[test]
fn bdiz_singular_on_the_curve() {
    for j in [int(0), rat(1, 2), int(1), rat(3, 2), int(2)] {
        let r = (j.clone() * int(2) + int(1)).to_integer().try_into().unwrap();
        let v = bdiz_singular(&j).unwrap().map_coeffs(|p| RatFunc::from_poly(p.clone()));
        let check = check_singular(&v, &curve_module(r, 1));
        assert!(check.singular, "BDIZ vector not singular over Q(t) for j = {j}");
        for t0 in [rat(2, 1), rat(-3, 5), rat(7, 2)] {
            let p = bdiz_params(&j, &t0).unwrap();
            let w = specialize_poly(&bdiz_singular(&j).unwrap(), &t0);
            assert!(check_singular(&w, &VermaModule::new(p)).singular);
        }
    }
}

#[test]
fn three_methods_agree() {
    for j in halves() {
        let r: i64 = (j.clone() * int(2) + int(1)).to_integer().try_into().unwrap();
        let bdiz = bdiz_singular(&j).unwrap();
        let curve = curve_singular(r, 1).unwrap();
        assert_eq!(curve, bdiz.map_coeffs(|p| RatFunc::from_poly(p.clone())), "curve vs bdiz, j = {j}");
        for t0 in [int(2), rat(4, 3), rat(-1, 2)] {
            let params = bdiz_params(&j, &t0).unwrap();
            let kernel = singular_kernel(&params, r as u32);
            assert_eq!(kernel.len(), 1);
            assert_eq!(kernel[0], specialize_poly(&bdiz, &t0));
            assert_eq!(kernel[0], specialize_ratfunc(&curve, &t0).unwrap());
        }
    }
}

#[test]
fn curve_two_two_at_ising_point() {
    let v = curve_singular(2, 2).unwrap();
    let at = specialize_ratfunc(&v, &virasoro::verma::t_discrete(3)).unwrap();
    let params = VermaParams::rational(c_discrete(3), h_pq(2, 2, 3));
    assert_eq!(params.h, rat(1, 16));
    let ker = singular_kernel(&params, 4);
    assert_eq!(ker, vec![at]);
}

#[test]
fn curve_trivial_case() {
    assert_eq!(
        curve_singular(1, 1).unwrap(),
        PbwVector::basis(Partition::new(vec![1]))
    );
}

#[test]
fn check_singular_examples() {
    let m = VermaModule::new(VermaParams::rational(int(1), rat(1, 4)));
    let b = specialize_poly(&bdiz_singular(&rat(1, 2)).unwrap(), &int(1));
    assert!(check_singular(&b, &m).singular);
    let l2 = PbwVector::basis(Partition::new(vec![2]));
    let c = check_singular(&l2, &m);
    assert!(!c.singular);
    assert_eq!(c.l1, PbwVector::basis(Partition::new(vec![1])).scaled(&int(3)));
    assert!(check_singular(&PbwVector::<Rational>::vacuum(), &m).singular);
}

#[test]
fn c1_chain_levels_and_uniqueness() {
    for j in [int(0), rat(1, 2), int(1)] {
        let chain = c1_chain(&j, 2).unwrap();
        let params = VermaParams::rational(int(1), j.clone() * j.clone());
        let m = VermaModule::new(params.clone());
        for (k, v) in chain.iter().enumerate() {
            let e = j.clone() + int(k as i64 + 1);
            assert_eq!(int(v.level() as i64), e.clone() * e - j.clone() * j.clone());
            assert!(check_singular(v, &m).singular);
            if v.level() <= 8 {
                let ker = singular_kernel(&params, v.level());
                assert_eq!(ker.len(), 1);
                assert_eq!(ker[0], v.normalized().unwrap());
            }
        }
    }
    assert!(c1_chain(&int(0), 0).unwrap().is_empty());
}

#[test]
fn c1_j0_singular_levels() {
    let levels: Vec<u32> = singular_levels(&VermaParams::rational(int(1), int(0)), 9)
        .into_iter()
        .map(|(d, k)| {
            assert_eq!(k, 1);
            d
        })
        .collect();
    assert_eq!(levels, vec![1, 4, 9]);
}

#[test]
fn discrete_chain_first_pairs() {
    for (r, s) in [(1, 1), (2, 1), (2, 2)] {
        let chain = discrete_chain(3, r, s, 1).unwrap();
        assert_eq!(chain.len(), 2);
        assert!(chain[0].0 == r * s || chain[1].0 == r * s);
    }
    let params = VermaParams::rational(c_discrete(3), int(0));
    let found: Vec<u32> = singular_levels(&params, 8).into_iter().map(|(d, _)| d).collect();
    assert_eq!(found, vec![1, 6]);
}

#[test]
fn uniqueness_of_kernels() {
    for (c, h) in [(int(1), rat(1, 4)), (rat(1, 2), rat(1, 16)), (rat(1, 2), rat(1, 2)), (int(0), int(0))] {
        for (_, k) in singular_levels(&VermaParams::rational(c.clone(), h.clone()), 7) {
            assert_eq!(k, 1, "kernel dimension at (c,h)=({c},{h})");
        }
    }
}
