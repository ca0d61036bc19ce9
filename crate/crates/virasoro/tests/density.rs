use proptest::prelude::*;
use virasoro::density::*;
use virasoro::lincomb::LinComb;
use virasoro::scalars::{int, rat, BiPoly, Rational, Ring, UniPoly, Var};

fn spins() -> Vec<Rational> {
    vec![int(0), rat(1, 2), int(1), rat(3, 2)]
}

fn mu_poly() -> UniPoly {
    UniPoly::var(Var::Mu)
}

#[test]
fn product_formulas_a_b_c_symbolic() {
    for j in spins() {
        let p = p_d(&j).unwrap();
        let mu = mu_poly();
        let direct_a = evaluate_ad(&p, &UniPoly::zero(), &mu).unwrap();
        assert_eq!(direct_a, ff_product(&FfCase::A, &j, &mu).unwrap(), "case a, j = {j}");
        let direct_b = evaluate_ad(&p, &UniPoly::one(), &mu).unwrap();
        assert_eq!(direct_b, ff_product(&FfCase::B, &j, &mu).unwrap(), "case b, j = {j}");
        for q in 0..4u32 {
            let lam = UniPoly::from_int(i64::from(q * q));
            let direct = evaluate_ad(&p, &lam, &mu).unwrap();
            assert_eq!(direct, ff_product(&FfCase::C(q), &j, &mu).unwrap(), "case c, j = {j}, p = {q}");
        }
    }
}

#[test]
fn case_d_squares_at_random_points() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for j in spins() {
        let p = p_d(&j).unwrap();
        for _ in 0..5 {
            let lam = rat(rng.gen_range(-20..20), rng.gen_range(1..9));
            let mu = rat(rng.gen_range(-20..20), rng.gen_range(1..9));
            let a = evaluate_ad(&p, &lam, &mu).unwrap();
            assert_eq!(&a * &a, ff_product(&FfCase::D(lam.clone()), &j, &mu).unwrap());
        }
    }
}

#[test]
fn leading_mu_coefficient() {
    for j in spins().into_iter().chain([int(2)]) {
        let a = ad_symbolic(&j).unwrap();
        let d = (j.clone() * int(2) + int(1)).to_integer();
        let d: u32 = d.try_into().unwrap();
        let sign = if d.is_multiple_of(2) { int(1) } else { int(-1) };
        assert_eq!(a.coeff(0, d), sign);
        assert_eq!(a.total_degree(), Some(d));
    }
}

#[test]
fn case_d_square_symbolic() {
    for j in spins() {
        let a = ad_symbolic(&j).unwrap();
        let sq = ff_product(&FfCase::D(BiPoly::lambda()), &j, &BiPoly::mu()).unwrap();
        assert_eq!(a.mul_ref(&a), sq);
    }
}

#[test]
fn case_c_specializes_to_a_and_b() {
    for j in spins() {
        let mu = mu_poly();
        assert_eq!(ff_product(&FfCase::C(0), &j, &mu).unwrap(), ff_product(&FfCase::A, &j, &mu).unwrap());
        assert_eq!(ff_product(&FfCase::C(1), &j, &mu).unwrap(), ff_product(&FfCase::B, &j, &mu).unwrap());
    }
    let half = ff_product(&FfCase::C(1), &rat(1, 2), &mu_poly()).unwrap();
    assert_eq!(half, mu_poly().mul_ref(&mu_poly().sub_ref(&UniPoly::from_int(2))));
    let d0 = ff_product(&FfCase::D(BiPoly::lambda()), &int(0), &BiPoly::mu()).unwrap();
    let diff = BiPoly::lambda().sub_ref(&BiPoly::mu());
    assert_eq!(d0, diff.mul_ref(&diff));
}

/// (−1)^d det of the spin-module matrix equals (−1)^d a_d(p², μ + 2p²): the
/// z-power action on z^{μ+p²} is V_{p², μ+2p²} in the v_n basis.
#[test]
fn appendix_determinant_matches_direct_evaluation() {
    for j in spins() {
        let p = p_d(&j).unwrap();
        let d = p.level();
        let sign = if d.is_multiple_of(2) { int(1) } else { int(-1) };
        for q in [0u32, 1] {
            let q2 = i64::from(q * q);
            let det = appc_determinant(&j, q, &mu_poly()).unwrap();
            let shifted = mu_poly().add_ref(&UniPoly::from_int(2 * q2));
            let direct = evaluate_ad(&p, &UniPoly::from_int(q2), &shifted).unwrap();
            assert_eq!(det, direct.scale(&sign), "j = {j}, p = {q}");
            for mu in [int(0), int(1), rat(7, 3)] {
                let at = appc_determinant(&j, q, &mu).unwrap();
                assert_eq!(at, evaluate_ad(&p, &int(q2), &(mu + int(2 * q2))).unwrap() * &sign);
            }
        }
    }
    assert_eq!(appc_determinant(&int(0), 0, &mu_poly()).unwrap().degree(), Some(1));
    let half = appc_determinant(&rat(1, 2), 1, &mu_poly()).unwrap();
    assert_eq!(half, mu_poly().mul_ref(&mu_poly().add_ref(&UniPoly::from_int(2))));
}

#[test]
fn obstruction_examples() {
    // j = 1/2, λ = 0: ∏_{t ∈ S} ((t−1)² − k)
    for k in [int(3), rat(5, 2), int(-1)] {
        let expect = (rat(1, 4) - &k) * (rat(9, 4) - &k);
        assert_eq!(primary_obstruction(&rat(1, 2), &int(0), &k).unwrap(), expect);
    }
    for j in spins() {
        let h = (j.clone() + int(1)) * (j.clone() + int(1));
        assert_eq!(primary_obstruction(&j, &int(0), &h).unwrap(), int(0));
    }
    // j = 0: a₁(1, h) = 1 − h
    assert_eq!(primary_obstruction(&int(0), &int(0), &rat(2, 3)).unwrap(), rat(1, 3));
}

#[test]
fn grading_of_partial_products() {
    let p = p_d(&rat(3, 2)).unwrap();
    assert!(evaluate_ad(&p, &rat(1, 3), &rat(-2, 5)).is_ok());
}

fn small_rat() -> impl Strategy<Value = Rational> {
    (-12i64..12, 1i64..6).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #[test]
    fn witt_relations(lam in small_rat(), mu in small_rat(), m in -3i64..=3, n in -3i64..=3,
                      support in proptest::collection::vec((-5i64..5, small_rat()), 1..4)) {
        let module = DensityModule::new(lam, mu);
        let w: LinComb<i64, Rational> = support.into_iter().collect();
        let lhs = module.apply(m, &module.apply(n, &w)).sub(&module.apply(n, &module.apply(m, &w)));
        let rhs = module.apply(m + n, &w).scaled(&int(m - n));
        prop_assert_eq!(lhs, rhs);
    }
}
