use proptest::prelude::*;
use virasoro::jantzen::{gram_family, Path};
use virasoro::scalars::*;
use virasoro::verma::phi_rs;

fn poly() -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec(-4i64..5, 0..4).prop_map(|c| UniPoly::from_coeffs(Var::X, c.into_iter().map(int).collect()))
}

fn nonzero_poly() -> impl Strategy<Value = UniPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    proptest::collection::vec(((0u32..3, 0u32..3), -3i64..4), 0..4)
        .prop_map(|t| BiPoly::from_terms(BiVars::CH, t.into_iter().map(|(k, c)| (k, int(c)))))
}

fn x() -> UniPoly {
    UniPoly::var(Var::X)
}

#[test]
fn order_at_zero_examples() {
    let f = x().pow(2).add_ref(&x().pow(3));
    assert_eq!(order_at_zero(&f), Order::Finite(2));
    assert_eq!(order_at_zero(&UniPoly::from_int(5)), Order::Finite(0));
    assert_eq!(order_at_zero(&UniPoly::zero()), Order::IdenticallyZero);
    assert_eq!(Order::IdenticallyZero.finite(), None);
    // level-2 Gram family along (c,h) = (1+x, 1/4) against the hand-expanded 2×2 determinant
    let fam = gram_family(&Path::c_line(&rat(1, 2)), 2);
    let c = UniPoly::linear(Var::X, int(1), int(1));
    let h = UniPoly::constant(Var::X, rat(1, 4));
    let hand = h.scale(&int(4)).add_ref(&c.scale(&rat(1, 2))).mul_ref(&h.scale(&int(4)).mul_ref(&h.scale(&int(2)).add_ref(&UniPoly::one())))
        .sub_ref(&h.mul_ref(&h).scale(&int(36)));
    assert_eq!(fam.det(), hand);
    assert_eq!(order_at_zero(&hand), Order::Finite(1));
    let r = RatFunc::new(x().pow(3), x().add_ref(&UniPoly::one()).mul_ref(&x()));
    assert_eq!(order_at_zero(&r), Order::Finite(2));
}

#[test]
fn specialize_examples() {
    let phi11 = phi_rs(1, 1);
    assert_eq!(phi11, BiPoly::h());
    assert_eq!(phi11.eval(&int(1), &rat(1, 4)), rat(1, 4));
    let phi22 = phi_rs(2, 2);
    let at = phi22.specialize_uni(&UniPoly::linear(Var::X, int(1), int(1)), &UniPoly::zero());
    assert_eq!(at, x().scale(&rat(1, 8)));
    assert_eq!(phi22.eval(&BiPoly::c(), &BiPoly::h()), phi22);
}

#[test]
fn rendering() {
    let p = UniPoly::from_coeffs(Var::X, vec![int(1), int(0), rat(-3, 2)]);
    assert_eq!(p.to_string(), "1 - 3/2*x^2");
    assert_eq!(rat(-6, 4).to_string(), "-3/2");
    let r = RatFunc::new(UniPoly::from_int(2), UniPoly::linear(Var::T, int(0), int(2)));
    assert_eq!(r.den(), &UniPoly::var(Var::T));
}

#[test]
fn rational_invariants() {
    let q = rat(6, -4);
    assert_eq!(q.numer(), &(-3).into());
    assert_eq!(q.denom(), &2.into());
    assert_eq!(rat(0, 5), int(0));
}

proptest! {
    #[test]
    fn unipoly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert_eq!(a.add_ref(&b), b.add_ref(&a));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert!(a.sub_ref(&a).is_zero());
        prop_assert_eq!(a.mul_ref(&UniPoly::one()), a);
    }

    #[test]
    fn bipoly_ring_axioms(a in bipoly(), b in bipoly(), c in bipoly()) {
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.add_ref(&b).mul_ref(&c), a.mul_ref(&c).add_ref(&b.mul_ref(&c)));
        prop_assert!(a.terms().values().all(|v| !v.is_zero()));
        if !b.is_zero() {
            prop_assert_eq!(a.mul_ref(&b).exact_div(&b), Some(a.clone()));
        }
    }

    #[test]
    fn ratfunc_inverse_and_canonical_form(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let f = RatFunc::new(a.clone(), b.clone());
        let g = RatFunc::new(b, a);
        prop_assert!(f.mul_ref(&g).is_one());
        prop_assert_eq!(f.den().leading(), int(1));
        prop_assert_eq!(f.num().gcd(f.den()).degree(), Some(0));
        let h = RatFunc::new(c.clone(), c);
        prop_assert!(h.is_one());
    }

    #[test]
    fn order_is_additive(a in nonzero_poly(), b in nonzero_poly(), s in 0usize..3) {
        let a = a.mul_ref(&x().pow(s as u32));
        let oa = order_at_zero(&a).finite().unwrap();
        let ob = order_at_zero(&b).finite().unwrap();
        prop_assert_eq!(order_at_zero(&a.mul_ref(&b)).finite(), Some(oa + ob));
    }

    #[test]
    fn division_with_remainder(a in poly(), d in nonzero_poly()) {
        let (q, r) = a.div_rem(&d);
        prop_assert_eq!(q.mul_ref(&d).add_ref(&r), a);
        prop_assert!(r.is_zero() || r.degree() < d.degree());
    }
}
