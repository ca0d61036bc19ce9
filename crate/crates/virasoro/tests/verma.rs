use proptest::prelude::*;
use virasoro::combinatorics::{partitions_of, phi_series, Partition, QSeries};
use virasoro::scalars::{int, rat, BiPoly, ExactDiv, Rational, Ring};
use virasoro::verma::*;

fn sym() -> VermaParams<BiPoly> {
    VermaParams::symbolic()
}

fn pbw<S: Ring>(parts: &[u32]) -> PbwVector<S> {
    PbwVector::basis(Partition::new(parts.to_vec()))
}

#[test]
fn apply_examples() {
    let m = VermaModule::new(sym());
    assert_eq!(m.apply_l(1, &pbw(&[1])), PbwVector::vacuum().scaled(&BiPoly::h().scale(&int(2))));
    assert_eq!(m.apply_l(1, &pbw(&[2])), pbw(&[1]).scaled(&BiPoly::from_int(3)));
    for p in partitions_of(4) {
        let v = PbwVector::basis(p);
        assert_eq!(m.apply_l(0, &v), v.scaled(&BiPoly::h().add_ref(&BiPoly::from_int(4))));
    }
}

#[test]
fn small_gram_matrices() {
    let (c, h) = (BiPoly::c(), BiPoly::h());
    assert_eq!(gram_matrix(0, &sym()).entries[(0, 0)], BiPoly::one());
    assert_eq!(gram_matrix(1, &sym()).entries[(0, 0)], h.scale(&int(2)));
    assert_eq!(kac_det_direct(1, &sym()), h.scale(&int(2)));
    // 2h(16h² + 2(c−5)h + c)
    let inner = h.mul_ref(&h).scale(&int(16)).add_ref(&c.sub_ref(&BiPoly::from_int(5)).mul_ref(&h).scale(&int(2))).add_ref(&c);
    assert_eq!(kac_det_direct(2, &sym()), h.scale(&int(2)).mul_ref(&inner));
    let g = gram_matrix(2, &sym());
    assert_eq!(g.basis, vec![Partition::new(vec![2]), Partition::new(vec![1, 1])]);
    // the c = 0 specialization: ‖L_{−1}² ξ‖² = 4h(2h+1)
    let at0 = g.entries[(1, 1)].eval(&BiPoly::zero(), &h);
    assert_eq!(at0, h.scale(&int(4)).mul_ref(&h.scale(&int(2)).add_ref(&BiPoly::one())));
}

#[test]
fn gomes_specialization() {
    let h = BiPoly::h();
    let det = kac_det_direct(2, &sym()).eval(&BiPoly::zero(), &h);
    let expect = h.mul_ref(&h).scale(&int(4)).mul_ref(&h.scale(&int(8)).sub_ref(&BiPoly::from_int(5)));
    assert_eq!(det, expect);
}

#[test]
fn kac_determinant_proportionality() {
    for n in 1..=6u32 {
        let direct = kac_det_direct(n, &sym());
        let product = kac_det_product(n);
        let ratio = direct.exact_div(&product).unwrap_or_else(|| panic!("level {n}: product does not divide"));
        assert!(ratio.is_constant() && !ratio.is_zero(), "level {n}: ratio {ratio}");
    }
    assert_eq!(kac_det_product(1), BiPoly::h());
}

#[test]
fn c1_exponent_bookkeeping() {
    // at c = 1: det_N(1,h) ∝ ∏_{pq ≤ N} (h − (p−q)²/4)^{P(N−pq)}
    let h = BiPoly::h();
    for n in 1..=5u32 {
        let at1 = kac_det_product(n).eval(&BiPoly::one(), &h);
        let mut expect = BiPoly::one();
        for (root, mult) in kac_c1_multiplicities(n) {
            expect = expect.mul_ref(&h.sub_ref(&BiPoly::from_rational(&root)).pow(mult as u32));
        }
        assert!(at1.exact_div(&expect).map(|q| q.is_constant()).unwrap_or(false), "level {n}");
    }
    // level 2: det = 2h(4h − 1)² at c = 1
    assert_eq!(kac_c1_multiplicities(2), vec![(int(0), 1), (rat(1, 4), 2)]);
}

#[test]
fn kac_weights() {
    assert_eq!(h_pq(1, 1, 3), int(0));
    assert_eq!(h_pq(2, 1, 3), rat(1, 2));
    assert_eq!(h_pq(2, 2, 3), rat(1, 16));
    assert_eq!(c_discrete(3), rat(1, 2));
    // h_{2j+1,1}(t) = (j²+j)t − j
    for two_j in 0..=4i64 {
        let j = rat(two_j, 2);
        let h = h_pq_curve(two_j + 1, 1);
        for t in [int(2), rat(-1, 3), rat(5, 7)] {
            assert_eq!(h.eval(&t).unwrap(), (&j * &j + &j) * &t - &j);
        }
        let tm = t_discrete(3);
        assert_eq!(c_curve().eval(&tm).unwrap(), c_discrete(3));
    }
    assert_eq!(h_pq_curve(2, 2).eval(&t_discrete(3)).unwrap(), rat(1, 16));
}

fn series(lead: Rational, dims: &[usize]) -> QSeries {
    QSeries::new(lead, dims.iter().map(|&d| int(d as i64)).collect())
}

#[test]
fn rank_oracle() {
    assert_eq!(irreducible_dims(&VermaParams::rational(int(1), int(0)), 4), vec![1, 0, 1, 1, 2]);
    assert_eq!(irreducible_dims(&VermaParams::rational(int(2), int(1)), 4), vec![1, 1, 2, 3, 5]);
    assert_eq!(irreducible_dims(&VermaParams::rational(rat(1, 2), rat(1, 16)), 4), vec![1, 1, 1, 2, 2]);
    // (q^{j²} − q^{(j+1)²}) φ(q) to q⁹
    for two_j in 0..=3i64 {
        let j = rat(two_j, 2);
        let j2 = &j * &j;
        let dims = irreducible_dims(&VermaParams::rational(int(1), j2.clone()), 9);
        let gap: usize = (rat(two_j + 2, 2).pow(2) - &j2).to_integer().try_into().unwrap();
        let mut num = vec![int(0); 10];
        num[0] = int(1);
        if gap <= 9 {
            num[gap] = int(-1);
        }
        let expect = QSeries::new(j2.clone(), num).mul(&phi_series(9));
        assert_eq!(series(j2, &dims), expect, "j = {j}");
    }
}

#[test]
fn gram_json_shape() {
    let g = gram_matrix(1, &VermaParams::rational(int(1), rat(1, 4)));
    let j = g.to_json();
    assert_eq!(j["basis"], serde_json::json!(["[1]"]));
    assert_eq!(j["entries"], serde_json::json!([["1/2"]]));
}

fn vector(level: u32) -> impl Strategy<Value = PbwVector<BiPoly>> {
    let basis = partitions_of(level);
    let n = basis.len();
    proptest::collection::vec((0..n, -3i64..4), 1..4).prop_map(move |terms| {
        let mut v = PbwVector::zero(level);
        for (i, c) in terms {
            v = v.add(&PbwVector::basis(basis[i].clone()).scaled(&BiPoly::from_int(c)));
        }
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn adjoint_symmetry((k, v, w) in (1u32..4).prop_flat_map(|k| (Just(k), vector(5), vector(5 - k)))) {
        let m = VermaModule::new(sym());
        let k = i64::from(k);
        prop_assert_eq!(m.form(&m.apply_l(k, &v), &w), m.form(&v, &m.apply_l(-k, &w)));
    }

    #[test]
    fn virasoro_relations(v in vector(3), a in -3i64..4, b in -3i64..4) {
        let m = VermaModule::new(sym());
        let lhs = m.apply_l(a, &m.apply_l(b, &v)).sub(&m.apply_l(b, &m.apply_l(a, &v)));
        let mut rhs = m.apply_l(a + b, &v).scaled(&BiPoly::from_int(a - b));
        if a + b == 0 {
            rhs = rhs.add(&v.scaled(&BiPoly::c().scale(&rat(a * a * a - a, 12))));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gram_is_symmetric(level in 0u32..6, c in -4i64..5, h in -4i64..5) {
        let g = gram_matrix(level, &VermaParams::rational(rat(c, 2), rat(h, 3)));
        let n = g.basis.len();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(&g.entries[(i, j)], &g.entries[(j, i)]);
            }
        }
    }
}
