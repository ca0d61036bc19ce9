use virasoro::combinatorics::{p_of, Partition, QSeries};
use virasoro::jantzen::*;
use virasoro::linalg::Matrix;
use virasoro::scalars::{int, rat, OrderAtZero, Rational, Ring, UniPoly, Var};
use virasoro::singular::{c1_chain, discrete_chain};
use virasoro::verma::PbwVector;
use virasoro::Error;

fn x() -> UniPoly {
    UniPoly::var(Var::X)
}

fn tested_paths() -> Vec<Path> {
    vec![
        Path::for_c1(&rat(1, 2)),
        Path::for_c1(&int(1)),
        Path::for_discrete(3, 1, 1),
        Path::for_discrete(3, 2, 1),
        Path::for_discrete(3, 2, 2),
    ]
}

#[test]
fn gram_family_examples() {
    for j in [rat(1, 2), int(1), rat(3, 2)] {
        let f = gram_family(&Path::c_line(&j), 1);
        assert_eq!(f.matrix[(0, 0)], UniPoly::from_rational(&(&j * &j * int(2))));
    }
    let f = gram_family(&Path::for_c1(&int(0)), 1);
    assert_eq!(f.matrix[(0, 0)], x().scale(&int(2)));
    assert_eq!(gram_family(&Path::for_discrete(3, 2, 2), 0).matrix, Matrix::from_rows(vec![vec![UniPoly::one()]]));
    assert!(Path::new(UniPoly::var(Var::T), UniPoly::zero(), "bad").is_err());
}

#[test]
fn gram_family_is_the_bipoly_substitution() {
    use virasoro::scalars::BiPoly;
    use virasoro::verma::{VermaModule, VermaParams};
    let sym = VermaModule::new(VermaParams::<BiPoly>::symbolic());
    for path in tested_paths() {
        for n in 0..=3 {
            let fam = gram_family(&path, n);
            let g = sym.gram(n);
            let sub = g.entries.map(|b| b.eval(&path.c, &path.h));
            assert_eq!(fam.matrix, sub, "{} level {n}", path.label);
            assert!(fam.matrix.is_symmetric());
        }
    }
}

#[test]
fn filtration_examples() {
    let d = MatrixFamily::new(0, Matrix::from_rows(vec![vec![UniPoly::one(), UniPoly::zero()], vec![UniPoly::zero(), x().mul_ref(&x())]]), "diag");
    assert_eq!(jantzen_filtration(&d).unwrap().dims(), vec![2, 1, 1, 0]);
    let f = MatrixFamily::new(0, Matrix::from_rows(vec![vec![x(), x()], vec![x(), x().add_ref(&x().mul_ref(&x()))]]), "f");
    assert_eq!(jantzen_filtration(&f).unwrap().dim_sum(), 3);
    assert_eq!(f.det().order_at_zero().finite(), Some(3));

    // level 2 along (1+x, 1/4): det vanishes to first order, from the singular vector at level 2
    let g = gram_family(&Path::for_c1(&rat(1, 2)), 2);
    let (order, sum) = det_order_identity(&g).unwrap();
    assert_eq!((order, sum), (1, 1));
    assert_eq!(jantzen_filtration(&g).unwrap().dims(), vec![2, 1, 0]);
}

#[test]
fn degenerate_j0_family() {
    for n in 1..=3 {
        let f = gram_family(&Path::c_line(&int(0)), n);
        assert!(f.det().is_zero());
        assert_eq!(jantzen_filtration(&f).unwrap_err(), Error::DegenerateFamily { level: n as usize });
    }
}

#[test]
fn det_order_identity_on_all_paths() {
    for path in tested_paths().into_iter().chain([Path::for_c1(&int(0)), Path::for_c1(&rat(3, 2))]) {
        let module = path.module();
        for n in 0..=6 {
            let fam = gram_family_in(&module, &path, n);
            let (order, sum) = det_order_identity(&fam).unwrap();
            assert_eq!(order, sum, "{} level {n}", path.label);
        }
    }
}

/// The cumulative-kernel filtration agrees with the lifting one at depth 1
/// and loses the depth-2 part of the chain.
#[test]
fn naive_filtration_on_gram_families() {
    let path = Path::for_c1(&rat(1, 2));
    let fam = gram_family(&path, 6);
    assert_eq!(jantzen_filtration(&fam).unwrap().dims(), vec![11, 5, 1, 0]);
    assert_eq!(naive_filtration(&fam).unwrap().dims(), vec![11, 5, 0]);
    let fam = gram_family(&Path::for_c1(&int(0)), 6);
    assert_eq!(jantzen_filtration(&fam).unwrap().dims(), vec![11, 7, 2, 0]);
    assert_eq!(naive_filtration(&fam).unwrap().dim_sum(), 7);

    for path in tested_paths() {
        let module = path.module();
        for n in 0..=5 {
            let fam = gram_family_in(&module, &path, n);
            let lift = jantzen_filtration(&fam).unwrap();
            let naive = naive_filtration(&fam).unwrap();
            assert_eq!(lift.dim_at(1), naive.dim_at(1));
            assert!(naive.dim_sum() <= lift.dim_sum());
        }
    }
}

fn closed_c1(j: &Rational, n: usize) -> Vec<Rational> {
    let two_j: i64 = (j * int(2)).to_integer().try_into().unwrap();
    (0..=n as i64)
        .map(|k| int((1..=k).map(|r| p_of(k - r * (r + two_j)) as i64).sum()))
        .collect()
}

#[test]
fn c1_character_sums() {
    for j in [rat(1, 2), int(1), rat(3, 2)] {
        let case = CharacterCase::C1 { j: j.clone() };
        let (sum, reports) = filtration_character_sum(&case, 6).unwrap();
        assert_eq!(sum, character_sum_closed(&case, 6));
        assert_eq!(sum.coeffs(), closed_c1(&j, 6).as_slice(), "j = {j}");
        assert_eq!(sum.lead(), &(&j * &j));
        for r in &reports {
            assert_eq!(r.det_order, r.dim_sum);
        }
    }
    // j = 1: first contribution at level 3 (energy 4) is P(0)
    let (sum, _) = filtration_character_sum(&CharacterCase::C1 { j: int(1) }, 6).unwrap();
    assert_eq!(sum.coeff_at(&int(4)).unwrap(), int(1));
    assert_eq!(sum.coeff_at(&int(3)).unwrap(), int(0));
    // j = 1/2 frozen: φ·(q² + q⁶)
    let (sum, _) = filtration_character_sum(&CharacterCase::C1 { j: rat(1, 2) }, 6).unwrap();
    assert_eq!(sum, QSeries::from_ints(rat(1, 4), &[0, 0, 1, 1, 2, 3, 6]));
}

#[test]
fn j0_character_sum_along_h_path() {
    let case = CharacterCase::C1 { j: int(0) };
    let (sum, _) = filtration_character_sum(&case, 6).unwrap();
    assert_eq!(sum, character_sum_closed(&case, 6));
}

#[test]
fn discrete_character_sums() {
    for (r, s) in [(1, 1), (2, 1), (2, 2)] {
        let case = CharacterCase::Discrete { m: 3, r, s };
        let (sum, _) = filtration_character_sum(&case, 6).unwrap();
        assert_eq!(sum, character_sum_closed(&case, 6), "(3,{r},{s})");
    }
    // (3,1,1): submodules at levels 1 and 6
    let (sum, _) = filtration_character_sum(&CharacterCase::Discrete { m: 3, r: 1, s: 1 }, 6).unwrap();
    assert_eq!(sum, QSeries::from_ints(int(0), &[0, 1, 1, 2, 3, 5, 8]));
}

#[test]
fn character_formula_examples() {
    let one = character_formula(&CharacterCase::C1 { j: int(1) }, 8);
    assert_eq!(one, c1_character_by_series(&int(1), 8).unwrap());
    assert_eq!(one, QSeries::from_ints(int(1), &[1, 1, 2, 2, 4, 5, 8, 10, 15]));
    for case in [CharacterCase::C1 { j: rat(1, 2) }, CharacterCase::Discrete { m: 3, r: 2, s: 2 }] {
        let at0 = character_formula(&case, 0);
        assert_eq!(at0, QSeries::monomial(case.weight(), 0));
    }
    assert_eq!(
        character_formula(&CharacterCase::Discrete { m: 3, r: 2, s: 2 }, 6),
        QSeries::from_ints(rat(1, 16), &[1, 1, 1, 2, 2, 3, 4])
    );
    // alternating sum over the singular chain a_k, b_k
    for (r, s) in [(1, 1), (2, 1), (2, 2)] {
        let mut expect = vec![(0, 1)];
        for (k, (a, b)) in virasoro::singular::discrete_chain_levels(3, r, s, 4).into_iter().enumerate() {
            let sign = if k % 2 == 0 { -1 } else { 1 };
            expect.extend([(a, sign), (b, sign)].into_iter().filter(|t| t.0 <= 40));
        }
        expect.sort();
        assert_eq!(character_terms(&CharacterCase::Discrete { m: 3, r, s }, 40), expect, "(3,{r},{s})");
    }
}

#[test]
fn character_formula_matches_rank_oracle() {
    for j in [int(0), rat(1, 2), int(1)] {
        let case = CharacterCase::C1 { j: j.clone() };
        assert_eq!(character_formula(&case, 8), rank_character(&case, 8), "j = {j}");
    }
    for (r, s) in [(1, 1), (2, 1), (2, 2)] {
        let case = CharacterCase::Discrete { m: 3, r, s };
        assert_eq!(character_formula(&case, 6), rank_character(&case, 6), "(3,{r},{s})");
    }
    let case = CharacterCase::Discrete { m: 4, r: 2, s: 1 };
    assert_eq!(character_formula(&case, 6), rank_character(&case, 6));
}

#[test]
fn norm_orders() {
    let path = Path::for_c1(&int(0));
    let module = path.module();
    let l1: PbwVector<UniPoly> = PbwVector::basis(Partition::new(vec![1]));
    assert_eq!(norm_vanishing_order(&l1, &module).unwrap(), 1);
    assert_eq!(norm_vanishing_order(&PbwVector::vacuum(), &module).unwrap(), 0);
    let zero = PbwVector::<UniPoly>::zero(2);
    assert_eq!(norm_vanishing_order(&zero, &module), Err(Error::IdenticallyZeroNorm));

    let path = Path::for_discrete(3, 1, 1);
    let module = path.module();
    let (level, a1) = discrete_chain(3, 1, 1, 1).unwrap().remove(0);
    assert_eq!(level, 1);
    let d = chain_depth(&path, &module, &a1).unwrap();
    assert_eq!((d.depth, d.norm_order), (1, 1));
}

#[test]
fn c1_chain_depths_increase() {
    for j in [rat(1, 2), int(1)] {
        let depths = c1_chain_depths(&j, 2).unwrap();
        let got: Vec<usize> = depths.iter().map(|d| d.depth).collect();
        assert_eq!(got, vec![1, 2], "j = {j}");
        for d in &depths {
            assert_eq!(d.norm_order, d.depth);
        }
    }
}

#[test]
fn lift_satisfies_the_congruence() {
    let path = Path::for_c1(&rat(1, 2));
    let module = path.module();
    let v = c1_chain(&rat(1, 2), 2).unwrap().remove(1);
    let fam = gram_family_in(&module, &path, v.level());
    let filt = jantzen_filtration(&fam).unwrap();
    let lift = lift_to_depth(&fam, &filt, &v.to_coords()).unwrap();
    let image = fam.matrix.mul_vec(&lift);
    for p in image {
        assert!(p.order_at_zero().finite().is_none_or(|k| k >= 2));
    }
}

#[test]
fn functoriality_of_raising() {
    for path in tested_paths() {
        let module = path.module();
        let filts: Vec<_> = (0..=6)
            .map(|n| jantzen_filtration(&gram_family_in(&module, &path, n)).unwrap())
            .collect();
        for n in 0..=4u32 {
            for k in 1..=2u32 {
                if n + k > 6 {
                    continue;
                }
                let raise = raise_matrix(k, n);
                assert!(
                    functoriality_holds(&filts[n as usize], &filts[(n + k) as usize], &raise),
                    "{} n = {n} k = {k}",
                    path.label
                );
            }
        }
    }
}
