//! The graded tensor square F ⊗ F: ĝl₂ currents X(n), the vertex operators
//! Ψ_m(z) = V^{−m} z^{m b₀} exp(Σ_{n>0} zⁿ m b_{−n}/n) exp(−Σ_{n>0} z^{−n} m b_n/n)
//! with b_n = a_n ⊗ 1 − 1 ⊗ a_n, and the level-one characters.

use super::{a, e, e_star, l_prime, l_sugawara, CheckReport, FockVector, Wedge};
use crate::combinatorics::{euler_product, phi_series, QSeries};
use crate::linalg::Matrix;
use crate::lincomb::LinComb;
use crate::scalars::{int, rat, Rational, Ring};

use std::collections::BTreeMap;

pub type PairVector = LinComb<(Wedge, Wedge), Rational>;

pub fn pair_basis(s: Wedge, t: Wedge) -> PairVector {
    LinComb::basis((s, t))
}

pub fn pair_vacuum(q1: i64, q2: i64) -> PairVector {
    pair_basis(Wedge::vacuum(q1), Wedge::vacuum(q2))
}

/// X ⊗ 1.
pub fn on_first(v: &PairVector, op: impl Fn(&FockVector) -> FockVector) -> PairVector {
    v.map_linear(|(s, t)| {
        let img = op(&LinComb::basis(s.clone()));
        img.iter().map(|(u, c)| ((u.clone(), t.clone()), c.clone())).collect()
    })
}

/// 1 ⊗ Y with the Koszul sign (−1)^{|Y||s|}.
pub fn on_second(v: &PairVector, odd: bool, op: impl Fn(&FockVector) -> FockVector) -> PairVector {
    v.map_linear(|(s, t)| {
        let sign = if odd && s.is_odd() { int(-1) } else { int(1) };
        let img = op(&LinComb::basis(t.clone()));
        img.iter().map(|(u, c)| ((s.clone(), u.clone()), c * &sign)).collect()
    })
}

/// e_n^{(i)}
pub fn e_i(i: usize, n: i64, v: &PairVector) -> PairVector {
    if i == 1 {
        on_first(v, |x| e(n, x))
    } else {
        on_second(v, true, |x| e(n, x))
    }
}

/// (e_n^{(i)})*
pub fn e_star_i(i: usize, n: i64, v: &PairVector) -> PairVector {
    if i == 1 {
        on_first(v, |x| e_star(n, x))
    } else {
        on_second(v, true, |x| e_star(n, x))
    }
}

fn lowest_and_base(w: &Wedge) -> (i64, i64) {
    (w.lowest(), w.base())
}

/// E_ij(k) = Σ_{n−m=k} e^{(i)}_n (e^{(j)}_m)*; E_ii(k) = a_k on factor i.
pub fn e_ij(i: usize, j: usize, k: i64, v: &PairVector) -> PairVector {
    if i == j {
        return if i == 1 { on_first(v, |x| a(k, x)) } else { on_second(v, false, |x| a(k, x)) };
    }
    let mut out = PairVector::new();
    for ((s, t), c) in v.iter() {
        let (src, tgt) = if j == 1 { (s, t) } else { (t, s) };
        let (lo, _) = lowest_and_base(src);
        let (_, base) = lowest_and_base(tgt);
        let single = pair_basis(s.clone(), t.clone());
        for m in lo..(base - k) {
            let step = e_i(i, m + k, &e_star_i(j, m, &single));
            out.add_scaled(&step, c);
        }
    }
    out
}

/// X(k) = Σ X_ij E_ij(k).
pub fn current(x: &Matrix<Rational>, k: i64, v: &PairVector) -> PairVector {
    let mut out = PairVector::new();
    for i in 0..2 {
        for j in 0..2 {
            if !x[(i, j)].is_zero() {
                out.add_scaled(&e_ij(i + 1, j + 1, k, v), &x[(i, j)]);
            }
        }
    }
    out
}

pub fn elementary(i: usize, j: usize) -> Matrix<Rational> {
    Matrix::from_fn(2, 2, |r, c| int(((r, c) == (i - 1, j - 1)) as i64))
}

pub fn h_matrix() -> Matrix<Rational> {
    elementary(1, 1).sub(&elementary(2, 2)).map(|x| x * rat(1, 2))
}

pub fn k_matrix() -> Matrix<Rational> {
    elementary(1, 1).add(&elementary(2, 2)).map(|x| x * rat(1, 2))
}

/// b_n = a_n ⊗ 1 − 1 ⊗ a_n.
pub fn b(n: i64, v: &PairVector) -> PairVector {
    on_first(v, |x| a(n, x)).sub(&on_second(v, false, |x| a(n, x)))
}

/// V^p with V = U ⊗ U*; V^{−1}(s ⊗ t) = (−1)^{|s|} U^{−1}s ⊗ U t.
pub fn shift_v(p: i64, v: &PairVector) -> PairVector {
    let mut cur = v.clone();
    for _ in 0..p.abs() {
        cur = cur.map_linear(|(s, t)| {
            let (s2, t2, sign) = if p < 0 {
                (s.shifted(-1), t.shifted(1), if s.is_odd() { -1 } else { 1 })
            } else {
                // inverse of the step above
                (s.shifted(1), t.shifted(-1), if s.is_odd() { 1 } else { -1 })
            };
            LinComb::term((s2, t2), int(sign))
        });
    }
    cur
}

fn pair_level(v: &PairVector) -> u32 {
    v.keys().map(|(s, t)| s.level() + t.level()).max().unwrap_or(0)
}

/// c_0 v … c_K v for exp(±m Σ b_{∓n} zⁿ/n).
fn b_exp_coeffs(m: i64, k_max: u32, v: &PairVector, creation: bool) -> Vec<PairVector> {
    let mut out = vec![v.clone()];
    let sign = if creation { int(m) } else { int(-m) };
    for k in 1..=i64::from(k_max) {
        let mut acc = PairVector::new();
        for n in 1..=k {
            let mode = if creation { -n } else { n };
            acc.add_assign(&b(mode, &out[(k - n) as usize]));
        }
        out.push(acc.scaled(&(&sign / int(k))));
    }
    out
}

/// Ψ_m(n) applied to v.
pub fn psi_mode(m: i64, n: i64, v: &PairVector) -> PairVector {
    let mut out = PairVector::new();
    for ((s, t), c) in v.iter() {
        let single = pair_basis(s.clone(), t.clone());
        let b0 = s.charge - t.charge;
        let plus = b_exp_coeffs(m, pair_level(&single), &single, false);
        for (k, pk) in plus.iter().enumerate() {
            let j = k as i64 - n - m * b0;
            if j < 0 || pk.is_zero() {
                continue;
            }
            let q = b_exp_coeffs(m, j as u32, pk, true).pop().unwrap();
            out.add_scaled(&shift_v(-m, &q), c);
        }
    }
    out
}

/// Pair basis states of total energy ≤ E_max.
pub fn pair_window(e_max: &Rational) -> Vec<(Wedge, Wedge)> {
    let singles = super::Window::new(e_max.clone()).basis;
    let mut out = Vec::new();
    for s in &singles {
        for t in &singles {
            if s.energy() + t.energy() <= *e_max {
                out.push((s.clone(), t.clone()));
            }
        }
    }
    out
}

fn cmp(rep: &mut CheckReport, what: impl FnOnce() -> String, lhs: &PairVector, rhs: &PairVector) {
    rep.checked += 1;
    if lhs != rhs {
        rep.mismatches.push(what());
    }
}

/// E(z) = Ψ_1(z), F(z) = Ψ_{−1}(z), the vacuum identities, and V E(n) V* = E(n+2).
pub fn check_example2(e_max: &Rational, range: i64) -> CheckReport {
    let mut rep = CheckReport::new("example2");
    for (s, t) in pair_window(e_max) {
        let v = pair_basis(s.clone(), t.clone());
        for n in -range..=range {
            cmp(&mut rep, || format!("Ψ_1({n}) = E({}) on {s}⊗{t}", n - 1), &psi_mode(1, n, &v), &e_ij(1, 2, n - 1, &v));
            cmp(&mut rep, || format!("Ψ_-1({n}) = F({}) on {s}⊗{t}", n - 1), &psi_mode(-1, n, &v), &e_ij(2, 1, n - 1, &v));
            let conj = shift_v(1, &e_ij(1, 2, n, &shift_v(-1, &v)));
            cmp(&mut rep, || format!("V E({n}) V* on {s}⊗{t}"), &conj, &e_ij(1, 2, n + 2, &v));
        }
    }
    let vac = pair_vacuum(0, 0);
    cmp(&mut rep, || "Ψ_1(0) Ω⊗Ω".into(), &psi_mode(1, 0, &vac), &pair_vacuum(1, -1));
    cmp(&mut rep, || "E(-1) Ω⊗Ω".into(), &e_ij(1, 2, -1, &vac), &pair_vacuum(1, -1));
    // e*_0 leaves the first factor odd, so the Koszul sign shows up here
    let minus = pair_vacuum(-1, 1).scaled(&int(-1));
    cmp(&mut rep, || "Ψ_-1(0) Ω⊗Ω".into(), &psi_mode(-1, 0, &vac), &minus);
    cmp(&mut rep, || "F(-1) Ω⊗Ω".into(), &e_ij(2, 1, -1, &vac), &minus);
    rep
}

/// [X(m), Y(n)] = [X,Y](m+n) + m δ_{m+n,0} Tr(XY), on elementary matrices.
pub fn check_current_algebra(e_max: &Rational, range: i64) -> CheckReport {
    let mut rep = CheckReport::new("current algebra");
    let units: Vec<(usize, usize)> = vec![(1, 1), (1, 2), (2, 1), (2, 2)];
    let win = pair_window(e_max);
    for &(i, j) in &units {
        for &(k, l) in &units {
            let x = elementary(i, j);
            let y = elementary(k, l);
            let br = x.mul(&y).sub(&y.mul(&x));
            let tr = x.mul(&y);
            let trace = &tr[(0, 0)] + &tr[(1, 1)];
            for (s, t) in &win {
                let v = pair_basis(s.clone(), t.clone());
                for m in -range..=range {
                    for n in -range..=range {
                        let lhs = current(&x, m, &current(&y, n, &v)).sub(&current(&y, n, &current(&x, m, &v)));
                        let mut rhs = current(&br, m + n, &v);
                        if m + n == 0 {
                            rhs.add_scaled(&v, &(&trace * int(m)));
                        }
                        cmp(&mut rep, || format!("[E{i}{j}({m}), E{k}{l}({n})] on {s}⊗{t}"), &lhs, &rhs);
                    }
                }
            }
        }
    }
    // H(n) and K(n') commute
    for (s, t) in &win {
        let v = pair_basis(s.clone(), t.clone());
        for m in -range..=range {
            for n in -range..=range {
                let hk = current(&h_matrix(), m, &current(&k_matrix(), n, &v));
                let kh = current(&k_matrix(), n, &current(&h_matrix(), m, &v));
                cmp(&mut rep, || format!("[H({m}), K({n})] on {s}⊗{t}"), &hk, &kh);
            }
        }
    }
    rep
}

/// Total L₀ of a pair basis state from the fermion bilinears.
fn pair_energy(s: &Wedge, t: &Wedge) -> Rational {
    let es = l_prime(0, &LinComb::basis(s.clone())).coeff(s);
    let et = l_prime(0, &LinComb::basis(t.clone())).coeff(t);
    es + et
}

/// ζ-power → q-series.
pub type ZetaSeries = BTreeMap<i64, QSeries>;

/// X_j(ζ, q) = [z^{2j}] tr(z^{c₁+c₂} ζ^{c₂−c₁} q^{L₀}) / (q^{j²} φ(q)), to q^{j²+N}.
pub fn level1_characters_from_trace(two_j: i64, order: usize) -> ZetaSeries {
    let lead = rat(two_j * two_j, 4);
    // the K-boson ground energy K₀²/4 is also j²
    let e_max = &lead + &lead + int(order as i64);
    let mut raw: BTreeMap<i64, Vec<Rational>> = BTreeMap::new();
    for (s, t) in pair_window(&e_max) {
        if s.charge + t.charge != two_j {
            continue;
        }
        let en = pair_energy(&s, &t) - &lead - &lead;
        assert!(en.is_integer());
        let idx: usize = en.to_integer().try_into().unwrap();
        let row = raw.entry(t.charge - s.charge).or_insert_with(|| vec![int(0); order + 1]);
        row[idx] += int(1);
    }
    let inv_phi = euler_product(order);
    raw.into_iter()
        .map(|(z, coeffs)| (z, QSeries::new(lead.clone(), coeffs).mul(&inv_phi).truncate(order)))
        .filter(|(_, s)| s.coeffs().iter().any(|c| !c.is_zero()))
        .collect()
}

/// Σ_{n ∈ j+ℤ} ζ^{2n} q^{n²} φ(q), to q^{j²+N}.
pub fn level1_characters_closed(two_j: i64, order: usize) -> ZetaSeries {
    let lead = rat(two_j * two_j, 4);
    let phi = phi_series(order);
    let mut out = ZetaSeries::new();
    let reach = 2 * (order as i64 + 1) + two_j.abs();
    for two_n in (-reach..=reach).filter(|t| (t - two_j).rem_euclid(2) == 0) {
        let e = rat(two_n * two_n, 4) - &lead;
        if e < int(0) || e > int(order as i64) {
            continue;
        }
        let idx: usize = e.to_integer().try_into().unwrap();
        let mut coeffs = vec![int(0); order + 1];
        coeffs[idx] = int(1);
        out.insert(two_n, QSeries::new(lead.clone(), coeffs).mul(&phi).truncate(order));
    }
    out
}

pub fn check_theta(order: usize) -> CheckReport {
    let mut rep = CheckReport::new("theta");
    for two_j in [0, 1] {
        rep.checked += 1;
        let a = level1_characters_from_trace(two_j, order);
        let b = level1_characters_closed(two_j, order);
        if a != b {
            rep.mismatches.push(format!("X_{two_j}/2: trace {a:?} vs closed {b:?}"));
        }
    }
    rep
}

/// ℒ_k = L_k ⊗ 1 + 1 ⊗ L_k satisfies [ℒ_m, X(n)] = −n X(n+m).
pub fn check_total_virasoro(e_max: &Rational, range: i64) -> CheckReport {
    let mut rep = CheckReport::new("total virasoro");
    let big_l = |k: i64, v: &PairVector| on_first(v, |x| l_sugawara(k, x)).add(&on_second(v, false, |x| l_sugawara(k, x)));
    let x = elementary(1, 2).add(&elementary(2, 1).map(|c| c * int(3)));
    for (s, t) in pair_window(e_max) {
        let v = pair_basis(s.clone(), t.clone());
        for m in -range..=range {
            for n in -range..=range {
                let lhs = big_l(m, &current(&x, n, &v)).sub(&current(&x, n, &big_l(m, &v)));
                let rhs = current(&x, n + m, &v).scaled(&int(-n));
                cmp(&mut rep, || format!("[ℒ_{m}, X({n})] on {s}⊗{t}"), &lhs, &rhs);
            }
        }
    }
    rep
}
