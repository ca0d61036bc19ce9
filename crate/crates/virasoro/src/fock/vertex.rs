//! Vertex operators Φ_m(z) = U^{−m} z^{m a₀} E_−(z)^m E_+(z)^m = Σ Φ_m(n) z^{−n}
//! with E_−(z) = exp Σ_{n>0} zⁿ a_{−n}/n and E_+(z) = exp −Σ_{n>0} z^{−n} a_n/n.

use super::{a, basis_vector, e, e_star, l_prime, l_sugawara, shift_u, CheckReport, FockVector, Window};
use crate::lincomb::LinComb;
use crate::scalars::{int, rat, Rational};

/// Coefficient of z^{−k} in E_+(z)^m applied to v.
pub fn e_plus_coeff(m: i64, k: u32, v: &FockVector) -> FockVector {
    exp_coeffs(m, k, v, false).pop().unwrap()
}

/// Coefficient of z^j in E_−(z)^m applied to v.
pub fn e_minus_coeff(m: i64, j: u32, v: &FockVector) -> FockVector {
    exp_coeffs(m, j, v, true).pop().unwrap()
}

/// c_0 v, …, c_K v for exp(±m Σ a_{∓n} zⁿ/n) = Σ c_k z^k: k c_k = ±m Σ a_{∓n} c_{k−n}.
fn exp_coeffs(m: i64, k_max: u32, v: &FockVector, creation: bool) -> Vec<FockVector> {
    let mut out = vec![v.clone()];
    let sign = if creation { int(m) } else { int(-m) };
    for k in 1..=i64::from(k_max) {
        let mut acc = FockVector::new();
        for n in 1..=k {
            let mode = if creation { -n } else { n };
            acc.add_assign(&a(mode, &out[(k - n) as usize]));
        }
        out.push(acc.scaled(&(&sign / int(k))));
    }
    out
}

/// Φ_m(p) applied to v.
pub fn vertex_mode(m: i64, p: i64, v: &FockVector) -> FockVector {
    let mut out = FockVector::new();
    for (w, c) in v.iter() {
        let q = w.charge;
        let single = basis_vector(w.clone());
        let plus = exp_coeffs(m, w.level(), &single, false);
        for (k, pk) in plus.iter().enumerate() {
            // m q + j − k = −p
            let j = k as i64 - p - m * q;
            if j < 0 || pk.is_zero() {
                continue;
            }
            let qj = e_minus_coeff(m, j as u32, pk);
            out.add_scaled(&shift_u(-m, &qj), c);
        }
    }
    out
}

/// Φ_1(z) = Σ e_n z^{−n−1} and Φ_{−1}(z) = Σ e*_{−n} z^{−n}, and the vacuum conditions.
pub fn check_example1(window: &Window, range: i64) -> CheckReport {
    let mut rep = CheckReport::new("example1");
    for w in window.basis.iter() {
        let v = basis_vector(w.clone());
        for n in -range..=range {
            rep.compare(|| format!("Φ_1({n}) = e_{} on {w}", n - 1), &vertex_mode(1, n, &v), &e(n - 1, &v));
            rep.compare(|| format!("Φ_-1({n}) = e*_{} on {w}", -n), &vertex_mode(-1, n, &v), &e_star(-n, &v));
        }
    }
    for q in -2..=2i64 {
        for m in -2..=2i64 {
            let lhs = vertex_mode(m, -q * m, &super::vacuum(q));
            rep.compare(|| format!("z^(-qm) Φ_{m}(z) Ω_{q} at z = 0"), &lhs, &super::vacuum(q + m));
        }
    }
    rep
}

/// [L_k, Φ_m(p)] = (m²(k+1)/2 − p − k) Φ_m(p+k), with L from the bilinear bosons.
pub fn check_fubini_veneziano(m: i64, k: i64, window: &Window, p_range: i64) -> CheckReport {
    let mut rep = CheckReport::new(format!("fv m={m} k={k}"));
    for w in window.basis.iter() {
        let v = basis_vector(w.clone());
        for p in -p_range..=p_range {
            let lhs = l_sugawara(k, &vertex_mode(m, p, &v)).sub(&vertex_mode(m, p, &l_sugawara(k, &v)));
            let coeff = rat(m * m * (k + 1), 2) - int(p + k);
            let rhs = vertex_mode(m, p + k, &v).scaled(&coeff);
            rep.compare(|| format!("[L_{k}, Φ_{m}({p})] on {w}"), &lhs, &rhs);
        }
    }
    rep
}

/// [a_i, Φ_m(p)] = m Φ_m(p + i).
pub fn check_boson_covariance(m: i64, window: &Window, range: i64) -> CheckReport {
    let mut rep = CheckReport::new(format!("covariance m={m}"));
    for w in window.basis.iter() {
        let v = basis_vector(w.clone());
        for i in -range..=range {
            for p in -range..=range {
                let lhs = a(i, &vertex_mode(m, p, &v)).sub(&vertex_mode(m, p, &a(i, &v)));
                rep.compare(|| format!("[a_{i}, Φ_{m}({p})] on {w}"), &lhs, &vertex_mode(m, p + i, &v).scaled(&int(m)));
            }
        }
    }
    rep
}

/// E_+(z)^m E_−(w)^m = (1 − w/z)^{m²} E_−(w)^m E_+(z)^m, coefficientwise.
pub fn check_exchange(m: i64, window: &Window, order: u32) -> CheckReport {
    let mut rep = CheckReport::new(format!("exchange m={m}"));
    let mm = m * m;
    // (−1)^l binom(m², l)
    let c = |l: u32| -> Rational {
        let mut acc = int(1);
        for i in 0..i64::from(l) {
            acc = acc * int(i - mm) / int(i + 1);
        }
        acc
    };
    for w in window.basis.iter() {
        let v = basis_vector(w.clone());
        let minus: Vec<FockVector> = exp_coeffs(m, order, &v, true);
        for k in 0..=order {
            for j in 0..=order {
                let lhs = e_plus_coeff(m, k, &minus[j as usize]);
                let mut rhs = FockVector::new();
                for l in 0..=k.min(j) {
                    let pk = e_plus_coeff(m, k - l, &v);
                    rhs.add_scaled(&e_minus_coeff(m, j - l, &pk), &c(l));
                }
                rep.compare(|| format!("E+ E- at z^-{k} w^{j} on {w}"), &lhs, &rhs);
            }
        }
    }
    rep
}

/// Matrix element ⟨t|X|s⟩.
fn element(x: &FockVector, t: &super::Wedge) -> Rational {
    x.coeff(t)
}

/// (Φ_m(z^{−1}))* = z^{m²} Φ_{−m}(z), i.e. ⟨t|Φ_m(n)|s⟩ = ⟨s|Φ_{−m}(m² − n)|t⟩.
pub fn check_adjoint(m: i64, window: &Window, range: i64) -> CheckReport {
    adjoint_with_shift(m, m * m, window, range)
}

/// ⟨t|Φ_m(n)|s⟩ = ⟨s|Φ_{−m}(shift − n)|t⟩ on all window states.
pub fn adjoint_with_shift(m: i64, shift: i64, window: &Window, range: i64) -> CheckReport {
    let mut rep = CheckReport::new(format!("adjoint m={m}"));
    for s in window.basis.iter() {
        let vs = basis_vector(s.clone());
        for n in -range..=range {
            let img = vertex_mode(m, n, &vs);
            for t in window.basis.iter() {
                let back = vertex_mode(-m, -n + shift, &basis_vector(t.clone()));
                let lhs = LinComb::term(s.clone(), element(&img, t));
                let rhs = LinComb::term(s.clone(), element(&back, s));
                rep.compare(|| format!("<{t}|Φ_{m}({n})|{s}>"), &lhs, &rhs);
            }
        }
    }
    rep
}

/// [L′_k, e_m] = −(m + k/2 + 1/2) e_{k+m}.
pub fn check_lprime_fermion(window: &Window, range: i64) -> CheckReport {
    let mut rep = CheckReport::new("virasoro on fermions");
    for w in window.basis.iter() {
        let v = basis_vector(w.clone());
        for k in -range..=range {
            for m in -range..=range {
                let lhs = l_prime(k, &e(m, &v)).sub(&e(m, &l_prime(k, &v)));
                let rhs = e(k + m, &v).scaled(&(-(int(m) + rat(k, 2) + rat(1, 2))));
                rep.compare(|| format!("[L'_{k}, e_{m}] on {w}"), &lhs, &rhs);
            }
        }
    }
    rep
}
