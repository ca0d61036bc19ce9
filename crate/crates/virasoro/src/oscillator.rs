//! Heisenberg module ℚ[x₁, x₂, …] with [a_m, a_n] = κ m δ_{m+n,0}, its
//! Sugawara Virasoro action, Goldstone vectors and binomial determinants.

use crate::combinatorics::{partitions_of, Partition, Signature};
use crate::linalg::Matrix;
use crate::lincomb::LinComb;
use crate::scalars::{int, Rational, Ring};
use crate::{Error, Result};

use std::fmt;

/// κ and the a₀-eigenvalue μ₀ on the generating vector.
#[derive(Clone, Debug, PartialEq)]
pub struct OscParams {
    pub kappa: Rational,
    pub mu0: Rational,
}

impl OscParams {
    pub fn new(kappa: Rational, mu0: Rational) -> Result<Self> {
        if kappa <= int(0) {
            return Err(Error::InvalidArgument(format!("κ must be positive, got {kappa}")));
        }
        Ok(OscParams { kappa, mu0 })
    }

    /// κ = 2, b₀ = 2p.
    pub fn b_modes(two_p: i64) -> Self {
        OscParams { kappa: int(2), mu0: int(two_p) }
    }

    /// Conformal weight of 1: μ₀²/(2κ).
    pub fn vacuum_weight(&self) -> Rational {
        &self.mu0 * &self.mu0 / (int(2) * &self.kappa)
    }
}

/// Polynomial in x₁, x₂, …; a monomial is the partition of its variable indices.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct PolyState(pub LinComb<Partition, Rational>);

impl PolyState {
    pub fn x(n: u32) -> Self {
        PolyState(LinComb::basis(Partition::new(vec![n])))
    }

    pub fn monomial(p: Partition) -> Self {
        PolyState(LinComb::basis(p))
    }

    /// Weighted degrees present.
    pub fn energies(&self) -> Vec<u32> {
        let mut e: Vec<u32> = self.0.keys().map(Partition::weight).collect();
        e.sort_unstable();
        e.dedup();
        e
    }

    /// Some(n) when homogeneous of weighted degree n (zero is homogeneous of any degree).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match self.energies().as_slice() {
            [] => Some(0),
            [n] => Some(*n),
            _ => None,
        }
    }

    pub fn max_index(&self) -> u32 {
        self.0.keys().filter_map(|p| p.parts().first().copied()).max().unwrap_or(0)
    }

    /// Coordinates in the partitions_of(n) basis.
    pub fn to_coords(&self, n: u32) -> Vec<Rational> {
        partitions_of(n).iter().map(|p| self.0.coeff(p)).collect()
    }

    pub fn from_coords(n: u32, coords: &[Rational]) -> Self {
        PolyState(partitions_of(n).into_iter().zip(coords.iter().cloned()).collect())
    }

    /// The constant term when the state is a scalar.
    pub fn scalar(&self) -> Option<Rational> {
        if self.0.keys().all(Partition::is_empty) {
            Some(self.0.coeff(&Partition::empty()))
        } else {
            None
        }
    }

    /// Rescaled so the last nonzero coordinate at its degree is 1.
    pub fn normalized(&self) -> Option<Self> {
        let (_, c) = self.0.iter().last()?;
        let inv = int(1) / c;
        Some(PolyState(self.0.scaled(&inv)))
    }
}

impl fmt::Display for PolyState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .map(|(p, c)| {
                if p.is_empty() {
                    c.to_string()
                } else {
                    let vars: Vec<String> = p.parts().iter().map(|n| format!("x{n}")).collect();
                    format!("{c}*{}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

fn merge(a: &Partition, b: &Partition) -> Partition {
    let mut parts = a.parts().to_vec();
    parts.extend_from_slice(b.parts());
    Partition::new(parts)
}

impl Ring for PolyState {
    fn zero() -> Self {
        PolyState(LinComb::new())
    }
    fn one() -> Self {
        PolyState(LinComb::basis(Partition::empty()))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        PolyState(self.0.add(&rhs.0))
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        PolyState(self.0.sub(&rhs.0))
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = LinComb::new();
        for (p, a) in self.0.iter() {
            for (q, b) in rhs.0.iter() {
                out.add_term(merge(p, q), a * b);
            }
        }
        PolyState(out)
    }
    fn neg_ref(&self) -> Self {
        PolyState(self.0.scaled(&int(-1)))
    }
    fn from_rational(q: &Rational) -> Self {
        PolyState(LinComb::term(Partition::empty(), q.clone()))
    }
    fn scale(&self, q: &Rational) -> Self {
        PolyState(self.0.scaled(q))
    }
}

/// a_n: multiplication by x_{−n} for n < 0, κ n ∂/∂x_n for n > 0, μ₀ for n = 0.
pub fn apply_mode(n: i64, s: &PolyState, params: &OscParams) -> PolyState {
    use std::cmp::Ordering;
    match n.cmp(&0) {
        Ordering::Less => {
            let k = (-n) as u32;
            PolyState(s.0.map_linear(|p| LinComb::basis(p.with_part(k))))
        }
        Ordering::Equal => s.scale(&params.mu0),
        Ordering::Greater => {
            let k = n as u32;
            let f = &params.kappa * int(n);
            PolyState(s.0.map_linear(|p| match p.without_part(k) {
                Some(q) => LinComb::term(q, &f * int(p.multiplicity(k) as i64)),
                None => LinComb::new(),
            }))
        }
    }
}

/// Sugawara L_k = (1/2κ) Σ_{r+s=k} :a_r a_s:.
pub fn apply_l(k: i64, s: &PolyState, params: &OscParams) -> PolyState {
    let w = i64::from(s.max_index());
    let mut out = PolyState::zero();
    // pairs r ≤ s with r + s = k; for k = 0 the range starts at s = 0
    let lo = k.div_euclid(2) + k.rem_euclid(2);
    let hi = w.max(lo);
    for t in lo..=hi {
        let r = k - t;
        if r > t {
            continue;
        }
        // a_r a_t with the larger mode acting first
        let term = apply_mode(r, &apply_mode(t, s, params), params);
        let weight = if r == t { int(1) } else { int(2) };
        out = out.add_ref(&term.scale(&weight));
    }
    out.scale(&(int(1) / (int(2) * &params.kappa)))
}

/// Matrix of L_k from degree n to degree n − k.
pub fn l_matrix(k: i64, n: u32, params: &OscParams) -> Matrix<Rational> {
    let src = partitions_of(n);
    let tgt = i64::from(n) - k;
    let rows = if tgt < 0 { 0 } else { partitions_of(tgt as u32).len() };
    let mut m = Matrix::zeros(rows, src.len());
    for (j, p) in src.iter().enumerate() {
        if tgt < 0 {
            break;
        }
        let img = apply_l(k, &PolyState::monomial(p.clone()), params).to_coords(tgt as u32);
        for (i, c) in img.into_iter().enumerate() {
            m[(i, j)] = c;
        }
    }
    m
}

/// Whether L₁ and L₂ annihilate s.
pub fn is_singular(s: &PolyState, params: &OscParams) -> bool {
    apply_l(1, s, params).is_zero() && apply_l(2, s, params).is_zero()
}

/// Joint kernel of L₁, L₂ in degree `level`; at most one-dimensional.
pub fn singular_kernel_osc(params: &OscParams, level: u32) -> Result<Vec<PolyState>> {
    if level == 0 {
        return Err(Error::InvalidArgument("level must be at least 1".into()));
    }
    let a = l_matrix(1, level, params);
    let b = l_matrix(2, level, params);
    let k = a.vstack(&b).kernel();
    if k.len() > 1 {
        return Err(Error::Structural(format!("singular space of dimension {} at level {level}", k.len())));
    }
    Ok(k.iter().map(|v| PolyState::from_coords(level, v).normalized().unwrap()).collect())
}

/// c₀, …, c_N with Σ c_n zⁿ = exp Σ x_n zⁿ / n.
pub fn c_coefficients(n_max: u32) -> Vec<PolyState> {
    // n c_n = Σ_{k=1}^{n} x_k c_{n−k}
    let mut c = vec![PolyState::one()];
    for n in 1..=n_max {
        let mut acc = PolyState::zero();
        for k in 1..=n {
            acc = acc.add_ref(&PolyState::x(k).mul_ref(&c[(n - k) as usize]));
        }
        c.push(acc.scale(&(int(1) / int(i64::from(n)))));
    }
    c
}

/// c_n, zero for n < 0.
pub fn c_at(c: &[PolyState], n: i64) -> PolyState {
    if n < 0 {
        PolyState::zero()
    } else {
        c[n as usize].clone()
    }
}

/// X_f = det(c_{f_i − i + j}).
pub fn x_f(f: &Signature) -> PolyState {
    let d = f.depth();
    if d == 0 {
        return PolyState::one();
    }
    let c = c_coefficients(f.size() + d as u32);
    let m = Matrix::from_fn(d, d, |i, j| c_at(&c, i64::from(f.row(i + 1)) - i as i64 + j as i64));
    m.det_expansion()
}

/// Which charge sector a Goldstone vector lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sector {
    /// b₀ = −2k, f = m rows of length 2k+m
    Minus,
    /// b₀ = +2k, f transposed
    Plus,
}

/// Signature of the Goldstone vector at (k, m) in a sector.
pub fn goldstone_signature(two_k: u32, m: u32, sector: Sector) -> Signature {
    let rect = Signature::rectangle(two_k + m, m);
    match sector {
        Sector::Minus => rect,
        Sector::Plus => rect.transpose(),
    }
}

/// Oscillator parameters (κ = 2) of a sector.
pub fn goldstone_params(two_k: u32, sector: Sector) -> OscParams {
    let b0 = i64::from(two_k);
    OscParams::b_modes(if sector == Sector::Minus { -b0 } else { b0 })
}

/// X_f ξ for the rectangle of (k, m); energy (k+m)², level 2km + m².
pub fn goldstone_vector(two_k: u32, m: u32, sector: Sector) -> PolyState {
    x_f(&goldstone_signature(two_k, m, sector))
}

/// Eigenvalue of L₀ on a homogeneous state.
pub fn l0_eigenvalue(s: &PolyState, params: &OscParams) -> Result<Rational> {
    let n = s.homogeneous_degree().ok_or_else(|| Error::Grading("state is not homogeneous".into()))?;
    let img = apply_l(0, s, params);
    let e = params.vacuum_weight() + int(i64::from(n));
    if img != s.scale(&e) {
        return Err(Error::Grading("state is not an L₀ eigenvector".into()));
    }
    Ok(e)
}

/// ½H₀² + Σ H_{−n}H_n with H = b/2, the κ = 1 style energy on the κ = 2 module.
pub fn half_normalized_energy(s: &PolyState, params: &OscParams) -> PolyState {
    let quarter = int(1) / int(4);
    let mut out = s.scale(&(&params.mu0 * &params.mu0 * &quarter / int(2)));
    for n in 1..=i64::from(s.max_index()) {
        let t = apply_mode(-n, &apply_mode(n, s, params), params);
        out = out.add_ref(&t.scale(&quarter));
    }
    out
}

/// binom(μ + n − 1, n) = μ(μ+1)…(μ+n−1)/n!, zero for n < 0.
pub fn rising_binom<S: Ring>(mu: &S, n: i64) -> S {
    if n < 0 {
        return S::zero();
    }
    let mut acc = S::one();
    for i in 0..n {
        acc = acc.mul_ref(&mu.add_ref(&S::from_int(i)));
    }
    let fact: i64 = (1..=n).product();
    acc.scale(&(int(1) / int(fact)))
}

/// det binom(μ + f_i − i + j − 1, f_i − i + j).
pub fn binom_det<S: Ring>(f: &Signature, mu: &S) -> S {
    let d = f.depth();
    if d == 0 {
        return S::one();
    }
    Matrix::from_fn(d, d, |i, j| rising_binom(mu, i64::from(f.row(i + 1)) - i as i64 + j as i64)).det_expansion()
}

/// ∏_{j≤N, i≤m} (λ − i + j) / (N + i − j).
pub fn rect_binom_product<S: Ring>(n: u32, m: u32, lambda: &S) -> S {
    let mut num = S::one();
    let mut den = int(1);
    for j in 1..=i64::from(n) {
        for i in 1..=i64::from(m) {
            num = num.mul_ref(&lambda.add_ref(&S::from_int(j - i)));
            den *= int(i64::from(n) + i - j);
        }
    }
    num.scale(&(int(1) / den))
}

/// (|f|!)^{-1} L₁^{|f|} X_f ξ_p with κ = 2, b₀ = 2p.
pub fn l1_power_pairing(f: &Signature, two_p: i64) -> Result<Rational> {
    let params = OscParams::b_modes(two_p);
    let mut s = x_f(f);
    let n = f.size();
    for _ in 0..n {
        s = apply_l(1, &s, &params);
    }
    let fact: i64 = (1..=i64::from(n)).product();
    let v = s.scalar().ok_or_else(|| Error::Grading("L₁^{|f|} X_f is not a multiple of ξ".into()))?;
    Ok(v / int(fact))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn sugawara_small() {
        let p = OscParams::new(int(1), int(0)).unwrap();
        assert_eq!(apply_l(0, &PolyState::x(2), &p), PolyState::x(2).scale(&int(2)));
        let mu = rat(5, 3);
        let p = OscParams::new(int(1), mu.clone()).unwrap();
        assert_eq!(apply_l(1, &PolyState::x(1), &p), PolyState::from_rational(&mu));
        let p = OscParams::b_modes(3);
        let s = PolyState::x(2).mul_ref(&PolyState::x(1));
        // L₁ = μ₀∂₁ + Σ (n+1) x_n ∂_{n+1}
        let expect = PolyState::x(2).scale(&int(3)).add_ref(&PolyState::x(1).mul_ref(&PolyState::x(1)).scale(&int(2)));
        assert_eq!(apply_l(1, &s, &p), expect);
    }

    #[test]
    fn c_small() {
        let c = c_coefficients(2);
        assert_eq!(c[1], PolyState::x(1));
        let half = rat(1, 2);
        let x1 = PolyState::x(1);
        assert_eq!(c[2], x1.mul_ref(&x1).scale(&half).add_ref(&PolyState::x(2).scale(&half)));
        assert_eq!(c_at(&c, -1), PolyState::zero());
    }
}
