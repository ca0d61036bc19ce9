//! Singular vectors: exact kernel solves, the curve solve over ℚ(t), and the
//! spin-module recurrence producing P_j with coefficients in ℚ[t].

use crate::combinatorics::{partitions_of, Partition};
use crate::linalg::Matrix;
use crate::lincomb::LinComb;
use crate::scalars::{int, twice_as_int, Field, RatFunc, Rational, Ring, UniPoly, Var};
use crate::verma::{c_curve, h_pq, h_pq_curve, raise, PbwVector, VermaModule, VermaParams};
use crate::{Error, Result};

/// The (2j+1)-dimensional sl₂ module, basis v_{−j}, …, v_j.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpinModule {
    two_j: u32,
}

impl SpinModule {
    pub fn new(j: &Rational) -> Result<Self> {
        let two_j = half_integer(j)?;
        Ok(SpinModule { two_j })
    }

    pub fn from_twice(two_j: u32) -> Self {
        SpinModule { two_j }
    }

    pub fn j(&self) -> Rational {
        Rational::new(self.two_j.into(), 2.into())
    }

    pub fn dim(&self) -> usize {
        self.two_j as usize + 1
    }

    /// H-eigenvalue of the i-th basis vector.
    pub fn weight(&self, i: usize) -> Rational {
        int(i as i64) - self.j()
    }

    /// E v_k = (j−k)(j+k+1) v_{k+1}
    pub fn e(&self) -> Matrix<Rational> {
        let j = self.j();
        let n = self.dim();
        Matrix::from_fn(n, n, |r, c| {
            if r == c + 1 {
                let k = self.weight(c);
                (&j - &k) * (&j + &k + int(1))
            } else {
                int(0)
            }
        })
    }

    /// F v_k = v_{k−1}
    pub fn f(&self) -> Matrix<Rational> {
        let n = self.dim();
        Matrix::from_fn(n, n, |r, c| if c == r + 1 { int(1) } else { int(0) })
    }

    pub fn h(&self) -> Matrix<Rational> {
        let n = self.dim();
        Matrix::from_fn(n, n, |r, c| if r == c { self.weight(r) } else { int(0) })
    }

    /// Scalar with E^m v_k = e(k, m) v_{k+m}, indexed by basis position.
    fn e_power_coeff(&self, i: usize, m: usize) -> Rational {
        let j = self.j();
        let mut acc = int(1);
        for l in 0..m {
            let k = self.weight(i + l);
            acc *= (&j - &k) * (&j + &k + int(1));
        }
        acc
    }
}

pub(crate) fn half_integer(j: &Rational) -> Result<u32> {
    match twice_as_int(j) {
        Some(t) if t >= 0 => Ok(t as u32),
        _ => Err(Error::InvalidArgument(format!("expected a non-negative half-integer, got {j}"))),
    }
}

/// Result of testing L₁v = L₂v = 0.
#[derive(Clone, Debug)]
pub struct SingularCheck<S: Ring> {
    pub l1: PbwVector<S>,
    pub l2: PbwVector<S>,
    pub singular: bool,
}

pub fn check_singular<S: Ring>(v: &PbwVector<S>, module: &VermaModule<S>) -> SingularCheck<S> {
    let l1 = module.apply_l(1, v);
    let l2 = module.apply_l(2, v);
    let singular = l1.is_zero() && l2.is_zero();
    SingularCheck { l1, l2, singular }
}

/// Joint kernel of L₁ and L₂ on level d, as coordinate vectors.
fn joint_kernel<S: Field>(module: &VermaModule<S>, d: u32) -> Vec<Vec<S>> {
    if d == 0 {
        return vec![vec![S::one()]];
    }
    let a = module.l_matrix(1, d);
    let stacked = if d >= 2 { a.vstack(&module.l_matrix(2, d)) } else { a };
    stacked.kernel()
}

fn normalize_or_keep<S: Field>(v: PbwVector<S>) -> PbwVector<S> {
    v.normalized().unwrap_or(v)
}

/// Basis of singular vectors at level d, each scaled to L_{−1}^d-coefficient 1.
pub fn singular_kernel_in<S: Field>(module: &VermaModule<S>, d: u32) -> Vec<PbwVector<S>> {
    joint_kernel(module, d)
        .into_iter()
        .map(|coords| normalize_or_keep(PbwVector::from_coords(d, &coords)))
        .collect()
}

pub fn singular_kernel(params: &VermaParams<Rational>, d: u32) -> Vec<PbwVector<Rational>> {
    singular_kernel_in(&VermaModule::new(params.clone()), d)
}

/// The unique singular vector at level d, or a structural error.
pub fn unique_singular<S: Field>(module: &VermaModule<S>, d: u32) -> Result<PbwVector<S>> {
    let mut ker = singular_kernel_in(module, d);
    match ker.len() {
        1 => Ok(ker.pop().unwrap()),
        n => Err(Error::Structural(format!("expected one singular vector at level {d}, found {n}"))),
    }
}

/// P_j ξ with coefficients in ℚ[t], from the recurrence
/// ξ_{i+1} = Σ_m (−t)^m e(i−m, m) L_{−m−1} ξ_{i−m}, ξ_{−j} = ξ.
pub fn bdiz_singular(j: &Rational) -> Result<PbwVector<UniPoly>> {
    let spin = SpinModule::new(j)?;
    let n = spin.dim();
    let t = UniPoly::var(Var::T);
    let neg_t = t.neg_ref();
    // chain[i] = ξ_{−j+i}, at level i
    let mut chain: Vec<LinComb<Partition, UniPoly>> = vec![LinComb::basis(Partition::empty())];
    for i in 0..n {
        let mut next = LinComb::new();
        for m in 0..=i {
            let coef = neg_t.pow(m as u32).scale(&spin.e_power_coeff(i - m, m));
            if coef.is_zero() {
                continue;
            }
            let w = raise(m as u32 + 1, &chain[i - m]);
            next.add_scaled(&w, &coef);
        }
        chain.push(next);
    }
    Ok(PbwVector::from_terms(n as u32, chain.pop().unwrap()))
}

/// Substitutes t = t0 into a ℚ[t]-vector.
pub fn specialize_poly(v: &PbwVector<UniPoly>, t0: &Rational) -> PbwVector<Rational> {
    v.map_coeffs(|p| p.eval(t0))
}

/// Substitutes t = t0 into a ℚ(t)-vector; fails at a pole.
pub fn specialize_ratfunc(v: &PbwVector<RatFunc>, t0: &Rational) -> Result<PbwVector<Rational>> {
    let mut terms = LinComb::new();
    for (p, f) in v.terms().iter() {
        let val = f
            .eval(t0)
            .ok_or_else(|| Error::InvalidArgument(format!("coefficient {f} has a pole at t = {t0}")))?;
        terms.add_term(p.clone(), val);
    }
    Ok(PbwVector::from_terms(v.level(), terms))
}

/// M(c(t), h_{r,s}(t)) over ℚ(t).
pub fn curve_module(r: i64, s: i64) -> VermaModule<RatFunc> {
    VermaModule::new(VermaParams::new(c_curve(), h_pq_curve(r, s)))
}

/// The singular vector of M(c(t), h_{r,s}(t)) at level rs, by kernel solve over ℚ(t).
pub fn curve_singular(r: i64, s: i64) -> Result<PbwVector<RatFunc>> {
    if r < 1 || s < 1 {
        return Err(Error::InvalidArgument(format!("need r, s >= 1, got ({r}, {s})")));
    }
    unique_singular(&curve_module(r, s), (r * s) as u32)
}

/// Rational point (c(t0), h_{2j+1,1}(t0)).
pub fn bdiz_params(j: &Rational, t0: &Rational) -> Result<VermaParams<Rational>> {
    let two_j = i64::from(half_integer(j)?);
    let c = c_curve().eval(t0).ok_or_else(|| Error::InvalidArgument("t = 0".into()))?;
    let h = h_pq_curve(two_j + 1, 1).eval(t0).ok_or_else(|| Error::InvalidArgument("t = 0".into()))?;
    Ok(VermaParams::rational(c, h))
}

/// P_{j+K−1}···P_j ξ in M(1, j²): singular vectors at energies (j+k)², k = 1..K.
pub fn c1_chain(j: &Rational, depth: usize) -> Result<Vec<PbwVector<Rational>>> {
    half_integer(j)?;
    let mut out = Vec::with_capacity(depth);
    let mut v: PbwVector<Rational> = PbwVector::vacuum();
    let mut spin = j.clone();
    for _ in 0..depth {
        let p = specialize_poly(&bdiz_singular(&spin)?, &int(1));
        v = crate::verma::apply_operator(&p, &v);
        out.push(v.clone());
        spin += int(1);
    }
    Ok(out)
}

/// Levels (α_k − h, β_k − h) of the singular vectors a_k, b_k of
/// M(c_m, h_{r,s}(m)), k = 1..K.
pub fn discrete_chain_levels(m: i64, r: i64, s: i64, depth: usize) -> Vec<(i64, i64)> {
    let big = m * (m + 1);
    let x = (r * (m + 1) - s * m).abs();
    let xp = r * (m + 1) + s * m;
    let lvl = |y: i64| (y * y - x * x) / (4 * big);
    (1..=depth as i64)
        .map(|k| {
            let (y1, y2) = if k % 2 == 1 {
                (xp + (k - 1) * big, (k + 1) * big - xp)
            } else {
                (k * big - x, k * big + x)
            };
            let (a, b) = (lvl(y1), lvl(y2));
            (a.min(b), a.max(b))
        })
        .collect()
}

/// Singular vectors a_k, b_k of M(c_m, h_{r,s}(m)) by kernel solve at the
/// predicted levels, as (level, vector) pairs in increasing level.
pub fn discrete_chain(m: i64, r: i64, s: i64, depth: usize) -> Result<Vec<(i64, PbwVector<Rational>)>> {
    let params = VermaParams::rational(crate::verma::c_discrete(m), h_pq(r, s, m));
    let module = VermaModule::new(params);
    let mut out = Vec::new();
    for (a, b) in discrete_chain_levels(m, r, s, depth) {
        for lvl in [a, b] {
            let v = unique_singular(&module, lvl as u32).map_err(|_| {
                Error::Structural(format!("no singular vector at predicted level {lvl} for (m,r,s)=({m},{r},{s})"))
            })?;
            out.push((lvl, v));
        }
    }
    Ok(out)
}

/// Levels ≤ n_max at which M(c,h) has a singular vector, by kernel solve.
pub fn singular_levels(params: &VermaParams<Rational>, n_max: u32) -> Vec<(u32, usize)> {
    let module = VermaModule::new(params.clone());
    (1..=n_max)
        .map(|d| (d, joint_kernel(&module, d).len()))
        .filter(|&(_, k)| k > 0)
        .collect()
}

/// All level-d basis keys (for rendering).
pub fn level_basis(d: u32) -> Vec<Partition> {
    partitions_of(d)
}
