//! Density modules V_{λ,μ} and the polynomial a_d(λ,μ) by which the
//! normalized singular element P_d acts on v₀.

use crate::linalg::Matrix;
use crate::lincomb::LinComb;
use crate::scalars::{int, BiPoly, Rational, Ring};
use crate::singular::{bdiz_singular, half_integer, specialize_poly, SpinModule};
use crate::verma::PbwVector;
use crate::{Error, Result};

/// Finite combination of the basis vectors v_n.
pub type DensityVector<S> = LinComb<i64, S>;

/// V_{λ,μ} with ℓ_k v_n = −(n + λk + μ) v_{n+k}.
#[derive(Clone, Debug)]
pub struct DensityModule<S> {
    pub lambda: S,
    pub mu: S,
}

impl<S: Ring> DensityModule<S> {
    pub fn new(lambda: S, mu: S) -> Self {
        DensityModule { lambda, mu }
    }

    pub fn apply(&self, k: i64, w: &DensityVector<S>) -> DensityVector<S> {
        let mut out = LinComb::new();
        let lk = self.lambda.scale(&int(k));
        for (&n, s) in w.iter() {
            let f = S::from_int(n).add_ref(&lk).add_ref(&self.mu).neg_ref();
            out.add_term(n + k, f.mul_ref(s));
        }
        out
    }

    /// Coefficient of v_{−d} in P v₀, with L_{−k} acting as ℓ_{−k}.
    pub fn evaluate(&self, p: &PbwVector<Rational>) -> Result<S> {
        let d = i64::from(p.level());
        let mut total = S::zero();
        for (mono, c) in p.terms().iter() {
            let mut w: DensityVector<S> = LinComb::basis(0);
            let mut depth = 0i64;
            for &k in mono.parts().iter().rev() {
                w = self.apply(-i64::from(k), &w);
                depth += i64::from(k);
                if w.keys().any(|&n| n != -depth) {
                    return Err(Error::Grading(format!("support of partial product left v_{{{}}}", -depth)));
                }
            }
            total = total.add_ref(&w.coeff(&-d).scale(c));
        }
        Ok(total)
    }
}

pub fn density_apply<S: Ring>(k: i64, w: &DensityVector<S>, module: &DensityModule<S>) -> DensityVector<S> {
    module.apply(k, w)
}

/// The normalized singular element P_d of M(1, j²), d = 2j+1.
pub fn p_d(j: &Rational) -> Result<PbwVector<Rational>> {
    Ok(specialize_poly(&bdiz_singular(j)?, &int(1)))
}

pub fn evaluate_ad<S: Ring>(p: &PbwVector<Rational>, lambda: &S, mu: &S) -> Result<S> {
    DensityModule::new(lambda.clone(), mu.clone()).evaluate(p)
}

/// a_d(λ, μ) as a polynomial in (λ, μ).
pub fn ad_symbolic(j: &Rational) -> Result<BiPoly> {
    evaluate_ad(&p_d(j)?, &BiPoly::lambda(), &BiPoly::mu())
}

/// Closed-form product evaluations.
#[derive(Clone, Debug)]
pub enum FfCase<S> {
    /// a_d(0, μ)
    A,
    /// a_d(1, μ)
    B,
    /// a_d(p², μ)
    C(u32),
    /// a_d(λ, μ)²
    D(S),
}

fn spin_weights(j: &Rational) -> Result<Vec<Rational>> {
    let s = SpinModule::new(j)?;
    Ok((0..s.dim()).map(|i| s.weight(i)).collect())
}

pub fn ff_product<S: Ring>(case: &FfCase<S>, j: &Rational, mu: &S) -> Result<S> {
    let ks = spin_weights(j)?;
    let d = ks.len();
    let j2 = j * j;
    let sign = if d % 2 == 0 { int(1) } else { int(-1) };
    let shifted = |p: i64| -> S {
        let mut acc = S::one();
        for k in &ks {
            let kp = k + int(p);
            acc = acc.mul_ref(&mu.add_ref(&S::from_rational(&(&j2 - &kp * &kp))));
        }
        acc.scale(&sign)
    };
    Ok(match case {
        FfCase::A => shifted(0),
        FfCase::B => shifted(1),
        FfCase::C(p) => shifted(i64::from(*p)),
        FfCase::D(lambda) => {
            let mut acc = S::one();
            for k in &ks {
                let k2 = k * k;
                let base = lambda.sub_ref(mu).add_ref(&S::from_rational(&(&k2 - &j2)));
                let term = base.mul_ref(&base).sub_ref(&lambda.scale(&(k2 * int(4))));
                acc = acc.mul_ref(&term);
            }
            acc
        }
    })
}

/// (−1)^d det(−F + (I+E)^{−1}((j − μ − p²)I + (2p+1)H)) over the ring of μ.
pub fn appc_determinant<S: Ring>(j: &Rational, p: u32, mu: &S) -> Result<S> {
    let spin = SpinModule::new(j)?;
    let n = spin.dim();
    let (e, f, h) = (spin.e(), spin.f(), spin.h());
    // (I + E)^{-1} = Σ (−E)^k, E nilpotent
    let mut inv = Matrix::<Rational>::identity(n);
    let mut pow = Matrix::<Rational>::identity(n);
    let neg_e = e.map(|x| -x);
    for _ in 1..n {
        pow = pow.mul(&neg_e);
        inv = inv.add(&pow);
    }
    let p = i64::from(p);
    let shift = j - int(p * p);
    let diag = Matrix::from_fn(n, n, |r, c| {
        if r == c {
            &shift + &h[(r, c)] * int(2 * p + 1)
        } else {
            int(0)
        }
    });
    let constant = inv.mul(&diag).sub(&f);
    let m = Matrix::from_fn(n, n, |r, c| {
        S::from_rational(&constant[(r, c)]).sub_ref(&mu.scale(&inv[(r, c)]))
    });
    let det = m.det_expansion();
    Ok(if n % 2 == 0 { det } else { det.neg_ref() })
}

/// a_d(1 − λ, h − j²); nonzero certifies there is no primary field of type
/// (λ, ·) from L(1, j²) to L(1, h).
pub fn primary_obstruction(j: &Rational, lambda: &Rational, h: &Rational) -> Result<Rational> {
    half_integer(j)?;
    evaluate_ad(&p_d(j)?, &(int(1) - lambda), &(h - j * j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn action_examples() {
        let m = DensityModule::new(int(1), int(0));
        let w = m.apply(-1, &LinComb::basis(0));
        assert_eq!(w, LinComb::term(-1, int(1)));
        let m = DensityModule::new(rat(2, 3), rat(5, 7));
        let w = m.apply(0, &LinComb::basis(4));
        assert_eq!(w, LinComb::term(4, -(int(4) + rat(5, 7))));
    }

    #[test]
    fn a1_and_a2() {
        let a1 = ad_symbolic(&int(0)).unwrap();
        assert_eq!(a1, BiPoly::lambda().sub_ref(&BiPoly::mu()));
        let p = p_d(&rat(1, 2)).unwrap();
        let mu = rat(3, 5);
        assert_eq!(evaluate_ad(&p, &int(0), &mu).unwrap(), &mu * &mu);
        assert_eq!(evaluate_ad(&p, &int(1), &mu).unwrap(), &mu * (&mu - int(2)));
    }
}
