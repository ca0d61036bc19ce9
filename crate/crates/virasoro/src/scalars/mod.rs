//! Exact coefficient tower: ℚ, ℚ[x], ℚ(x) and the bivariate rings ℚ[c,h], ℚ[λ,μ].
//!
//! Every scalar type implements [`Ring`]; generic module code (Verma modules,
//! linear algebra) is written once against that trait.

mod bipoly;
mod ratfunc;
mod unipoly;

pub use bipoly::{BiPoly, BiVars};
pub use ratfunc::RatFunc;
pub use unipoly::{UniPoly, Var};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Arbitrary-precision rational, always kept in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Commutative ring with unit containing ℚ.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&int(n))
    }
    fn scale(&self, q: &Rational) -> Self {
        self.mul_ref(&Self::from_rational(q))
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

/// Rings where exact quotients can be taken (used by fraction-free elimination).
pub trait ExactDiv: Ring {
    /// Returns `q` with `q * d == self`, or `None` if `d` does not divide `self`.
    fn exact_div(&self, d: &Self) -> Option<Self>;
}

/// Fields: every nonzero element is invertible.
pub trait Field: ExactDiv {
    fn inv(&self) -> Option<Self>;
    fn div_ref(&self, d: &Self) -> Option<Self> {
        d.inv().map(|i| self.mul_ref(&i))
    }
}

/// Root multiplicity at zero; the zero element has no finite order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Order {
    Finite(usize),
    IdenticallyZero,
}

impl Order {
    pub fn finite(self) -> Option<usize> {
        match self {
            Order::Finite(k) => Some(k),
            Order::IdenticallyZero => None,
        }
    }
}

/// Root multiplicity of x = 0, for anything that has one.
pub trait OrderAtZero {
    fn order_at_zero(&self) -> Order;
}

pub fn order_at_zero<T: OrderAtZero>(f: &T) -> Order {
    f.order_at_zero()
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "p", "-p", "p/q".
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// 2·q as an integer, when q is a half-integer.
pub fn twice_as_int(q: &Rational) -> Option<i64> {
    let t = q * int(2);
    if t.is_integer() {
        i64::try_from(t.to_integer()).ok()
    } else {
        None
    }
}

pub fn to_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        i64::try_from(q.to_integer()).ok()
    } else {
        None
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl ExactDiv for Rational {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if Zero::is_zero(d) {
            None
        } else {
            Some(self / d)
        }
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Writes a coefficient times a monomial string, omitting unit coefficients.
pub(crate) fn fmt_term(coeff: &Rational, mono: &str) -> String {
    if mono.is_empty() {
        return coeff.to_string();
    }
    if One::is_one(coeff) {
        mono.to_string()
    } else if One::is_one(&-coeff) {
        format!("-{mono}")
    } else {
        format!("{coeff}*{mono}")
    }
}

/// Joins rendered terms with " + " / " - ".
pub(crate) fn join_terms(terms: &[(Rational, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (c, m)) in terms.iter().enumerate() {
        if i == 0 {
            out.push_str(&fmt_term(c, m));
        } else if c.is_negative() {
            out.push_str(" - ");
            out.push_str(&fmt_term(&-c, m));
        } else {
            out.push_str(" + ");
            out.push_str(&fmt_term(c, m));
        }
    }
    out
}
