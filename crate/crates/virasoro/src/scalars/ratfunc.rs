use super::{ExactDiv, Field, Order, OrderAtZero, Rational, Ring, UniPoly, Var};

use std::fmt;

/// Reduced quotient of univariate polynomials with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    /// Builds `num/den` in lowest terms. Panics if `den` is zero.
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let var = if num.is_constant() { den.variable() } else { num.variable() };
        if num.is_zero() {
            return RatFunc { num: UniPoly::zero().with_var(var), den: UniPoly::one().with_var(var) };
        }
        let g = num.gcd(&den);
        let mut n = num.exact_div(&g).expect("gcd divides numerator");
        let mut d = den.exact_div(&g).expect("gcd divides denominator");
        let l = d.leading();
        if !l.is_one() {
            let li = l.recip();
            n = n.scale(&li);
            d = d.scale(&li);
        }
        RatFunc { num: n.with_var(var), den: d.with_var(var) }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        let var = p.variable();
        RatFunc { num: p, den: UniPoly::one().with_var(var) }
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(UniPoly::var(v))
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    /// The polynomial, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&UniPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.den.eval(t);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(t) / d)
        }
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::new(self.num.add_ref(&rhs.num), self.den.clone());
        }
        Self::new(
            self.num.mul_ref(&rhs.den).add_ref(&rhs.num.mul_ref(&self.den)),
            self.den.mul_ref(&rhs.den),
        )
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::new(self.num.mul_ref(&rhs.num), self.den.mul_ref(&rhs.den))
    }
    fn neg_ref(&self) -> Self {
        RatFunc { num: self.num.neg_ref(), den: self.den.clone() }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(UniPoly::from_rational(q))
    }
    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(q), den: self.den.clone() }
    }
}

impl ExactDiv for RatFunc {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        self.div_ref(d)
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }
}

impl OrderAtZero for RatFunc {
    /// Order of the numerator minus order of the denominator; the latter is 0
    /// whenever the numerator vanishes at 0, by reduction. Poles give
    /// `Finite(0)` only if there is none at zero, so callers needing negative
    /// orders should inspect [`RatFunc::den`] themselves.
    fn order_at_zero(&self) -> Order {
        let n = self.num.order_at_zero();
        match (n, self.den.order_at_zero()) {
            (Order::Finite(a), Order::Finite(b)) => Order::Finite(a.saturating_sub(b)),
            _ => n,
        }
    }
}

impl From<UniPoly> for RatFunc {
    fn from(p: UniPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
