use super::{int, join_terms, ExactDiv, Order, OrderAtZero, Rational, Ring};

use std::fmt;

/// Name of the formal parameter of a [`UniPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    X,
    Mu,
    Lambda,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::X => "x",
            Var::Mu => "mu",
            Var::Lambda => "lambda",
        }
    }
}

/// Dense univariate polynomial over ℚ, tagged with its variable.
///
/// Constants carry a tag too but combine freely with any variable; combining
/// two non-constant polynomials in different variables panics.
#[derive(Clone, Debug)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn from_coeffs(var: Var, coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { var, coeffs };
        p.trim();
        p
    }

    pub fn var(var: Var) -> Self {
        Self::monomial(var, Rational::one(), 1)
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::from_coeffs(var, vec![c])
    }

    pub fn monomial(var: Var, c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(var, coeffs)
    }

    /// `a + b·v`
    pub fn linear(var: Var, a: Rational, b: Rational) -> Self {
        Self::from_coeffs(var, vec![a, b])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn variable(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    fn merged_var(&self, other: &Self) -> Var {
        if self.is_constant() {
            other.var
        } else if other.is_constant() || self.var == other.var {
            self.var
        } else {
            panic!(
                "variable mismatch: {} vs {}",
                self.var.symbol(),
                other.var.symbol()
            )
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluation in any ring containing ℚ (Horner).
    pub fn eval_in<S: Ring>(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(&S::from_rational(c));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * int(i as i64))
            .collect();
        Self::from_coeffs(self.var, coeffs)
    }

    /// Euclidean division over ℚ.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let var = self.merged_var(d);
        let dd = d.degree().unwrap();
        let lead_inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return (Self::from_coeffs(var, vec![]), self.clone().with_var(var));
        }
        let mut q = vec![Rational::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
            }
            q[k] = c;
        }
        (Self::from_coeffs(var, q), Self::from_coeffs(var, rem))
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading().recip();
        self.scale(&l)
    }

    /// Substitutes `v ↦ a·v` (used to move between parametrizations).
    pub fn rescale_var(&self, a: &Rational) -> Self {
        let mut p = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &p);
            p *= a;
        }
        Self::from_coeffs(self.var, coeffs)
    }
}

impl PartialEq for UniPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.is_constant() || self.var == other.var)
    }
}

impl Eq for UniPoly {}

impl Ring for UniPoly {
    fn zero() -> Self {
        UniPoly { var: Var::X, coeffs: vec![] }
    }
    fn one() -> Self {
        Self::constant(Var::X, Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let var = self.merged_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Self::from_coeffs(var, coeffs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        let var = self.merged_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Self::from_coeffs(var, coeffs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let var = self.merged_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return UniPoly { var, coeffs: vec![] };
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(var, coeffs)
    }
    fn neg_ref(&self) -> Self {
        UniPoly { var: self.var, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(Var::X, q.clone())
    }
    fn scale(&self, q: &Rational) -> Self {
        Self::from_coeffs(self.var, self.coeffs.iter().map(|c| c * q).collect())
    }
}

impl ExactDiv for UniPoly {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

impl OrderAtZero for UniPoly {
    fn order_at_zero(&self) -> Order {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(k) => Order::Finite(k),
            None => Order::IdenticallyZero,
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.var.symbol();
        let terms: Vec<(Rational, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| {
                let m = match d {
                    0 => String::new(),
                    1 => v.to_string(),
                    _ => format!("{v}^{d}"),
                };
                (c.clone(), m)
            })
            .collect();
        f.write_str(&join_terms(&terms))
    }
}
