use super::{join_terms, ExactDiv, Rational, Ring, UniPoly, Var};

use std::collections::BTreeMap;
use std::fmt;

/// Variable pair of a [`BiPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BiVars {
    /// Central charge and weight.
    CH,
    /// Density-module parameters.
    LambdaMu,
}

impl BiVars {
    fn names(self) -> (&'static str, &'static str) {
        match self {
            BiVars::CH => ("c", "h"),
            BiVars::LambdaMu => ("lambda", "mu"),
        }
    }
}

/// Sparse bivariate polynomial: (deg first, deg second) → coefficient.
#[derive(Clone, Debug)]
pub struct BiPoly {
    vars: BiVars,
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn from_terms(vars: BiVars, it: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut terms = BTreeMap::new();
        for (k, v) in it {
            let e: &mut Rational = terms.entry(k).or_insert_with(Rational::zero);
            *e += v;
        }
        terms.retain(|_, v: &mut Rational| !v.is_zero());
        BiPoly { vars, terms }
    }

    pub fn c() -> Self {
        Self::from_terms(BiVars::CH, [((1, 0), Rational::one())])
    }
    pub fn h() -> Self {
        Self::from_terms(BiVars::CH, [((0, 1), Rational::one())])
    }
    pub fn lambda() -> Self {
        Self::from_terms(BiVars::LambdaMu, [((1, 0), Rational::one())])
    }
    pub fn mu() -> Self {
        Self::from_terms(BiVars::LambdaMu, [((0, 1), Rational::one())])
    }

    pub fn constant(vars: BiVars, q: Rational) -> Self {
        Self::from_terms(vars, [((0, 0), q)])
    }

    pub fn vars(&self) -> BiVars {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.terms
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rational {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.coeff(0, 0))
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    pub fn degree_second(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    fn merged(&self, other: &Self) -> BiVars {
        if self.is_constant() {
            other.vars
        } else if other.is_constant() || self.vars == other.vars {
            self.vars
        } else {
            panic!("variable mismatch: {:?} vs {:?}", self.vars, other.vars)
        }
    }

    /// Substitutes both variables by elements of any ring containing ℚ.
    pub fn eval<S: Ring>(&self, a: &S, b: &S) -> S {
        let da = self.terms.keys().map(|k| k.0).max().unwrap_or(0) as usize;
        let db = self.terms.keys().map(|k| k.1).max().unwrap_or(0) as usize;
        let mut pa = vec![S::one()];
        for i in 0..da {
            pa.push(pa[i].mul_ref(a));
        }
        let mut pb = vec![S::one()];
        for i in 0..db {
            pb.push(pb[i].mul_ref(b));
        }
        let mut acc = S::zero();
        for (&(i, j), q) in &self.terms {
            let m = pa[i as usize].mul_ref(&pb[j as usize]);
            acc = acc.add_ref(&m.scale(q));
        }
        acc
    }

    /// Specialization to a univariate polynomial.
    pub fn specialize_uni(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        self.eval(a, b)
    }

    /// Restriction to the second variable with the first fixed: f(a0, v).
    pub fn at_first(&self, a0: &Rational, var: Var) -> UniPoly {
        self.eval(&UniPoly::constant(var, a0.clone()), &UniPoly::var(var))
    }

    /// Leading term in the order (second degree, first degree) lexicographic.
    fn leading(&self) -> Option<((u32, u32), &Rational)> {
        self.terms
            .iter()
            .max_by_key(|(&(a, b), _)| (b, a))
            .map(|(&k, v)| (k, v))
    }

    fn add_scaled_shift(&mut self, other: &Self, q: &Rational, shift: (u32, u32)) {
        for (&(a, b), v) in &other.terms {
            let k = (a + shift.0, b + shift.1);
            let e = self.terms.entry(k).or_insert_with(Rational::zero);
            *e += v * q;
            if e.is_zero() {
                self.terms.remove(&k);
            }
        }
    }
}

impl PartialEq for BiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.is_constant() || self.vars == other.vars)
    }
}

impl Eq for BiPoly {}

impl Ring for BiPoly {
    fn zero() -> Self {
        BiPoly { vars: BiVars::CH, terms: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::constant(BiVars::CH, Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let vars = self.merged(rhs);
        let mut out = self.clone();
        out.vars = vars;
        out.add_scaled_shift(rhs, &Rational::one(), (0, 0));
        out
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        let vars = self.merged(rhs);
        let mut out = self.clone();
        out.vars = vars;
        out.add_scaled_shift(rhs, &-Rational::one(), (0, 0));
        out
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let vars = self.merged(rhs);
        let mut terms: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for (&(a, b), u) in &self.terms {
            for (&(c, d), v) in &rhs.terms {
                *terms.entry((a + c, b + d)).or_insert_with(Rational::zero) += u * v;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        BiPoly { vars, terms }
    }
    fn neg_ref(&self) -> Self {
        BiPoly { vars: self.vars, terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(BiVars::CH, q.clone())
    }
    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return BiPoly { vars: self.vars, terms: BTreeMap::new() };
        }
        BiPoly { vars: self.vars, terms: self.terms.iter().map(|(k, v)| (*k, v * q)).collect() }
    }
}

impl ExactDiv for BiPoly {
    /// Multivariate division by leading terms; exact iff the remainder vanishes.
    fn exact_div(&self, d: &Self) -> Option<Self> {
        let ((da, db), dl) = d.leading()?;
        let dl_inv = dl.recip();
        let vars = self.merged(d);
        let mut rem = self.clone();
        let mut quot = BiPoly { vars, terms: BTreeMap::new() };
        while let Some(((ra, rb), rl)) = rem.leading() {
            if ra < da || rb < db {
                return None;
            }
            let q = rl * &dl_inv;
            let shift = (ra - da, rb - db);
            quot.terms.insert(shift, q.clone());
            rem.add_scaled_shift(d, &-q, shift);
        }
        Some(quot)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (na, nb) = self.vars.names();
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(a, b)| (a + b, a));
        let pw = |n: &str, e: u32| match e {
            0 => String::new(),
            1 => n.to_string(),
            _ => format!("{n}^{e}"),
        };
        let terms: Vec<(Rational, String)> = keys
            .into_iter()
            .map(|(a, b)| {
                let m = [pw(na, a), pw(nb, b)]
                    .into_iter()
                    .filter(|s| !s.is_empty())
                    .collect::<Vec<_>>()
                    .join("*");
                (self.terms[&(a, b)].clone(), m)
            })
            .collect();
        f.write_str(&join_terms(&terms))
    }
}
