//! Finite linear combinations over an ordered basis.

use crate::scalars::{Rational, Ring};
use std::collections::BTreeMap;

/// Sparse vector: basis key → nonzero coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct LinComb<K: Ord + Clone, S: Ring> {
    terms: BTreeMap<K, S>,
}

impl<K: Ord + Clone, S: Ring> Default for LinComb<K, S> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, S: Ring> LinComb<K, S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, S::one())
    }

    pub fn term(k: K, s: S) -> Self {
        let mut v = Self::new();
        v.add_term(k, s);
        v
    }

    pub fn add_term(&mut self, k: K, s: S) {
        if s.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(e) => {
                *e = e.add_ref(&s);
                if e.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, s);
            }
        }
    }

    /// self += s · other
    pub fn add_scaled(&mut self, other: &Self, s: &S) {
        if s.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.mul_ref(s));
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &S::one().neg_ref());
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn scaled(&self, s: &S) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, s);
        out
    }

    pub fn scaled_q(&self, q: &Rational) -> Self {
        self.scaled(&S::from_rational(q))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> S {
        self.terms.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn get(&self, k: &K) -> Option<&S> {
        self.terms.get(k)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &S)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Linear extension of a map on basis elements.
    pub fn map_linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2, S>) -> LinComb<K2, S> {
        let mut out = LinComb::new();
        for (k, s) in &self.terms {
            out.add_scaled(&f(k), s);
        }
        out
    }

    /// Fallible linear extension.
    pub fn try_map_linear<K2: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<LinComb<K2, S>, E>,
    ) -> Result<LinComb<K2, S>, E> {
        let mut out = LinComb::new();
        for (k, s) in &self.terms {
            out.add_scaled(&f(k)?, s);
        }
        Ok(out)
    }

    pub fn map_coeffs<T: Ring>(&self, f: impl Fn(&S) -> T) -> LinComb<K, T> {
        let mut out = LinComb::new();
        for (k, s) in &self.terms {
            out.add_term(k.clone(), f(s));
        }
        out
    }
}

impl<K: Ord + Clone, S: Ring> FromIterator<(K, S)> for LinComb<K, S> {
    fn from_iter<I: IntoIterator<Item = (K, S)>>(iter: I) -> Self {
        let mut v = Self::new();
        for (k, s) in iter {
            v.add_term(k, s);
        }
        v
    }
}
