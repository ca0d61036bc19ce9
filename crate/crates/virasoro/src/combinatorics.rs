//! Partitions, signatures and truncated q-series.

use crate::error::{Error, Result};
use crate::scalars::{int, Rational, Ring};

use serde_json::{json, Value};
use std::fmt;

/// Weakly decreasing sequence of positive integers.
///
/// The derived `Ord` is lexicographic on parts; the canonical *listing* order
/// (see [`partitions_of`]) is descending lexicographic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts the parts into descending order and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part and the remaining partition.
    pub fn split_first(&self) -> Option<(u32, Partition)> {
        self.0.split_first().map(|(&a, rest)| (a, Partition(rest.to_vec())))
    }

    /// Prepends a part that is at least the current largest one.
    pub fn prepend(&self, k: u32) -> Partition {
        debug_assert!(self.0.first().is_none_or(|&a| k >= a));
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(k);
        v.extend_from_slice(&self.0);
        Partition(v)
    }

    /// Inserts a part at its sorted position.
    pub fn with_part(&self, k: u32) -> Partition {
        let pos = self.0.iter().position(|&a| a < k).unwrap_or(self.0.len());
        let mut v = self.0.clone();
        v.insert(pos, k);
        Partition(v)
    }

    pub fn multiplicity(&self, k: u32) -> usize {
        self.0.iter().filter(|&&a| a == k).count()
    }

    /// Removes one occurrence of `k`, if present.
    pub fn without_part(&self, k: u32) -> Option<Partition> {
        let pos = self.0.iter().position(|&a| a == k)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(Partition(v))
    }

    /// L_{-1}^d as a partition.
    pub fn ones(d: u32) -> Partition {
        Partition(vec![1; d as usize])
    }

    /// "[3,1]"
    pub fn key(&self) -> String {
        let inner: Vec<String> = self.0.iter().map(u32::to_string).collect();
        format!("[{}]", inner.join(","))
    }

    pub fn parse_key(s: &str) -> Option<Partition> {
        let s = s.trim().strip_prefix('[')?.strip_suffix(']')?;
        if s.trim().is_empty() {
            return Some(Partition::empty());
        }
        let parts: Option<Vec<u32>> = s.split(',').map(|p| p.trim().parse().ok()).collect();
        Some(Partition::new(parts?))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for k in (1..=max.min(n)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// P(n) via Euler's pentagonal recurrence (independent of enumeration).
pub fn partition_count(n: usize) -> u64 {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc: i128 = 0;
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1] as i128;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                acc += sign * p[m - g2] as i128;
            }
            k += 1;
        }
        p[m] = acc as u64;
    }
    p[n]
}

/// P(n) for possibly negative n (zero there).
pub fn p_of(n: i64) -> u64 {
    if n < 0 {
        0
    } else {
        partition_count(n as usize)
    }
}

/// Young diagram rows f₁ ≥ f₂ ≥ … ≥ 0, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Signature(Vec<u32>);

impl Signature {
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("signature rows must be weakly decreasing: {rows:?}")));
        }
        let mut rows = rows;
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(Signature(rows))
    }

    /// m rows of length n.
    pub fn rectangle(n: u32, m: u32) -> Self {
        if n == 0 {
            return Signature(vec![]);
        }
        Signature(vec![n; m as usize])
    }

    pub fn rows(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// f_i for i ≥ 1 (zero beyond the depth).
    pub fn row(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Signature {
        let n = self.0.first().copied().unwrap_or(0);
        Signature((1..=n).map(|k| self.0.iter().filter(|&&r| r >= k).count() as u32).collect())
    }

    /// All signatures of size n (as partitions), in descending lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Signature> {
        partitions_of(n).into_iter().map(|p| Signature(p.0)).collect()
    }
}

pub fn transpose(f: &Signature) -> Signature {
    f.transpose()
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// Truncated series q^lead · Σ_{i=0}^{N} a_i q^i; coefficients beyond q^{lead+N} are unknown.
#[derive(Clone, Debug, PartialEq)]
pub struct QSeries {
    lead: Rational,
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// Series with the given coefficients; the truncation order is `coeffs.len() - 1`.
    pub fn new(lead: Rational, coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one known coefficient");
        QSeries { lead, coeffs }
    }

    pub fn zero(lead: Rational, order: usize) -> Self {
        Self::new(lead, vec![Rational::zero(); order + 1])
    }

    pub fn monomial(exponent: Rational, order: usize) -> Self {
        let mut s = Self::zero(exponent, order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn from_ints(lead: Rational, coeffs: &[i64]) -> Self {
        Self::new(lead, coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn lead(&self) -> &Rational {
        &self.lead
    }

    /// Truncation order N relative to the leading exponent.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Absolute exponent of the last known coefficient.
    pub fn top(&self) -> Rational {
        &self.lead + int(self.order() as i64)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of q^{lead+i}.
    pub fn coeff(&self, i: usize) -> Result<Rational> {
        self.coeffs.get(i).cloned().ok_or_else(|| Error::BeyondTruncation {
            exponent: (&self.lead + int(i as i64)).to_string(),
            order: self.top().to_string(),
        })
    }

    /// Coefficient of q^e for an absolute exponent.
    pub fn coeff_at(&self, e: &Rational) -> Result<Rational> {
        let d = e - &self.lead;
        if !d.is_integer() {
            return Err(Error::IncompatibleGrading(e.to_string(), self.lead.to_string()));
        }
        if d < Rational::zero() {
            return Ok(Rational::zero());
        }
        let i = usize::try_from(d.to_integer()).map_err(|_| Error::InvalidArgument("exponent".into()))?;
        self.coeff(i)
    }

    /// Re-expresses with a smaller leading exponent (padding zeros) or a shorter order.
    pub fn realign(&self, lead: &Rational, order_top: &Rational) -> Result<QSeries> {
        let shift = &self.lead - lead;
        if !shift.is_integer() || shift < Rational::zero() {
            return Err(Error::IncompatibleGrading(self.lead.to_string(), lead.to_string()));
        }
        if *order_top > self.top() {
            return Err(Error::BeyondTruncation { exponent: order_top.to_string(), order: self.top().to_string() });
        }
        let n = order_top - lead;
        let n = usize::try_from(n.to_integer()).map_err(|_| Error::InvalidArgument("order".into()))?;
        let coeffs = (0..=n)
            .map(|i| self.coeff_at(&(lead + int(i as i64))))
            .collect::<Result<Vec<_>>>()?;
        Ok(QSeries::new(lead.clone(), coeffs))
    }

    fn common(&self, other: &QSeries) -> Result<(Rational, Rational)> {
        let d = &self.lead - &other.lead;
        if !d.is_integer() {
            return Err(Error::IncompatibleGrading(self.lead.to_string(), other.lead.to_string()));
        }
        let lead = if self.lead < other.lead { self.lead.clone() } else { other.lead.clone() };
        let top = if self.top() < other.top() { self.top() } else { other.top() };
        Ok((lead, top))
    }

    pub fn add(&self, other: &QSeries) -> Result<QSeries> {
        let (lead, top) = self.common(other)?;
        if top < lead {
            return Ok(QSeries::zero(lead, 0));
        }
        let a = self.realign(&lead, &top)?;
        let b = other.realign(&lead, &top)?;
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Ok(QSeries::new(lead, coeffs))
    }

    pub fn sub(&self, other: &QSeries) -> Result<QSeries> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let n = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        QSeries::new(&self.lead + &other.lead, coeffs)
    }

    pub fn scale(&self, q: &Rational) -> QSeries {
        QSeries::new(self.lead.clone(), self.coeffs.iter().map(|c| c * q).collect())
    }

    /// Multiplies by q^h.
    pub fn shift(&self, h: &Rational) -> QSeries {
        QSeries::new(&self.lead + h, self.coeffs.clone())
    }

    pub fn truncate(&self, order: usize) -> QSeries {
        QSeries::new(self.lead.clone(), self.coeffs.iter().take(order + 1).cloned().collect())
    }

    /// Coefficientwise equality on the common known range.
    pub fn agrees_with(&self, other: &QSeries) -> Result<bool> {
        let (lead, top) = self.common(other)?;
        if top < lead {
            return Ok(true);
        }
        Ok(self.realign(&lead, &top)? == other.realign(&lead, &top)?)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "leading_exponent": self.lead.to_string(),
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "order": self.order(),
        })
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("{}*q^({})", c, &self.lead + int(i as i64)));
            }
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} + O(q^({}))", parts.join(" + "), self.top() + Rational::one())
    }
}

/// Euler's φ(q) = ∏(1−qⁿ)^{-1} to order N, by multiplying geometric factors.
pub fn phi_series(n: usize) -> QSeries {
    let mut c = vec![Rational::zero(); n + 1];
    c[0] = Rational::one();
    for k in 1..=n {
        for i in k..=n {
            let prev = c[i - k].clone();
            c[i] += prev;
        }
    }
    QSeries::new(Rational::zero(), c)
}

/// ∏(1−qⁿ) to order N.
pub fn euler_product(n: usize) -> QSeries {
    let mut c = vec![Rational::zero(); n + 1];
    c[0] = Rational::one();
    for k in 1..=n {
        for i in (k..=n).rev() {
            let prev = c[i - k].clone();
            c[i] -= prev;
        }
    }
    QSeries::new(Rational::zero(), c)
}

/// Σ_{n≥0} s_n q^n from integer coefficients, for comparison with rank data.
pub fn series_from_dims(lead: Rational, dims: &[usize]) -> QSeries {
    QSeries::new(lead, dims.iter().map(|&d| Rational::from_int(d as i64)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn partitions_of_four_in_canonical_order() {
        let keys: Vec<String> = partitions_of(4).iter().map(Partition::key).collect();
        assert_eq!(keys, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(2).iter().map(Partition::key).collect::<Vec<_>>(), ["[2]", "[1,1]"]);
    }

    #[test]
    fn transpose_examples() {
        let f = Signature::new(vec![3, 3]).unwrap();
        assert_eq!(f.transpose(), Signature::new(vec![2, 2, 2]).unwrap());
        assert_eq!(Signature::default().transpose(), Signature::default());
        let g = Signature::new(vec![2, 1]).unwrap();
        assert_eq!(g.transpose(), g);
        assert!(Signature::new(vec![1, 2]).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_series(5), QSeries::from_ints(int(0), &[1, 1, 2, 3, 5, 7]));
        assert_eq!(phi_series(0), QSeries::from_ints(int(0), &[1]));
        let one_minus_q = QSeries::from_ints(int(0), &[1, -1, 0, 0, 0]);
        assert_eq!(one_minus_q.mul(&phi_series(4)), QSeries::from_ints(int(0), &[1, 0, 1, 1, 2]));
    }

    #[test]
    fn series_plumbing() {
        let s = phi_series(3).shift(&rat(1, 4));
        assert_eq!(s.lead(), &rat(1, 4));
        let a = phi_series(3);
        let b = phi_series(5);
        assert_eq!(a.add(&b).unwrap().order(), 3);
        assert!(a.coeff(4).is_err());
        assert!(a.coeff_at(&rat(1, 2)).is_err());
        let shifted = phi_series(4).shift(&int(2));
        let sum = phi_series(6).add(&shifted).unwrap();
        assert_eq!(sum.coeffs()[2], int(3));
    }

    #[test]
    fn key_round_trip() {
        let p = Partition::new(vec![1, 3, 1]);
        assert_eq!(p.key(), "[3,1,1]");
        assert_eq!(Partition::parse_key("[3,1,1]").unwrap(), p);
        assert_eq!(Partition::parse_key("[]").unwrap(), Partition::empty());
    }
}
