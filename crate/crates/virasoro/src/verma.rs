//! Verma modules M(c,h) over the Virasoro algebra.
//!
//! Basis monomials are L_{−λ₁}L_{−λ₂}···ξ with λ₁ ≥ λ₂ ≥ … (largest mode
//! leftmost), indexed by [`Partition`]. Gram matrices use the listing order of
//! [`partitions_of`].

use crate::combinatorics::{p_of, partitions_of, Partition};
use crate::linalg::Matrix;
use crate::lincomb::LinComb;
use crate::scalars::{int, rat, BiPoly, ExactDiv, Field, RatFunc, Rational, Ring, UniPoly, Var};

use serde_json::{json, Map, Value};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Central charge and lowest weight, drawn from one coefficient ring.
#[derive(Clone, Debug, PartialEq)]
pub struct VermaParams<S> {
    pub c: S,
    pub h: S,
}

impl<S: Ring> VermaParams<S> {
    pub fn new(c: S, h: S) -> Self {
        VermaParams { c, h }
    }
}

impl VermaParams<Rational> {
    pub fn rational(c: Rational, h: Rational) -> Self {
        VermaParams { c, h }
    }
}

impl VermaParams<BiPoly> {
    pub fn symbolic() -> Self {
        VermaParams { c: BiPoly::c(), h: BiPoly::h() }
    }
}

/// Homogeneous element of M(c,h).
#[derive(Clone, Debug, PartialEq)]
pub struct PbwVector<S: Ring> {
    level: u32,
    terms: LinComb<Partition, S>,
}

impl<S: Ring> PbwVector<S> {
    pub fn zero(level: u32) -> Self {
        PbwVector { level, terms: LinComb::new() }
    }

    /// ξ itself.
    pub fn vacuum() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn basis(p: Partition) -> Self {
        PbwVector { level: p.weight(), terms: LinComb::basis(p) }
    }

    /// Builds from terms, checking homogeneity.
    pub fn from_terms(level: u32, terms: LinComb<Partition, S>) -> Self {
        assert!(terms.keys().all(|p| p.weight() == level), "inhomogeneous PBW vector");
        PbwVector { level, terms }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn terms(&self) -> &LinComb<Partition, S> {
        &self.terms
    }

    pub fn coeff(&self, p: &Partition) -> S {
        self.terms.coeff(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, s: &S) -> Self {
        PbwVector { level: self.level, terms: self.terms.scaled(s) }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.level, other.level, "adding vectors of different levels");
        PbwVector { level: self.level, terms: self.terms.add(&other.terms) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.level, other.level, "subtracting vectors of different levels");
        PbwVector { level: self.level, terms: self.terms.sub(&other.terms) }
    }

    pub fn map_coeffs<T: Ring>(&self, f: impl Fn(&S) -> T) -> PbwVector<T> {
        PbwVector { level: self.level, terms: self.terms.map_coeffs(f) }
    }

    /// Coordinates in the canonical basis of the level.
    pub fn to_coords(&self) -> Vec<S> {
        partitions_of(self.level).iter().map(|p| self.coeff(p)).collect()
    }

    pub fn from_coords(level: u32, coords: &[S]) -> Self {
        let basis = partitions_of(level);
        assert_eq!(basis.len(), coords.len());
        let terms = basis.into_iter().zip(coords.iter().cloned()).collect();
        PbwVector { level, terms }
    }

    pub fn to_json(&self) -> Value {
        json!({ "level": self.level, "terms": self.terms_json() })
    }

    /// Just the term map {"[2]": "-t", ...}.
    pub fn terms_json(&self) -> Value {
        let mut m = Map::new();
        for (p, s) in self.terms.iter() {
            m.insert(p.key(), Value::String(s.to_string()));
        }
        Value::Object(m)
    }
}

impl<S: Field> PbwVector<S> {
    /// Rescales so the coefficient of L_{−1}^d is 1; `None` if it vanishes.
    pub fn normalized(&self) -> Option<Self> {
        let lead = self.coeff(&Partition::ones(self.level));
        let inv = lead.inv()?;
        Some(self.scaled(&inv))
    }
}

type RaiseCache = Mutex<HashMap<(u32, Partition), Arc<LinComb<Partition, Rational>>>>;

fn raise_cache() -> &'static RaiseCache {
    static CACHE: OnceLock<RaiseCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// L_{−m} · (L_{−mono} ξ) re-sorted into PBW order. Independent of (c,h).
pub fn raise_monomial(m: u32, mono: &Partition) -> Arc<LinComb<Partition, Rational>> {
    assert!(m > 0);
    let key = (m, mono.clone());
    if let Some(v) = raise_cache().lock().unwrap().get(&key) {
        return v.clone();
    }
    let out = match mono.split_first() {
        None => LinComb::basis(mono.prepend(m)),
        Some((a1, _)) if m >= a1 => LinComb::basis(mono.prepend(m)),
        Some((a1, rest)) => {
            // L_{-m} L_{-a1} R = L_{-a1} (L_{-m} R) + (a1 - m) L_{-(m+a1)} R
            let inner = raise_monomial(m, &rest);
            let mut acc = LinComb::new();
            for (p, s) in inner.iter() {
                acc.add_scaled(&raise_monomial(a1, p), s);
            }
            acc.add_scaled(&raise_monomial(m + a1, &rest), &int(i64::from(a1) - i64::from(m)));
            acc
        }
    };
    let out = Arc::new(out);
    raise_cache().lock().unwrap().insert(key, out.clone());
    out
}

/// L_{−m} applied to any combination with coefficients in S.
pub fn raise<S: Ring>(m: u32, v: &LinComb<Partition, S>) -> LinComb<Partition, S> {
    let mut out = LinComb::new();
    for (p, s) in v.iter() {
        for (q, r) in raise_monomial(m, p).iter() {
            out.add_term(q.clone(), s.scale(r));
        }
    }
    out
}

/// Applies the PBW element `op` (read as an operator in U(Vir₋)) to `v`.
pub fn apply_operator<S: Ring>(op: &PbwVector<S>, v: &PbwVector<S>) -> PbwVector<S> {
    let mut out = LinComb::new();
    for (p, s) in op.terms().iter() {
        let mut w = v.terms().clone();
        for &k in p.parts().iter().rev() {
            w = raise(k, &w);
        }
        out.add_scaled(&w, s);
    }
    PbwVector { level: op.level() + v.level(), terms: out }
}

/// L_n (n > 0) applied to a basis monomial, keyed by (n, monomial).
type LowerMemo<S> = Mutex<HashMap<(u32, Partition), Arc<LinComb<Partition, S>>>>;

/// A Verma module with memoized action and Gram matrices.
pub struct VermaModule<S: Ring> {
    params: VermaParams<S>,
    lower_memo: LowerMemo<S>,
    grams: Mutex<HashMap<u32, Arc<GramMatrix<S>>>>,
}

/// Shapovalov form on one level.
#[derive(Clone, Debug)]
pub struct GramMatrix<S> {
    pub level: u32,
    pub basis: Vec<Partition>,
    pub entries: Matrix<S>,
}

impl<S: Ring> VermaModule<S> {
    pub fn new(params: VermaParams<S>) -> Self {
        VermaModule { params, lower_memo: Mutex::new(HashMap::new()), grams: Mutex::new(HashMap::new()) }
    }

    pub fn params(&self) -> &VermaParams<S> {
        &self.params
    }

    /// L_k (k > 0) on a basis monomial, pushing it right until it hits ξ.
    pub fn lower_monomial(&self, k: u32, mono: &Partition) -> Arc<LinComb<Partition, S>> {
        assert!(k > 0);
        let key = (k, mono.clone());
        if let Some(v) = self.lower_memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let out = match mono.split_first() {
            None => LinComb::new(),
            Some((a1, rest)) => {
                // L_k L_{-a1} R = L_{-a1} L_k R + (k + a1) L_{k-a1} R + δ (k³-k)/12 c R
                let mut acc = raise(a1, &self.lower_monomial(k, &rest));
                let rest_v: LinComb<Partition, S> = LinComb::basis(rest.clone());
                let coef = int(i64::from(k) + i64::from(a1));
                let mid = match k.cmp(&a1) {
                    std::cmp::Ordering::Greater => (*self.lower_monomial(k - a1, &rest)).clone(),
                    std::cmp::Ordering::Equal => {
                        let w = self.params.h.add_ref(&S::from_int(i64::from(rest.weight())));
                        rest_v.scaled(&w)
                    }
                    std::cmp::Ordering::Less => raise(a1 - k, &rest_v),
                };
                acc.add_scaled(&mid, &S::from_rational(&coef));
                if k == a1 {
                    let k3 = i64::from(k).pow(3) - i64::from(k);
                    let central = self.params.c.scale(&rat(k3, 12));
                    acc.add_term(rest, central);
                }
                acc
            }
        };
        let out = Arc::new(out);
        self.lower_memo.lock().unwrap().insert(key, out.clone());
        out
    }

    /// L_k acting on a homogeneous vector; the output has level `level − k`.
    pub fn apply_l(&self, k: i64, v: &PbwVector<S>) -> PbwVector<S> {
        let level = i64::from(v.level()) - k;
        if level < 0 {
            return PbwVector::zero(0);
        }
        let level = level as u32;
        let terms = match k.cmp(&0) {
            std::cmp::Ordering::Equal => {
                let w = self.params.h.add_ref(&S::from_int(i64::from(v.level())));
                v.terms().scaled(&w)
            }
            std::cmp::Ordering::Less => raise((-k) as u32, v.terms()),
            std::cmp::Ordering::Greater => {
                let mut out = LinComb::new();
                for (p, s) in v.terms().iter() {
                    out.add_scaled(&self.lower_monomial(k as u32, p), s);
                }
                out
            }
        };
        PbwVector { level, terms }
    }

    /// Matrix of L_k from level n to level n − k in the canonical bases.
    pub fn l_matrix(&self, k: i64, n: u32) -> Matrix<S> {
        let src = partitions_of(n);
        let tgt_level = i64::from(n) - k;
        let tgt = if tgt_level < 0 { Vec::new() } else { partitions_of(tgt_level as u32) };
        let index: HashMap<&Partition, usize> = tgt.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut m = Matrix::zeros(tgt.len(), src.len());
        for (j, p) in src.iter().enumerate() {
            let img = self.apply_l(k, &PbwVector::basis(p.clone()));
            for (q, s) in img.terms().iter() {
                m[(index[q], j)] = s.clone();
            }
        }
        m
    }

    /// Gram matrix ⟨L_{−λ}ξ, L_{−μ}ξ⟩, built level by level:
    /// ⟨L_{−a}L_{−ρ}ξ, w⟩ = ⟨L_{−ρ}ξ, L_a w⟩.
    pub fn gram(&self, level: u32) -> Arc<GramMatrix<S>> {
        if let Some(g) = self.grams.lock().unwrap().get(&level) {
            return g.clone();
        }
        let basis = partitions_of(level);
        let n = basis.len();
        let mut entries = Matrix::zeros(n, n);
        if level == 0 {
            entries[(0, 0)] = S::one();
        } else {
            let lower_grams: HashMap<u32, Arc<GramMatrix<S>>> = (0..level)
                .map(|l| (l, self.gram(l)))
                .collect();
            let index_maps: HashMap<u32, HashMap<Partition, usize>> = lower_grams
                .iter()
                .map(|(&l, g)| (l, g.basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect()))
                .collect();
            for i in 0..n {
                let (a, rest) = basis[i].split_first().expect("positive level");
                let lg = &lower_grams[&(level - a)];
                let idx = &index_maps[&(level - a)];
                let ri = idx[&rest];
                for j in i..n {
                    let img = self.lower_monomial(a, &basis[j]);
                    let mut acc = S::zero();
                    for (q, s) in img.iter() {
                        let g = &lg.entries[(ri, idx[q])];
                        if !g.is_zero() {
                            acc = acc.add_ref(&s.mul_ref(g));
                        }
                    }
                    entries[(i, j)] = acc.clone();
                    entries[(j, i)] = acc;
                }
            }
        }
        let g = Arc::new(GramMatrix { level, basis, entries });
        self.grams.lock().unwrap().insert(level, g.clone());
        g
    }

    /// Shapovalov pairing of two vectors of equal level.
    pub fn form(&self, v: &PbwVector<S>, w: &PbwVector<S>) -> S {
        if v.level() != w.level() {
            return S::zero();
        }
        let g = self.gram(v.level());
        let a = v.to_coords();
        let b = w.to_coords();
        let gb = g.entries.mul_vec(&b);
        a.iter().zip(&gb).fold(S::zero(), |acc, (x, y)| acc.add_ref(&x.mul_ref(y)))
    }
}

/// L_k v in M(c,h).
pub fn apply_l<S: Ring>(k: i64, v: &PbwVector<S>, params: &VermaParams<S>) -> PbwVector<S> {
    VermaModule::new(params.clone()).apply_l(k, v)
}

pub fn gram_matrix<S: Ring>(level: u32, params: &VermaParams<S>) -> GramMatrix<S> {
    (*VermaModule::new(params.clone()).gram(level)).clone()
}

/// Determinant of the level-n Gram matrix by Bareiss elimination.
pub fn kac_det_direct<S: ExactDiv>(level: u32, params: &VermaParams<S>) -> S {
    gram_matrix(level, params).entries.det_bareiss()
}

/// φ_{r,s}(c,h). For r = s this is linear in h; otherwise the quadratic whose
/// roots are h_{r,s} and h_{s,r}.
pub fn phi_rs(r: u32, s: u32) -> BiPoly {
    let one = BiPoly::one();
    let h = BiPoly::h();
    let cm1 = BiPoly::c().sub_ref(&one);
    let (r, s) = (i64::from(r), i64::from(s));
    if r == s {
        return h.add_ref(&cm1.scale(&rat(r * r - 1, 24)));
    }
    let shift = h.sub_ref(&BiPoly::from_rational(&rat((r - s) * (r - s), 4)));
    shift
        .mul_ref(&shift)
        .add_ref(&h.mul_ref(&cm1).scale(&rat(r * r + s * s - 2, 24)))
        .add_ref(&cm1.mul_ref(&cm1).scale(&rat((r * r - 1) * (s * s - 1), 576)))
        .add_ref(&cm1.scale(&rat((r - s) * (r - s) * (r * s + 1), 48)))
}

/// ∏_r φ_{r,r}^{P(n−r²)} · ∏_{r>s} φ_{r,s}^{P(n−rs)}.
pub fn kac_det_product(level: u32) -> BiPoly {
    let n = i64::from(level);
    let mut acc = BiPoly::one();
    for r in 1..=level {
        for s in 1..=r {
            let e = p_of(n - i64::from(r * s));
            if e > 0 {
                acc = acc.mul_ref(&phi_rs(r, s).pow(e as u32));
            }
        }
    }
    acc
}

/// Exponent bookkeeping of the c = 1 display: Σ of P(N − pq) over ordered pairs
/// with h = (p−q)²/4, as a map from the root (p−q)²/4 to its multiplicity.
pub fn kac_c1_multiplicities(level: u32) -> Vec<(Rational, u64)> {
    let mut m: std::collections::BTreeMap<Rational, u64> = std::collections::BTreeMap::new();
    let n = i64::from(level);
    for p in 1..=n {
        for q in 1..=n {
            if p * q <= n {
                *m.entry(rat((p - q) * (p - q), 4)).or_insert(0) += p_of(n - p * q);
            }
        }
    }
    m.into_iter().collect()
}

/// h_{p,q}(m) = ((p(m+1) − qm)² − 1) / (4m(m+1)).
pub fn h_pq(p: i64, q: i64, m: i64) -> Rational {
    let a = p * (m + 1) - q * m;
    rat(a * a - 1, 4 * m * (m + 1))
}

/// c_m = 1 − 6/(m(m+1)).
pub fn c_discrete(m: i64) -> Rational {
    int(1) - rat(6, m * (m + 1))
}

/// c(t) = 13 − 6t − 6/t.
pub fn c_curve() -> RatFunc {
    let t = UniPoly::var(Var::T);
    let num = UniPoly::from_coeffs(Var::T, vec![int(-6), int(13), int(-6)]);
    RatFunc::new(num, t)
}

/// h_{p,q}(t) = ((p²−1)t − 2(pq−1) + (q²−1)/t)/4 on the curve c(t); checked
/// against φ_{p,q}(c(t), h(t)) = 0.
pub fn h_pq_curve(p: i64, q: i64) -> RatFunc {
    let num = UniPoly::from_coeffs(
        Var::T,
        vec![rat(q * q - 1, 4), rat(-2 * (p * q - 1), 4), rat(p * p - 1, 4)],
    );
    let h = RatFunc::new(num, UniPoly::var(Var::T));
    let phi = phi_rs(p.max(q) as u32, p.min(q) as u32);
    assert!(phi.eval(&c_curve(), &h).is_zero(), "curve weight h_{{{p},{q}}}(t) off the Kac curve");
    h
}

/// The point t on c(t) with c(t) = c_m and h_{p,q}(t) = h_{p,q}(m).
pub fn t_discrete(m: i64) -> Rational {
    rat(m + 1, m)
}

/// dim L(c,h)(n) for n = 0..=N as Gram ranks over ℚ.
pub fn irreducible_dims(params: &VermaParams<Rational>, n_max: u32) -> Vec<usize> {
    let module = VermaModule::new(params.clone());
    (0..=n_max).map(|n| module.gram(n).entries.rank()).collect()
}

impl<S: Ring> GramMatrix<S> {
    pub fn to_json(&self) -> Value {
        json!({
            "level": self.level,
            "basis": self.basis.iter().map(Partition::key).collect::<Vec<_>>(),
            "entries": (0..self.entries.rows())
                .map(|i| self.entries.row(i).iter().map(|s| s.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym() -> VermaModule<BiPoly> {
        VermaModule::new(VermaParams::symbolic())
    }

    fn pbw(parts: &[u32]) -> PbwVector<BiPoly> {
        PbwVector::basis(Partition::new(parts.to_vec()))
    }

    #[test]
    fn apply_examples() {
        let m = sym();
        let v = m.apply_l(1, &pbw(&[1]));
        assert_eq!(v.coeff(&Partition::empty()), BiPoly::h().scale(&int(2)));
        let w = m.apply_l(1, &pbw(&[2]));
        assert_eq!(w, pbw(&[1]).scaled(&BiPoly::from_int(3)));
        let u = m.apply_l(0, &pbw(&[2, 1]));
        assert_eq!(u, pbw(&[2, 1]).scaled(&BiPoly::h().add_ref(&BiPoly::from_int(3))));
    }

    #[test]
    fn raise_sorts() {
        // L_{-1} L_{-2} ξ = L_{-2} L_{-1} ξ + L_{-3} ξ
        let v = raise_monomial(1, &Partition::new(vec![2]));
        assert_eq!(v.coeff(&Partition::new(vec![2, 1])), int(1));
        assert_eq!(v.coeff(&Partition::new(vec![3])), int(1));
        assert_eq!(v.len(), 2);
    }

    #[test]
    fn level_two_gram() {
        let g = sym().gram(2);
        let c = BiPoly::c();
        let h = BiPoly::h();
        // basis order [[2], [1,1]]
        assert_eq!(g.entries[(0, 0)], h.scale(&int(4)).add_ref(&c.scale(&rat(1, 2))));
        assert_eq!(g.entries[(0, 1)], h.scale(&int(6)));
        assert_eq!(g.entries[(1, 1)], h.scale(&int(4)).mul_ref(&h.scale(&int(2)).add_ref(&BiPoly::one())));
    }

    #[test]
    fn h_pq_values() {
        assert_eq!(h_pq(1, 1, 3), int(0));
        assert_eq!(h_pq(2, 1, 3), rat(1, 2));
        assert_eq!(h_pq(2, 2, 3), rat(1, 16));
        assert_eq!(c_discrete(3), rat(1, 2));
    }
}
