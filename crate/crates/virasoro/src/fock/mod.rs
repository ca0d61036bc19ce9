//! Semi-infinite wedge space: fermions e_n, e_n*, their bilinears a_k and
//! L′_k, the Sugawara L_k built from the a_k, and the shift U.
//!
//! A basis wedge is labelled by its charge q and a partition λ; its occupied
//! indices are o_i = −q + i − λ_{i+1} (i ≥ 0), so Ω_q = e_{−q} ∧ e_{−q+1} ∧ ⋯
//! has charge q and energy q²/2.

pub mod pair;
pub mod vertex;

use crate::combinatorics::{partitions_of, Partition};
use crate::linalg::Matrix;
use crate::lincomb::LinComb;
use crate::scalars::{int, rat, Rational, Ring};
use crate::{Error, Result};

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Wedge {
    pub charge: i64,
    pub lambda: Partition,
}

impl Wedge {
    pub fn vacuum(charge: i64) -> Self {
        Wedge { charge, lambda: Partition::empty() }
    }

    pub fn new(charge: i64, lambda: Partition) -> Self {
        Wedge { charge, lambda }
    }

    /// q²/2 + |λ|
    pub fn energy(&self) -> Rational {
        rat(self.charge * self.charge, 2) + int(i64::from(self.lambda.weight()))
    }

    pub fn level(&self) -> u32 {
        self.lambda.weight()
    }

    pub fn is_odd(&self) -> bool {
        self.charge.rem_euclid(2) == 1
    }

    /// Every index ≥ base is occupied.
    pub fn base(&self) -> i64 {
        -self.charge + self.lambda.len() as i64
    }

    /// Occupied indices below the base, increasing.
    pub fn finite_part(&self) -> Vec<i64> {
        let parts = self.lambda.parts();
        (0..parts.len()).map(|i| -self.charge + i as i64 - i64::from(parts[i])).collect()
    }

    fn from_occupied(finite: &[i64], base: i64) -> Self {
        let charge = finite.len() as i64 - base;
        let parts = finite.iter().enumerate().map(|(i, &o)| (-charge + i as i64 - o) as u32).collect();
        Wedge { charge, lambda: Partition::new(parts) }
    }

    pub fn is_occupied(&self, n: i64) -> bool {
        n >= self.base() || self.finite_part().contains(&n)
    }

    /// Number of occupied indices below n.
    fn count_below(&self, n: i64) -> usize {
        let fin = self.finite_part();
        let base = self.base();
        if n <= base {
            fin.iter().filter(|&&o| o < n).count()
        } else {
            fin.len() + (n - base) as usize
        }
    }

    /// Occupied set as (finite list, base) with base ≥ n.
    fn expanded(&self, n: i64) -> (Vec<i64>, i64) {
        let mut fin = self.finite_part();
        let mut base = self.base();
        while base <= n {
            fin.push(base);
            base += 1;
        }
        (fin, base)
    }

    /// e_n ∧ self with its sign, or None.
    pub fn insert(&self, n: i64) -> Option<(i64, Wedge)> {
        if self.is_occupied(n) {
            return None;
        }
        let sign = if self.count_below(n).is_multiple_of(2) { 1 } else { -1 };
        let (mut fin, base) = self.expanded(n);
        let pos = fin.partition_point(|&o| o < n);
        fin.insert(pos, n);
        Some((sign, Wedge::from_occupied(&fin, base)))
    }

    /// Contraction by e_n* with its sign, or None.
    pub fn remove(&self, n: i64) -> Option<(i64, Wedge)> {
        if !self.is_occupied(n) {
            return None;
        }
        let sign = if self.count_below(n).is_multiple_of(2) { 1 } else { -1 };
        let (mut fin, base) = self.expanded(n);
        fin.retain(|&o| o != n);
        Some((sign, Wedge::from_occupied(&fin, base)))
    }

    /// U^p: every index shifted by p.
    pub fn shifted(&self, p: i64) -> Wedge {
        Wedge { charge: self.charge - p, lambda: self.lambda.clone() }
    }

    /// Lowest occupied index.
    pub fn lowest(&self) -> i64 {
        self.finite_part().first().copied().unwrap_or_else(|| self.base())
    }
}

impl fmt::Display for Wedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{};{}>", self.charge, self.lambda)
    }
}

pub type FockVector = LinComb<Wedge, Rational>;

pub fn basis_vector(w: Wedge) -> FockVector {
    LinComb::basis(w)
}

pub fn vacuum(charge: i64) -> FockVector {
    basis_vector(Wedge::vacuum(charge))
}

/// Extends a map on basis wedges linearly.
pub fn lift(v: &FockVector, mut f: impl FnMut(&Wedge) -> FockVector) -> FockVector {
    v.map_linear(|w| f(w))
}

pub fn e(n: i64, v: &FockVector) -> FockVector {
    lift(v, |w| match w.insert(n) {
        Some((s, t)) => LinComb::term(t, int(s)),
        None => LinComb::new(),
    })
}

pub fn e_star(n: i64, v: &FockVector) -> FockVector {
    lift(v, |w| match w.remove(n) {
        Some((s, t)) => LinComb::term(t, int(s)),
        None => LinComb::new(),
    })
}

/// Σ_m w(m) e_{m+k} e_m* for k ≠ 0 on one wedge.
fn bilinear_on(k: i64, w: &Wedge, weight: impl Fn(i64) -> Rational) -> FockVector {
    let mut out = LinComb::new();
    let top = w.base().max(w.base() - k);
    for m in w.lowest()..top {
        if let Some((s1, t)) = w.remove(m) {
            if let Some((s2, u)) = t.insert(m + k) {
                out.add_term(u, weight(m) * int(s1 * s2));
            }
        }
    }
    out
}

/// Σ_{n>0} f(−n)[−n occupied] + Σ_{n≥0} g(n)[n empty], the normal-ordered diagonal part.
fn diagonal_on(w: &Wedge, occ: impl Fn(i64) -> Rational, hole: impl Fn(i64) -> Rational) -> Rational {
    let mut acc = int(0);
    for n in w.lowest()..0 {
        if w.is_occupied(n) {
            acc += occ(-n);
        }
    }
    for n in 0..w.base() {
        if !w.is_occupied(n) {
            acc += hole(n);
        }
    }
    acc
}

/// a_k = Σ_{n−m=k} e_n e_m*; a₀ = Σ_{n>0} e_{−n}e_{−n}* − Σ_{n≥0} e_n* e_n.
pub fn a(k: i64, v: &FockVector) -> FockVector {
    if k == 0 {
        return lift(v, |w| LinComb::term(w.clone(), diagonal_on(w, |_| int(1), |_| int(-1))));
    }
    lift(v, |w| bilinear_on(k, w, |_| int(1)))
}

/// L′_k = Σ_{n−m=k} −(m + 1/2 + k/2) e_n e_m*, L′₀ normal ordered.
pub fn l_prime(k: i64, v: &FockVector) -> FockVector {
    if k == 0 {
        return lift(v, |w| {
            let e = diagonal_on(w, |n| int(n) - rat(1, 2), |n| int(n) + rat(1, 2));
            LinComb::term(w.clone(), e)
        });
    }
    lift(v, |w| bilinear_on(k, w, |m| -(int(m) + rat(1, 2) + rat(k, 2))))
}

fn max_level(v: &FockVector) -> i64 {
    v.keys().map(|w| i64::from(w.level())).max().unwrap_or(0)
}

/// Sugawara L_k = ½ Σ_{r+s=k} :a_r a_s: from the bilinear a_n.
pub fn l_sugawara(k: i64, v: &FockVector) -> FockVector {
    let hi = max_level(v).max(0);
    let lo = k.div_euclid(2) + k.rem_euclid(2);
    let mut out = LinComb::new();
    for t in lo..=hi.max(lo) {
        let r = k - t;
        if r > t {
            continue;
        }
        let term = a(r, &a(t, v));
        let wgt = if r == t { rat(1, 2) } else { int(1) };
        out.add_scaled(&term, &wgt);
    }
    out
}

/// U^p (U* = U^{−1}).
pub fn shift_u(p: i64, v: &FockVector) -> FockVector {
    lift(v, |w| LinComb::basis(w.shifted(p)))
}

pub fn energy_of(v: &FockVector) -> Option<Rational> {
    let mut es = v.keys().map(Wedge::energy);
    let first = es.next()?;
    es.all(|e| e == first).then_some(first)
}

/// Basis wedges of energy ≤ E_max.
#[derive(Clone, Debug)]
pub struct Window {
    pub e_max: Rational,
    pub basis: Vec<Wedge>,
}

impl Window {
    pub fn new(e_max: Rational) -> Self {
        let mut basis = Vec::new();
        let mut q = 0i64;
        loop {
            let vac = rat(q * q, 2);
            if vac > e_max {
                break;
            }
            let room = (&e_max - &vac).floor().to_integer();
            let room: u32 = room.try_into().unwrap_or(0);
            for charge in if q == 0 { vec![0] } else { vec![-q, q] } {
                for n in 0..=room {
                    for p in partitions_of(n) {
                        basis.push(Wedge::new(charge, p));
                    }
                }
            }
            q += 1;
        }
        basis.sort();
        Window { e_max, basis }
    }

    pub fn of_energy(e_max: i64) -> Self {
        Self::new(int(e_max))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis wedges with room for energy raising by `headroom`.
    pub fn safe(&self, headroom: &Rational) -> impl Iterator<Item = &Wedge> {
        let cap = &self.e_max - headroom;
        self.basis.iter().filter(move |w| w.energy() <= cap)
    }

    /// Fails with a truncation error if v leaves the window.
    pub fn check(&self, v: &FockVector) -> Result<()> {
        for w in v.keys() {
            if w.energy() > self.e_max {
                return Err(Error::Truncation { energy: w.energy().to_string(), e_max: self.e_max.to_string() });
            }
        }
        Ok(())
    }

    pub fn apply_checked(&self, op: impl Fn(&FockVector) -> FockVector, v: &FockVector) -> Result<FockVector> {
        let out = op(v);
        self.check(&out)?;
        Ok(out)
    }
}

/// Energy and charge shift an operator declares.
#[derive(Clone, Debug, PartialEq)]
pub struct Grading {
    pub energy: Rational,
    pub charge: i64,
}

/// Matrix elements ⟨t|X|s⟩ between window states.
#[derive(Clone, Debug)]
pub struct ModeMatrix {
    pub label: String,
    pub grading: Grading,
    pub basis: Vec<Wedge>,
    pub matrix: Matrix<Rational>,
}

impl ModeMatrix {
    pub fn build(label: impl Into<String>, grading: Grading, window: &Window, op: impl Fn(&FockVector) -> FockVector) -> Self {
        let n = window.dim();
        let index: std::collections::HashMap<&Wedge, usize> = window.basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut matrix = Matrix::zeros(n, n);
        for (j, w) in window.basis.iter().enumerate() {
            let img = op(&basis_vector(w.clone()));
            for (t, c) in img.iter() {
                if let Some(&i) = index.get(t) {
                    matrix[(i, j)] = c.clone();
                }
            }
        }
        ModeMatrix { label: label.into(), grading, basis: window.basis.clone(), matrix }
    }

    /// Whether every nonzero entry shifts energy and charge as declared.
    pub fn respects_grading(&self) -> bool {
        let n = self.basis.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                self.matrix[(i, j)].is_zero()
                    || (self.basis[i].energy() - self.basis[j].energy() == self.grading.energy
                        && self.basis[i].charge - self.basis[j].charge == self.grading.charge)
            })
        })
    }

    pub fn nonzero_entries(&self) -> usize {
        let n = self.basis.len();
        (0..n).map(|i| (0..n).filter(|&j| !self.matrix[(i, j)].is_zero()).count()).sum()
    }
}

/// Result of an identity check over a window.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), ..Default::default() }
    }

    pub fn compare(&mut self, what: impl FnOnce() -> String, lhs: &FockVector, rhs: &FockVector) {
        self.checked += 1;
        if lhs != rhs {
            self.mismatches.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.checked > 0
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.mismatches.extend(other.mismatches);
    }
}

fn commutator(x: impl Fn(&FockVector) -> FockVector, y: impl Fn(&FockVector) -> FockVector, v: &FockVector) -> FockVector {
    x(&y(v)).sub(&y(&x(v)))
}

/// e_m e_n* + e_n* e_m = δ_{mn}, e_m e_n + e_n e_m = 0.
pub fn check_car(window: &Window, range: i64) -> CheckReport {
    let mut rep = CheckReport::new("car");
    for w in window.basis.iter() {
        let v = basis_vector(w.clone());
        for m in -range..=range {
            for n in -range..=range {
                let anti = e(m, &e_star(n, &v)).add(&e_star(n, &e(m, &v)));
                let expect = if m == n { v.clone() } else { FockVector::new() };
                rep.compare(|| format!("{{e_{m}, e*_{n}}} on {w}"), &anti, &expect);
                let ee = e(m, &e(n, &v)).add(&e(n, &e(m, &v)));
                rep.compare(|| format!("{{e_{m}, e_{n}}} on {w}"), &ee, &FockVector::new());
            }
        }
    }
    rep
}

/// [a_m, a_n] = m δ_{m+n,0}.
pub fn check_boson(window: &Window, range: i64) -> CheckReport {
    let mut rep = CheckReport::new("boson");
    for w in window.basis.iter() {
        let v = basis_vector(w.clone());
        for m in -range..=range {
            for n in -range..=range {
                let lhs = commutator(|x| a(m, x), |x| a(n, x), &v);
                let expect = if m + n == 0 { v.scaled(&int(m)) } else { FockVector::new() };
                rep.compare(|| format!("[a_{m}, a_{n}] on {w}"), &lhs, &expect);
            }
        }
    }
    rep
}

/// Virasoro brackets with c = 1 for L′, L′₀ = energy, a₀ = charge, and L′ = L.
pub fn check_virasoro(window: &Window, range: i64) -> CheckReport {
    let mut rep = CheckReport::new("virasoro");
    for w in window.basis.iter() {
        let v = basis_vector(w.clone());
        rep.compare(|| format!("L'_0 on {w}"), &l_prime(0, &v), &v.scaled(&w.energy()));
        rep.compare(|| format!("a_0 on {w}"), &a(0, &v), &v.scaled(&int(w.charge)));
        for m in -range..=range {
            rep.compare(|| format!("L'_{m} = L_{m} on {w}"), &l_prime(m, &v), &l_sugawara(m, &v));
            for n in -range..=range {
                let lhs = commutator(|x| l_prime(m, x), |x| l_prime(n, x), &v);
                let mut rhs = l_prime(m + n, &v).scaled(&int(m - n));
                if m + n == 0 {
                    rhs.add_scaled(&v, &rat(m * m * m - m, 12));
                }
                rep.compare(|| format!("[L'_{m}, L'_{n}] on {w}"), &lhs, &rhs);
            }
        }
    }
    rep
}

/// U a_n U* = a_n + δ_{n0}, U L_k U* = L_k + a_k + ½δ_{k0}, U e_i U* = e_{i+1}.
pub fn check_shift(window: &Window, range: i64) -> CheckReport {
    let mut rep = CheckReport::new("shift");
    let conj = |op: &dyn Fn(&FockVector) -> FockVector, v: &FockVector| shift_u(1, &op(&shift_u(-1, v)));
    for w in window.basis.iter() {
        let v = basis_vector(w.clone());
        for k in -range..=range {
            let lhs = conj(&|x| a(k, x), &v);
            let mut rhs = a(k, &v);
            if k == 0 {
                rhs.add_assign(&v);
            }
            rep.compare(|| format!("U a_{k} U* on {w}"), &lhs, &rhs);
            let lhs = conj(&|x| l_sugawara(k, x), &v);
            let mut rhs = l_sugawara(k, &v).add(&a(k, &v));
            if k == 0 {
                rhs.add_scaled(&v, &rat(1, 2));
            }
            rep.compare(|| format!("U L_{k} U* on {w}"), &lhs, &rhs);
            rep.compare(|| format!("U e_{k} U* on {w}"), &conj(&|x| e(k, x), &v), &e(k + 1, &v));
        }
    }
    rep
}

/// Names accepted by [`run_suite`].
pub const SUITES: &[&str] =
    &["car", "boson", "virasoro", "shift", "example1", "example2", "fv", "covariance", "exchange", "adjoint", "theta"];

/// Runs one named identity family on the window of energy ≤ `e_max`.
/// Two-factor checks use pair energies ≤ e_max − 2 (and ≤ e_max / 2 for the
/// current algebra); the theta check always runs to order q².
pub fn run_suite(name: &str, e_max: i64) -> Result<CheckReport> {
    if e_max < 0 {
        return Err(Error::InvalidArgument(format!("E_max must be non-negative, got {e_max}")));
    }
    let w = Window::of_energy(e_max);
    let mut rep = CheckReport::new(name);
    match name {
        "car" => rep.merge(check_car(&w, 4)),
        "boson" => rep.merge(check_boson(&w, 4)),
        "virasoro" => {
            rep.merge(check_virasoro(&w, 3));
            rep.merge(vertex::check_lprime_fermion(&w, 3));
        }
        "shift" => rep.merge(check_shift(&w, 4)),
        "example1" => rep.merge(vertex::check_example1(&w, 4)),
        "example2" => {
            rep.merge(pair::check_example2(&int((e_max - 2).max(0)), 3));
            rep.merge(pair::check_current_algebra(&int(e_max / 2), 2));
            rep.merge(pair::check_total_virasoro(&int(e_max / 2), 2));
        }
        "fv" => {
            for (m, k) in [(0, 1), (1, 1), (1, -1), (-1, 2), (2, -1), (2, 1), (1, 0), (2, 0)] {
                rep.merge(vertex::check_fubini_veneziano(m, k, &w, 3));
            }
        }
        "covariance" => {
            for m in [-2, -1, 1, 2] {
                rep.merge(vertex::check_boson_covariance(m, &w, 3));
            }
        }
        "exchange" => {
            for m in [1, 2] {
                rep.merge(vertex::check_exchange(m, &w, 3));
            }
        }
        "adjoint" => {
            for m in [-2, -1, 1, 2] {
                rep.merge(vertex::check_adjoint(m, &w, 3));
            }
        }
        "theta" => rep.merge(pair::check_theta(2)),
        other => return Err(Error::InvalidArgument(format!("unknown suite {other:?}; expected one of {}", SUITES.join(",")))),
    }
    Ok(rep)
}
