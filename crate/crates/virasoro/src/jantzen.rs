//! Jantzen filtrations of one-parameter Gram families and the character sums
//! they produce at c = 1 and on the discrete series.

use crate::combinatorics::{p_of, phi_series, QSeries};
use crate::linalg::{in_span, span_basis, Matrix};
use crate::scalars::{int, Order, OrderAtZero, Rational, Ring, UniPoly, Var};
use crate::verma::{c_discrete, h_pq, PbwVector, VermaModule, VermaParams};
use crate::{Error, Result};

use std::sync::Arc;

/// A line (c(x), h(x)) through parameter space.
#[derive(Clone, Debug, PartialEq)]
pub struct Path {
    pub c: UniPoly,
    pub h: UniPoly,
    pub label: String,
}

fn x() -> UniPoly {
    UniPoly::var(Var::X)
}

impl Path {
    pub fn new(c: UniPoly, h: UniPoly, label: impl Into<String>) -> Result<Self> {
        for (name, p) in [("c", &c), ("h", &h)] {
            if !p.is_constant() && p.variable() != Var::X {
                return Err(Error::NonPolynomialPath(format!("{name} = {p} is not a polynomial in x")));
            }
        }
        Ok(Path { c: c.with_var(Var::X), h: h.with_var(Var::X), label: label.into() })
    }

    /// (1 + x, j²)
    pub fn c_line(j: &Rational) -> Self {
        let c = UniPoly::one().add_ref(&x());
        Path::new(c, UniPoly::from_rational(&(j * j)), format!("(c,h) = (1 + x, {})", j * j)).unwrap()
    }

    /// (c0, h0 + x)
    pub fn h_line(c0: &Rational, h0: &Rational) -> Self {
        let h = UniPoly::from_rational(h0).add_ref(&x());
        let label = if h0 == &int(0) { format!("(c,h) = ({c0}, x)") } else { format!("(c,h) = ({c0}, {h0} + x)") };
        Path::new(UniPoly::from_rational(c0), h, label).unwrap()
    }

    /// The c = 1 path: (1+x, j²) for j > 0 and (1, x) for j = 0, where the
    /// first family is degenerate.
    pub fn for_c1(j: &Rational) -> Self {
        if j.is_integer() && j.to_integer() == 0.into() {
            Self::h_line(&int(1), &int(0))
        } else {
            Self::c_line(j)
        }
    }

    pub fn for_discrete(m: i64, r: i64, s: i64) -> Self {
        Self::h_line(&c_discrete(m), &h_pq(r, s, m))
    }

    /// The Verma module over ℚ[x] along the path.
    pub fn module(&self) -> VermaModule<UniPoly> {
        VermaModule::new(VermaParams::new(self.c.clone(), self.h.clone()))
    }

    pub fn at_zero(&self) -> VermaParams<Rational> {
        VermaParams::rational(self.c.eval(&int(0)), self.h.eval(&int(0)))
    }
}

/// Gram matrix along a path, with its x-expansion A(x) = Σ A_i x^i.
#[derive(Clone, Debug)]
pub struct MatrixFamily {
    pub level: u32,
    pub matrix: Matrix<UniPoly>,
    pub path: String,
}

impl MatrixFamily {
    pub fn new(level: u32, matrix: Matrix<UniPoly>, path: impl Into<String>) -> Self {
        MatrixFamily { level, matrix, path: path.into() }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.dim())
            .flat_map(|i| self.matrix.row(i).iter().filter_map(|p| p.degree()).collect::<Vec<_>>())
            .max()
            .unwrap_or(0)
    }

    /// A_i; zero beyond the maximal degree.
    pub fn coefficient(&self, i: usize) -> Matrix<Rational> {
        self.matrix.map(|p| p.coeff(i))
    }

    pub fn det(&self) -> UniPoly {
        self.matrix.det_bareiss()
    }
}

pub fn gram_family(path: &Path, level: u32) -> MatrixFamily {
    gram_family_in(&path.module(), path, level)
}

pub fn gram_family_in(module: &VermaModule<UniPoly>, path: &Path, level: u32) -> MatrixFamily {
    MatrixFamily::new(level, module.gram(level).entries.clone(), path.label.clone())
}

/// Nested subspaces V^{(0)} ⊇ V^{(1)} ⊇ … ⊇ 0 of ℚ^n (reduced bases).
#[derive(Clone, Debug)]
pub struct Filtration {
    pub dim: usize,
    pub bases: Vec<Vec<Vec<Rational>>>,
}

impl Filtration {
    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// Σ_{i≥1} dim V^{(i)}
    pub fn dim_sum(&self) -> usize {
        self.dims().iter().skip(1).sum()
    }

    /// dim V^{(i)} (zero past the end).
    pub fn dim_at(&self, i: usize) -> usize {
        self.bases.get(i).map_or(0, Vec::len)
    }

    /// Largest i with v ∈ V^{(i)}.
    pub fn depth_of(&self, v: &[Rational]) -> usize {
        let mut d = 0;
        for (i, b) in self.bases.iter().enumerate() {
            if in_span(b, v) {
                d = i;
            } else {
                break;
            }
        }
        d
    }
}

/// Block lower-triangular Toeplitz matrix of A_0, …, A_{m−1} acting on
/// (v_0, …, v_{m−1}).
fn toeplitz(coeffs: &[Matrix<Rational>], m: usize, n: usize) -> Matrix<Rational> {
    let zero = int(0);
    Matrix::from_fn(n * m, n * m, |r, c| {
        let (bi, bj) = (r / n, c / n);
        if bj > bi {
            zero.clone()
        } else {
            coeffs.get(bi - bj).map_or(zero.clone(), |a| a[(r % n, c % n)].clone())
        }
    })
}

fn check_nondegenerate(f: &MatrixFamily) -> Result<UniPoly> {
    let det = f.det();
    if det.is_zero() {
        return Err(Error::DegenerateFamily { level: f.level as usize });
    }
    Ok(det)
}

/// V^{(m)} = { v(0) : A(x) v(x) ≡ 0 mod x^m }, the Jantzen filtration.
pub fn jantzen_filtration(f: &MatrixFamily) -> Result<Filtration> {
    let det = check_nondegenerate(f)?;
    let order = det.order_at_zero().finite().expect("nonzero determinant");
    let n = f.dim();
    let coeffs: Vec<Matrix<Rational>> = (0..=order.max(f.max_degree())).map(|i| f.coefficient(i)).collect();
    let identity: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| int((i == j) as i64)).collect()).collect();
    let mut bases = vec![identity];
    for m in 1..=order + 1 {
        let ker = toeplitz(&coeffs, m, n).kernel();
        let heads: Vec<Vec<Rational>> = ker.into_iter().map(|v| v[..n].to_vec()).collect();
        let b = span_basis(&heads, n);
        let done = b.is_empty();
        bases.push(b);
        if done {
            break;
        }
    }
    Ok(Filtration { dim: n, bases })
}

/// ∩_{i<m} ker A_i, for comparison with the lifting definition.
pub fn naive_filtration(f: &MatrixFamily) -> Result<Filtration> {
    let det = check_nondegenerate(f)?;
    let order = det.order_at_zero().finite().expect("nonzero determinant");
    let n = f.dim();
    let identity: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| int((i == j) as i64)).collect()).collect();
    let mut bases = vec![identity];
    let mut stacked: Option<Matrix<Rational>> = None;
    for i in 0..=order.max(f.max_degree()) {
        let a = f.coefficient(i);
        let s = match stacked {
            None => a,
            Some(prev) => prev.vstack(&a),
        };
        let b = span_basis(&s.kernel(), n);
        let done = b.is_empty();
        bases.push(b);
        stacked = Some(s);
        if done {
            break;
        }
    }
    Ok(Filtration { dim: n, bases })
}

/// Order of vanishing of det A(x) and Σ_{i≥1} dim V^{(i)}.
pub fn det_order_identity(f: &MatrixFamily) -> Result<(usize, usize)> {
    let det = check_nondegenerate(f)?;
    let order = det.order_at_zero().finite().expect("nonzero determinant");
    Ok((order, jantzen_filtration(f)?.dim_sum()))
}

/// Order of the zero of (v, v)_x.
pub fn norm_vanishing_order(v: &PbwVector<UniPoly>, module: &VermaModule<UniPoly>) -> Result<usize> {
    match module.form(v, v).order_at_zero() {
        Order::Finite(k) => Ok(k),
        Order::IdenticallyZero => Err(Error::IdenticallyZeroNorm),
    }
}

/// A family v(x) = Σ_{i<m} x^i v_i with v(0) = v0 and A(x)v(x) ≡ 0 mod x^m,
/// where m is the filtration depth of v0.
pub fn lift_to_depth(f: &MatrixFamily, filtration: &Filtration, v0: &[Rational]) -> Result<Vec<UniPoly>> {
    let n = f.dim();
    let m = filtration.depth_of(v0);
    if m == 0 {
        return Ok(v0.iter().map(UniPoly::from_rational).map(|p| p.with_var(Var::X)).collect());
    }
    let coeffs: Vec<Matrix<Rational>> = (0..m).map(|i| f.coefficient(i)).collect();
    let t = toeplitz(&coeffs, m, n);
    // solve T w = 0 with first block fixed to v0: T[:, n..] w' = −T[:, ..n] v0
    let rhs: Vec<Rational> = {
        let head = Matrix::from_fn(t.rows(), n, |r, c| t[(r, c)].clone());
        head.mul_vec(v0).into_iter().map(|q| -q).collect()
    };
    let rest_cols = n * m - n;
    let aug = Matrix::from_fn(t.rows(), rest_cols + 1, |r, c| {
        if c < rest_cols {
            t[(r, n + c)].clone()
        } else {
            rhs[r].clone()
        }
    });
    let (red, pivots) = aug.rref();
    if pivots.contains(&rest_cols) {
        return Err(Error::Structural("vector does not lift to its filtration depth".into()));
    }
    let mut w = vec![int(0); rest_cols];
    for (row, &pc) in pivots.iter().enumerate() {
        w[pc] = red[(row, rest_cols)].clone();
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut cs = vec![v0[i].clone()];
        for b in 1..m {
            cs.push(w[(b - 1) * n + i].clone());
        }
        out.push(UniPoly::from_coeffs(Var::X, cs));
    }
    Ok(out)
}

/// Whether L_{−k} maps V^{(i)} at level n into V^{(i)} at level n+k, for all i.
pub fn functoriality_holds(low: &Filtration, high: &Filtration, raise: &Matrix<Rational>) -> bool {
    low.bases.iter().enumerate().all(|(i, basis)| {
        let target = high.bases.get(i).cloned().unwrap_or_default();
        basis.iter().all(|v| in_span(&target, &raise.mul_vec(v)))
    })
}

/// Matrix of L_{−k} from level n to level n + k (parameter independent).
pub fn raise_matrix(k: u32, n: u32) -> Matrix<Rational> {
    VermaModule::new(VermaParams::rational(int(0), int(0))).l_matrix(-i64::from(k), n)
}

/// Filtration data of one singular vector along a path.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainDepth {
    pub level: u32,
    /// largest i with v ∈ V^{(i)}
    pub depth: usize,
    /// order of (v(x), v(x))_x for the lift of v to its depth
    pub norm_order: usize,
}

pub fn chain_depth(path: &Path, module: &VermaModule<UniPoly>, v: &PbwVector<Rational>) -> Result<ChainDepth> {
    let level = v.level();
    let fam = gram_family_in(module, path, level);
    let filt = jantzen_filtration(&fam)?;
    let coords = v.to_coords();
    let depth = filt.depth_of(&coords);
    let lift = lift_to_depth(&fam, &filt, &coords)?;
    let family = PbwVector::from_coords(level, &lift);
    let norm_order = norm_vanishing_order(&family, module)?;
    Ok(ChainDepth { level, depth, norm_order })
}

/// Depths along the c = 1 singular chain of M(1, j²).
pub fn c1_chain_depths(j: &Rational, len: usize) -> Result<Vec<ChainDepth>> {
    let path = Path::for_c1(j);
    let module = path.module();
    crate::singular::c1_chain(j, len)?
        .iter()
        .map(|v| chain_depth(&path, &module, v))
        .collect()
}

/// Which character identity to assemble.
#[derive(Clone, Debug, PartialEq)]
pub enum CharacterCase {
    /// L(1, j²)
    C1 { j: Rational },
    /// L(c_m, h_{r,s}(m))
    Discrete { m: i64, r: i64, s: i64 },
}

impl CharacterCase {
    pub fn path(&self) -> Path {
        match self {
            CharacterCase::C1 { j } => Path::for_c1(j),
            CharacterCase::Discrete { m, r, s } => Path::for_discrete(*m, *r, *s),
        }
    }

    pub fn weight(&self) -> Rational {
        match self {
            CharacterCase::C1 { j } => j * j,
            CharacterCase::Discrete { m, r, s } => h_pq(*r, *s, *m),
        }
    }

    pub fn central_charge(&self) -> Rational {
        match self {
            CharacterCase::C1 { .. } => int(1),
            CharacterCase::Discrete { m, .. } => c_discrete(*m),
        }
    }
}

/// Per-level filtration data.
#[derive(Clone, Debug)]
pub struct LevelReport {
    pub level: u32,
    pub dims: Vec<usize>,
    pub det_order: usize,
    pub dim_sum: usize,
}

/// Assembles Σ_{i≥1} ch M^{(i)} to order N from per-level filtrations.
pub fn filtration_character_sum(case: &CharacterCase, n_max: u32) -> Result<(QSeries, Vec<LevelReport>)> {
    let path = case.path();
    let module = path.module();
    let mut coeffs = Vec::new();
    let mut reports = Vec::new();
    for n in 0..=n_max {
        let fam = gram_family_in(&module, &path, n);
        let (order, sum) = det_order_identity(&fam)?;
        let filt = jantzen_filtration(&fam)?;
        coeffs.push(int(sum as i64));
        reports.push(LevelReport { level: n, dims: filt.dims(), det_order: order, dim_sum: sum });
    }
    Ok((QSeries::new(case.weight(), coeffs), reports))
}

/// Levels (with multiplicity) of the Verma submodules in the closed form of
/// the character sum.
fn sum_levels(case: &CharacterCase, n_max: u32) -> Vec<i64> {
    let n = i64::from(n_max);
    match case {
        CharacterCase::C1 { j } => {
            let two_j: i64 = (j * int(2)).to_integer().try_into().unwrap();
            // (r+j)² − j² = r(r + 2j)
            (1..=n).map(|r| r * r + r * two_j).filter(|&l| l <= n).collect()
        }
        CharacterCase::Discrete { m, r, s } => {
            let bound = n + 2;
            (-bound..=bound)
                .map(|a| (r + a * m) * (s + a * (m + 1)))
                .filter(|&l| l > 0 && l <= n)
                .collect()
        }
    }
}

/// φ(q) · Σ q^{h + ℓ} over the submodule levels ℓ.
pub fn character_sum_closed(case: &CharacterCase, n_max: u32) -> QSeries {
    let mut coeffs = vec![int(0); n_max as usize + 1];
    for l in sum_levels(case, n_max) {
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c += int(p_of(i as i64 - l) as i64);
        }
    }
    QSeries::new(case.weight(), coeffs)
}

/// Signed levels of the alternating sum: ch L = φ(q) Σ ± q^{h+ℓ}.
pub fn character_terms(case: &CharacterCase, n_max: u32) -> Vec<(i64, i64)> {
    let n = i64::from(n_max);
    match case {
        CharacterCase::C1 { j } => {
            let two_j: i64 = (j * int(2)).to_integer().try_into().unwrap();
            let mut v = vec![(0, 1)];
            if two_j < n {
                v.push((two_j + 1, -1));
            }
            v
        }
        CharacterCase::Discrete { m, r, s } => {
            let big = m * (m + 1);
            let x = r * (m + 1) - s * m;
            let xp = r * (m + 1) + s * m;
            let lvl = |y: i64| (y * y - x * x) / (4 * big);
            let mut v = Vec::new();
            let kmax = n + 2;
            for k in -kmax..=kmax {
                let a = lvl(x + 2 * k * big);
                if a <= n {
                    v.push((a, 1));
                }
                let b = lvl(xp + 2 * k * big);
                if b <= n {
                    v.push((b, -1));
                }
            }
            v.sort();
            v
        }
    }
}

/// The irreducible character to order N.
pub fn character_formula(case: &CharacterCase, n_max: u32) -> QSeries {
    let mut coeffs = vec![int(0); n_max as usize + 1];
    for (l, sign) in character_terms(case, n_max) {
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c += int(sign * p_of(i as i64 - l) as i64);
        }
    }
    QSeries::new(case.weight(), coeffs)
}

/// Gram-rank oracle for the same weight.
pub fn rank_character(case: &CharacterCase, n_max: u32) -> QSeries {
    let params = VermaParams::rational(case.central_charge(), case.weight());
    let dims = crate::verma::irreducible_dims(&params, n_max);
    crate::combinatorics::series_from_dims(case.weight(), &dims)
}

/// (q^{j²} − q^{(j+1)²}) φ(q) by series arithmetic.
pub fn c1_character_by_series(j: &Rational, n_max: usize) -> Result<QSeries> {
    let phi = phi_series(n_max);
    let a = QSeries::monomial(j * j, n_max);
    let b = QSeries::monomial((j + int(1)) * (j + int(1)), n_max);
    Ok(a.mul(&phi).sub(&b.mul(&phi))?.truncate(n_max))
}

/// Shared handle so callers can reuse one module across levels.
pub fn shared_module(path: &Path) -> Arc<VermaModule<UniPoly>> {
    Arc::new(path.module())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(rows: Vec<Vec<UniPoly>>) -> MatrixFamily {
        MatrixFamily::new(0, Matrix::from_rows(rows), "test")
    }

    fn xp(k: usize) -> UniPoly {
        UniPoly::monomial(Var::X, int(1), k)
    }

    #[test]
    fn diagonal_family() {
        let f = fam(vec![vec![UniPoly::one(), UniPoly::zero()], vec![UniPoly::zero(), xp(2)]]);
        let filt = jantzen_filtration(&f).unwrap();
        assert_eq!(filt.dims(), vec![2, 1, 1, 0]);
        assert_eq!(det_order_identity(&f).unwrap(), (2, 2));
    }

    #[test]
    fn off_diagonal_family() {
        let f = fam(vec![vec![xp(1), xp(1)], vec![xp(1), xp(1).add_ref(&xp(2))]]);
        assert_eq!(det_order_identity(&f).unwrap(), (3, 3));
        assert_eq!(naive_filtration(&f).unwrap().dim_sum(), 3);
    }

    #[test]
    fn naive_definition_can_undercount() {
        let f = fam(vec![vec![UniPoly::one(), xp(1)], vec![xp(1), xp(3)]]);
        assert_eq!(det_order_identity(&f).unwrap(), (2, 2));
        assert_eq!(naive_filtration(&f).unwrap().dim_sum(), 1);
    }

    #[test]
    fn degenerate_family_is_an_error() {
        let f = gram_family(&Path::c_line(&int(0)), 1);
        assert_eq!(det_order_identity(&f), Err(Error::DegenerateFamily { level: 1 }));
    }

    #[test]
    fn level_one_families() {
        let f = gram_family(&Path::c_line(&rat_half()), 1);
        assert_eq!(f.matrix[(0, 0)], UniPoly::from_rational(&crate::scalars::rat(1, 2)));
        let g = gram_family(&Path::for_c1(&int(0)), 1);
        assert_eq!(g.matrix[(0, 0)], xp(1).scale(&int(2)));
        assert_eq!(gram_family(&Path::for_c1(&int(0)), 0).matrix[(0, 0)], UniPoly::one());
    }

    fn rat_half() -> Rational {
        crate::scalars::rat(1, 2)
    }
}
