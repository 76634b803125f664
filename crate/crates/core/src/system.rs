//! Polynomial linear systems `A(x) y = b(x)`, their reduced rational
//! solutions, seeded instance generation and the error-free
//! evaluation/interpolation solver.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{invalid, Error, Result};
use crate::field::Field;
use crate::glz::{self, DecodeParams};
use crate::matrix::Matrix;
use crate::poly::{max_degree, Poly};

/// Retry budget for every rejection-sampled draw in the generators.
pub const GENERATOR_RETRIES: usize = 100;

/// Full-rank probes of a polynomial matrix before it is declared singular.
const RANK_PROBES: usize = 4;

/// Dense matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<E> {
    rows: usize,
    cols: usize,
    entries: Vec<Poly<E>>,
}

impl<E: Copy + Eq> PolyMatrix<E> {
    pub fn from_rows(rows: Vec<Vec<Poly<E>>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(invalid("ragged polynomial matrix"));
        }
        let n = rows.len();
        Ok(Self { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn random<F: Field<Elem = E>, R: Rng + ?Sized>(
        field: &F,
        rows: usize,
        cols: usize,
        max_degree: usize,
        rng: &mut R,
    ) -> Self {
        let entries = (0..rows * cols).map(|_| Poly::random(field, max_degree, rng)).collect();
        Self { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly<E> {
        &self.entries[i * self.cols + j]
    }

    pub fn max_degree(&self) -> isize {
        max_degree(&self.entries)
    }

    pub fn eval<F: Field<Elem = E>>(&self, field: &F, x: E) -> Matrix<E> {
        let data = self.entries.iter().map(|p| p.eval(field, x)).collect();
        Matrix::from_vec(self.rows, self.cols, data).expect("shape is preserved")
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, field: &F, v: &[Poly<E>]) -> Vec<Poly<E>> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|i| (0..self.cols).fold(Poly::zero(), |acc, j| acc.add(field, &self.get(i, j).mul(field, &v[j]))))
            .collect()
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, by: &Poly<E>) -> Self {
        Self { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|p| p.mul(field, by)).collect() }
    }

    /// Probabilistic full-column-rank test: rank `cols` at one of a few
    /// random points.
    pub fn probably_full_rank<F: Field<Elem = E>, R: Rng + ?Sized>(&self, field: &F, rng: &mut R) -> bool {
        (0..RANK_PROBES).any(|_| self.eval(field, field.random(rng)).rank(field) == self.cols)
    }
}

/// `A(x) y = b(x)` with `A` of shape `m x n`, `m >= n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySystem<E> {
    a: PolyMatrix<E>,
    b: Vec<Poly<E>>,
}

impl<E: Copy + Eq> PolySystem<E> {
    pub fn new(a: PolyMatrix<E>, b: Vec<Poly<E>>) -> Result<Self> {
        if a.cols == 0 || a.rows < a.cols {
            return Err(invalid(format!("system must satisfy m >= n >= 1, got {}x{}", a.rows, a.cols)));
        }
        if b.len() != a.rows {
            return Err(invalid("right-hand side length must equal row count"));
        }
        Ok(Self { a, b })
    }

    /// `A = g·M`, `b = M·f`, so that `f/g` solves the system.
    pub fn planted<F: Field<Elem = E>>(
        field: &F,
        cofactor: &PolyMatrix<E>,
        f: &[Poly<E>],
        g: &Poly<E>,
    ) -> Result<Self> {
        if f.len() != cofactor.cols {
            return Err(invalid("numerator length must equal column count"));
        }
        Self::new(cofactor.scale(field, g), cofactor.mul_vec(field, f))
    }

    pub fn m(&self) -> usize {
        self.a.rows
    }

    pub fn n(&self) -> usize {
        self.a.cols
    }

    pub fn matrix(&self) -> &PolyMatrix<E> {
        &self.a
    }

    pub fn rhs(&self) -> &[Poly<E>] {
        &self.b
    }

    /// `(A(x), b(x))` at a point.
    pub fn eval<F: Field<Elem = E>>(&self, field: &F, x: E) -> (Matrix<E>, Vec<E>) {
        (self.a.eval(field, x), self.b.iter().map(|p| p.eval(field, x)).collect())
    }

    /// `A·f = g·b` as a polynomial identity.
    pub fn is_solved_by<F: Field<Elem = E>>(&self, field: &F, f: &[Poly<E>], g: &Poly<E>) -> bool {
        f.len() == self.n() && self.a.mul_vec(field, f).iter().zip(&self.b).all(|(l, r)| *l == r.mul(field, g))
    }
}

/// The unique solution `f/g` with `g` monic and `gcd(gcd_i f_i, g) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedRationalSolution<E> {
    f: Vec<Poly<E>>,
    g: Poly<E>,
}

impl<E: Copy + Eq> ReducedRationalSolution<E> {
    /// Validates that the fraction is already reduced and normalized.
    pub fn new<F: Field<Elem = E>>(field: &F, f: Vec<Poly<E>>, g: Poly<E>) -> Result<Self> {
        if !g.is_monic(field) {
            return Err(invalid("denominator must be monic"));
        }
        let common = Poly::gcd_all(field, f.iter().chain(std::iter::once(&g)));
        if common.is_some_and(|c| c.degree() > 0) {
            return Err(invalid("fraction is not reduced"));
        }
        Ok(Self { f, g })
    }

    pub(crate) fn from_parts(f: Vec<Poly<E>>, g: Poly<E>) -> Self {
        Self { f, g }
    }

    pub fn numerators(&self) -> &[Poly<E>] {
        &self.f
    }

    pub fn denominator(&self) -> &Poly<E> {
        &self.g
    }

    pub fn df(&self) -> isize {
        max_degree(&self.f)
    }

    pub fn dg(&self) -> isize {
        self.g.degree()
    }

    /// `f(x)/g(x)`; `None` at roots of `g`.
    pub fn eval<F: Field<Elem = E>>(&self, field: &F, x: E) -> Option<Vec<E>> {
        let d = field.inv(self.g.eval(field, x))?;
        Some(self.f.iter().map(|p| field.mul(p.eval(field, x), d)).collect())
    }
}

/// Divides `f` and `g` by their common monic gcd and makes `g` monic.
pub fn reduce_fraction<F: Field>(
    field: &F,
    f: &[Poly<F::Elem>],
    g: &Poly<F::Elem>,
) -> Result<ReducedRationalSolution<F::Elem>> {
    if g.is_zero() {
        return Err(invalid("denominator is zero"));
    }
    let common = Poly::gcd_all(field, f.iter().chain(std::iter::once(g))).expect("g is nonzero");
    let g = g.div_exact(field, &common)?;
    let scale = field.inv(g.lead().expect("nonzero")).ok_or(Error::DivisionByZero)?;
    let f = f.iter().map(|p| p.div_exact(field, &common).map(|q| q.scale(field, scale))).collect::<Result<_>>()?;
    Ok(ReducedRationalSolution { f, g: g.scale(field, scale) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorMode {
    /// `A = g·M`, `b = M·f` with a planted reduced `f/g`.
    Planted,
    /// Random `A`, polynomial solution `f`, `b = A·f`, so `g = 1`.
    Cramer,
}

/// Shape and degree parameters for [`generate_instance`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceParams {
    pub n: usize,
    pub m: usize,
    /// Entry degree bound of the random matrix (`M` in planted mode, `A` in
    /// Cramer mode).
    pub deg_a: usize,
    pub df: usize,
    pub dg: usize,
    pub mode: GeneratorMode,
}

/// Draws a full-rank system together with its planted reduced solution.
///
/// The numerator vector has maximum degree exactly `df` and the monic
/// denominator has degree exactly `dg`.
pub fn generate_instance<F: Field, R: Rng + ?Sized>(
    field: &F,
    params: &InstanceParams,
    rng: &mut R,
) -> Result<(PolySystem<F::Elem>, ReducedRationalSolution<F::Elem>)> {
    let InstanceParams { n, m, deg_a, df, dg, mode } = *params;
    if n == 0 || m < n {
        return Err(invalid(format!("need m >= n >= 1, got m={m}, n={n}")));
    }
    if mode == GeneratorMode::Cramer && dg != 0 {
        return Err(invalid("cramer mode produces polynomial solutions, dg must be 0"));
    }
    let g = Poly::random_of_degree(field, dg, true, rng);
    let f = (0..GENERATOR_RETRIES)
        .map(|_| {
            let lead = rng.gen_range(0..n);
            (0..n)
                .map(|i| {
                    if i == lead {
                        Poly::random_of_degree(field, df, false, rng)
                    } else {
                        Poly::random(field, df, rng)
                    }
                })
                .collect::<Vec<_>>()
        })
        .find(|f| Poly::gcd_all(field, f.iter().chain(std::iter::once(&g))).is_some_and(|c| c.degree() == 0))
        .ok_or(Error::RetryBudget { budget: GENERATOR_RETRIES, what: "drawing a numerator coprime to g" })?;
    let cofactor = (0..GENERATOR_RETRIES)
        .find_map(|_| {
            let mat = PolyMatrix::random(field, m, n, deg_a, rng);
            mat.probably_full_rank(field, rng).then_some(mat)
        })
        .ok_or(Error::RetryBudget { budget: GENERATOR_RETRIES, what: "drawing a full-rank matrix" })?;
    let system = match mode {
        GeneratorMode::Planted => PolySystem::planted(field, &cofactor, &f, &g)?,
        GeneratorMode::Cramer => {
            let b = cofactor.mul_vec(field, &f);
            PolySystem::new(cofactor, b)?
        }
    };
    Ok((system, ReducedRationalSolution { f, g }))
}

/// `g(x) != 0` and `rank A(x) = n`.
pub fn is_good_point<F: Field>(field: &F, sys: &PolySystem<F::Elem>, g: &Poly<F::Elem>, x: F::Elem) -> bool {
    !field.is_zero(g.eval(field, x)) && sys.matrix().eval(field, x).rank(field) == sys.n()
}

/// Orders above which points are drawn by rejection rather than by shuffling
/// the whole field.
const SHUFFLE_LIMIT: u64 = 1 << 16;

/// `count` distinct good points drawn by a seeded shuffle of the field.
pub fn choose_evaluation_points<F: Field, R: Rng + ?Sized>(
    field: &F,
    sys: &PolySystem<F::Elem>,
    g: &Poly<F::Elem>,
    count: usize,
    rng: &mut R,
) -> Result<Vec<F::Elem>> {
    let q = field.order();
    let mut chosen = Vec::with_capacity(count);
    if q <= SHUFFLE_LIMIT {
        let mut all: Vec<_> = (0..q).map(|i| field.nth(i)).collect();
        all.shuffle(rng);
        for x in all {
            if chosen.len() == count {
                break;
            }
            if is_good_point(field, sys, g, x) {
                chosen.push(x);
            }
        }
    } else {
        let mut seen = HashSet::new();
        let budget = 100 * count + 100;
        for _ in 0..budget {
            if chosen.len() == count {
                break;
            }
            let x = field.random(rng);
            if seen.insert(x) && is_good_point(field, sys, g, x) {
                chosen.push(x);
            }
        }
    }
    if chosen.len() < count {
        return Err(Error::InsufficientPoints { available: chosen.len(), needed: count });
    }
    Ok(chosen)
}

/// Error-free solve by evaluation at `df_bound + dg_bound + 1` points and
/// vector rational reconstruction.
///
/// Points are taken in field enumeration order among those where `A(x)` has
/// full rank; for a consistent system such points are never roots of the
/// reduced denominator.
pub fn exact_solve<F: Field>(
    field: &F,
    sys: &PolySystem<F::Elem>,
    df_bound: usize,
    dg_bound: usize,
) -> Result<ReducedRationalSolution<F::Elem>> {
    let needed = df_bound + dg_bound + 1;
    let n = sys.n();
    let mut points = Vec::with_capacity(needed);
    let mut values = Vec::with_capacity(needed);
    for i in 0..field.order() {
        if points.len() == needed {
            break;
        }
        let x = field.nth(i);
        let (a, b) = sys.eval(field, x);
        if a.rank(field) != n {
            continue;
        }
        match glz::local_kernel(field, &a, &b)? {
            glz::LocalKernel::Solved(y) => {
                points.push(x);
                values.push(y);
            }
            glz::LocalKernel::Unusable => {
                return Err(Error::Inconsistent(format!("evaluated system has no solution at point {x:?}")));
            }
        }
    }
    if points.len() < needed {
        return Err(Error::InsufficientPoints { available: points.len(), needed });
    }
    let layout = DecodeParams::new(n, df_bound, dg_bound, 0);
    let key = glz::build_key_matrix(field, &values, &points, layout)?;
    let basis = key.matrix().right_kernel_basis(field);
    let (phi, psi) = layout
        .minimal_solution(field, &basis)
        .ok_or_else(|| Error::Inconsistent("interpolation system has no solution".into()))?;
    let sol = reduce_fraction(field, &phi, &psi)?;
    if !sys.is_solved_by(field, &sol.f, &sol.g) {
        return Err(Error::Inconsistent(
            "reconstructed fraction does not solve the system; degree bounds too small".into(),
        ));
    }
    Ok(sol)
}
