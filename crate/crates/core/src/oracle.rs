//! Simulated black box returning possibly erroneous evaluations.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::Rng;

use crate::error::{invalid, Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::system::{PolySystem, ReducedRationalSolution};

/// Draws allowed per corrupted point before giving up.
pub const CORRUPTION_RETRIES: usize = 1000;

/// What a decoder sees for one point: `(a_l, A_l, b_l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation<E> {
    pub point: E,
    pub a: Matrix<E>,
    pub b: Vec<E>,
}

impl<E: Copy + Eq> Evaluation<E> {
    /// `A_l f(a_l) = g(a_l) b_l`.
    pub fn is_consistent_with<F: Field<Elem = E>>(&self, field: &F, sol: &ReducedRationalSolution<E>) -> bool {
        let fx: Vec<_> = sol.numerators().iter().map(|p| p.eval(field, self.point)).collect();
        let gx = sol.denominator().eval(field, self.point);
        self.a.mul_vec(field, &fx).iter().zip(&self.b).all(|(&l, &r)| l == field.mul(gx, r))
    }
}

/// A black-box output with its ground-truth corruption flag. Decoders take
/// [`Evaluation`]s only, see [`EvaluationSample::into_evaluations`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationSample<E> {
    pub index: usize,
    pub eval: Evaluation<E>,
    pub corrupted: bool,
}

impl<E> EvaluationSample<E> {
    pub fn into_evaluations(samples: Vec<Self>) -> Vec<Evaluation<E>> {
        samples.into_iter().map(|s| s.eval).collect()
    }
}

/// The erroneous positions among `len` evaluation points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrorPlan {
    len: usize,
    errors: BTreeSet<usize>,
}

impl ErrorPlan {
    pub fn new(len: usize, errors: impl IntoIterator<Item = usize>) -> Result<Self> {
        let errors: BTreeSet<_> = errors.into_iter().collect();
        if errors.iter().any(|&l| l >= len) {
            return Err(invalid(format!("error position out of range 0..{len}")));
        }
        Ok(Self { len, errors })
    }

    /// `count` distinct positions drawn uniformly.
    pub fn random<R: Rng + ?Sized>(len: usize, count: usize, rng: &mut R) -> Result<Self> {
        if count > len {
            return Err(invalid(format!("cannot place {count} errors among {len} points")));
        }
        Self::new(len, sample(rng, len, count))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn error_count(&self) -> usize {
        self.errors.len()
    }

    pub fn contains(&self, l: usize) -> bool {
        self.errors.contains(&l)
    }

    pub fn errors(&self) -> impl Iterator<Item = usize> + '_ {
        self.errors.iter().copied()
    }
}

fn full_rank_inconsistent<F: Field, R: Rng + ?Sized>(
    field: &F,
    m: usize,
    n: usize,
    x: F::Elem,
    sol: &ReducedRationalSolution<F::Elem>,
    rng: &mut R,
) -> Result<Evaluation<F::Elem>> {
    for _ in 0..CORRUPTION_RETRIES {
        let a = Matrix::from_vec(m, n, (0..m * n).map(|_| field.random(rng)).collect())?;
        if a.rank(field) != n {
            continue;
        }
        let eval = Evaluation { point: x, a, b: (0..m).map(|_| field.random(rng)).collect() };
        if !eval.is_consistent_with(field, sol) {
            return Ok(eval);
        }
    }
    Err(Error::RetryBudget { budget: CORRUPTION_RETRIES, what: "drawing a corrupted evaluation" })
}

/// Honest evaluations outside the plan; inside it, uniform entries
/// resampled until `A_l` has full rank and the sample is inconsistent.
pub fn sample_black_box<F: Field, R: Rng + ?Sized>(
    field: &F,
    sys: &PolySystem<F::Elem>,
    sol: &ReducedRationalSolution<F::Elem>,
    points: &[F::Elem],
    plan: &ErrorPlan,
    rng: &mut R,
) -> Result<Vec<EvaluationSample<F::Elem>>> {
    if points.len() != plan.len() {
        return Err(invalid("error plan length must equal the number of points"));
    }
    points
        .iter()
        .enumerate()
        .map(|(index, &x)| {
            let corrupted = plan.contains(index);
            let eval = if corrupted {
                full_rank_inconsistent(field, sys.m(), sys.n(), x, sol, rng)?
            } else {
                let (a, b) = sys.eval(field, x);
                Evaluation { point: x, a, b }
            };
            Ok(EvaluationSample { index, eval, corrupted })
        })
        .collect()
}

/// Replaces the planned positions with honest evaluations of `other`.
///
/// The corruption flag records whether the replacement really is
/// inconsistent with `sol`; a coincidental agreement is not an error.
pub fn adversarial_corrupt<F: Field>(
    field: &F,
    sys: &PolySystem<F::Elem>,
    sol: &ReducedRationalSolution<F::Elem>,
    points: &[F::Elem],
    plan: &ErrorPlan,
    other: &PolySystem<F::Elem>,
) -> Result<Vec<EvaluationSample<F::Elem>>> {
    if other.m() != sys.m() || other.n() != sys.n() {
        return Err(invalid("replacement system must have the same shape"));
    }
    if points.len() != plan.len() {
        return Err(invalid("error plan length must equal the number of points"));
    }
    points
        .iter()
        .enumerate()
        .map(|(index, &x)| {
            let source = if plan.contains(index) { other } else { sys };
            let (a, b) = source.eval(field, x);
            if a.rank(field) != sys.n() {
                return Err(invalid(format!("replacement system drops rank at point {index}")));
            }
            let eval = Evaluation { point: x, a, b };
            let corrupted = plan.contains(index) && !eval.is_consistent_with(field, sol);
            Ok(EvaluationSample { index, eval, corrupted })
        })
        .collect()
}
