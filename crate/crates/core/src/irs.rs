//! Interleaved Reed-Solomon codes as the identity-matrix special case.
//!
//! With `A_l = I_r` and `g = 1` the black box returns one column of `r`
//! stacked RS codewords per point, and [`decode`](crate::glz::decode) is the
//! simultaneous polynomial reconstruction decoder. The probability bounds of
//! the related IRS literature are exposed as reference formulas only.

use std::collections::HashSet;

use rand::Rng;

use crate::error::{invalid, Result};
use crate::field::Field;
use crate::glz::{decode, DecodeOptions, DecodeOutcome, DecodeParams, FailReason};
use crate::matrix::Matrix;
use crate::oracle::{ErrorPlan, Evaluation};
use crate::poly::{max_degree, Poly};

/// Length `n_c`, dimension `k`, interleaving `r` and the code locators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrsParams<E> {
    k: usize,
    r: usize,
    points: Vec<E>,
}

impl<E: Copy + Eq + std::hash::Hash> IrsParams<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, k: usize, r: usize, points: Vec<E>) -> Result<Self> {
        let len = points.len();
        if k == 0 || r == 0 || k > len || len as u64 > field.order() {
            return Err(invalid(format!("need 1 <= k <= n_c <= q and r >= 1, got k={k}, n_c={len}, r={r}")));
        }
        if points.iter().collect::<HashSet<_>>().len() != len {
            return Err(invalid("code locators must be distinct"));
        }
        Ok(Self { k, r, points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn points(&self) -> &[E] {
        &self.points
    }

    /// Largest `e` covered by the collaborative decoding bound,
    /// `floor(r (n_c - k) / (r + 1))`.
    pub fn collaborative_radius(&self) -> usize {
        self.r * (self.len() - self.k) / (self.r + 1)
    }

    /// `floor((n_c - k) / 2)`.
    pub fn unique_radius(&self) -> usize {
        (self.len() - self.k) / 2
    }
}

/// The `r x n_c` matrix `(f_i(a_j))`.
pub fn irs_encode<F: Field>(
    field: &F,
    messages: &[Poly<F::Elem>],
    params: &IrsParams<F::Elem>,
) -> Result<Matrix<F::Elem>> {
    if messages.len() != params.r {
        return Err(invalid(format!("expected {} messages, got {}", params.r, messages.len())));
    }
    if max_degree(messages) >= params.k as isize {
        return Err(invalid(format!("message degree must be below k = {}", params.k)));
    }
    let data = messages.iter().flat_map(|m| params.points.iter().map(|&x| m.eval(field, x))).collect();
    Matrix::from_vec(params.r, params.len(), data)
}

/// A received word with its ground truth.
#[derive(Clone, Debug)]
pub struct SprInstance<E> {
    pub received: Matrix<E>,
    pub errors: Vec<usize>,
    pub messages: Vec<Poly<E>>,
}

/// Uniform messages of degree `< k` with `e` corrupted columns. A corrupted
/// column is resampled until it differs from the codeword column.
pub fn random_spr_instance<F: Field, R: Rng + ?Sized>(
    field: &F,
    params: &IrsParams<F::Elem>,
    e: usize,
    rng: &mut R,
) -> Result<SprInstance<F::Elem>> {
    let messages: Vec<_> = (0..params.r).map(|_| Poly::random(field, params.k - 1, rng)).collect();
    let mut received = irs_encode(field, &messages, params)?;
    let plan = ErrorPlan::random(params.len(), e, rng)?;
    for j in plan.errors() {
        let original = received.column(j);
        loop {
            let column: Vec<_> = (0..params.r).map(|_| field.random(rng)).collect();
            if column != original {
                for (i, v) in column.into_iter().enumerate() {
                    received[(i, j)] = v;
                }
                break;
            }
        }
    }
    Ok(SprInstance { received, errors: plan.errors().collect(), messages })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SprOutcome<E> {
    Decoded(Vec<Poly<E>>),
    Fail(FailReason),
}

/// Decodes a received word with exactly `e` erroneous columns via the key
/// equations with `df = k - 1`, `dg = 0`.
pub fn spr_decode<F: Field>(
    field: &F,
    received: &Matrix<F::Elem>,
    params: &IrsParams<F::Elem>,
    e: usize,
) -> Result<SprOutcome<F::Elem>> {
    if received.rows() != params.r || received.cols() != params.len() {
        return Err(invalid("received word has the wrong shape"));
    }
    let identity = Matrix::identity(field, params.r);
    let samples: Vec<_> = params
        .points
        .iter()
        .enumerate()
        .map(|(j, &x)| Evaluation { point: x, a: identity.clone(), b: received.column(j) })
        .collect();
    let dp = DecodeParams::new(params.r, params.k - 1, 0, e);
    Ok(match decode(field, &samples, dp, &DecodeOptions::default())? {
        DecodeOutcome::Success { solution, .. } => SprOutcome::Decoded(solution.numerators().to_vec()),
        DecodeOutcome::Fail(reason) => SprOutcome::Fail(reason),
    })
}

/// Reference bounds for comparison tables.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReferenceBounds {
    /// `floor(r (n_c - k) / (r + 1))`.
    pub e_max_collab: usize,
    /// `e / q`.
    pub p_spr: f64,
    /// `exp(1 / q^(r-2)) / (q - 1)`.
    pub p_bms: f64,
    /// `(dg + e) / q`.
    pub p_glz: f64,
}

pub fn p_glz(q: u64, dg: usize, e: usize) -> f64 {
    (dg + e) as f64 / q as f64
}

pub fn p_bms(q: u64, r: usize) -> f64 {
    let q = q as f64;
    (1.0 / q.powi(r as i32 - 2)).exp() / (q - 1.0)
}

pub fn reference_bounds(q: u64, n_c: usize, k: usize, r: usize, e: usize, dg: usize) -> ReferenceBounds {
    ReferenceBounds {
        e_max_collab: r * n_c.saturating_sub(k) / (r + 1),
        p_spr: e as f64 / q as f64,
        p_bms: p_bms(q, r),
        p_glz: p_glz(q, dg, e),
    }
}
