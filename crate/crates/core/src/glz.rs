//! Probabilistic decoder for polynomial systems with erroneous evaluations.
//!
//! Each black-box evaluation `(A_l, b_l)` is first reduced to a point value
//! `y_l` spanning the right kernel of `[A_l | -b_l]`. The vector of rational
//! functions is then recovered from the key equations
//! `phi_i(a_l) = y_{l,i} psi(a_l)` shared by all coordinates, with
//! `deg phi_i <= df + e` and `deg psi <= dg + e`. When the key-equation
//! matrix has corank one its kernel is spanned by `(Λf, Λg)`, where `Λ` is
//! the error locator, and dividing by the gcd gives `f/g`.
//!
//! Sharing `psi` across the `n` coordinates is what lets the decoder work
//! with roughly `e/n` fewer points than the deterministic baseline in
//! [`crate::bk`]; the price is a small failure probability.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::oracle::Evaluation;
use crate::poly::{max_degree, Poly};
use crate::system::{PolySystem, ReducedRationalSolution};

fn div_ceil(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Points sufficient for the decoder's success-probability guarantee:
/// `ceil((n (df + e + 1 + dg) + e) / n)`.
pub fn l_glz(n: usize, df: usize, dg: usize, e: usize) -> usize {
    assert!(n >= 1, "n must be positive");
    div_ceil(n * (df + e + 1 + dg) + e, n)
}

/// Smallest point count for which the key-equation matrix has at least
/// `unknowns - 1` rows: `ceil((n (df + e + 1) + dg + e) / n)`.
pub fn l_star(n: usize, df: usize, dg: usize, e: usize) -> usize {
    assert!(n >= 1, "n must be positive");
    div_ceil(n * (df + e + 1) + dg + e, n)
}

/// Solution width `n` and degree bounds shared by all key-equation solvers.
///
/// Unknowns are laid out as the `n` numerator coefficient blocks (each of
/// length `df + e + 1`, ascending) followed by the denominator block of
/// length `dg + e + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecodeParams {
    pub n: usize,
    pub df: usize,
    pub dg: usize,
    pub e: usize,
}

impl DecodeParams {
    pub fn new(n: usize, df: usize, dg: usize, e: usize) -> Self {
        Self { n, df, dg, e }
    }

    pub fn numerator_len(&self) -> usize {
        self.df + self.e + 1
    }

    pub fn denominator_len(&self) -> usize {
        self.dg + self.e + 1
    }

    pub fn unknowns(&self) -> usize {
        self.n * self.numerator_len() + self.denominator_len()
    }

    /// Rank required for a one-dimensional kernel.
    pub fn rho(&self) -> usize {
        self.unknowns() - 1
    }

    pub fn l_glz(&self) -> usize {
        l_glz(self.n, self.df, self.dg, self.e)
    }

    pub fn l_star(&self) -> usize {
        l_star(self.n, self.df, self.dg, self.e)
    }

    /// Splits an unknown vector into `(phi_1..phi_n, psi)`.
    pub fn split<F: Field>(&self, field: &F, v: &[F::Elem]) -> (Vec<Poly<F::Elem>>, Poly<F::Elem>) {
        debug_assert_eq!(v.len(), self.unknowns());
        let nl = self.numerator_len();
        let phi = (0..self.n).map(|i| Poly::from_coeffs(field, v[i * nl..(i + 1) * nl].to_vec())).collect();
        let psi = Poly::from_coeffs(field, v[self.n * nl..].to_vec());
        (phi, psi)
    }

    /// Inverse of [`split`](Self::split); degrees must fit the layout.
    pub fn join<F: Field>(&self, field: &F, phi: &[Poly<F::Elem>], psi: &Poly<F::Elem>) -> Result<Vec<F::Elem>> {
        let (nl, dl) = (self.numerator_len(), self.denominator_len());
        if phi.len() != self.n || max_degree(phi) >= nl as isize || psi.degree() >= dl as isize {
            return Err(invalid("polynomials do not fit the key-equation layout"));
        }
        let mut v: Vec<_> = phi.iter().flat_map(|p| p.padded(field, nl)).collect();
        v.extend(psi.padded(field, dl));
        Ok(v)
    }

    /// Kernel vector with the smallest `(deg psi, max deg phi)`, skipping
    /// vectors with `psi = 0`.
    pub fn minimal_solution<F: Field>(
        &self,
        field: &F,
        basis: &[Vec<F::Elem>],
    ) -> Option<(Vec<Poly<F::Elem>>, Poly<F::Elem>)> {
        basis
            .iter()
            .map(|v| self.split(field, v))
            .filter(|(_, psi)| !psi.is_zero())
            .min_by_key(|(phi, psi)| (psi.degree(), max_degree(phi)))
    }
}

/// Point value extracted from one evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalKernel<E> {
    /// `y_l = gamma_l / sigma_l` from the one-dimensional kernel.
    Solved(Vec<E>),
    /// Trivial kernel or `sigma_l = 0`.
    Unusable,
}

/// Per-point values fed to the key equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalValue<E> {
    pub y: Vec<E>,
    /// Set when the kernel was unusable and `y` was drawn uniformly.
    pub randomized: bool,
}

/// Kernel of `C = [A | -b]`. A kernel of dimension above one means `A`
/// lost rank, which the error model rules out.
pub fn local_kernel<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Result<LocalKernel<F::Elem>> {
    let n = a.cols();
    let neg_b: Vec<_> = b.iter().map(|&v| field.neg(v)).collect();
    let c = a.augment(&neg_b)?;
    let mut basis = c.right_kernel_basis(field);
    match basis.len() {
        0 => Ok(LocalKernel::Unusable),
        1 => {
            let mut v = basis.pop().expect("one vector");
            let sigma = v[n];
            if field.is_zero(sigma) {
                return Ok(LocalKernel::Unusable);
            }
            // canonical basis vectors end in one, so sigma = 1 here
            debug_assert_eq!(sigma, field.one());
            v.truncate(n);
            Ok(LocalKernel::Solved(v))
        }
        d => Err(Error::Contract(format!("kernel of [A_l | -b_l] has dimension {d}; A_l is rank deficient"))),
    }
}

/// Applies [`local_kernel`] to every sample, substituting uniform random
/// values for unusable kernels.
pub fn local_kernels<F: Field>(
    field: &F,
    samples: &[Evaluation<F::Elem>],
    seed: u64,
) -> Result<Vec<LocalValue<F::Elem>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    samples
        .iter()
        .map(|s| {
            Ok(match local_kernel(field, &s.a, &s.b)? {
                LocalKernel::Solved(y) => LocalValue { y, randomized: false },
                LocalKernel::Unusable => {
                    LocalValue { y: (0..s.a.cols()).map(|_| field.random(&mut rng)).collect(), randomized: true }
                }
            })
        })
        .collect()
}

/// The key-equation matrix `M_y`: `n` diagonal Vandermonde blocks and the
/// stacked `-D_i V` blocks in the last block column.
#[derive(Clone, Debug)]
pub struct KeyEquationMatrix<E> {
    matrix: Matrix<E>,
    params: DecodeParams,
    points: usize,
}

impl<E: Copy + Eq> KeyEquationMatrix<E> {
    pub fn matrix(&self) -> &Matrix<E> {
        &self.matrix
    }

    pub fn params(&self) -> DecodeParams {
        self.params
    }

    pub fn points(&self) -> usize {
        self.points
    }
}

/// Row `i * L + l` encodes `phi_i(a_l) - y_{l,i} psi(a_l) = 0`.
pub fn build_key_matrix<F: Field>(
    field: &F,
    values: &[Vec<F::Elem>],
    points: &[F::Elem],
    params: DecodeParams,
) -> Result<KeyEquationMatrix<F::Elem>> {
    let l = points.len();
    let n = params.n;
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    if values.len() != l || values.iter().any(|y| y.len() != n) {
        return Err(invalid("one length-n value vector per point is required"));
    }
    if points.iter().collect::<HashSet<_>>().len() != l {
        return Err(invalid("evaluation points must be distinct"));
    }
    let min = params.l_star();
    if l < min {
        return Err(invalid(format!("{l} points given, the key equations need at least {min}")));
    }
    let (nl, dl) = (params.numerator_len(), params.denominator_len());
    let vn = Matrix::vandermonde(field, points, nl)?;
    let vd = Matrix::vandermonde(field, points, dl)?;
    let mut m = Matrix::zeros(field, n * l, params.unknowns());
    for i in 0..n {
        for (row_in_block, y) in values.iter().enumerate() {
            let row = i * l + row_in_block;
            for j in 0..nl {
                m[(row, i * nl + j)] = vn[(row_in_block, j)];
            }
            let minus_y = field.neg(y[i]);
            for j in 0..dl {
                m[(row, n * nl + j)] = field.mul(minus_y, vd[(row_in_block, j)]);
            }
        }
    }
    Ok(KeyEquationMatrix { matrix: m, params, points: l })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FailReason {
    /// The key-equation matrix does not have rank `rho`.
    RankDeficient,
    /// The kernel generator has a zero denominator.
    ZeroSolution,
    /// The extracted fraction failed the degree or residual check.
    VerifyFailed,
}

impl FailReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            FailReason::RankDeficient => "RANK_DEFICIENT",
            FailReason::ZeroSolution => "ZERO_SOLUTION",
            FailReason::VerifyFailed => "VERIFY_FAILED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodeOutcome<E> {
    Success { solution: ReducedRationalSolution<E>, locator: Poly<E> },
    Fail(FailReason),
}

impl<E> DecodeOutcome<E> {
    pub fn solution(&self) -> Option<&ReducedRationalSolution<E>> {
        match self {
            DecodeOutcome::Success { solution, .. } => Some(solution),
            DecodeOutcome::Fail(_) => None,
        }
    }

    pub fn locator(&self) -> Option<&Poly<E>> {
        match self {
            DecodeOutcome::Success { locator, .. } => Some(locator),
            DecodeOutcome::Fail(_) => None,
        }
    }

    pub fn is_success(&self) -> bool {
        matches!(self, DecodeOutcome::Success { .. })
    }
}

/// Post-decoding checks and the seed for randomized point values.
#[derive(Clone, Copy, Debug)]
pub struct DecodeOptions<'a, E> {
    /// Require `deg g = dg` on success.
    pub verify: bool,
    /// When given (and `verify` is set), also require `A f = g b`.
    pub system: Option<&'a PolySystem<E>>,
    pub seed: u64,
}

impl<E> Default for DecodeOptions<'_, E> {
    fn default() -> Self {
        Self { verify: true, system: None, seed: 0 }
    }
}

impl<'a, E> DecodeOptions<'a, E> {
    /// The bare algorithm, with no post-decoding checks.
    pub fn unverified() -> Self {
        Self { verify: false, ..Self::default() }
    }

    pub fn with_system(system: &'a PolySystem<E>) -> Self {
        Self { system: Some(system), ..Self::default() }
    }
}

fn check_samples<E: Copy + Eq>(samples: &[Evaluation<E>], n: usize) -> Result<()> {
    for (l, s) in samples.iter().enumerate() {
        if s.a.cols() != n || s.a.rows() < n || s.b.len() != s.a.rows() {
            return Err(invalid(format!(
                "sample {l} has shape {}x{} with |b| = {}",
                s.a.rows(),
                s.a.cols(),
                s.b.len()
            )));
        }
    }
    Ok(())
}

/// Divides `(phi, psi)` by their common gcd after making `psi` monic.
pub(crate) fn extract_solution<F: Field>(
    field: &F,
    phi: &[Poly<F::Elem>],
    psi: &Poly<F::Elem>,
) -> Result<(ReducedRationalSolution<F::Elem>, Poly<F::Elem>)> {
    let scale = field.inv(psi.lead().expect("psi is nonzero")).ok_or(Error::DivisionByZero)?;
    let psi = psi.scale(field, scale);
    let phi: Vec<_> = phi.iter().map(|p| p.scale(field, scale)).collect();
    let locator = Poly::gcd_all(field, phi.iter().chain(std::iter::once(&psi))).expect("psi is nonzero");
    let f = phi.iter().map(|p| p.div_exact(field, &locator)).collect::<Result<Vec<_>>>()?;
    let g = psi.div_exact(field, &locator)?;
    Ok((ReducedRationalSolution::from_parts(f, g), locator))
}

/// Decodes the reduced solution from `L >= l_star` black-box evaluations
/// containing exactly `params.e` errors.
pub fn decode<F: Field>(
    field: &F,
    samples: &[Evaluation<F::Elem>],
    params: DecodeParams,
    opts: &DecodeOptions<'_, F::Elem>,
) -> Result<DecodeOutcome<F::Elem>> {
    check_samples(samples, params.n)?;
    let values: Vec<_> = local_kernels(field, samples, opts.seed)?.into_iter().map(|v| v.y).collect();
    let points: Vec<_> = samples.iter().map(|s| s.point).collect();
    let key = build_key_matrix(field, &values, &points, params)?;
    let echelon = key.matrix.echelon(field);
    if echelon.rank() != params.rho() {
        return Ok(DecodeOutcome::Fail(FailReason::RankDeficient));
    }
    let basis = echelon.kernel_basis(field);
    let (phi, psi) = params.split(field, &basis[0]);
    if psi.is_zero() {
        return Ok(DecodeOutcome::Fail(FailReason::ZeroSolution));
    }
    let (solution, locator) = extract_solution(field, &phi, &psi)?;
    if opts.verify {
        let degree_ok = solution.dg() == params.dg as isize;
        let residual_ok =
            opts.system.is_none_or(|sys| sys.is_solved_by(field, solution.numerators(), solution.denominator()));
        if !degree_ok || !residual_ok {
            return Ok(DecodeOutcome::Fail(FailReason::VerifyFailed));
        }
    }
    Ok(DecodeOutcome::Success { solution, locator })
}

/// Point values following the constructive draw for corrupted positions:
/// the error set is split into parts `I_i` of size at most
/// `L - (df + dg + e + 1)`, coordinate `i` is wrong only on `I_i` and
/// correct on the other error positions.
pub fn witness_values<F: Field>(
    field: &F,
    sol: &ReducedRationalSolution<F::Elem>,
    points: &[F::Elem],
    errors: &[usize],
    params: DecodeParams,
) -> Result<Vec<Vec<F::Elem>>> {
    let l = points.len();
    let DecodeParams { n, df, dg, e } = params;
    if errors.len() != e || errors.iter().any(|&i| i >= l) || errors.iter().collect::<HashSet<_>>().len() != e {
        return Err(invalid("error set must hold e distinct point indices"));
    }
    let cap = l.saturating_sub(df + dg + e + 1);
    if e > n * cap {
        return Err(invalid(format!("cannot split {e} errors into {n} parts of size at most {cap}")));
    }
    let mut values = points
        .iter()
        .map(|&x| sol.eval(field, x).ok_or_else(|| invalid("evaluation point is a root of g")))
        .collect::<Result<Vec<_>>>()?;
    for (pos, &l_idx) in errors.iter().enumerate() {
        let part = pos / cap.max(1);
        values[l_idx][part] = field.add(values[l_idx][part], field.one());
    }
    Ok(values)
}

/// Whether the constructive draw of [`witness_values`] yields a key-equation
/// matrix of rank `rho`.
pub fn kernel_dim_one_witness<F: Field>(
    field: &F,
    sol: &ReducedRationalSolution<F::Elem>,
    points: &[F::Elem],
    errors: &[usize],
    params: DecodeParams,
) -> Result<bool> {
    let values = witness_values(field, sol, points, errors, params)?;
    let key = build_key_matrix(field, &values, points, params)?;
    Ok(key.matrix.rank(field) == params.rho())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fe, Gf};
    use crate::oracle::{sample_black_box, ErrorPlan, Evaluation};
    use crate::system::{choose_evaluation_points, generate_instance, GeneratorMode, InstanceParams};
    use rand::{Rng, SeedableRng};

    #[test]
    fn point_count_formulas() {
        assert_eq!(l_glz(3, 2, 2, 5), 12);
        assert_eq!(l_star(3, 2, 2, 5), 11);
        for (df, dg, e) in [(0, 0, 0), (2, 2, 5), (4, 1, 3), (7, 0, 2)] {
            assert_eq!(l_glz(1, df, dg, e), df + dg + 2 * e + 1);
            assert_eq!(l_star(1, df, dg, e), df + dg + 2 * e + 1);
        }
        assert_eq!(l_glz(1, 6, 0, 0), 7);
        let p = DecodeParams::new(3, 2, 2, 5);
        assert_eq!(p.unknowns(), 32);
        assert_eq!(3 * p.l_star(), 33);
        assert_eq!(p.rho(), 31);
    }

    #[test]
    fn identity_local_kernel() {
        let f = Gf::prime(7).unwrap();
        let a = Matrix::identity(&f, 2);
        let b = [f.from_int(2), f.from_int(3)];
        assert_eq!(local_kernel(&f, &a, &b).unwrap(), LocalKernel::Solved(b.to_vec()));
    }

    #[test]
    fn overdetermined_inconsistent_kernel_is_randomized() {
        let f = Gf::prime(7).unwrap();
        let a =
            Matrix::from_rows(vec![vec![f.one(), f.zero()], vec![f.zero(), f.one()], vec![f.one(), f.one()]]).unwrap();
        let b = vec![f.one(), f.one(), f.one()];
        assert_eq!(local_kernel(&f, &a, &b).unwrap(), LocalKernel::Unusable);
        let s = Evaluation { point: f.one(), a, b };
        let vals = local_kernels(&f, &[s], 4).unwrap();
        assert!(vals[0].randomized);
        assert_eq!(vals[0].y.len(), 2);
    }

    #[test]
    fn rank_deficient_sample_is_contract_violation() {
        let f = Gf::prime(7).unwrap();
        let a = Matrix::zeros(&f, 2, 2);
        assert!(matches!(local_kernel(&f, &a, &[f.zero(), f.zero()]), Err(Error::Contract(_))));
    }

    #[test]
    fn key_matrix_shape_and_blocks() {
        let f = Gf::prime(101).unwrap();
        let params = DecodeParams::new(2, 1, 1, 1);
        let pts: Vec<_> = (1..=6).map(|i| f.from_int(i)).collect();
        let ys: Vec<_> = (1..=6).map(|i| vec![f.from_int(i * 3), f.from_int(i * 5)]).collect();
        let key = build_key_matrix(&f, &ys, &pts, params).unwrap();
        let m = key.matrix();
        assert_eq!((m.rows(), m.cols()), (12, 2 * 3 + 3));
        // row for coordinate 1 at point 2 (alpha = 3, y = 15)
        let row = m.row(6 + 2);
        let alpha = f.from_int(3);
        assert_eq!(&row[..3], &[f.zero(); 3]);
        assert_eq!(&row[3..6], &[f.one(), alpha, f.mul(alpha, alpha)]);
        let my = f.neg(f.from_int(15));
        assert_eq!(&row[6..], &[my, f.mul(my, alpha), f.mul(my, f.mul(alpha, alpha))]);
        assert!(build_key_matrix(&f, &ys[..3], &pts[..3], params).is_err());
        let dup = vec![f.one(); 6];
        assert!(build_key_matrix(&f, &ys, &dup, params).is_err());
    }

    fn instance(
        f: &Gf,
        n: usize,
        df: usize,
        dg: usize,
        seed: u64,
    ) -> (PolySystem<Fe>, ReducedRationalSolution<Fe>, ChaCha8Rng) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ip = InstanceParams { n, m: n, deg_a: 1, df, dg, mode: GeneratorMode::Planted };
        let (sys, sol) = generate_instance(f, &ip, &mut rng).unwrap();
        (sys, sol, rng)
    }

    #[test]
    fn error_free_decode_recovers_planted() {
        let f = Gf::prime(101).unwrap();
        let (sys, sol, mut rng) = instance(&f, 3, 2, 2, 11);
        let params = DecodeParams::new(3, 2, 2, 0);
        let pts = choose_evaluation_points(&f, &sys, sol.denominator(), params.l_glz(), &mut rng).unwrap();
        let plan = ErrorPlan::new(pts.len(), vec![]).unwrap();
        let samples = sample_black_box(&f, &sys, &sol, &pts, &plan, &mut rng).unwrap();
        let evals: Vec<_> = samples.into_iter().map(|s| s.eval).collect();
        let out = decode(&f, &evals, params, &DecodeOptions::with_system(&sys)).unwrap();
        assert_eq!(out.solution(), Some(&sol));
        assert_eq!(out.locator(), Some(&Poly::one(&f)));
    }

    #[test]
    fn single_error_locator() {
        let f = Gf::prime(101).unwrap();
        let (sys, sol, mut rng) = instance(&f, 2, 2, 1, 12);
        let params = DecodeParams::new(2, 2, 1, 1);
        let pts = choose_evaluation_points(&f, &sys, sol.denominator(), params.l_glz(), &mut rng).unwrap();
        let bad = rng.gen_range(0..pts.len());
        let plan = ErrorPlan::new(pts.len(), vec![bad]).unwrap();
        let samples = sample_black_box(&f, &sys, &sol, &pts, &plan, &mut rng).unwrap();
        let evals: Vec<_> = samples.into_iter().map(|s| s.eval).collect();
        let out = decode(&f, &evals, params, &DecodeOptions::default()).unwrap();
        assert_eq!(out.solution(), Some(&sol));
        assert_eq!(out.locator(), Some(&Poly::linear_root(&f, pts[bad])));
    }

    #[test]
    fn honest_local_values_match_solution() {
        let f = Gf::binary(5).unwrap();
        let (sys, sol, mut rng) = instance(&f, 3, 2, 2, 13);
        let pts = choose_evaluation_points(&f, &sys, sol.denominator(), 10, &mut rng).unwrap();
        for x in pts {
            let (a, b) = sys.eval(&f, x);
            assert_eq!(local_kernel(&f, &a, &b).unwrap(), LocalKernel::Solved(sol.eval(&f, x).unwrap()));
        }
    }

    #[test]
    fn witness_for_zero_errors() {
        let f = Gf::prime(31).unwrap();
        let (sys, sol, mut rng) = instance(&f, 2, 1, 1, 14);
        let params = DecodeParams::new(2, 1, 1, 0);
        let pts = choose_evaluation_points(&f, &sys, sol.denominator(), params.l_glz(), &mut rng).unwrap();
        assert!(kernel_dim_one_witness(&f, &sol, &pts, &[], params).unwrap());
    }

    #[test]
    fn witness_rejects_oversized_error_sets() {
        let f = Gf::prime(31).unwrap();
        let (sys, sol, mut rng) = instance(&f, 1, 1, 1, 15);
        let params = DecodeParams::new(1, 1, 1, 2);
        // L = 6 leaves parts of size 6 - 5 = 1 < 2
        let pts = choose_evaluation_points(&f, &sys, sol.denominator(), 6, &mut rng).unwrap();
        assert!(kernel_dim_one_witness(&f, &sol, &pts, &[0, 1], params).is_err());
    }

    /// n = 1, e = 1 over GF(7): enumerate every value at the corrupted point.
    #[test]
    fn exhaustive_single_error_draws() {
        let f = Gf::prime(7).unwrap();
        let (sys, sol, mut rng) = instance(&f, 1, 1, 1, 16);
        let params = DecodeParams::new(1, 1, 1, 1);
        let l = params.l_glz();
        let pts = choose_evaluation_points(&f, &sys, sol.denominator(), l, &mut rng).unwrap();
        let truth: Vec<_> = pts.iter().map(|&x| sol.eval(&f, x).unwrap()).collect();
        let mut dim_one = 0;
        for v in f.elements() {
            if v == truth[0][0] {
                continue;
            }
            let mut ys = truth.clone();
            ys[0][0] = v;
            let key = build_key_matrix(&f, &ys, &pts, params).unwrap();
            if key.matrix().rank(&f) == params.rho() {
                dim_one += 1;
            }
        }
        assert!(dim_one >= 1);
        assert!(kernel_dim_one_witness(&f, &sol, &pts, &[0], params).unwrap());
    }
}
