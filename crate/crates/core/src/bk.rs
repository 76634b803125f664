//! Deterministic baseline: the homogeneous key system built directly from
//! the evaluated matrices,
//! `A_l (phi_1(a_l), ..., phi_n(a_l))^T - psi(a_l) b_l = 0`,
//! solved at `L >= df + dg + 2e + t + 1` points. Its minimal-degree solution
//! is `(Λf, Λg)` for every error pattern of weight at most `e`.

use crate::error::{invalid, Result};
use crate::field::Field;
use crate::glz::{extract_solution, DecodeOutcome, DecodeParams, FailReason};
use crate::matrix::Matrix;
use crate::oracle::Evaluation;

/// `df + dg + 2e + t + 1`.
pub fn l_bk(df: usize, dg: usize, e: usize, t: usize) -> usize {
    df + dg + 2 * e + t + 1
}

/// Builds the `mL x (n(df+e+1) + dg+e+1)` key matrix. Row `l * m + r` is
/// equation `r` of point `l`.
pub fn build_bk_matrix<F: Field>(
    field: &F,
    samples: &[Evaluation<F::Elem>],
    params: DecodeParams,
) -> Result<Matrix<F::Elem>> {
    let n = params.n;
    let m = samples.first().map_or(n, |s| s.a.rows());
    if samples.iter().any(|s| s.a.rows() != m || s.a.cols() != n || s.b.len() != m) {
        return Err(invalid("all samples must share the system shape"));
    }
    let (nl, dl) = (params.numerator_len(), params.denominator_len());
    let width = nl.max(dl);
    let mut out = Matrix::zeros(field, m * samples.len(), params.unknowns());
    let mut powers = Vec::with_capacity(width);
    for (l, s) in samples.iter().enumerate() {
        powers.clear();
        let mut pw = field.one();
        for _ in 0..width {
            powers.push(pw);
            pw = field.mul(pw, s.point);
        }
        for r in 0..m {
            let row = l * m + r;
            for i in 0..n {
                let a = s.a[(r, i)];
                for j in 0..nl {
                    out[(row, i * nl + j)] = field.mul(a, powers[j]);
                }
            }
            let minus_b = field.neg(s.b[r]);
            for j in 0..dl {
                out[(row, n * nl + j)] = field.mul(minus_b, powers[j]);
            }
        }
    }
    Ok(out)
}

/// Minimal-degree solution of the key system, reduced by its gcd.
///
/// The minimum is taken over the canonical kernel basis ordered by
/// `(deg psi, max deg phi_i)`. `t` only enters the point-count check.
pub fn bk_solve<F: Field>(
    field: &F,
    samples: &[Evaluation<F::Elem>],
    params: DecodeParams,
    t: usize,
) -> Result<DecodeOutcome<F::Elem>> {
    let need = l_bk(params.df, params.dg, params.e, t);
    if samples.len() < need {
        return Err(invalid(format!("{} points given, the baseline needs at least {need}", samples.len())));
    }
    let key = build_bk_matrix(field, samples, params)?;
    let basis = key.right_kernel_basis(field);
    let Some((phi, psi)) = params.minimal_solution(field, &basis) else {
        return Ok(DecodeOutcome::Fail(FailReason::RankDeficient));
    };
    let (solution, locator) = extract_solution(field, &phi, &psi)?;
    Ok(DecodeOutcome::Success { solution, locator })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf;
    use crate::glz::l_glz;
    use crate::oracle::{adversarial_corrupt, sample_black_box, ErrorPlan, EvaluationSample};
    use crate::poly::Poly;
    use crate::system::{choose_evaluation_points, generate_instance, GeneratorMode, InstanceParams};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn point_count() {
        assert_eq!(l_bk(2, 2, 5, 0), 15);
        assert_eq!(l_bk(3, 1, 0, 0), 5);
        for n in 1..=6 {
            assert!(l_glz(n, 2, 2, 5) <= l_bk(2, 2, 5, 0));
        }
    }

    #[test]
    fn too_few_points_is_usage_error() {
        let f = Gf::prime(7).unwrap();
        assert!(bk_solve(&f, &[], DecodeParams::new(1, 0, 0, 0), 0).is_err());
    }

    #[test]
    fn recovers_through_random_and_adversarial_errors() {
        let f = Gf::prime(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let ip = InstanceParams { n: 2, m: 3, deg_a: 1, df: 2, dg: 1, mode: GeneratorMode::Planted };
        let params = DecodeParams::new(2, 2, 1, 3);
        for round in 0..20 {
            let (sys, sol) = generate_instance(&f, &ip, &mut rng).unwrap();
            let (other, _) = generate_instance(&f, &ip, &mut rng).unwrap();
            let l = l_bk(2, 1, 3, 0);
            let pts = choose_evaluation_points(&f, &sys, sol.denominator(), l, &mut rng).unwrap();
            let plan = ErrorPlan::random(l, 3 - round % 2, &mut rng).unwrap();
            let samples = if round % 3 == 0 {
                match adversarial_corrupt(&f, &sys, &sol, &pts, &plan, &other) {
                    Ok(s) => s,
                    Err(_) => continue,
                }
            } else {
                sample_black_box(&f, &sys, &sol, &pts, &plan, &mut rng).unwrap()
            };
            let locator = Poly::from_roots(&f, samples.iter().filter(|s| s.corrupted).map(|s| s.eval.point));
            let out = bk_solve(&f, &EvaluationSample::into_evaluations(samples), params, 0).unwrap();
            assert_eq!(out.solution(), Some(&sol));
            assert_eq!(out.locator(), Some(&locator));
        }
    }
}
