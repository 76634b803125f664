//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

#![allow(clippy::type_complexity)]

use std::process::ExitCode;

use polsys::bk::{bk_solve, l_bk};
use polsys::experiment::{run_experiment, Corruption, ExperimentConfig, LMode, Method};
use polsys::glz::{
    build_key_matrix, decode, kernel_dim_one_witness, l_glz, local_kernels, DecodeOptions, DecodeParams,
};
use polsys::irs::{random_spr_instance, spr_decode, IrsParams, SprOutcome};
use polsys::oracle::{adversarial_corrupt, sample_black_box, ErrorPlan, EvaluationSample};
use polsys::system::{
    choose_evaluation_points, exact_solve, generate_instance, reduce_fraction, GeneratorMode, InstanceParams,
};
use polsys::{Error, Fe, Field, Gf, Poly, PolyMatrix, PolySystem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = (bool, String);

fn table_grid(l_mode: LMode, label: &str) -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for (q, limit) in [(16u64, 0.02), (32, 0.01), (64, 0.005)] {
        let cfg =
            ExperimentConfig { l_mode, seed: 2024, ..ExperimentConfig::table_defaults(Gf::for_order(q).unwrap()) };
        let r = run_experiment(&cfg).expect("feasible configuration");
        let p = r.p_unsuccessful();
        let slack = 3.0 * (r.p_glz / r.total_trials() as f64).sqrt();
        let row_ok = p <= limit && p <= r.p_glz && r.p_observed <= r.p_glz + slack && r.wrong == 0;
        ok &= row_ok;
        parts.push(format!(
            "q={q} L={} fail={}/{} wrong={} p={p:.4} (<= {limit}, bound {:.4})",
            r.l,
            r.failures,
            r.total_trials(),
            r.wrong,
            r.p_glz
        ));
    }
    (ok, format!("{label}: {}", parts.join("; ")))
}

fn criterion_1() -> Verdict {
    table_grid(LMode::Glz, "failure rates at L_GLZ")
}

fn criterion_2() -> Verdict {
    table_grid(LMode::Star, "failure rates at L*")
}

fn criterion_3() -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for q in [16u64, 32, 64] {
        for corruption in [Corruption::Random, Corruption::Adversarial] {
            let cfg = ExperimentConfig {
                l_mode: LMode::Bk,
                method: Method::Bk,
                corruption,
                trials: 250,
                seed: 7,
                ..ExperimentConfig::table_defaults(Gf::for_order(q).unwrap())
            };
            let r = run_experiment(&cfg).expect("feasible configuration");
            ok &= r.failures == 0 && r.wrong == 0 && r.total_trials() >= 5000 && r.l == 15;
            parts.push(format!("q={q} {corruption}: {}+{} of {}", r.failures, r.wrong, r.total_trials()));
        }
    }
    (ok, format!("baseline at L_BK never fails: {}", parts.join("; ")))
}

fn criterion_4() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let fields = [Gf::prime(7).unwrap(), Gf::binary(4).unwrap(), Gf::prime(101).unwrap()];
    let (mut exact, mut total, mut redraws) = (0, 0, 0);
    while total < 1000 {
        let field = &fields[total % 3];
        let n = 1 + (total / 3) % 3;
        let ip = InstanceParams {
            n,
            m: n + rng.gen_range(0..2),
            deg_a: rng.gen_range(0..2),
            df: rng.gen_range(0..3),
            dg: rng.gen_range(0..3),
            mode: GeneratorMode::Planted,
        };
        let (sys, sol) = generate_instance(field, &ip, &mut rng).unwrap();
        let params = DecodeParams::new(n, ip.df, ip.dg, 0);
        let l = l_glz(n, ip.df, ip.dg, 0);
        let points = match choose_evaluation_points(field, &sys, sol.denominator(), l, &mut rng) {
            Ok(p) => p,
            Err(Error::InsufficientPoints { .. }) => {
                redraws += 1;
                continue;
            }
            Err(e) => panic!("{e}"),
        };
        let plan = ErrorPlan::new(l, []).unwrap();
        let samples =
            EvaluationSample::into_evaluations(sample_black_box(field, &sys, &sol, &points, &plan, &mut rng).unwrap());
        let opts = DecodeOptions { seed: rng.gen(), ..DecodeOptions::default() };
        let out = decode(field, &samples, params, &opts).unwrap();
        if out.solution() == Some(&sol) {
            exact += 1;
        }
        total += 1;
    }
    (
        exact == total,
        format!("error-free decoding exact on {exact}/{total} instances ({redraws} redrawn for lack of points)"),
    )
}

fn criterion_5() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let configs = [
        (
            Gf::binary(4).unwrap(),
            InstanceParams { n: 3, m: 3, deg_a: 2, df: 2, dg: 2, mode: GeneratorMode::Planted },
            5,
        ),
        (
            Gf::prime(101).unwrap(),
            InstanceParams { n: 2, m: 3, deg_a: 1, df: 3, dg: 1, mode: GeneratorMode::Planted },
            4,
        ),
        (
            Gf::binary(6).unwrap(),
            InstanceParams { n: 1, m: 2, deg_a: 2, df: 1, dg: 3, mode: GeneratorMode::Planted },
            3,
        ),
    ];
    let (mut matched, mut runs) = (0, 0);
    while runs < 1500 {
        let (field, ip, e) = &configs[runs % 3];
        let (sys, sol) = generate_instance(field, ip, &mut rng).unwrap();
        let l = l_bk(ip.df, ip.dg, *e, 0);
        let Ok(points) = choose_evaluation_points(field, &sys, sol.denominator(), l, &mut rng) else { continue };
        let actual = rng.gen_range(0..=*e);
        let plan = ErrorPlan::random(l, actual, &mut rng).unwrap();
        let samples = if runs % 2 == 0 {
            sample_black_box(field, &sys, &sol, &points, &plan, &mut rng).unwrap()
        } else {
            let (other, _) = generate_instance(field, ip, &mut rng).unwrap();
            match adversarial_corrupt(field, &sys, &sol, &points, &plan, &other) {
                Ok(s) => s,
                Err(_) => continue,
            }
        };
        let truth = Poly::from_roots(field, samples.iter().filter(|s| s.corrupted).map(|s| s.eval.point));
        let params = DecodeParams::new(ip.n, ip.df, ip.dg, *e);
        let out = bk_solve(field, &EvaluationSample::into_evaluations(samples), params, 0).unwrap();
        if out.locator() == Some(&truth) && out.solution() == Some(&sol) {
            matched += 1;
        }
        runs += 1;
    }
    (matched == runs, format!("baseline locator equals the error-set product on {matched}/{runs} runs"))
}

/// Determinant by cofactor expansion along the first row.
fn det(field: &Gf, m: &[Vec<Poly<Fe>>]) -> Poly<Fe> {
    match m.len() {
        1 => m[0][0].clone(),
        size => (0..size).fold(Poly::zero(), |acc, j| {
            let minor: Vec<Vec<_>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
                .collect();
            let term = m[0][j].mul(field, &det(field, &minor));
            if j % 2 == 0 {
                acc.add(field, &term)
            } else {
                acc.sub(field, &term)
            }
        }),
    }
}

fn cramer(field: &Gf, sys: &PolySystem<Fe>) -> Option<(Vec<Poly<Fe>>, Poly<Fe>)> {
    let n = sys.n();
    let a: Vec<Vec<_>> = (0..n).map(|i| (0..n).map(|j| sys.matrix().get(i, j).clone()).collect()).collect();
    let d = det(field, &a);
    if d.is_zero() {
        return None;
    }
    let numerators = (0..n)
        .map(|col| {
            let replaced: Vec<Vec<_>> = (0..n)
                .map(|i| (0..n).map(|j| if j == col { sys.rhs()[i].clone() } else { a[i][j].clone() }).collect())
                .collect();
            det(field, &replaced)
        })
        .collect();
    Some((numerators, d))
}

fn criterion_6() -> Verdict {
    let field = Gf::prime(7).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut equal, mut checked, mut rejected) = (0, 0, 0);
    let mut per_n = [0; 2];
    while checked < 200 {
        let n = 1 + checked % 2;
        let sys = if checked % 4 < 2 {
            let ip = InstanceParams {
                n,
                m: n,
                deg_a: rng.gen_range(0..2),
                df: rng.gen_range(0..3),
                dg: rng.gen_range(0..2),
                mode: GeneratorMode::Planted,
            };
            generate_instance(&field, &ip, &mut rng).unwrap().0
        } else {
            let a = PolyMatrix::random(&field, n, n, rng.gen_range(0..3), &mut rng);
            let b = (0..n).map(|_| Poly::random(&field, rng.gen_range(0..3), &mut rng)).collect();
            PolySystem::new(a, b).unwrap()
        };
        if (0..n).any(|i| (0..n).any(|j| sys.matrix().get(i, j).degree() > 2)) {
            rejected += 1;
            continue;
        }
        let Some((num, den)) = cramer(&field, &sys) else {
            rejected += 1;
            continue;
        };
        let df = num.iter().map(Poly::degree).max().unwrap().max(0) as usize;
        let dg = den.degree() as usize;
        let got = match exact_solve(&field, &sys, df, dg) {
            Ok(s) => s,
            Err(Error::InsufficientPoints { .. }) => {
                rejected += 1;
                continue;
            }
            Err(e) => panic!("{e}"),
        };
        let want = reduce_fraction(&field, &num, &den).unwrap();
        if got == want {
            equal += 1;
        }
        per_n[n - 1] += 1;
        checked += 1;
    }
    (
        equal == checked,
        format!(
            "exact solver equals the determinant-ratio oracle on {equal}/{checked} instances over GF(7), n=1: {}, n=2: {} ({rejected} infeasible draws skipped)",
            per_n[0], per_n[1]
        ),
    )
}

/// Berlekamp-Welch over GF(p) with plain integer arithmetic.
mod bw {
    pub fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    fn inv(a: u64, p: u64) -> u64 {
        pow(a, p - 2, p)
    }

    /// Some solution of `m x = rhs`, if one exists.
    fn solve(mut m: Vec<Vec<u64>>, mut rhs: Vec<u64>, p: u64) -> Option<Vec<u64>> {
        let (rows, cols) = (m.len(), m[0].len());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
            m.swap(r, piv);
            rhs.swap(r, piv);
            let s = inv(m[r][c], p);
            for v in m[r].iter_mut() {
                *v = *v * s % p;
            }
            rhs[r] = rhs[r] * s % p;
            for i in 0..rows {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    let pivot_row = m[r].clone();
                    for (v, &pv) in m[i].iter_mut().zip(&pivot_row) {
                        *v = (*v + p - f * pv % p) % p;
                    }
                    rhs[i] = (rhs[i] + p - f * rhs[r] % p) % p;
                }
            }
            pivots.push(c);
            r += 1;
        }
        if rhs[r..].iter().any(|&v| v != 0) {
            return None;
        }
        let mut x = vec![0; cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = rhs[i];
        }
        Some(x)
    }

    /// Long division; `None` unless `den` divides `num` exactly.
    fn divide(num: &[u64], den: &[u64], p: u64) -> Option<Vec<u64>> {
        let mut rem = num.to_vec();
        let dd = den.len() - 1;
        if rem.len() <= dd {
            return rem.iter().all(|&v| v == 0).then(Vec::new);
        }
        let mut q = vec![0; rem.len() - dd];
        let li = inv(den[dd], p);
        for k in (0..q.len()).rev() {
            let c = rem[k + dd] * li % p;
            q[k] = c;
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - c * d % p) % p;
            }
        }
        rem.iter().all(|&v| v == 0).then_some(q)
    }

    /// Message coefficients (length `k`) for `e` errors.
    pub fn decode(xs: &[u64], ys: &[u64], k: usize, e: usize, p: u64) -> Option<Vec<u64>> {
        // unknowns: E_0..E_{e-1} (E monic of degree e), Q_0..Q_{k+e-1}
        let mut m = Vec::new();
        let mut rhs = Vec::new();
        for (&x, &y) in xs.iter().zip(ys) {
            let mut row = Vec::with_capacity(k + 2 * e);
            for j in 0..e {
                row.push(y * pow(x, j as u64, p) % p);
            }
            for j in 0..k + e {
                row.push((p - pow(x, j as u64, p)) % p);
            }
            m.push(row);
            rhs.push((p - y * pow(x, e as u64, p) % p) % p);
        }
        let sol = solve(m, rhs, p)?;
        let mut err_loc = sol[..e].to_vec();
        err_loc.push(1);
        let mut f = divide(&sol[e..], &err_loc, p)?;
        f.resize(k.max(f.len()), 0);
        if f[k..].iter().any(|&v| v != 0) {
            return None;
        }
        f.truncate(k);
        Some(f)
    }
}

fn criterion_7() -> Verdict {
    let p = 101u64;
    let field = Gf::prime(p as u32).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut agree = 0;
    for _ in 0..500 {
        let n_c = rng.gen_range(8..=40);
        let k = rng.gen_range(1..n_c - 1);
        let e = rng.gen_range(0..=(n_c - k) / 2);
        let points: Vec<Fe> = field.elements().skip(rng.gen_range(0..50)).take(n_c).collect();
        let params = IrsParams::new(&field, k, 1, points).unwrap();
        let inst = random_spr_instance(&field, &params, e, &mut rng).unwrap();
        let xs: Vec<u64> = params.points().iter().map(|x| x.value() as u64).collect();
        let ys: Vec<u64> = inst.received.row(0).iter().map(|y| y.value() as u64).collect();
        let oracle = bw::decode(&xs, &ys, k, e, p);
        let ours = match spr_decode(&field, &inst.received, &params, e).unwrap() {
            SprOutcome::Decoded(msgs) => {
                let mut c: Vec<u64> = msgs[0].coeffs().iter().map(|v| v.value() as u64).collect();
                c.resize(k, 0);
                Some(c)
            }
            SprOutcome::Fail(_) => None,
        };
        let mut truth: Vec<u64> = inst.messages[0].coeffs().iter().map(|v| v.value() as u64).collect();
        truth.resize(k, 0);
        if ours == oracle && ours.as_ref() == Some(&truth) {
            agree += 1;
        }
    }

    let f16 = Gf::binary(4).unwrap();
    let params = IrsParams::new(&f16, 4, 3, f16.elements().collect()).unwrap();
    let (trials, e) = (2000, 7);
    let mut ok = 0;
    for _ in 0..trials {
        let inst = random_spr_instance(&f16, &params, e, &mut rng).unwrap();
        if spr_decode(&f16, &inst.received, &params, e).unwrap() == SprOutcome::Decoded(inst.messages) {
            ok += 1;
        }
    }
    let bound = 1.0 - e as f64 / 16.0;
    let sigma = (bound * (1.0 - bound) / trials as f64).sqrt();
    let rate = ok as f64 / trials as f64;
    (
        agree == 500 && rate >= bound - 3.0 * sigma,
        format!(
            "r=1 agrees with Berlekamp-Welch on {agree}/500; r=3 GF(16) e=7 success {rate:.4} (>= {:.4})",
            bound - 3.0 * sigma
        ),
    )
}

fn criterion_8() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let field = Gf::binary(6).unwrap();
    let (mut annihilated, mut rank_ok, mut instances) = (0, 0, 0);
    while instances < 300 {
        let n = rng.gen_range(1..=3);
        let ip = InstanceParams {
            n,
            m: n + rng.gen_range(0..2),
            deg_a: rng.gen_range(0..3),
            df: rng.gen_range(0..4),
            dg: rng.gen_range(0..3),
            mode: GeneratorMode::Planted,
        };
        let e = rng.gen_range(0..5);
        let params = DecodeParams::new(n, ip.df, ip.dg, e);
        let (sys, sol) = generate_instance(&field, &ip, &mut rng).unwrap();
        let l = params.l_star() + rng.gen_range(0..3);
        let Ok(points) = choose_evaluation_points(&field, &sys, sol.denominator(), l, &mut rng) else { continue };
        let plan = ErrorPlan::random(l, rng.gen_range(0..=e), &mut rng).unwrap();
        let samples = sample_black_box(&field, &sys, &sol, &points, &plan, &mut rng).unwrap();
        let locator = Poly::from_roots(&field, samples.iter().filter(|s| s.corrupted).map(|s| s.eval.point));
        let evals = EvaluationSample::into_evaluations(samples);
        let values: Vec<_> = local_kernels(&field, &evals, rng.gen()).unwrap().into_iter().map(|v| v.y).collect();
        let key = build_key_matrix(&field, &values, &points, params).unwrap();
        let phi: Vec<_> = sol.numerators().iter().map(|f| f.mul(&field, &locator)).collect();
        let psi = sol.denominator().mul(&field, &locator);
        let v = params.join(&field, &phi, &psi).unwrap();
        if key.matrix().mul_vec(&field, &v).iter().all(|x| field.is_zero(*x)) {
            annihilated += 1;
        }
        if key.matrix().rank(&field) <= params.rho() {
            rank_ok += 1;
        }
        instances += 1;
    }

    let mut remark = true;
    for n in 1..=10 {
        for df in 0..=10 {
            for dg in 0..=10 {
                for e in 0..=10 {
                    remark &= l_glz(n, df, dg, e) <= l_bk(df, dg, e, 0);
                }
            }
        }
    }

    let big = Gf::prime(1009).unwrap();
    let (mut witnessed, mut configs) = (0, 0);
    while configs < 100 {
        let n = rng.gen_range(1..=4);
        let ip = InstanceParams {
            n,
            m: n,
            deg_a: 1,
            df: rng.gen_range(0..4),
            dg: rng.gen_range(0..4),
            mode: GeneratorMode::Planted,
        };
        let e = rng.gen_range(0..6);
        let params = DecodeParams::new(n, ip.df, ip.dg, e);
        let l = params.l_glz();
        if e > n * l.saturating_sub(ip.df + ip.dg + e + 1) && e > 0 {
            continue;
        }
        let (sys, sol) = generate_instance(&big, &ip, &mut rng).unwrap();
        let points = choose_evaluation_points(&big, &sys, sol.denominator(), l, &mut rng).unwrap();
        let errors: Vec<usize> = ErrorPlan::random(l, e, &mut rng).unwrap().errors().collect();
        if kernel_dim_one_witness(&big, &sol, &points, &errors, params).unwrap() {
            witnessed += 1;
        }
        configs += 1;
    }
    (
        annihilated == instances && rank_ok == instances && remark && witnessed == configs,
        format!(
            "(Λf, Λg) in kernel {annihilated}/{instances}, rank <= rho {rank_ok}/{instances}, L_GLZ <= L_BK exhaustive: {remark}, witness {witnessed}/{configs}"
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 8] = [
        ("1", criterion_1),
        ("2", criterion_2),
        ("3", criterion_3),
        ("4", criterion_4),
        ("5", criterion_5),
        ("6", criterion_6),
        ("7", criterion_7),
        ("8", criterion_8),
    ];
    let mut failed = 0;
    for (id, check) in criteria {
        let (pass, detail) = check();
        println!("{} criterion {id}: {detail}", if pass { "PASS" } else { "FAIL" });
        failed += usize::from(!pass);
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
