//! Monte-Carlo failure-rate harness.
//!
//! Every configuration draws `systems` planted instances and runs `trials`
//! independent decodings on each, with fresh evaluation points, error
//! positions and corruptions per trial. Per-trial generators are ChaCha
//! streams addressed by `(system, trial)`, so results do not depend on the
//! worker count.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bk::{bk_solve, l_bk};
use crate::error::{invalid, Error, Result};
use crate::field::{Field, Gf};
pub use crate::glz::l_star;
use crate::glz::{decode, l_glz, DecodeOptions, DecodeOutcome, DecodeParams, FailReason};
use crate::irs::{p_bms, p_glz};
use crate::oracle::{adversarial_corrupt, sample_black_box, ErrorPlan, EvaluationSample};
use crate::system::{
    choose_evaluation_points, generate_instance, GeneratorMode, InstanceParams, PolySystem, ReducedRationalSolution,
    GENERATOR_RETRIES,
};
use crate::Fe;

/// How the number of evaluation points is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LMode {
    Glz,
    Bk,
    Star,
    Explicit(usize),
}

impl LMode {
    pub fn points(&self, n: usize, df: usize, dg: usize, e: usize) -> usize {
        match *self {
            LMode::Glz => l_glz(n, df, dg, e),
            LMode::Bk => l_bk(df, dg, e, 0),
            LMode::Star => l_star(n, df, dg, e),
            LMode::Explicit(l) => l,
        }
    }
}

impl fmt::Display for LMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LMode::Glz => write!(f, "GLZ"),
            LMode::Bk => write!(f, "BK"),
            LMode::Star => write!(f, "STAR"),
            LMode::Explicit(l) => write!(f, "L{l}"),
        }
    }
}

impl FromStr for LMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "glz" => Ok(LMode::Glz),
            "bk" => Ok(LMode::Bk),
            "star" => Ok(LMode::Star),
            other => other
                .trim_start_matches('l')
                .parse()
                .map(LMode::Explicit)
                .map_err(|_| invalid(format!("unknown point-count mode `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Glz,
    Bk,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Glz => "glz",
            Method::Bk => "bk",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "glz" => Ok(Method::Glz),
            "bk" => Ok(Method::Bk),
            _ => Err(invalid(format!("unknown method `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corruption {
    /// Uniform full-rank inconsistent samples.
    Random,
    /// Honest samples of an unrelated system of the same shape.
    Adversarial,
}

impl fmt::Display for Corruption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Corruption::Random => "random",
            Corruption::Adversarial => "adversarial",
        })
    }
}

impl FromStr for Corruption {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "random" => Ok(Corruption::Random),
            "adversarial" => Ok(Corruption::Adversarial),
            _ => Err(invalid(format!("unknown corruption model `{s}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub field: Gf,
    pub n: usize,
    pub m: usize,
    pub deg_a: usize,
    pub df: usize,
    pub dg: usize,
    pub e: usize,
    pub l_mode: LMode,
    pub systems: usize,
    pub trials: usize,
    pub seed: u64,
    pub method: Method,
    pub corruption: Corruption,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl ExperimentConfig {
    /// `n = m = 3`, `df = dg = 2`, `deg_a = 2`, `e = 5`, 20 systems of 1000
    /// trials at `L_GLZ` points.
    pub fn table_defaults(field: Gf) -> Self {
        Self {
            field,
            n: 3,
            m: 3,
            deg_a: 2,
            df: 2,
            dg: 2,
            e: 5,
            l_mode: LMode::Glz,
            systems: 20,
            trials: 1000,
            seed: 0,
            method: Method::Glz,
            corruption: Corruption::Random,
            workers: None,
        }
    }

    pub fn points(&self) -> usize {
        self.l_mode.points(self.n, self.df, self.dg, self.e)
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 || self.m < self.n || self.systems == 0 || self.trials == 0 {
            return Err(invalid("need m >= n >= 1 and at least one system and trial"));
        }
        let l = self.points();
        if l < self.e {
            return Err(invalid(format!("cannot place {} errors among {l} points", self.e)));
        }
        match self.method {
            Method::Glz if l < l_star(self.n, self.df, self.dg, self.e) => {
                Err(invalid(format!("{l} points is below the key-equation minimum")))
            }
            Method::Bk if l < l_bk(self.df, self.dg, self.e, 0) => {
                Err(invalid(format!("{l} points is below the baseline minimum")))
            }
            _ => Ok(()),
        }
    }
}

/// One CSV row of aggregated results.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentResult {
    pub q: u64,
    pub n: usize,
    pub m: usize,
    pub df: usize,
    pub dg: usize,
    pub e: usize,
    pub l: usize,
    pub mode: LMode,
    pub method: Method,
    pub systems: usize,
    pub trials: usize,
    /// Decoder reported failure.
    pub failures: usize,
    /// Decoder reported success with a solution other than the planted one.
    pub wrong: usize,
    pub fail_reasons: [usize; 3],
    pub p_observed: f64,
    pub p_glz: f64,
    pub p_bms: f64,
    pub seed: u64,
    pub ms: u128,
}

pub const CSV_HEADER: &str = "q,n,m,df,dg,e,L,mode,method,systems,trials,failures,wrong,p_observed,p_glz,p_bms,seed,ms";

/// Six significant digits, no exponent.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

impl ExperimentResult {
    pub fn total_trials(&self) -> usize {
        self.systems * self.trials
    }

    /// `(failures + wrong) / total`.
    pub fn p_unsuccessful(&self) -> f64 {
        (self.failures + self.wrong) as f64 / self.total_trials() as f64
    }

    /// The `ms` column is written as 0 unless `timing` is set, so that rows
    /// are byte-reproducible by default.
    pub fn csv_row(&self, timing: bool) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.q,
            self.n,
            self.m,
            self.df,
            self.dg,
            self.e,
            self.l,
            self.mode,
            self.method,
            self.systems,
            self.trials,
            self.failures,
            self.wrong,
            sig6(self.p_observed),
            sig6(self.p_glz),
            sig6(self.p_bms),
            self.seed,
            if timing { self.ms } else { 0 },
        )
    }
}

/// Comment line recording the generator choices behind a CSV file.
pub fn metadata_line(cfg: &ExperimentConfig) -> String {
    format!(
        "# generator=planted n={} m={} deg_a={} df={} dg={} corruption={} seed={}",
        cfg.n, cfg.m, cfg.deg_a, cfg.df, cfg.dg, cfg.corruption, cfg.seed
    )
}

struct PreparedSystem {
    sys: PolySystem<Fe>,
    sol: ReducedRationalSolution<Fe>,
    alt: Option<PolySystem<Fe>>,
}

const SYSTEM_STREAM: u64 = 1 << 63;

fn trial_rng(seed: u64, system: usize, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((system as u64) << 32) | trial as u64);
    rng
}

/// Draws a system with at least `l` usable points, resampling otherwise.
fn prepare_system(cfg: &ExperimentConfig, index: usize, l: usize) -> Result<PreparedSystem> {
    let field = &cfg.field;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(SYSTEM_STREAM | index as u64);
    let params =
        InstanceParams { n: cfg.n, m: cfg.m, deg_a: cfg.deg_a, df: cfg.df, dg: cfg.dg, mode: GeneratorMode::Planted };
    let mut last_err = None;
    for _ in 0..GENERATOR_RETRIES {
        let (sys, sol) = generate_instance(field, &params, &mut rng)?;
        match choose_evaluation_points(field, &sys, sol.denominator(), l, &mut rng) {
            Ok(_) => {}
            Err(e @ Error::InsufficientPoints { .. }) => {
                last_err = Some(e);
                continue;
            }
            Err(e) => return Err(e),
        }
        let alt = match cfg.corruption {
            Corruption::Random => None,
            Corruption::Adversarial => Some(generate_instance(field, &params, &mut rng)?.0),
        };
        return Ok(PreparedSystem { sys, sol, alt });
    }
    Err(last_err.unwrap_or(Error::RetryBudget { budget: GENERATOR_RETRIES, what: "drawing a feasible system" }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrialOutcome {
    Correct,
    Failed(FailReason),
    Wrong,
}

fn draw_samples(
    cfg: &ExperimentConfig,
    prep: &PreparedSystem,
    l: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<EvaluationSample<Fe>>> {
    let field = &cfg.field;
    let g = prep.sol.denominator();
    match &prep.alt {
        None => {
            let points = choose_evaluation_points(field, &prep.sys, g, l, rng)?;
            let plan = ErrorPlan::random(l, cfg.e, rng)?;
            sample_black_box(field, &prep.sys, &prep.sol, &points, &plan, rng)
        }
        Some(alt) => {
            for _ in 0..GENERATOR_RETRIES {
                let points = choose_evaluation_points(field, &prep.sys, g, l, rng)?;
                let plan = ErrorPlan::random(l, cfg.e, rng)?;
                if let Ok(samples) = adversarial_corrupt(field, &prep.sys, &prep.sol, &points, &plan, alt) {
                    return Ok(samples);
                }
            }
            Err(Error::RetryBudget { budget: GENERATOR_RETRIES, what: "placing adversarial errors" })
        }
    }
}

fn run_trial(cfg: &ExperimentConfig, prep: &PreparedSystem, l: usize, mut rng: ChaCha8Rng) -> Result<TrialOutcome> {
    let field = &cfg.field;
    let samples = EvaluationSample::into_evaluations(draw_samples(cfg, prep, l, &mut rng)?);
    let params = DecodeParams::new(cfg.n, cfg.df, cfg.dg, cfg.e);
    let outcome = match cfg.method {
        Method::Glz => {
            let opts = DecodeOptions { verify: true, system: None, seed: rng.gen() };
            decode(field, &samples, params, &opts)?
        }
        Method::Bk => bk_solve(field, &samples, params, 0)?,
    };
    Ok(match outcome {
        DecodeOutcome::Success { solution, .. } if solution == prep.sol => TrialOutcome::Correct,
        DecodeOutcome::Success { .. } => TrialOutcome::Wrong,
        DecodeOutcome::Fail(reason) => TrialOutcome::Failed(reason),
    })
}

/// Runs one configuration.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentResult> {
    cfg.validate()?;
    let start = Instant::now();
    let l = cfg.points();
    let systems = (0..cfg.systems).map(|s| prepare_system(cfg, s, l)).collect::<Result<Vec<_>>>()?;
    let work = || {
        (0..cfg.systems * cfg.trials)
            .into_par_iter()
            .map(|job| {
                let (s, t) = (job / cfg.trials, job % cfg.trials);
                run_trial(cfg, &systems[s], l, trial_rng(cfg.seed, s, t))
            })
            .collect::<Result<Vec<_>>>()
    };
    let outcomes = match cfg.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| invalid(format!("cannot build worker pool: {e}")))?
            .install(work)?,
        None => work()?,
    };
    let mut fail_reasons = [0usize; 3];
    let mut wrong = 0;
    for o in &outcomes {
        match o {
            TrialOutcome::Correct => {}
            TrialOutcome::Wrong => wrong += 1,
            TrialOutcome::Failed(r) => {
                fail_reasons[match r {
                    FailReason::RankDeficient => 0,
                    FailReason::ZeroSolution => 1,
                    FailReason::VerifyFailed => 2,
                }] += 1
            }
        }
    }
    let failures = fail_reasons.iter().sum();
    let q = cfg.field.order();
    Ok(ExperimentResult {
        q,
        n: cfg.n,
        m: cfg.m,
        df: cfg.df,
        dg: cfg.dg,
        e: cfg.e,
        l,
        mode: cfg.l_mode,
        method: cfg.method,
        systems: cfg.systems,
        trials: cfg.trials,
        failures,
        wrong,
        fail_reasons,
        p_observed: failures as f64 / (cfg.systems * cfg.trials) as f64,
        p_glz: p_glz(q, cfg.dg, cfg.e),
        p_bms: p_bms(q, cfg.n),
        seed: cfg.seed,
        ms: start.elapsed().as_millis(),
    })
}
