use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use polsys::bk::{bk_solve, l_bk};
use polsys::experiment::{metadata_line, run_experiment, Corruption, ExperimentConfig, LMode, Method, CSV_HEADER};
use polsys::format::InstanceFile;
use polsys::glz::{decode, l_glz, l_star, DecodeOptions, DecodeOutcome, DecodeParams};
use polsys::irs::{random_spr_instance, reference_bounds, spr_decode, IrsParams, SprOutcome};
use polsys::oracle::{adversarial_corrupt, sample_black_box, ErrorPlan, EvaluationSample};
use polsys::system::{choose_evaluation_points, generate_instance, GeneratorMode, InstanceParams};
use polsys::{Field, Gf, Poly};

#[derive(Parser, Debug)]
#[command(name = "polsys", version, about = "Solve polynomial linear systems from erroneous black-box evaluations")]
struct Cli {
    /// Master seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Field, e.g. `GF(101)`, `GF(2^4; 1,1,0,0,1)` or `GF(16)`.
    #[arg(long, global = true, default_value = "GF(16)")]
    field: Gf,

    /// Suppress informational output on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a random planted instance.
    Gen(GenArgs),
    /// Evaluate an instance at random points, corrupting some of them.
    Corrupt(CorruptArgs),
    /// Recover the solution from a samples file.
    Solve(SolveArgs),
    /// Simultaneous polynomial reconstruction trials on interleaved RS codes.
    Irs(IrsArgs),
    /// Print point counts and failure bounds.
    Bounds(BoundsArgs),
    /// Failure-rate experiments over a parameter grid, as CSV.
    Experiment(ExperimentArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(short, default_value_t = 3)]
    n: usize,
    /// Equations; defaults to `n`.
    #[arg(short)]
    m: Option<usize>,
    #[arg(long, default_value_t = 2)]
    deg_a: usize,
    #[arg(long, default_value_t = 2)]
    df: usize,
    #[arg(long, default_value_t = 2)]
    dg: usize,
    /// Denominator-free instance with `b = A f`.
    #[arg(long)]
    cramer: bool,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CorruptArgs {
    /// Instance with a SOLUTION block.
    input: PathBuf,
    /// Number of errors.
    #[arg(short, default_value_t = 0)]
    e: usize,
    /// Number of evaluation points; defaults to the key-equation bound.
    #[arg(long, short = 'L')]
    points: Option<usize>,
    /// Corrupt with honest evaluations of an unrelated system.
    #[arg(long)]
    adversarial: bool,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Glz,
    Bk,
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// Samples file.
    input: PathBuf,
    #[arg(long, value_enum, default_value = "glz")]
    method: MethodArg,
    /// Numerator degree bound; defaults to the file's SOLUTION block.
    #[arg(long)]
    df: Option<usize>,
    #[arg(long)]
    dg: Option<usize>,
    /// Error bound; defaults to the size of the ERRORS line.
    #[arg(short)]
    e: Option<usize>,
    /// Skip the final consistency check.
    #[arg(long)]
    no_verify: bool,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct IrsArgs {
    /// Code length; defaults to the field order.
    #[arg(long)]
    n_c: Option<usize>,
    #[arg(short, default_value_t = 4)]
    k: usize,
    #[arg(short, default_value_t = 3)]
    r: usize,
    #[arg(short, default_value_t = 7)]
    e: usize,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(short, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    df: usize,
    #[arg(long, default_value_t = 2)]
    dg: usize,
    #[arg(short, default_value_t = 5)]
    e: usize,
    /// Rank-drop allowance of the baseline bound.
    #[arg(short, default_value_t = 0)]
    t: usize,
}

#[derive(Args, Debug)]
struct ExperimentArgs {
    /// Field orders; defaults to the global field.
    #[arg(long, value_delimiter = ',')]
    q: Vec<u64>,
    #[arg(short, default_value_t = 3)]
    n: usize,
    #[arg(short)]
    m: Option<usize>,
    #[arg(long, default_value_t = 2)]
    deg_a: usize,
    #[arg(long, default_value_t = 2)]
    df: usize,
    #[arg(long, default_value_t = 2)]
    dg: usize,
    #[arg(short, value_delimiter = ',', default_value = "5")]
    e: Vec<usize>,
    /// Point-count modes: glz, bk, star or an explicit number.
    #[arg(long, value_delimiter = ',', default_value = "glz")]
    mode: Vec<LMode>,
    #[arg(long, default_value = "glz")]
    method: Method,
    #[arg(long, default_value = "random")]
    corruption: Corruption,
    #[arg(long, default_value_t = 20)]
    systems: usize,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long)]
    workers: Option<usize>,
    /// Fill the `ms` column with wall-clock times.
    #[arg(long)]
    timing: bool,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

/// A decoder failure, reported with exit code 1.
#[derive(Debug)]
struct DecodeFailed(&'static str);

impl std::fmt::Display for DecodeFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "decoding failed: {}", self.0)
    }
}

impl std::error::Error for DecodeFailed {}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing to stdout"),
    }
}

fn read_instance(path: &Path) -> anyhow::Result<InstanceFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    InstanceFile::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn coeffs(p: &Poly<polsys::Fe>) -> String {
    p.coeffs().iter().map(|c| c.value().to_string()).collect::<Vec<_>>().join(",")
}

fn gen(cli: &Cli, args: &GenArgs) -> anyhow::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let params = InstanceParams {
        n: args.n,
        m: args.m.unwrap_or(args.n),
        deg_a: args.deg_a,
        df: args.df,
        dg: if args.cramer { 0 } else { args.dg },
        mode: if args.cramer { GeneratorMode::Cramer } else { GeneratorMode::Planted },
    };
    let (sys, sol) = generate_instance(&cli.field, &params, &mut rng)?;
    let mut file = InstanceFile::with_system(cli.field.clone(), sys);
    file.solution = Some(sol);
    emit(args.out.as_deref(), &file.to_text())
}

fn corrupt(cli: &Cli, args: &CorruptArgs) -> anyhow::Result<()> {
    let mut file = read_instance(&args.input)?;
    let field = file.field.clone();
    let (Some(sys), Some(sol)) = (file.system.clone(), file.solution.clone()) else {
        bail!("{} needs both a system and a SOLUTION block", args.input.display());
    };
    let (df, dg) = (sol.df().max(0) as usize, sol.dg() as usize);
    let l = args.points.unwrap_or_else(|| l_glz(sys.n(), df, dg, args.e));
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let points = choose_evaluation_points(&field, &sys, sol.denominator(), l, &mut rng)?;
    let plan = ErrorPlan::random(l, args.e, &mut rng)?;
    let samples = if args.adversarial {
        let shape = InstanceParams {
            n: sys.n(),
            m: sys.m(),
            deg_a: sys.matrix().max_degree().max(0) as usize,
            df,
            dg,
            mode: GeneratorMode::Planted,
        };
        let mut found = None;
        for _ in 0..polsys::system::GENERATOR_RETRIES {
            let (other, _) = generate_instance(&field, &shape, &mut rng)?;
            if let Ok(s) = adversarial_corrupt(&field, &sys, &sol, &points, &plan, &other) {
                found = Some(s);
                break;
            }
        }
        found.context("no replacement system keeps full rank at the corrupted points")?
    } else {
        sample_black_box(&field, &sys, &sol, &points, &plan, &mut rng)?
    };
    file.errors = Some(samples.iter().filter(|s| s.corrupted).map(|s| s.index).collect());
    file.samples = EvaluationSample::into_evaluations(samples);
    if !cli.quiet {
        eprintln!("{l} samples, {} corrupted", file.errors.as_ref().map_or(0, Vec::len));
    }
    emit(args.out.as_deref(), &file.to_text())
}

fn solve(cli: &Cli, args: &SolveArgs) -> anyhow::Result<()> {
    let file = read_instance(&args.input)?;
    let field = &file.field;
    let known = file.solution.as_ref();
    let df = args.df.or(known.map(|s| s.df().max(0) as usize)).context("--df is required without a SOLUTION block")?;
    let dg = args.dg.or(known.map(|s| s.dg() as usize)).context("--dg is required without a SOLUTION block")?;
    let e = args.e.or(file.errors.as_ref().map(Vec::len)).context("-e is required without an ERRORS line")?;
    let params = DecodeParams::new(file.n, df, dg, e);
    let outcome = match args.method {
        MethodArg::Glz => {
            let opts = DecodeOptions { verify: !args.no_verify, system: file.system.as_ref(), seed: cli.seed };
            decode(field, &file.samples, params, &opts)?
        }
        MethodArg::Bk => bk_solve(field, &file.samples, params, 0)?,
    };
    match outcome {
        DecodeOutcome::Success { solution, locator } => {
            if !cli.quiet {
                if let Some(k) = known {
                    eprintln!(
                        "{}",
                        if *k == solution {
                            "matches the planted solution"
                        } else {
                            "differs from the planted solution"
                        }
                    );
                }
            }
            let mut out = InstanceFile::new(field.clone(), file.m, file.n);
            out.solution = Some(solution);
            let text = format!("{}# locator: {}\n", out.to_text(), coeffs(&locator));
            emit(args.out.as_deref(), &text)
        }
        DecodeOutcome::Fail(reason) => Err(DecodeFailed(reason.as_str()).into()),
    }
}

fn irs(cli: &Cli, args: &IrsArgs) -> anyhow::Result<()> {
    let field = &cli.field;
    let n_c = args.n_c.unwrap_or(field.order().min(1 << 16) as usize);
    if n_c as u64 > field.order() {
        bail!("the field has fewer than {n_c} elements");
    }
    let params = IrsParams::new(field, args.k, args.r, field.elements().take(n_c).collect())?;
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut ok = 0;
    for _ in 0..args.trials {
        let inst = random_spr_instance(field, &params, args.e, &mut rng)?;
        if let SprOutcome::Decoded(msgs) = spr_decode(field, &inst.received, &params, args.e)? {
            if msgs == inst.messages {
                ok += 1;
            }
        }
    }
    let bounds = reference_bounds(field.order(), n_c, args.k, args.r, args.e, 0);
    println!("n_c={n_c} k={} r={} e={} trials={}", args.k, args.r, args.e, args.trials);
    println!("successes={ok}");
    println!("rate={:.6}", ok as f64 / args.trials as f64);
    println!("lower_bound={:.6}", 1.0 - bounds.p_spr);
    println!("e_max_collab={}", bounds.e_max_collab);
    println!("unique_radius={}", params.unique_radius());
    Ok(())
}

fn bounds(cli: &Cli, args: &BoundsArgs) -> anyhow::Result<()> {
    let q = cli.field.order();
    let rb = reference_bounds(q, 0, 0, args.n, args.e, args.dg);
    println!("L_GLZ={}", l_glz(args.n, args.df, args.dg, args.e));
    println!("L_BK={}", l_bk(args.df, args.dg, args.e, args.t));
    println!("L*={}", l_star(args.n, args.df, args.dg, args.e));
    println!("p_glz={}", polsys::experiment::sig6(rb.p_glz));
    println!("p_bms={}", polsys::experiment::sig6(rb.p_bms));
    Ok(())
}

fn experiment(cli: &Cli, args: &ExperimentArgs) -> anyhow::Result<()> {
    let fields = if args.q.is_empty() {
        vec![cli.field.clone()]
    } else {
        args.q.iter().map(|&q| Gf::for_order(q)).collect::<Result<_, _>>()?
    };
    let mut text = String::new();
    for field in fields {
        for &e in &args.e {
            for &mode in &args.mode {
                let cfg = ExperimentConfig {
                    field: field.clone(),
                    n: args.n,
                    m: args.m.unwrap_or(args.n),
                    deg_a: args.deg_a,
                    df: args.df,
                    dg: args.dg,
                    e,
                    l_mode: mode,
                    systems: args.systems,
                    trials: args.trials,
                    seed: cli.seed,
                    method: args.method,
                    corruption: args.corruption,
                    workers: args.workers,
                };
                if text.is_empty() {
                    text.push_str(&metadata_line(&cfg));
                    text.push('\n');
                    text.push_str(CSV_HEADER);
                    text.push('\n');
                }
                let row = run_experiment(&cfg)?;
                if !cli.quiet {
                    eprintln!("q={} e={e} L={} failures={} wrong={}", row.q, row.l, row.failures, row.wrong);
                }
                text.push_str(&row.csv_row(args.timing));
                text.push('\n');
            }
        }
    }
    emit(args.out.as_deref(), &text)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Gen(a) => gen(&cli, a),
        Command::Corrupt(a) => corrupt(&cli, a),
        Command::Solve(a) => solve(&cli, a),
        Command::Irs(a) => irs(&cli, a),
        Command::Bounds(a) => bounds(&cli, a),
        Command::Experiment(a) => experiment(&cli, a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<DecodeFailed>() => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
