//! `ldgm-rd`: bound curves, verification campaigns and enumerator tables for
//! LDGM codes.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ldgm_bounds::bounds::{linear_grid, sample_curve, BoundCurve};
use ldgm_bounds::exact::{
    cumulative_generating_counts, distortion_grid, lower_bound_at, verify_code, weight_enumerator,
    MAX_COVER_BLOCKLENGTH, MAX_ENUM_GENERATORS,
};
use ldgm_bounds::{BoundSpec, DegreeSpec, LdgmCode, VerificationReport};
use num_bigint::BigUint;

#[derive(Parser)]
#[command(
    name = "ldgm-rd",
    version,
    about = "Rate-distortion lower bounds for LDGM codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a bound on a rate grid and write it as CSV with header `D,R`.
    Curve(CurveArgs),
    /// Sample codes and check them exhaustively against the bounds.
    Verify(VerifyArgs),
    /// Print the weight enumerator of a code next to its lower bound N(w).
    Enum {
        /// Code file: `ldgm <m> <n>` followed by one row of positions per generator.
        code: PathBuf,
    },
    /// Sample one code and write it in the code file format.
    Sample(SampleArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundKind {
    Shannon,
    Counting,
    TestChannel,
    Dwr,
    Conjecture,
}

#[derive(clap::Args)]
struct CurveArgs {
    #[arg(long, value_enum)]
    bound: BoundKind,
    /// `d:frac,...`, `regular:<l>` or `poisson:<r>`.
    #[arg(long)]
    degrees: Option<DegreeSpec>,
    /// Generator degree for test-channel and conjecture.
    #[arg(long)]
    l: Option<u32>,
    /// Check degree for dwr.
    #[arg(long)]
    r: Option<u32>,
    #[arg(long, default_value_t = 0.0)]
    rate_min: f64,
    #[arg(long, default_value_t = 1.0)]
    rate_max: f64,
    #[arg(long, default_value_t = 101)]
    steps: usize,
    /// Output path; standard output if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    degrees: DegreeSpec,
    #[arg(long, default_value_t = 1)]
    trials: u64,
    /// Trial `i` uses seed `seed + i`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Points in the distortion grid over [0, 1/2].
    #[arg(long, default_value_t = 26)]
    d_steps: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct SampleArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    degrees: DegreeSpec,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot write {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// `v` with 10 significant digits.
fn sig10(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let decimals = (9 - v.abs().log10().floor() as i32).max(0) as usize;
    format!("{v:.decimals$}")
}

fn integral_check_degree(spec: &DegreeSpec) -> Result<u32> {
    match spec {
        DegreeSpec::Poisson(r) if r.fract() == 0.0 && *r >= 1.0 => Ok(*r as u32),
        _ => bail!("dwr needs an integer check degree: --r <r> or --degrees poisson:<r>"),
    }
}

fn generator_degree(args: &CurveArgs) -> Result<u32> {
    match (args.l, &args.degrees) {
        (Some(l), _) => Ok(l),
        (None, Some(DegreeSpec::Regular(l))) => Ok(*l),
        _ => bail!("this bound needs --l <l> or --degrees regular:<l>"),
    }
}

fn bound_spec(args: &CurveArgs) -> Result<BoundSpec> {
    Ok(match args.bound {
        BoundKind::Shannon => BoundSpec::Shannon,
        BoundKind::Counting => match (&args.degrees, args.l) {
            (Some(d), _) => BoundSpec::Counting(d.clone()),
            (None, Some(l)) => BoundSpec::Counting(DegreeSpec::Regular(l)),
            (None, None) => bail!("counting needs --degrees <spec> or --l <l>"),
        },
        BoundKind::TestChannel => BoundSpec::TestChannel {
            l: generator_degree(args)?,
        },
        BoundKind::Conjecture => BoundSpec::ConjecturedExit {
            l: generator_degree(args)?,
        },
        BoundKind::Dwr => BoundSpec::Dwr {
            r: match (args.r, &args.degrees) {
                (Some(r), _) => r,
                (None, Some(spec)) => integral_check_degree(spec)?,
                (None, None) => bail!("dwr needs --r <r> or --degrees poisson:<r>"),
            },
        },
    })
}

fn write_curve(out: &mut dyn Write, curve: &BoundCurve) -> io::Result<()> {
    if curve.spec.is_conjecture() {
        writeln!(out, "# CONJECTURE (unproven)")?;
    }
    writeln!(out, "# bound: {}", curve.spec)?;
    if let Some(e) = &curve.endpoints {
        let mut point = |name: &str, p: &ldgm_bounds::RatePoint| {
            writeln!(
                out,
                "# {name}: D={},R={}",
                sig10(p.distortion),
                sig10(p.rate)
            )
        };
        point("x=0", &e.start)?;
        point("x=1", &e.end)?;
        if let Some(j) = &e.junction {
            point("line joins curve", j)?;
        }
    }
    writeln!(out, "D,R")?;
    for p in &curve.points {
        writeln!(out, "{},{}", sig10(p.distortion), sig10(p.rate))?;
    }
    out.flush()
}

fn cmd_curve(args: CurveArgs) -> Result<ExitCode> {
    let spec = bound_spec(&args)?;
    let grid = linear_grid(args.rate_min, args.rate_max, args.steps)?;
    let curve = sample_curve(&spec, &grid)?;
    write_curve(&mut *output(args.out.as_deref())?, &curve)?;
    Ok(ExitCode::SUCCESS)
}

fn report_line(r: &VerificationReport) -> String {
    let first_violation = r
        .enumerator
        .first_violation
        .map_or_else(|| "none".to_string(), |w| w.to_string());
    format!(
        "seed={} optimal={} bound={} margin={} cover_margin={} enum_violation={} {}",
        r.seed.map_or_else(|| "-".into(), |s| s.to_string()),
        sig10(r.optimal_distortion),
        sig10(r.counting_bound),
        sig10(r.bound_margin),
        sig10(r.min_cover_margin()),
        first_violation,
        if r.passed() { "PASS" } else { "FAIL" },
    )
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    if args.m > MAX_COVER_BLOCKLENGTH {
        bail!(
            "m = {} exceeds the covering budget of {MAX_COVER_BLOCKLENGTH}",
            args.m
        );
    }
    if args.n > MAX_ENUM_GENERATORS {
        bail!(
            "n = {} exceeds the enumeration budget of {MAX_ENUM_GENERATORS}",
            args.n
        );
    }
    if args.m == 0 {
        bail!("m must be positive");
    }
    if args.n > args.m {
        bail!("n = {} > m = {}: rate above 1", args.n, args.m);
    }
    let rate = args.n as f64 / args.m as f64;
    let dist = args.degrees.resolve(if rate > 0.0 { rate } else { 1.0 })?;
    if dist.max_degree() as usize > args.m {
        bail!(
            "degree {} exceeds blocklength {}",
            dist.max_degree(),
            args.m
        );
    }
    let grid = distortion_grid(args.d_steps);
    let mut out = output(args.out.as_deref())?;
    let mut failures = 0u64;
    let mut min_optimal = f64::INFINITY;
    for i in 0..args.trials {
        let seed = args.seed.wrapping_add(i);
        let code = LdgmCode::sample(args.m, args.n, &dist, seed)?;
        let report = verify_code(&code, &dist, &grid)?.with_seed(seed);
        min_optimal = min_optimal.min(report.optimal_distortion);
        if !report.passed() {
            failures += 1;
        }
        writeln!(out, "{}", report_line(&report))?;
    }
    writeln!(
        out,
        "summary: m={} n={} degrees={} trials={} passed={} failed={} min_optimal={}",
        args.m,
        args.n,
        dist,
        args.trials,
        args.trials - failures,
        failures,
        if args.trials > 0 {
            sig10(min_optimal)
        } else {
            "-".into()
        },
    )?;
    out.flush()?;
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_enum(path: &Path) -> Result<ExitCode> {
    let code = LdgmCode::read(path).with_context(|| format!("reading {}", path.display()))?;
    let enumerator = weight_enumerator(&code)?;
    let lower = cumulative_generating_counts(&code.degree_counts());
    // past the total degree both columns have reached 2^n
    let last = code.m().min(lower.len() - 1);
    let mut out = output(None)?;
    writeln!(out, "w\tA(w)\tcumA(w)\tN(w)\tcumA>=N")?;
    let cumulative = enumerator.cumulative();
    let columns = enumerator.counts().iter().zip(&cumulative);
    for (w, (a, cum)) in columns.enumerate().take(last + 1) {
        let n_w = lower_bound_at(&lower, w);
        let ok = BigUint::from(*cum) >= *n_w;
        writeln!(
            out,
            "{w}\t{a}\t{cum}\t{n_w}\t{}",
            if ok { "yes" } else { "NO" }
        )?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_sample(args: SampleArgs) -> Result<ExitCode> {
    let rate = args.n as f64 / args.m.max(1) as f64;
    let dist = args.degrees.resolve(if rate > 0.0 { rate } else { 1.0 })?;
    let code = LdgmCode::sample(args.m, args.n, &dist, args.seed)?;
    let mut out = output(args.out.as_deref())?;
    write!(out, "{code}")?;
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Curve(a) => cmd_curve(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Enum { code } => cmd_enum(&code),
        Command::Sample(a) => cmd_sample(a),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}

#[cfg(test)]
mod tests {
    use super::sig10;

    #[test]
    fn ten_significant_digits() {
        assert_eq!(sig10(0.0), "0");
        assert_eq!(sig10(0.5), "0.5000000000");
        assert_eq!(sig10(1.0), "1.000000000");
        assert_eq!(sig10(0.0816370132), "0.08163701320");
        assert_eq!(sig10(2.0 / 3.0), "0.6666666667");
    }
}
