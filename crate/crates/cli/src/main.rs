//! `incidence`: analyze point sets, verify the incidence inequalities on
//! them, generate configurations and scan bound constants.
//!
//! Exit codes: 0 success, 1 usage/I/O/parse/domain error, 2 a check or the
//! oracle cross-check failed, 3 the constant maximum could not be isolated.

mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use incidence_core::bounds::{
    self, few_h, few_params_with_table, scan_constants_few_limited, scan_constants_wd_limited,
    wd_h, wd_params_with_table, wd_x, wd_y, TailTable, DEFAULT_CUTOFF, DEFAULT_CUTOFF_LIMIT,
};
use incidence_core::generators::GeneratorSpec;
use incidence_core::rational::{format_rational, parse_rational};
use incidence_core::{io, oracle, Arrangement, CrossingConstants, Error, Interval, VerifyContext};

use report::{pair, AnalyzeReport, ConstantsReport, FewRow, Rows, VerifyReport, WdRow};

#[derive(Parser)]
#[command(
    name = "incidence",
    version,
    about = "Exact point-line incidence toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Grid,
    NearPencil,
    Circle,
    Random,
    Collinear,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    /// f(c) for the weak Dirac incidence bound (c >= 8)
    Wd,
    /// 2A/(1+2B) for the few-point-lines bound (c >= 29)
    Few,
}

#[derive(Subcommand)]
enum Command {
    /// Print the line statistics of a point-set file
    Analyze {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check every incidence inequality on a point-set file
    Verify {
        input: PathBuf,
        /// Compare the line enumeration against the brute-force oracle first
        #[arg(long)]
        cross_check: bool,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Only run checks whose name starts with one of these (comma separated)
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
    },
    /// Write a generated configuration as a point-set file
    Generate {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        w: Option<u64>,
        #[arg(long)]
        h: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        bound: u64,
        /// Output path; stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate the bound constants over a range of c and isolate the maximum
    Constants {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        c_min: Option<u64>,
        #[arg(long, default_value_t = 200)]
        c_max: u64,
        /// Also report delta and r at this eps (wd family only)
        #[arg(long)]
        eps: Option<String>,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: u64,
        /// Stop doubling the cutoff beyond this many terms
        #[arg(long, default_value_t = DEFAULT_CUTOFF_LIMIT)]
        cutoff_limit: u64,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

const EXIT_CHECK_FAILED: u8 = 2;
const EXIT_UNRESOLVED: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Analyze { input, format } => analyze(&input, format),
        Command::Verify {
            input,
            cross_check,
            cutoff,
            format,
            suite,
        } => verify(&input, cross_check, cutoff, format, &suite),
        Command::Generate {
            kind,
            w,
            h,
            n,
            seed,
            bound,
            out,
        } => generate(kind, w, h, n, seed, bound, out.as_deref()),
        Command::Constants {
            family,
            c_min,
            c_max,
            eps,
            cutoff,
            cutoff_limit,
            alpha,
            beta,
            format,
        } => constants(
            family,
            c_min,
            c_max,
            eps,
            cutoff,
            cutoff_limit,
            alpha,
            beta,
            format,
        ),
    }
}

fn emit(text: String) -> Result<()> {
    let mut stdout = std::io::stdout().lock();
    stdout.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        stdout.write_all(b"\n")?;
    }
    Ok(())
}

fn load(input: &Path) -> Result<(incidence_core::PointSet, Arrangement)> {
    let ps = io::read_point_set(input)?;
    let arr = Arrangement::build(&ps)?;
    Ok((ps, arr))
}

fn analyze(input: &Path, format: Format) -> Result<u8> {
    let (_, arr) = load(input)?;
    let report = AnalyzeReport::new(&input.display().to_string(), &arr);
    emit(match format {
        Format::Text => report.to_text(),
        Format::Json => serde_json::to_string_pretty(&report)?,
    })?;
    Ok(0)
}

fn verify(
    input: &Path,
    cross_check: bool,
    cutoff: u64,
    format: Format,
    suite: &[String],
) -> Result<u8> {
    let (ps, arr) = load(input)?;
    let name = input.display().to_string();
    let mut matched = None;
    if cross_check {
        if let Some(mismatch) = oracle::cross_check(&ps, &arr)? {
            eprintln!(
                "oracle mismatch: missing {:?}, unexpected {:?}",
                mismatch.missing, mismatch.unexpected
            );
            return Ok(EXIT_CHECK_FAILED);
        }
        matched = Some(true);
    }
    let ctx = VerifyContext::new(CrossingConstants::default(), cutoff)?;
    let mut theorems = ctx.verify(&arr);
    theorems.retain_suites(suite);
    let report = VerifyReport::new(&name, &arr, &theorems, matched);
    emit(match format {
        Format::Text => report::verify_text(&report, &theorems),
        Format::Json => serde_json::to_string_pretty(&report)?,
    })?;
    Ok(if theorems.all_hold() {
        0
    } else {
        EXIT_CHECK_FAILED
    })
}

fn required(value: Option<u64>, flag: &str, kind: Kind) -> Result<u64> {
    value.ok_or_else(|| anyhow!("--{flag} is required for {kind:?}"))
}

fn generate(
    kind: Kind,
    w: Option<u64>,
    h: Option<u64>,
    n: Option<u64>,
    seed: u64,
    bound: u64,
    out: Option<&Path>,
) -> Result<u8> {
    let spec = match kind {
        Kind::Grid => GeneratorSpec::Grid {
            w: required(w, "w", kind)?,
            h: required(h, "h", kind)?,
        },
        Kind::NearPencil => GeneratorSpec::NearPencil {
            n: required(n, "n", kind)?,
        },
        Kind::Circle => GeneratorSpec::Circle {
            n: required(n, "n", kind)?,
        },
        Kind::Random => GeneratorSpec::Random {
            n: required(n, "n", kind)?,
            seed,
            bound,
        },
        Kind::Collinear => GeneratorSpec::Collinear {
            n: required(n, "n", kind)?,
        },
    };
    let ps = spec.generate()?;
    match out {
        Some(path) => io::write_point_set(path, &ps)?,
        None => emit(io::to_json(&ps))?,
    }
    Ok(0)
}

fn rational_flag(value: Option<String>, flag: &str) -> Result<Option<incidence_core::Rational>> {
    value
        .map(|s| parse_rational(&s).with_context(|| format!("--{flag}")))
        .transpose()
}

#[allow(clippy::too_many_arguments)]
fn constants(
    family: Family,
    c_min: Option<u64>,
    c_max: u64,
    eps: Option<String>,
    cutoff: u64,
    cutoff_limit: u64,
    alpha: Option<String>,
    beta: Option<String>,
    format: Format,
) -> Result<u8> {
    let defaults = CrossingConstants::default();
    let k = CrossingConstants::new(
        rational_flag(alpha, "alpha")?.unwrap_or(defaults.alpha),
        rational_flag(beta, "beta")?.unwrap_or(defaults.beta),
    )?;
    let eps = rational_flag(eps, "eps")?;
    let min_c = match family {
        Family::Wd => bounds::WD_MIN_C,
        Family::Few => bounds::FEW_MIN_C,
    };
    let c_min = c_min.unwrap_or(min_c);
    if c_min < min_c {
        bail!("--c-min must be at least {min_c} for this family, got {c_min}");
    }
    if c_max < c_min {
        bail!("--c-max {c_max} is below --c-min {c_min}");
    }
    if eps.is_some() && family == Family::Few {
        bail!("--eps applies to the wd family only");
    }

    let scan = match family {
        Family::Wd => scan_constants_wd_limited(c_min, c_max, &k, cutoff, cutoff_limit),
        Family::Few => scan_constants_few_limited(c_min, c_max, &k, cutoff, cutoff_limit),
    };
    let scan = match scan {
        Ok(scan) => scan,
        Err(Error::Unresolved { candidates, cutoff }) => {
            eprintln!(
                "maximum not isolated at cutoff {cutoff}; overlapping c values {candidates:?}"
            );
            return Ok(EXIT_UNRESOLVED);
        }
        Err(e) => return Err(e.into()),
    };

    let shown = |iv: &Interval| pair(&iv.outward_rounded_decimal(18));
    let table = TailTable::new(cutoff)?;
    let rows = match family {
        Family::Wd => Rows::Wd(
            (c_min..=c_max)
                .map(|c| {
                    let f = report::scan_row(&scan, c);
                    let (delta, r) = match &eps {
                        Some(eps) => {
                            let p = wd_params_with_table(c, eps, 2, &k, &table)?;
                            (Some(shown(&p.delta)), Some(format_rational(&p.r)))
                        }
                        None => (None, None),
                    };
                    Ok(WdRow {
                        c,
                        h: format_rational(&wd_h(c)),
                        x: format_rational(&wd_x(c)),
                        y: format_rational(&wd_y(c)),
                        f: shown(f),
                        delta,
                        r,
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        ),
        Family::Few => Rows::Few(
            (c_min..=c_max)
                .map(|c| {
                    let p = few_params_with_table(c, &k, &table)?;
                    // the scan row may be a refined enclosure
                    let ratio = report::scan_row(&scan, c).clone();
                    Ok(FewRow {
                        c,
                        h: format_rational(&few_h(c)),
                        x: format_rational(&p.x),
                        a: shown(&p.a),
                        b: format_rational(&p.b),
                        eps: shown(&ratio),
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    let report = ConstantsReport {
        family: match family {
            Family::Wd => "wd",
            Family::Few => "few",
        }
        .to_string(),
        alpha: format_rational(&k.alpha),
        beta: format_rational(&k.beta),
        eps: eps.as_ref().map(format_rational),
        cutoff: scan.cutoff,
        argmax: scan.argmax,
        rows,
    };
    emit(match format {
        Format::Text => report.to_text(),
        Format::Json => serde_json::to_string_pretty(&report)?,
    })?;
    Ok(0)
}
