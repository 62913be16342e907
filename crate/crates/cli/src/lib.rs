//! `subres` command-line front end.
//!
//! Exit statuses: 0 on success, 1 on usage, parse or I/O errors, 2 when an internal
//! invariant is violated (a division that should be exact was not, or the two gcd
//! algorithms disagree).

pub mod bench;

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use subres_core::{
    build_sk, classic_gcd, classic_resultant, det_poly, gcd_degree_detect, gen_gcd, resultant_any,
    run_traced, Algorithm, Error, Integer, Poly, SizeMeasure, SplitPolicy, SplitSpec, TextCoeff,
    YPoly,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_INVARIANT: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "subres",
    version,
    about = "Exact polynomial gcd, resultants and subresultants over Z and Z[y]"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Coefficient ring.
    #[arg(long, global = true, value_enum, default_value_t = RingArg::Z)]
    pub ring: RingArg,

    /// Gcd algorithm; `both` runs the two and checks they agree. Defaults to
    /// `generalized`, or `both` for bench.
    #[arg(long, global = true, value_enum)]
    pub algorithm: Option<AlgorithmArg>,

    /// Coefficient size used to choose the division end and to report growth.
    #[arg(long = "size-measure", global = true, default_value_t = SizeMeasure::Bits)]
    pub size_measure: SizeMeasure,

    /// Subresultant index for `subres`.
    #[arg(long, global = true)]
    pub k: Option<usize>,

    /// Column split for `subres` and `detect`; defaults to the classical split.
    #[arg(long, global = true)]
    pub a: Option<usize>,

    /// Write the per-step trace as CSV to this path.
    #[arg(long, global = true)]
    pub trace: Option<PathBuf>,

    /// Pair file for `bench`: one `f ; g` per line, `#` starts a comment.
    #[arg(long = "in", global = true)]
    pub input: Option<PathBuf>,

    /// Seed for generated bench pairs when no `--in` is given.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Number of generated bench pairs.
    #[arg(long, global = true, default_value_t = 30)]
    pub cases: usize,

    /// Also write the bench pairs to this file, in the `--in` format.
    #[arg(long = "pairs-out", global = true)]
    pub pairs_out: Option<PathBuf>,

    /// Worker threads for bench; 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Greatest common divisor.
    Gcd(Pair),
    /// Resultant, up to sign.
    Resultant(Pair),
    /// Generalized subresultant polynomial of index `--k` under split `--a`.
    Subres(Pair),
    /// Degree of the gcd from the subresultant scan.
    Detect(Pair),
    /// Run both gcd algorithms over a set of pairs and emit the step trace CSV.
    Bench,
}

#[derive(Debug, clap::Args)]
pub struct Pair {
    #[arg(allow_hyphen_values = true)]
    pub f: String,
    #[arg(allow_hyphen_values = true)]
    pub g: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RingArg {
    Z,
    Zy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Classic,
    Generalized,
    Both,
}

impl AlgorithmArg {
    pub fn algorithms(self) -> &'static [Algorithm] {
        match self {
            AlgorithmArg::Classic => &[Algorithm::Classic],
            AlgorithmArg::Generalized => &[Algorithm::Generalized],
            AlgorithmArg::Both => &[Algorithm::Classic, Algorithm::Generalized],
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Invariant(String),
}

impl CliError {
    pub fn status(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Invariant(_) => EXIT_INVARIANT,
        }
    }
}

impl Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Invariant(m) => write!(f, "internal invariant violated: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotDivisible => CliError::Invariant(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Parses `argv` (including the program name), runs the command and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.ring {
        RingArg::Z => execute::<Integer>(&cli, out, err),
        RingArg::Zy => execute::<YPoly>(&cli, out, err),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.status()
        }
    }
}

pub fn parse_arg<R: TextCoeff>(text: &str) -> Result<Poly<R>, CliError> {
    subres_core::parse_poly(text).map_err(|e| CliError::Usage(format!("`{text}`: {e}")))
}

fn execute<R: TextCoeff>(
    cli: &Cli,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    match &cli.command {
        Command::Gcd(pair) => {
            let (f, g) = (parse_arg::<R>(&pair.f)?, parse_arg::<R>(&pair.g)?);
            let algorithm = cli.algorithm.unwrap_or(AlgorithmArg::Generalized);
            let result = gcd(&f, &g, algorithm, cli.size_measure, cli.trace.as_ref())?;
            writeln!(out, "{result}")?;
        }
        Command::Resultant(pair) => {
            let (f, g) = (parse_arg::<R>(&pair.f)?, parse_arg::<R>(&pair.g)?);
            let algorithm = cli.algorithm.unwrap_or(AlgorithmArg::Generalized);
            let mut results = Vec::new();
            for alg in algorithm.algorithms() {
                results.push(match alg {
                    Algorithm::Classic => classic_resultant(&f, &g)?,
                    Algorithm::Generalized => resultant_any(&f, &g, cli.size_measure)?,
                });
            }
            if let [a, b] = &results[..] {
                if *a != *b && *a != -b.clone() {
                    return Err(CliError::Invariant(format!(
                        "resultants differ: {a} vs {b}"
                    )));
                }
            }
            writeln!(out, "{}", results.last().expect("at least one algorithm"))?;
        }
        Command::Subres(pair) => {
            let (f, g) = ordered(parse_arg::<R>(&pair.f)?, parse_arg::<R>(&pair.g)?);
            let k = cli
                .k
                .ok_or_else(|| CliError::Usage("subres needs --k".into()))?;
            let mat = build_sk(&f, &g, k)?;
            let top = mat.nrows() - 1;
            let a = cli.a.unwrap_or(top);
            if a > top {
                return Err(CliError::Usage(format!(
                    "--a must be at most {top} for k = {k}"
                )));
            }
            let sp = det_poly(&mat, SplitSpec { a })?;
            writeln!(out, "{}", sp.poly)?;
        }
        Command::Detect(pair) => {
            let (f, g) = (parse_arg::<R>(&pair.f)?, parse_arg::<R>(&pair.g)?);
            let policy = cli.a.map_or(SplitPolicy::Classical, SplitPolicy::Fixed);
            writeln!(out, "{}", detect(&f, &g, policy)?)?;
        }
        Command::Bench => bench::run::<R>(cli, out, err)?,
    }
    Ok(())
}

fn ordered<R: TextCoeff>(f: Poly<R>, g: Poly<R>) -> (Poly<R>, Poly<R>) {
    if f.degree() < g.degree() {
        (g, f)
    } else {
        (f, g)
    }
}

/// Gcd with the leading coefficient's leading integer made positive.
pub fn gcd<R: TextCoeff>(
    f: &Poly<R>,
    g: &Poly<R>,
    algorithm: AlgorithmArg,
    measure: SizeMeasure,
    trace: Option<&PathBuf>,
) -> Result<Poly<R>, CliError> {
    let mut results = Vec::new();
    let mut rows = Vec::new();
    for &alg in algorithm.algorithms() {
        if trace.is_some() && !f.is_zero() && !g.is_zero() {
            let started = std::time::Instant::now();
            let (r, t) = run_traced(f, g, alg, measure)?;
            rows.extend(bench::trace_rows(
                1,
                &t,
                started.elapsed().as_nanos() as u64,
            ));
            results.push(r);
        } else {
            results.push(match alg {
                Algorithm::Classic => classic_gcd(f, g)?,
                Algorithm::Generalized => gen_gcd(f, g, measure)?,
            });
        }
    }
    if let Some(path) = trace {
        bench::write_csv(std::fs::File::create(path)?, &rows)?;
    }
    let results: Vec<Poly<R>> = results.into_iter().map(Poly::normalize_sign).collect();
    if let [a, b] = &results[..] {
        if a != b {
            return Err(CliError::Invariant(format!("gcds differ: {a} vs {b}")));
        }
    }
    Ok(results.into_iter().last().expect("at least one algorithm"))
}

/// Gcd degree, with common powers of `x` added back after the scan of the full parts.
pub fn detect<R: TextCoeff>(
    f: &Poly<R>,
    g: &Poly<R>,
    policy: SplitPolicy,
) -> Result<usize, CliError> {
    let (ff, a) = f.full_reduce()?;
    let (gf, b) = g.full_reduce()?;
    let common = a.min(b);
    let core = if ff.degree() == Some(0) || gf.degree() == Some(0) {
        0
    } else {
        gcd_degree_detect(&ff, &gf, policy)?
    };
    Ok(core + common)
}
