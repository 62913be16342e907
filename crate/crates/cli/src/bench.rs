//! Coefficient-growth bench: pair files, seeded pair generation and the step-trace CSV.

use std::io::Write;
use std::time::Instant;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use subres_core::{run_traced, Algorithm, Integer, Poly, PrsTrace, Ring, TextCoeff, YPoly};

use crate::{parse_arg, AlgorithmArg, Cli, CliError, RingArg};

pub const CSV_HEADER: [&str; 10] = [
    "case",
    "algorithm",
    "step",
    "deg_u",
    "deg_v",
    "delta",
    "lambda",
    "kind",
    "max_coeff_size",
    "elapsed_ns",
];

/// One CSV line. Summary rows have `kind = "summary"`, `step` = number of steps,
/// `deg_u`/`deg_v` = starting degrees, `delta`/`lambda` = totals over the run and
/// `elapsed_ns` = wall time of the whole run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub case: usize,
    pub algorithm: Algorithm,
    pub step: usize,
    pub deg_u: usize,
    pub deg_v: usize,
    pub delta: usize,
    pub lambda: usize,
    pub kind: String,
    pub max_coeff_size: Option<u64>,
    pub elapsed_ns: u64,
}

impl BenchRow {
    pub fn is_summary(&self) -> bool {
        self.kind == "summary"
    }

    fn record(&self) -> [String; 10] {
        [
            self.case.to_string(),
            self.algorithm.to_string(),
            self.step.to_string(),
            self.deg_u.to_string(),
            self.deg_v.to_string(),
            self.delta.to_string(),
            self.lambda.to_string(),
            self.kind.clone(),
            self.max_coeff_size
                .map_or_else(String::new, |s| s.to_string()),
            self.elapsed_ns.to_string(),
        ]
    }
}

pub fn trace_rows<R: Ring>(case: usize, trace: &PrsTrace<R>, wall_ns: u64) -> Vec<BenchRow> {
    let mut rows: Vec<BenchRow> = trace
        .steps
        .iter()
        .map(|s| BenchRow {
            case,
            algorithm: trace.algorithm,
            step: s.index,
            deg_u: s.deg_u,
            deg_v: s.deg_v,
            delta: s.delta,
            lambda: s.lambda,
            kind: s.kind.to_string(),
            max_coeff_size: s.max_coeff_size,
            elapsed_ns: s.elapsed_ns,
        })
        .collect();
    rows.push(BenchRow {
        case,
        algorithm: trace.algorithm,
        step: trace.steps.len(),
        deg_u: trace.start.0.degree().unwrap_or(0),
        deg_v: trace.start.1.degree().unwrap_or(0),
        delta: trace.deltas().iter().sum(),
        lambda: trace.lambdas().iter().sum(),
        kind: "summary".to_string(),
        max_coeff_size: trace.max_coeff_size(),
        elapsed_ns: wall_ns,
    });
    rows
}

pub fn write_csv<W: Write>(w: W, rows: &[BenchRow]) -> Result<(), csv::Error> {
    let mut writer = csv::Writer::from_writer(w);
    writer.write_record(CSV_HEADER)?;
    for row in rows {
        writer.write_record(row.record())?;
    }
    writer.flush()?;
    Ok(())
}

/// Reads `f ; g` lines, skipping blanks and `#` comments. Returns `(line number, f, g)`.
pub fn read_pairs(text: &str) -> Result<Vec<(usize, String, String)>, CliError> {
    let mut pairs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((f, g)) = line.split_once(';') else {
            return Err(CliError::Usage(format!("line {}: expected `f ; g`", i + 1)));
        };
        pairs.push((i + 1, f.trim().to_string(), g.trim().to_string()));
    }
    Ok(pairs)
}

fn small(rng: &mut ChaCha8Rng, bound: i64) -> Integer {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return Integer::from(c);
        }
    }
}

fn ycoeff(rng: &mut ChaCha8Rng, ydeg: usize, bound: i64) -> YPoly {
    let mut c: Vec<Integer> = (0..=ydeg).map(|_| small(rng, bound)).collect();
    c[ydeg] = small(rng, bound);
    YPoly(Poly::new(c))
}

/// Dense `Z[y]` polynomial whose trailing coefficient is an integer and whose leading
/// coefficient has y-degree 4; the others have y-degree at most 3.
fn small_trail_zy(rng: &mut ChaCha8Rng, deg: usize) -> Poly<YPoly> {
    let mut c = Vec::with_capacity(deg + 1);
    c.push(ycoeff(rng, 0, 7));
    for _ in 1..deg {
        let yd = rng.gen_range(0..=3);
        c.push(ycoeff(rng, yd, 63));
    }
    c.push(ycoeff(rng, 4, 63));
    Poly::new(c)
}

fn dense_z(rng: &mut ChaCha8Rng, deg: usize) -> Poly<Integer> {
    Poly::new((0..=deg).map(|_| small(rng, 1 << 20)).collect())
}

/// Seeded bench pairs, printed in the pair-file syntax.
pub fn generate_pairs(ring: RingArg, seed: u64, count: usize) -> Vec<(String, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let deg_f = rng.gen_range(5..=8);
            let deg_g = rng.gen_range(3..deg_f);
            match ring {
                RingArg::Zy => (
                    small_trail_zy(&mut rng, deg_f).to_string(),
                    small_trail_zy(&mut rng, deg_g).to_string(),
                ),
                RingArg::Z => (
                    dense_z(&mut rng, deg_f).to_string(),
                    dense_z(&mut rng, deg_g).to_string(),
                ),
            }
        })
        .collect()
}

struct CaseOutcome<R> {
    rows: Vec<BenchRow>,
    results: Vec<Poly<R>>,
    sizes: Vec<Option<u64>>,
    totals: Vec<u64>,
    walls: Vec<u64>,
}

pub(crate) fn run<R: TextCoeff>(
    cli: &Cli,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let pairs: Vec<(usize, String, String)> = match &cli.input {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            read_pairs(&text)?
        }
        None => generate_pairs(cli.ring, cli.seed.unwrap_or(0), cli.cases)
            .into_iter()
            .enumerate()
            .map(|(i, (f, g))| (i + 1, f, g))
            .collect(),
    };
    if let Some(path) = &cli.pairs_out {
        let mut file = std::fs::File::create(path)?;
        for (_, f, g) in &pairs {
            writeln!(file, "{f} ; {g}")?;
        }
    }
    let parsed = pairs
        .iter()
        .map(|(line, f, g)| {
            let f = parse_arg::<R>(f).map_err(|e| CliError::Usage(format!("line {line}: {e}")))?;
            let g = parse_arg::<R>(g).map_err(|e| CliError::Usage(format!("line {line}: {e}")))?;
            Ok((f, g))
        })
        .collect::<Result<Vec<_>, CliError>>()?;

    let algorithms = cli.algorithm.unwrap_or(AlgorithmArg::Both).algorithms();
    let measure = cli.size_measure;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let outcomes: Vec<Result<CaseOutcome<R>, CliError>> = pool.install(|| {
        parsed
            .par_iter()
            .enumerate()
            .map(|(i, (f, g))| {
                let mut outcome = CaseOutcome {
                    rows: Vec::new(),
                    results: Vec::new(),
                    sizes: Vec::new(),
                    totals: Vec::new(),
                    walls: Vec::new(),
                };
                for &alg in algorithms {
                    let started = Instant::now();
                    let (r, trace) = run_traced(f, g, alg, measure)?;
                    let wall = started.elapsed().as_nanos() as u64;
                    outcome.rows.extend(trace_rows(i + 1, &trace, wall));
                    outcome.results.push(r.normalize_sign());
                    outcome.sizes.push(trace.max_coeff_size());
                    outcome
                        .totals
                        .push(trace.steps.iter().filter_map(|s| s.max_coeff_size).sum());
                    outcome.walls.push(wall);
                }
                Ok(outcome)
            })
            .collect()
    });

    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    let (mut not_larger, mut strictly_smaller, mut compared) = (0usize, 0usize, 0usize);
    let (mut smaller_total, mut ratios) = (0usize, Vec::new());
    for (i, outcome) in outcomes.into_iter().enumerate() {
        let outcome = outcome?;
        if let [a, b] = &outcome.results[..] {
            if a != b {
                mismatches.push(i + 1);
            }
            compared += 1;
            if outcome.sizes[1] <= outcome.sizes[0] {
                not_larger += 1;
            }
            if outcome.sizes[1] < outcome.sizes[0] {
                strictly_smaller += 1;
            }
            if outcome.totals[1] < outcome.totals[0] {
                smaller_total += 1;
            }
            if outcome.walls[0] > 0 {
                ratios.push(outcome.walls[1] as f64 / outcome.walls[0] as f64);
            }
        }
        rows.extend(outcome.rows);
    }
    match &cli.trace {
        Some(path) => write_csv(std::fs::File::create(path)?, &rows)?,
        None => write_csv(&mut *out, &rows)?,
    }
    if compared > 0 {
        ratios.sort_by(f64::total_cmp);
        let median = ratios.get(ratios.len() / 2).copied().unwrap_or(f64::NAN);
        writeln!(
            err,
            "cases {compared}: generalized max_coeff_size <= classic in {not_larger} \
             (< in {strictly_smaller}); smaller per-step size total in {smaller_total}; \
             median wall-time ratio generalized/classic {median:.3}"
        )?;
    }
    if !mismatches.is_empty() {
        return Err(CliError::Invariant(format!(
            "gcds differ in cases {mismatches:?}"
        )));
    }
    Ok(())
}
