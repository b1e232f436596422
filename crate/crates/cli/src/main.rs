//! staircase-tableaux: count, verify, sample and plot tableaux of staircase
//! shapes minus rectangles.

mod config;
mod plot;

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::json;

use staircase_core::bijections::{phi_map, psi, staircase_parts};
use staircase_core::counting::{count_linear_extensions, feit, product_formula, shifted_hlf};
use staircase_core::io::{self as tio, AnyTableau};
use staircase_core::sampling::{
    benchmark_scaling, fitted_exponent, sample_shifted_syt, sample_skew_staircase, RandomSource,
};
use staircase_core::shapes::{cell_census, eta, rectangle, shifted_staircase, staircase, Partition, SkewShape};
use staircase_core::tableaux::{enumerate_marked, enumerate_standard};
use staircase_core::verify::{run_suite, Check, Suite};

use config::Config;

#[derive(Parser, Debug)]
#[command(name = "staircase-tableaux", version, about = "Tableaux of staircase-minus-rectangle and shifted shapes")]
struct Cli {
    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for verify and batch sampling (default 1, or the config value).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// JSON config file; overrides STAIRCASE_TABLEAUX_CONFIG.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Count standard tableaux of δ_k/(b^a).
    Count {
        #[arg(long)]
        staircase: usize,
        /// Rectangle with a rows of length b.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        rect: Option<Vec<usize>>,
        /// Use one method instead of cross-checking every applicable one.
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Run invariant suites; exit status 1 if any check fails.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Draw uniform random tableaux and write them to files.
    Sample {
        #[arg(long)]
        staircase: usize,
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        rect: Option<Vec<usize>>,
        /// Sample ShSYT(ϱ_k) instead.
        #[arg(long, conflicts_with = "rect")]
        shifted: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Output path; with --count > 1 an index is appended to the stem.
        #[arg(long, default_value = "sample.csv")]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Render a sampled CSV tableau as SVG with level curves.
    Plot {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Comma-separated levels in [0, 1], as fractions of the largest entry.
        #[arg(long)]
        levels: Option<String>,
    },
    /// Time the sampler over staircase sizes and fit the log-log exponent.
    Benchmark {
        #[arg(long, value_delimiter = ',', default_values_t = [50usize, 100, 150, 200, 250, 300, 350, 400])]
        ks: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV table of k, a, b, median seconds.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write every tableau of δ_k/(b^a), or of ShSYT′(η) with --marked, as JSON.
    Enumerate {
        #[arg(long)]
        staircase: usize,
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        rect: Option<Vec<usize>>,
        #[arg(long)]
        marked: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Apply φ (to a tableau of δ_k/(b^a)) or ψ (to a marked tableau of η).
    Apply {
        #[arg(long, value_enum)]
        map: MapKind,
        #[arg(long = "in")]
        input: PathBuf,
        /// Needed for ψ.
        #[arg(long)]
        staircase: Option<usize>,
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        rect: Option<Vec<usize>>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Feit,
    Oracle,
    Shifted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MapKind {
    Phi,
    Psi,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|_| "expected one of tableaux, words, insertion, bijections, counting, ktheory, all".into())
}

/// Usage problems exit with status 2, failed checks with 1.
enum Failure {
    Usage(anyhow::Error),
    Check(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<staircase_core::Error> for Failure {
    fn from(e: staircase_core::Error) -> Self {
        Failure::Usage(e.into())
    }
}

fn rect_args(k: usize, rect: &Option<Vec<usize>>) -> anyhow::Result<(usize, usize)> {
    let (a, b) = match rect.as_deref() {
        None => (0, 0),
        Some([a, b]) => (*a, *b),
        Some(_) => bail!("--rect takes two values"),
    };
    if k == 0 {
        bail!("--staircase must be positive");
    }
    if a * b > 0 && a + b >= k {
        bail!("need a+b < k, got a={a} b={b} k={k}");
    }
    Ok(if a * b == 0 { (0, 0) } else { (a, b) })
}

fn rect_partition(a: usize, b: usize) -> Partition {
    if a * b == 0 {
        Partition::empty()
    } else {
        rectangle(a, b)
    }
}

fn count_by(k: usize, a: usize, b: usize, m: Method) -> anyhow::Result<Option<BigUint>> {
    let mu = rect_partition(a, b);
    Ok(match m {
        Method::Formula => {
            // An empty rectangle is written as (k mod 2, 0) so that k - a - b is even.
            let (a, b) = if a * b == 0 { (k % 2, 0) } else { (a, b) };
            if (k - a - b) % 2 == 1 {
                None
            } else {
                Some(product_formula(a, b, (k - a - b) / 2)?)
            }
        }
        Method::Feit => feit(&staircase(k), &mu).ok(),
        Method::Oracle => count_linear_extensions(&SkewShape::skew(&staircase(k), &mu)?).ok(),
        Method::Shifted => {
            let e = eta(k, a, b)?;
            Some(shifted_hlf(&e) << cell_census(&e).1)
        }
    })
}

fn cmd_count(cli: &Cli, k: usize, rect: &Option<Vec<usize>>, method: Option<Method>) -> Result<(), Failure> {
    let (a, b) = rect_args(k, rect)?;
    let methods: Vec<Method> = match method {
        Some(m) => vec![m],
        None => Method::value_variants().to_vec(),
    };
    let mut results: Vec<(Method, BigUint)> = Vec::new();
    for m in methods {
        match count_by(k, a, b, m)? {
            Some(v) => results.push((m, v)),
            None if method.is_some() => return Err(anyhow!("method {m:?} does not apply to k={k}, rect=({a},{b})").into()),
            None => {}
        }
    }
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let count = results[0].1.to_string();
    if cli.json {
        let per: serde_json::Map<String, serde_json::Value> = results
            .iter()
            .map(|(m, v)| (format!("{m:?}").to_lowercase(), json!(v.to_string())))
            .collect();
        println!("{}", json!({"staircase": k, "rect": [a, b], "count": count, "methods": per, "agree": agree}));
    } else if agree {
        println!("{count}");
    } else {
        for (m, v) in &results {
            println!("{m:?}: {v}");
        }
    }
    if agree {
        Ok(())
    } else {
        Err(Failure::Check("counting methods disagree".into()))
    }
}

fn pool(threads: usize) -> anyhow::Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build().context("building the worker pool")
}

fn cmd_verify(cli: &Cli, cfg: &Config, suite: Suite, max_n: Option<usize>) -> Result<(), Failure> {
    let max_n = max_n.unwrap_or(cfg.max_n);
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let checks: Vec<Check> =
        pool(cfg.threads)?.install(|| suites.par_iter().flat_map_iter(|&s| run_suite(s, max_n)).collect());
    let failed = checks.iter().filter(|c| !c.passed).count();
    if cli.json {
        println!("{}", json!({"suite": suite, "max_n": max_n, "passed": failed == 0, "checks": checks}));
    } else {
        for c in &checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            let detail = if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) };
            println!("{tag} {}: {} [{} cases]{detail}", c.suite, c.name, c.cases);
        }
        println!("{} of {} checks passed", checks.len() - failed, checks.len());
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check(format!("{failed} checks failed")))
    }
}

fn indexed_path(out: &Path, i: usize, count: usize) -> PathBuf {
    if count == 1 {
        return out.to_path_buf();
    }
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "sample".into());
    let name = match out.extension() {
        Some(ext) => format!("{stem}-{i}.{}", ext.to_string_lossy()),
        None => format!("{stem}-{i}"),
    };
    out.with_file_name(name)
}

fn write_tableau(t: &AnyTableau, path: &Path, format: Format) -> anyhow::Result<()> {
    let mut w = BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?);
    match format {
        Format::Csv => tio::write_csv(t, &mut w)?,
        Format::Json => writeln!(w, "{}", tio::to_json_string(t))?,
    }
    w.flush()?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_sample(
    cli: &Cli,
    cfg: &Config,
    k: usize,
    rect: &Option<Vec<usize>>,
    shifted: bool,
    seed: u64,
    count: usize,
    out: &Path,
    format: Format,
) -> Result<(), Failure> {
    let (a, b) = rect_args(k, rect)?;
    let src = RandomSource::new(seed);
    let draw = |i: usize| -> anyhow::Result<(PathBuf, f64)> {
        let mut rng = if count == 1 { src.clone() } else { src.split(i as u64) };
        let start = std::time::Instant::now();
        let t = if shifted {
            sample_shifted_syt(&shifted_staircase(k), &mut rng)?
        } else {
            sample_skew_staircase(k, a, b, &mut rng)?
        };
        let secs = start.elapsed().as_secs_f64();
        let path = indexed_path(out, i, count);
        write_tableau(&AnyTableau::Plain(t), &path, format)?;
        Ok((path, secs))
    };
    let done: Vec<(PathBuf, f64)> =
        pool(cfg.threads)?.install(|| (0..count).into_par_iter().map(draw).collect::<anyhow::Result<Vec<_>>>())?;
    for (path, secs) in &done {
        if cli.json {
            println!("{}", json!({"staircase": k, "rect": [a, b], "shifted": shifted, "seed": seed, "file": path, "seconds": secs}));
        } else {
            println!("wrote {} ({secs:.3} s)", path.display());
        }
    }
    Ok(())
}

fn cmd_plot(cli: &Cli, cfg: &Config, input: &Path, out: &Path, levels: &Option<String>) -> Result<(), Failure> {
    let levels = match levels {
        Some(s) => plot::parse_levels(s)?,
        None => cfg.levels.clone(),
    };
    let f = File::open(input).with_context(|| format!("opening {}", input.display()))?;
    let cells = tio::read_csv(BufReader::new(f))?;
    std::fs::write(out, plot::render_svg(&cells, &levels)).with_context(|| format!("writing {}", out.display()))?;
    if cli.json {
        println!("{}", json!({"in": input, "out": out, "cells": cells.len(), "levels": levels}));
    } else {
        println!("wrote {} ({} cells, {} levels)", out.display(), cells.len(), levels.len());
    }
    Ok(())
}

fn cmd_benchmark(cli: &Cli, ks: &[usize], reps: usize, seed: u64, out: &Option<PathBuf>) -> Result<(), Failure> {
    let rows = benchmark_scaling(ks, reps, seed)?;
    let slope = fitted_exponent(&rows);
    if let Some(p) = out {
        let mut w = csv::Writer::from_path(p).with_context(|| format!("creating {}", p.display()))?;
        w.write_record(["k", "a", "b", "median_secs"]).context("writing CSV")?;
        for r in &rows {
            w.write_record([r.k.to_string(), r.a.to_string(), r.b.to_string(), format!("{:.6}", r.median_secs)])
                .context("writing CSV")?;
        }
        w.flush().context("writing CSV")?;
    }
    if cli.json {
        let table: Vec<_> =
            rows.iter().map(|r| json!({"k": r.k, "a": r.a, "b": r.b, "median_secs": r.median_secs})).collect();
        println!("{}", json!({"rows": table, "exponent": slope}));
    } else {
        for r in &rows {
            println!("k={:<5} (a,b)=({},{})  {:.4} s", r.k, r.a, r.b, r.median_secs);
        }
        if let Some(s) = slope {
            println!("fitted exponent {s:.3}");
        }
    }
    Ok(())
}

fn cmd_enumerate(cli: &Cli, cfg: &Config, k: usize, rect: &Option<Vec<usize>>, marked: bool, out: &Path) -> Result<(), Failure> {
    let (a, b) = rect_args(k, rect)?;
    let shape = if marked {
        SkewShape::shifted(&eta(k, a, b)?)
    } else {
        SkewShape::skew(&staircase(k), &rect_partition(a, b))?
    };
    if shape.size() > cfg.bounds.max_cells {
        return Err(anyhow!("{} cells exceed the enumeration bound {}", shape.size(), cfg.bounds.max_cells).into());
    }
    let docs: Vec<serde_json::Value> = if marked {
        enumerate_marked(&shape).into_iter().map(|t| tio::to_json(&AnyTableau::Marked(t))).collect()
    } else {
        enumerate_standard(&shape).into_iter().map(|t| tio::to_json(&AnyTableau::Plain(t))).collect()
    };
    std::fs::write(out, serde_json::to_string(&docs).context("serializing")?)
        .with_context(|| format!("writing {}", out.display()))?;
    if cli.json {
        println!("{}", json!({"shape": shape, "count": docs.len(), "out": out}));
    } else {
        println!("wrote {} tableaux to {}", docs.len(), out.display());
    }
    Ok(())
}

fn cmd_apply(map: MapKind, input: &Path, k: Option<usize>, rect: &Option<Vec<usize>>) -> Result<(), Failure> {
    let text = std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let t = tio::from_json_str(&text)?;
    let result = match (map, t) {
        (MapKind::Phi, AnyTableau::Plain(t)) => {
            staircase_parts(t.shape())?;
            AnyTableau::Marked(phi_map(&t)?)
        }
        (MapKind::Psi, t) => {
            let u = match t {
                AnyTableau::Marked(u) => u,
                AnyTableau::Plain(p) if p.shape().is_shifted() => p.unmarked(),
                _ => return Err(anyhow!("ψ needs a marked shifted tableau").into()),
            };
            let k = k.ok_or_else(|| anyhow!("ψ needs --staircase"))?;
            let (a, b) = rect_args(k, rect)?;
            AnyTableau::Plain(psi(&u, k, a, b)?)
        }
        (MapKind::Phi, _) => return Err(anyhow!("φ needs a standard tableau of δ_k/(b^a)").into()),
    };
    println!("{}", tio::to_json_string(&result));
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<(), Failure> {
    let mut cfg = match &cli.config {
        Some(p) => Config::from_file(p)?,
        None => Config::load()?,
    };
    if let Some(t) = cli.threads {
        cfg.threads = t;
    }
    match &cli.cmd {
        Cmd::Count { staircase, rect, method } => cmd_count(cli, *staircase, rect, *method),
        Cmd::Verify { suite, max_n } => cmd_verify(cli, &cfg, *suite, *max_n),
        Cmd::Sample { staircase, rect, shifted, seed, count, out, format } => {
            cmd_sample(cli, &cfg, *staircase, rect, *shifted, *seed, *count, out, *format)
        }
        Cmd::Plot { input, out, levels } => cmd_plot(cli, &cfg, input, out, levels),
        Cmd::Benchmark { ks, reps, seed, out } => cmd_benchmark(cli, ks, *reps, *seed, out),
        Cmd::Enumerate { staircase, rect, marked, out } => cmd_enumerate(cli, &cfg, *staircase, rect, *marked, out),
        Cmd::Apply { map, input, staircase, rect } => cmd_apply(*map, input, *staircase, rect),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn counts_by_every_method() {
        for m in Method::value_variants() {
            if *m != Method::Formula {
                assert_eq!(count_by(4, 1, 2, *m).unwrap(), Some(BigUint::from(8u32)), "{m:?}");
            }
            assert_eq!(count_by(4, 1, 1, *m).unwrap(), Some(BigUint::from(16u32)), "{m:?}");
            assert_eq!(count_by(2, 0, 0, *m).unwrap(), Some(BigUint::from(1u32)), "{m:?}");
        }
        assert_eq!(count_by(4, 1, 2, Method::Formula).unwrap(), None);
        assert_eq!(count_by(5, 0, 0, Method::Formula).unwrap(), Some(BigUint::from(768u32)));
    }

    #[test]
    fn rect_validation() {
        assert!(rect_args(4, &Some(vec![2, 2])).is_err());
        assert_eq!(rect_args(4, &Some(vec![0, 3])).unwrap(), (0, 0));
        assert!(rect_args(0, &None).is_err());
    }

    #[test]
    fn indexed_paths() {
        assert_eq!(indexed_path(Path::new("d/s.csv"), 3, 5), PathBuf::from("d/s-3.csv"));
        assert_eq!(indexed_path(Path::new("d/s.csv"), 0, 1), PathBuf::from("d/s.csv"));
    }
}
