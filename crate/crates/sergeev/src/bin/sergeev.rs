//! Command-line front end: configure `(d, l, f)`, run identity suites,
//! construct named elements, and compute centers, emitting JSON reports.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on
//! usage or configuration errors.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sergeev::center::{self, ParityFilter, DEFAULT_GUARD};
use sergeev::cycles::{self, OrderedIndexSet};
use sergeev::element::ElementJson;
use sergeev::graded::{AlgebraConfig, GrAlgebra};
use sergeev::parity::ParityVector;
use sergeev::partitions::{Multipartition, Partition};
use sergeev::scalar;
use sergeev::sergeev::SergeevAlgebra;
use sergeev::suites;

#[derive(Parser)]
#[command(
    name = "sergeev",
    about = "Exact arithmetic and center computations in cyclotomic Sergeev superalgebras",
    version
)]
struct Cli {
    #[command(flatten)]
    config: ConfigArgs,

    /// Write the JSON report here instead of stdout
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ConfigArgs {
    /// Number of strands
    #[arg(long, global = true, default_value_t = 2)]
    d: usize,

    /// Level: the degree of the cyclotomic polynomial
    #[arg(long, global = true, default_value_t = 3)]
    l: usize,

    /// Coefficients of f in descending degree, comma-separated, leading 1
    /// (default x^l). Example for l = 3: --f 1,0,1,0 means x^3 + x.
    #[arg(long, global = true, value_delimiter = ',')]
    f: Option<Vec<String>>,

    /// Seed for randomized spot checks
    #[arg(long, global = true, default_value_t = 0x5e46ee)]
    seed: u64,

    /// Ambient dimension guard for center computations
    #[arg(long, global = true, default_value_t = DEFAULT_GUARD)]
    guard: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite
    Verify {
        /// One of: signs, hpoly, xcycles, cxcycles, oddskew, jm, zbasis,
        /// mbasis, main-theorem, relations, all
        #[arg(long)]
        suite: String,
    },
    /// Construct a named element and print it as JSON
    Element {
        /// One of: xcycle, cxcycle, oddskew, jm, z, m, p
        #[arg(long)]
        kind: String,

        /// Ordered index set, comma-separated (xcycle, cxcycle, oddskew)
        #[arg(long = "A", value_delimiter = ',')]
        a_set: Option<Vec<usize>>,

        /// Degree parameter r
        #[arg(long)]
        r: Option<usize>,

        /// Parity vector bits, comma-separated (xcycle)
        #[arg(long, value_delimiter = ',')]
        alpha: Option<Vec<u8>>,

        /// Strand index (jm)
        #[arg(long)]
        i: Option<usize>,

        /// Degree (jm)
        #[arg(long)]
        k: Option<usize>,

        /// Multipartition for z: components separated by '|', parts by ','
        /// (empty component = no parts), e.g. "3|,|1,1"
        #[arg(long)]
        lambda: Option<String>,

        /// Partition for m / p: comma-separated parts, or "-" for empty
        #[arg(long)]
        mu: Option<String>,
    },
    /// Compute a center basis by brute force
    Center {
        /// graded | sergeev
        #[arg(long)]
        algebra: String,

        /// even | all
        #[arg(long, default_value = "even")]
        parity: String,
    },
}

fn parse_config(args: &ConfigArgs) -> Result<AlgebraConfig, String> {
    match &args.f {
        None => {
            if args.d == 0 || args.l == 0 {
                return Err("d and l must be at least 1".into());
            }
            AlgebraConfig::new(args.d, args.l, {
                let mut c = vec![scalar::zero(); args.l + 1];
                c[0] = scalar::one();
                c
            })
            .map_err(|e| e.to_string())
        }
        Some(coeffs) => {
            let parsed: Result<Vec<_>, String> =
                coeffs.iter().map(|s| scalar::parse(s.trim())).collect();
            AlgebraConfig::new(args.d, args.l, parsed?).map_err(|e| e.to_string())
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let t = s.trim();
    if t.is_empty() || t == "-" {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<usize>, _> = t.split(',').map(|p| p.trim().parse::<usize>()).collect();
    Partition::new(parts.map_err(|e| format!("bad partition {s:?}: {e}"))?)
        .map_err(|e| e.to_string())
}

fn parse_multipartition(s: &str, l: usize) -> Result<Multipartition, String> {
    let comps: Result<Vec<Partition>, String> = s.split('|').map(parse_partition).collect();
    let comps = comps?;
    if comps.len() != l {
        return Err(format!("multipartition needs {l} components separated by '|', got {}", comps.len()));
    }
    Ok(Multipartition::new(comps))
}

fn emit(out: &Option<std::path::PathBuf>, value: &serde_json::Value) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    match out {
        None => {
            println!("{text}");
            Ok(())
        }
        Some(path) => {
            let mut file = std::fs::File::create(path).map_err(|e| e.to_string())?;
            writeln!(file, "{text}").map_err(|e| e.to_string())
        }
    }
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    let cfg = parse_config(&cli.config)?;
    match &cli.command {
        Command::Verify { suite } => {
            let report = suites::run_suite(suite, &cfg, cli.config.seed, cli.config.guard)
                .map_err(|e| e.to_string())?;
            let pass = report.pass;
            emit(&cli.out, &serde_json::to_value(&report).map_err(|e| e.to_string())?)?;
            Ok(pass)
        }
        Command::Element { kind, a_set, r, alpha, i, k, lambda, mu } => {
            let gr = GrAlgebra::new(cfg.clone());
            let json: ElementJson = match kind.as_str() {
                "xcycle" => {
                    let set = OrderedIndexSet::new(
                        a_set.clone().ok_or("xcycle needs --A")?,
                        cfg.d(),
                    )
                    .map_err(|e| e.to_string())?;
                    let av = ParityVector::new(alpha.clone().ok_or("xcycle needs --alpha")?);
                    cycles::xcycle(&gr, &set, r.unwrap_or(0), &av)
                        .map_err(|e| e.to_string())?
                        .to_json(cfg.d(), cfg.l())
                }
                "cxcycle" => {
                    let set = OrderedIndexSet::new(
                        a_set.clone().ok_or("cxcycle needs --A")?,
                        cfg.d(),
                    )
                    .map_err(|e| e.to_string())?;
                    cycles::cxcycle(&gr, &set, r.unwrap_or(0))
                        .map_err(|e| e.to_string())?
                        .to_json(cfg.d(), cfg.l())
                }
                "oddskew" => {
                    let set = OrderedIndexSet::new(
                        a_set.clone().ok_or("oddskew needs --A")?,
                        cfg.d(),
                    )
                    .map_err(|e| e.to_string())?;
                    cycles::odd_skew_cycle(&gr, &set)
                        .map_err(|e| e.to_string())?
                        .to_json(cfg.d(), cfg.l())
                }
                "jm" => cycles::jucys_murphy(
                    &gr,
                    i.ok_or("jm needs --i")?,
                    k.ok_or("jm needs --k")?,
                )
                .map_err(|e| e.to_string())?
                .to_json(cfg.d(), cfg.l()),
                "z" => {
                    let lam = parse_multipartition(lambda.as_ref().ok_or("z needs --lambda")?, cfg.l())?;
                    cycles::z_element(&gr, &lam)
                        .map_err(|e| e.to_string())?
                        .to_json(cfg.d(), cfg.l())
                }
                "m" => {
                    let p = parse_partition(mu.as_ref().ok_or("m needs --mu")?)?;
                    cycles::m_element(&gr, &p)
                        .map_err(|e| e.to_string())?
                        .to_json(cfg.d(), cfg.l())
                }
                "p" => {
                    let p = parse_partition(mu.as_ref().ok_or("p needs --mu")?)?;
                    let alg = SergeevAlgebra::new(cfg.clone()).map_err(|e| e.to_string())?;
                    alg.p_element(&p).map_err(|e| e.to_string())?.to_json(cfg.d(), cfg.l())
                }
                other => return Err(format!("unknown element kind {other:?}")),
            };
            emit(&cli.out, &serde_json::to_value(&json).map_err(|e| e.to_string())?)?;
            Ok(true)
        }
        Command::Center { algebra, parity } => {
            let parity = match parity.as_str() {
                "even" => ParityFilter::Even,
                "all" => ParityFilter::All,
                other => return Err(format!("unknown parity {other:?} (even|all)")),
            };
            let value = match algebra.as_str() {
                "graded" => {
                    let report = center::graded_center_report(&cfg, cli.config.guard)
                        .map_err(|e| e.to_string())?;
                    // the full report carries both parities; still honor a
                    // bare basis request for `all`
                    let _ = parity;
                    serde_json::to_value(&report).map_err(|e| e.to_string())?
                }
                "sergeev" => {
                    if cfg.l() % 2 == 1 {
                        let report = center::verify_main_theorem(&cfg, cli.config.guard)
                            .map_err(|e| e.to_string())?;
                        serde_json::to_value(&report).map_err(|e| e.to_string())?
                    } else {
                        let report = center::sergeev_center_ranks(&cfg, cli.config.guard)
                            .map_err(|e| e.to_string())?;
                        serde_json::to_value(&report).map_err(|e| e.to_string())?
                    }
                }
                other => return Err(format!("unknown algebra {other:?} (graded|sergeev)")),
            };
            emit(&cli.out, &value)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
