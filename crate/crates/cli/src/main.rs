//! `lconn`: build and validate group catalogs, run the theorem suites over
//! them, query single groups and search for sharpness witnesses.

mod query;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lconn_core::corpus::{self, Catalog};
use lconn_core::search::{run_search, SearchConfig, SearchKind};
use lconn_core::suite::{self, SuiteConfig};
use lconn_core::theorems::Fault;
use lconn_core::workspace::Limits;
use lconn_core::PrimeSet;

#[derive(Parser)]
#[command(name = "lconn", version, about = "Verify connected-product theorems over finite permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run theorem suites over a catalog and write a JSON report
    Verify(VerifyArgs),
    /// Print series, radicals and residuals of one catalog group
    Query(QueryArgs),
    /// Seeded search for sharpness witnesses and contrasts
    Search(SearchArgs),
    /// Build or validate catalogs
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Args)]
struct VerifyArgs {
    /// Catalog file, or `shipped`
    #[arg(long, default_value = "shipped")]
    corpus: String,
    /// Comma-separated theorem ids, or `all`
    #[arg(long, default_value = "all")]
    theorem: String,
    #[arg(long, default_value_t = suite::DEFAULT_MAX_ORDER)]
    max_order: u128,
    /// Largest |A|·|B| examined by one connection check
    #[arg(long, default_value_t = Limits::default().max_pairs)]
    max_pairs: u64,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout
    #[arg(long)]
    report: Option<PathBuf>,
    /// Also print the JSON report on stdout when --report is given
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = suite::DEFAULT_MAX_SKIP_RATE)]
    max_skip_rate: f64,
    /// Record per-verdict wall time (makes reports non-reproducible)
    #[arg(long)]
    timings: bool,
    #[arg(long, hide = true)]
    fault: Option<Fault>,
}

#[derive(Args)]
struct QueryArgs {
    /// Catalog entry name
    name: String,
    #[arg(long, default_value = "shipped")]
    corpus: String,
    /// Prime set for O_pi, O^pi and the pi-length, e.g. `2` or `2,3`
    #[arg(long, default_value = "2")]
    pi: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value = "shipped")]
    corpus: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated kinds: sharp-pi-length (a), f2-contrast (b), nf-unhypothesized (c)
    #[arg(long, default_value = "a,b,c")]
    kind: String,
    #[arg(long, default_value_t = SearchConfig::default().max_order)]
    max_order: u128,
    /// Random direct products added to the pool
    #[arg(long, default_value_t = SearchConfig::default().samples)]
    samples: usize,
    #[arg(long, default_value_t = Limits::default().max_pairs)]
    max_pairs: u64,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Regenerate the shipped catalog
    Build {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parse a catalog and check every claim in it
    Validate {
        /// Catalog file, or `shipped`
        path: String,
    },
}

/// Exit code 2: bad input or I/O.
struct Fatal(String);

impl<E: std::fmt::Display> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Query(a) => query(a),
        Command::Search(a) => search(a),
        Command::Catalog(c) => catalog(c),
    };
    match result {
        Ok(code) => code,
        Err(Fatal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(spec: &str) -> Result<Catalog, Fatal> {
    if spec == "shipped" {
        return Ok(corpus::shipped_catalog());
    }
    let text = fs::read_to_string(spec).map_err(|e| Fatal(format!("{spec}: {e}")))?;
    let mut cat = corpus::parse_unvalidated(&text).map_err(|e| Fatal(format!("{spec}: {e}")))?;
    cat.source = spec.to_string();
    Ok(cat)
}

fn jobs(n: Option<usize>) -> usize {
    n.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1)
}

fn emit(text: &str, report: Option<&PathBuf>, also_stdout: bool) -> Result<(), Fatal> {
    match report {
        Some(path) => {
            fs::write(path, text).map_err(|e| Fatal(format!("{}: {e}", path.display())))?;
            if also_stdout {
                print!("{text}");
            }
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn verify(a: VerifyArgs) -> Result<ExitCode, Fatal> {
    let theorems = suite::parse_theorem_list(&a.theorem)?;
    let catalog = load(&a.corpus)?;
    let cfg = SuiteConfig {
        corpus: a.corpus,
        theorems,
        max_order: a.max_order,
        max_pairs: a.max_pairs,
        jobs: jobs(a.jobs),
        seed: a.seed,
        max_skip_rate: a.max_skip_rate,
        fault: a.fault,
        timings: a.timings,
    };
    let report = suite::run_suite(&catalog, &cfg)?;
    emit(&report.to_json(), a.report.as_ref(), a.json)?;

    let s = &report.summary;
    for v in report.failures() {
        let failed = v
            .witness
            .as_ref()
            .and_then(|w| w.get("failed"))
            .map_or("", String::as_str);
        eprintln!("FAIL {} {}: {failed}", v.theorem_id, v.instance);
    }
    eprintln!(
        "{} verdicts, {} failures, skipped {} hypothesis / {} caps / {} unsupported, skip rate {:.2}% (max {:.2}%)",
        s.verdicts,
        s.failures,
        s.skipped_hypothesis,
        s.skipped_caps,
        s.skipped_unsupported,
        100.0 * s.skip_rate,
        100.0 * cfg.max_skip_rate
    );
    Ok(if s.ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn query(a: QueryArgs) -> Result<ExitCode, Fatal> {
    let catalog = load(&a.corpus)?;
    let pi: PrimeSet = a.pi.parse()?;
    let entry = catalog
        .entry(&a.name)
        .ok_or_else(|| Fatal(format!("no group named `{}` in {}", a.name, catalog.source)))?;
    let r = query::query(&entry.name, &entry.group, &pi)?;
    if a.json {
        println!("{}", serde_json::to_string_pretty(&r)?);
    } else {
        print!("{}", r.to_text());
    }
    Ok(ExitCode::SUCCESS)
}

fn search(a: SearchArgs) -> Result<ExitCode, Fatal> {
    let mut kinds = Vec::new();
    for k in a.kind.split(',').map(str::trim).filter(|k| !k.is_empty()) {
        let kind = SearchKind::parse(k).ok_or_else(|| Fatal(format!("unknown search kind `{k}`")))?;
        if !kinds.contains(&kind) {
            kinds.push(kind);
        }
    }
    kinds.sort();
    let catalog = load(&a.corpus)?;
    let cfg = SearchConfig {
        kinds,
        max_order: a.max_order,
        samples: a.samples,
        seed: a.seed,
        max_pairs: a.max_pairs,
        jobs: jobs(a.jobs),
    };
    let report = run_search(&catalog, &cfg)?;
    emit(&report.to_json(), a.report.as_ref(), a.json)?;
    eprintln!(
        "{} groups examined, {} findings",
        report.groups_examined.len(),
        report.findings.len()
    );
    Ok(ExitCode::SUCCESS)
}

fn catalog(c: CatalogCommand) -> Result<ExitCode, Fatal> {
    match c {
        CatalogCommand::Build { out } => {
            let text = corpus::serialize(&corpus::build_shipped_catalog()?);
            emit(&text, out.as_ref(), false)?;
            Ok(ExitCode::SUCCESS)
        }
        CatalogCommand::Validate { path } => {
            let cat = load(&path)?;
            let issues = cat.validate();
            for i in &issues {
                eprintln!("{}: {}", i.entry, i.message);
            }
            let factorizations: usize = cat.entries.iter().map(|e| e.factorizations.len()).sum();
            println!(
                "{}: {} groups, {} factorizations, {} issues, sha256 {}",
                cat.source,
                cat.entries.len(),
                factorizations,
                issues.len(),
                cat.hash()
            );
            Ok(if issues.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
