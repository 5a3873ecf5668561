//! `hilbert-bound-lab`: Hilbert coefficients of monomial ideals in numerical
//! semigroup rings, and the bounds evaluated on them.
//!
//! Exit codes: 0 success, 1 a bound is violated, 2 input or IO error,
//! 3 the powers of the ideal did not stabilize within the cap.

mod render;

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hilbert_core::bounds::{external_report, full_report};
use hilbert_core::harness::{run_suite, MAX_GENUS};
use hilbert_core::{
    Error, ExternalHilbertData, NumericalSemigroup, SemigroupIdeal, SuiteConfig, Value,
};

#[derive(Parser, Debug)]
#[command(name = "hilbert-bound-lab", version, about)]
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
enum Which {
    /// First Poincaré series P0 (Hilbert function).
    P0,
    /// Second Poincaré series P1 (Hilbert-Samuel function).
    P1,
    /// P1 against the bound selected by beta.
    #[value(alias = "thm23")]
    Postulation,
    /// P1 against the bound built from the threshold alpha.
    #[value(alias = "rvv2")]
    Threshold,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute every invariant and bound of one ideal.
    Analyze {
        /// Generators of the semigroup, e.g. 3,4,5
        #[arg(long)]
        semigroup: String,
        /// Exponents of the monomial generators of the ideal, e.g. 6,7
        #[arg(long)]
        ideal: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate every bound on all semigroups and ideals up to the given sizes.
    Verify {
        #[arg(long)]
        max_genus: u32,
        #[arg(long)]
        max_colength: i64,
        /// Worker threads (default: available parallelism).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write one row per instance to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Stop at the first violation.
        #[arg(long)]
        fail_fast: bool,
        /// Evaluate a random sample of this many instances.
        #[arg(long)]
        sample: Option<usize>,
        /// Seed for --sample.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print a Poincaré series or a series bound, with its coefficients.
    Series {
        #[arg(long)]
        semigroup: String,
        #[arg(long)]
        ideal: String,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, default_value_t = 8)]
        terms: usize,
    },
    /// Evaluate the formula bounds on a supplied Hilbert function table.
    External {
        #[arg(long)]
        dim: u32,
        /// H0(0), H0(1), ... as a comma-separated list
        #[arg(long)]
        table: String,
        /// Index from which the table agrees with the Hilbert polynomial.
        #[arg(long)]
        pn: usize,
        /// Length(R/I); must equal the first table entry.
        #[arg(long)]
        lambda: Option<i64>,
        /// Minimal number of generators of the ideal.
        #[arg(long)]
        mu: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// A failure that ends the command with a specific exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::StabilizationCapExceeded { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

fn parse_list(flag: &str, text: &str) -> Result<Vec<i64>, Failure> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| input_error(format!("--{flag}: '{}' is not an integer", t.trim())))
        })
        .collect()
}

fn parse_instance(semigroup: &str, ideal: &str) -> Result<SemigroupIdeal, Failure> {
    let s = NumericalSemigroup::from_generators(&parse_list("semigroup", semigroup)?)?;
    Ok(SemigroupIdeal::from_generators(
        &s,
        &parse_list("ideal", ideal)?,
    )?)
}

fn status(violated: bool) -> u8 {
    u8::from(violated)
}

fn analyze(semigroup: &str, ideal: &str, format: Format) -> Result<u8, Failure> {
    let report = full_report(&parse_instance(semigroup, ideal)?)?;
    match format {
        Format::Text => print!("{}", render::instance_text(&report)),
        Format::Json => println!(
            "{}",
            render::to_json_string(&render::instance_json(&report))
        ),
    }
    let violated = report.violations().next().is_some();
    Ok(status(violated))
}

#[allow(clippy::too_many_arguments)]
fn verify(
    max_genus: u32,
    max_colength: i64,
    jobs: usize,
    csv: Option<PathBuf>,
    fail_fast: bool,
    sample: Option<usize>,
    seed: u64,
    format: Format,
) -> Result<u8, Failure> {
    if max_genus > MAX_GENUS {
        return Err(input_error(format!("--max-genus is capped at {MAX_GENUS}")));
    }
    let config = SuiteConfig {
        max_genus,
        max_colength,
        sample_limit: sample,
        seed,
        fail_fast,
        parallelism: jobs,
        keep_reports: csv.is_some(),
    };
    eprintln!("verifying genus <= {max_genus}, colength <= {max_colength}");
    let suite = run_suite(&config)?;
    eprintln!("evaluated {} instances", suite.instances_run);
    if let Some(path) = csv {
        let file = File::create(&path)
            .map_err(|e| input_error(format!("cannot create {}: {e}", path.display())))?;
        render::write_csv(BufWriter::new(file), &suite.reports)
            .map_err(|e| input_error(format!("cannot write {}: {e}", path.display())))?;
    }
    match format {
        Format::Text => print!("{}", render::suite_text(&suite)),
        Format::Json => println!("{}", render::to_json_string(&render::suite_json(&suite))),
    }
    Ok(status(!suite.is_clean()))
}

fn series(semigroup: &str, ideal: &str, which: Which, terms: usize) -> Result<u8, Failure> {
    if terms == 0 {
        return Err(input_error("--terms must be at least 1".into()));
    }
    let ideal = parse_instance(semigroup, ideal)?;
    let report = full_report(&ideal)?;
    let name = match which {
        Which::P0 | Which::P1 => {
            let series = report.record.poincare_series(u32::from(which == Which::P1));
            println!("{}", render::series_line(&series, &series.expand(terms)));
            return Ok(0);
        }
        Which::Postulation => "hilbert_series_beta",
        Which::Threshold => "hilbert_series_threshold",
    };
    let check = report
        .check(name)
        .expect("every report carries the series checks");
    for (label, value) in [("P1", &check.target), ("bound", &check.bound)] {
        if let Value::Series(s) = value {
            println!("{label:<5} {}", render::series_line(s, &s.expand(terms)));
        }
    }
    let cmp = check
        .comparison
        .as_ref()
        .expect("series checks carry a comparison");
    print!("verdict: {:?}", cmp.relation);
    if let Some(n) = cmp.first_divergence {
        print!(" (first difference at T^{n})");
    }
    println!(
        " ; {}",
        if check.holds {
            "bound holds"
        } else {
            "bound VIOLATED"
        }
    );
    Ok(status(check.is_violation()))
}

fn external(
    dim: u32,
    table: &str,
    pn: usize,
    lambda: Option<i64>,
    mu: Option<i64>,
    format: Format,
) -> Result<u8, Failure> {
    let table = parse_list("table", table)?;
    let data = ExternalHilbertData::ingest(dim, &table, pn)?;
    let report = external_report(&data, mu, lambda)?;
    match format {
        Format::Text => print!("{}", render::external_text(&report)),
        Format::Json => println!(
            "{}",
            render::to_json_string(&render::external_json(&report))
        ),
    }
    let violated = report.violations().next().is_some();
    Ok(status(violated))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze {
            semigroup,
            ideal,
            format,
        } => analyze(&semigroup, &ideal, format),
        Command::Verify {
            max_genus,
            max_colength,
            jobs,
            csv,
            fail_fast,
            sample,
            seed,
            format,
        } => verify(
            max_genus,
            max_colength,
            jobs,
            csv,
            fail_fast,
            sample,
            seed,
            format,
        ),
        Command::Series {
            semigroup,
            ideal,
            which,
            terms,
        } => series(&semigroup, &ideal, which, terms),
        Command::External {
            dim,
            table,
            pn,
            lambda,
            mu,
            format,
        } => external(dim, &table, pn, lambda, mu, format),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
