use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use gmpn::GroupParams;

use gmpn_cli::commands::{
    cmd_heritability, cmd_info, cmd_interval, cmd_witness, IntervalFormat, OrderKind, OutputFormat,
};
use gmpn_cli::config::Config;
use gmpn_cli::engine::{run_bfs_check, run_scan};
use gmpn_cli::exc::{all_checks_pass, run_exc, ExcKind};

/// Combinatorics of the complex reflection groups G(m,p,n): element
/// reports, interval queries, exhaustive interval-coincidence scans, oracle
/// cross-checks, and excedance posets.
#[derive(Parser)]
#[command(name = "gmpn", version)]
struct Cli {
    /// Path to a key=value config file (caps, parallelism, memo strategy).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(value: FormatArg) -> Self {
        match value {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum IntervalFormatArg {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lr,
    Cdf,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExcKindArg {
    A,
    B,
}

#[derive(Subcommand)]
enum Command {
    /// Report lengths, partitions, predicates, and element families for one
    /// element.
    Info {
        /// Element in the notation G(m,p,n):[cycles; weights].
        spec: String,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// List a lower interval [id, w] with its Hasse diagram.
    Interval {
        spec: String,
        /// Which statistic orders the interval.
        #[arg(long, value_enum)]
        order: OrderArg,
        #[arg(long, value_enum, default_value = "text")]
        format: IntervalFormatArg,
        /// Write the output here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the interval-coincidence characterization against brute force
    /// over a whole group.
    Scan {
        m: u64,
        p: u64,
        n: usize,
        /// Check every element instead of one per cycle-shape class.
        #[arg(long)]
        full: bool,
        /// Check one representative per class (the default).
        #[arg(long, conflicts_with = "full")]
        classes: bool,
        /// Worker count; 0 uses the rayon default.
        #[arg(long)]
        parallel: Option<usize>,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check the reflection-length formula against breadth-first
    /// search over the reflection generators.
    BfsCheck { m: u64, p: u64, n: usize },
    /// Analyze the excedance poset of S_n (type a) or of signed
    /// permutations (type b).
    Exc {
        n: usize,
        #[arg(long = "type", value_enum)]
        kind: ExcKindArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Construct and verify the separating witness for an element whose
    /// intervals differ.
    Witness { spec: String },
    /// Evaluate the heritability conditions (a)-(k) for an element.
    Heritability {
        spec: String,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::FAILURE
        }
    }
}

/// Returns whether every check performed by the command passed.
fn run(cli: Cli) -> Result<bool> {
    let mut config = Config::load(cli.config.as_deref())?;
    match cli.command {
        Command::Info { spec, format } => {
            print!("{}", cmd_info(&spec, format.into(), &config)?);
            Ok(true)
        }
        Command::Interval {
            spec,
            order,
            format,
            out,
        } => {
            let order = match order {
                OrderArg::Lr => OrderKind::ReflectionLength,
                OrderArg::Cdf => OrderKind::CodimFix,
            };
            let format = match format {
                IntervalFormatArg::Text => IntervalFormat::Text,
                IntervalFormatArg::Json => IntervalFormat::Json,
                IntervalFormatArg::Dot => IntervalFormat::Dot,
            };
            let rendered = cmd_interval(&spec, order, format, &config)?;
            write_out(out, &rendered)?;
            Ok(true)
        }
        Command::Scan {
            m,
            p,
            n,
            full,
            classes: _,
            parallel,
            out,
        } => {
            if let Some(workers) = parallel {
                config.parallel = workers;
            }
            let params = GroupParams::new(m, p, n)?;
            let outcome = run_scan(&params, &config, full)?;
            let json = serde_json::to_string_pretty(&outcome.report)?;
            write_out(out, &json)?;
            let summary = &outcome.report.summary;
            eprintln!(
                "scanned {} representatives covering {} elements: {} coincide, {} differ, {} mismatches",
                summary.representatives,
                summary.elements,
                summary.predicate_true,
                summary.predicate_false,
                summary.mismatches
            );
            if !outcome.ok {
                for record in &outcome.report.records {
                    if record.predicate != record.brute_force_intervals_equal {
                        eprintln!("MISMATCH: {}", serde_json::to_string(record)?);
                    }
                }
            }
            Ok(outcome.ok)
        }
        Command::BfsCheck { m, p, n } => {
            let params = GroupParams::new(m, p, n)?;
            let outcome = run_bfs_check(&params, &config)?;
            match &outcome.mismatch {
                None => {
                    println!(
                        "formula matches oracle on all {} elements of G({m},{p},{n}); maximum length {}",
                        outcome.elements, outcome.max_length
                    );
                    Ok(true)
                }
                Some((element, formula, oracle)) => {
                    println!(
                        "MISMATCH at {element}: formula gives {formula}, oracle gives {oracle}"
                    );
                    Ok(false)
                }
            }
        }
        Command::Exc { n, kind, format } => {
            let kind = match kind {
                ExcKindArg::A => ExcKind::A,
                ExcKindArg::B => ExcKind::B,
            };
            let report = run_exc(kind, n, &config)?;
            match OutputFormat::from(format) {
                OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                OutputFormat::Text => {
                    println!(
                        "excedance poset, type {}, n = {} ({} elements)",
                        report.kind, report.n, report.carrier_size
                    );
                    if report.conjecture_check {
                        println!(
                            "note: type b expectations reproduce small-rank computations; they are a conjecture check"
                        );
                    }
                    println!("graded: {}", report.graded);
                    println!(
                        "length function over the value-1 set: {}",
                        report.is_length_function
                    );
                    println!(
                        "rank sizes: {:?} (expected {:?}, match: {})",
                        report.rank_sizes, report.expected_rank_sizes, report.rank_sizes_match
                    );
                    println!(
                        "unique maximum: {} ({}, expected {})",
                        report.unique_maximum, report.maximum, report.expected_maximum
                    );
                    match report.lattice {
                        Some(value) => println!("lattice: {value}"),
                        None => println!("lattice: skipped (carrier larger than lattice_cap)"),
                    }
                }
            }
            Ok(all_checks_pass(&report))
        }
        Command::Witness { spec } => {
            print!("{}", cmd_witness(&spec, &config)?);
            Ok(true)
        }
        Command::Heritability { spec, format } => {
            print!("{}", cmd_heritability(&spec, format.into(), &config)?);
            Ok(true)
        }
    }
}

fn write_out(path: Option<PathBuf>, content: &str) -> Result<()> {
    match path {
        Some(path) => {
            fs::write(&path, content)
                .with_context(|| format!("cannot write {}", path.display()))?;
        }
        None => println!("{content}"),
    }
    Ok(())
}
