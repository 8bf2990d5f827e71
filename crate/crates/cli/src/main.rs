//! Command-line surface over the saxl-core engine: coefficient queries,
//! partition utilities, cache-backed character tables and one-command
//! verification runs. The data stream carries exclusively the selected
//! format; progress notes go to stderr. Exit codes: 0 for pass or
//! conjecture outcomes, 1 for verification failure, 2 for usage errors,
//! 3 for cache corruption.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use saxl_core::{
    cache_path, enumerate_distinct_partitions, enumerate_partitions, kronecker_coefficient,
    kronecker_product, load_or_build, partition_count, verify_luo_sellke,
    verify_macdonald_identity, verify_saxl_cube, verify_saxl_square, verify_tensor_summand,
    verify_two_modular_shadows, CacheOutcome, CharacterTable, Error, Partition, SchurExpansion,
    VerificationReport, VerifyOptions, VerifyStatus,
};

/// Listing every partition past this size floods the terminal; the
/// count path stays ungated since it never enumerates.
const PARTITIONS_GATE: u64 = 50;
/// Table construction past this degree is a long-haul run.
const CHARTABLE_GATE: u64 = 25;

#[derive(Parser)]
#[command(
    name = "saxl",
    version,
    about = "Exact symmetric-group characters, Kronecker products and staircase tensor-cube verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Directory for ctab-v1 character-table cache files.
    #[arg(long, global = true, env = "ACCEPTED_CACHE_DIR", value_name = "PATH")]
    cache_dir: Option<PathBuf>,

    /// Worker threads; defaults to the logical core count.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Output format for the data stream.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Lift the default size gates on expensive sweeps.
    #[arg(long, global = true)]
    long_run: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Kronecker product of two Schur functions, or one coefficient.
    ///
    /// With three partitions prints the single coefficient g(lambda, mu,
    /// nu); with two prints the full Schur expansion of s_lambda * s_mu
    /// in canonical order.
    Kronecker {
        lambda: String,
        mu: String,
        nu: Option<String>,
    },

    /// Apply the C operator to a partition.
    Cee { mu: String },

    /// Decide whether the first partition dominates the second.
    Dominance { lambda: String, mu: String },

    /// List the partitions of N in canonical order.
    Partitions {
        n: u64,
        /// Restrict to partitions with pairwise distinct parts.
        #[arg(long)]
        distinct: bool,
        /// Print only the number of partitions.
        #[arg(long)]
        count: bool,
    },

    /// Build or load the character table of S_N and print it.
    Chartable {
        n: u64,
        /// Print a single row instead of the whole table.
        #[arg(long, value_name = "PARTITION")]
        row: Option<String>,
    },

    /// Run one verifier and print its report.
    Verify {
        #[command(subcommand)]
        claim: Claim,
    },
}

#[derive(Subcommand)]
enum Claim {
    /// Every irreducible appears in the staircase Kronecker cube.
    SaxlCube {
        #[arg(long)]
        n: u32,
    },
    /// Informational staircase Kronecker square run.
    SaxlSquare {
        #[arg(long)]
        n: u32,
    },
    /// h_mu * s_mu minus h_C(mu) is Schur-nonnegative.
    TensorSummand {
        #[arg(long)]
        mu: String,
    },
    /// Dominating shapes appear in the square of a distinct-part shape.
    LuoSellke {
        #[arg(long)]
        mu: String,
    },
    /// Chain expansion of h_mu * s_mu matches the character product.
    Macdonald {
        #[arg(long)]
        mu: String,
    },
    /// Staircase hooks are odd; distinct-part shapes dominate it.
    TwoModular {
        #[arg(long)]
        n: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("note: worker pool already initialized: {e}");
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::GateExceeded { .. }) {
                eprintln!("hint: pass --long-run to lift the gate");
            }
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::CorruptCache { .. } => 3,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Kronecker { lambda, mu, nu } => cmd_kronecker(cli, lambda, mu, nu.as_deref()),
        Command::Cee { mu } => cmd_cee(cli, mu),
        Command::Dominance { lambda, mu } => cmd_dominance(cli, lambda, mu),
        Command::Partitions { n, distinct, count } => {
            cmd_partitions(cli, *n, *distinct, *count)
        }
        Command::Chartable { n, row } => cmd_chartable(cli, *n, row.as_deref()),
        Command::Verify { claim } => cmd_verify(cli, claim),
    }
}

fn parse_partition(literal: &str) -> Result<Partition, Error> {
    Partition::from_str(literal)
}

fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

/// Builds or loads a table for a query command: through the cache when a
/// directory was requested, in memory otherwise.
fn query_table(cli: &Cli, n: u64) -> Result<CharacterTable, Error> {
    match &cli.cache_dir {
        Some(dir) => {
            let (table, outcome) = load_or_build(n, dir)?;
            note_cache(n, &outcome, dir);
            Ok(table)
        }
        None => Ok(CharacterTable::build(n)),
    }
}

fn note_cache(n: u64, outcome: &CacheOutcome, dir: &std::path::Path) {
    match outcome {
        CacheOutcome::Hit => eprintln!("cache hit for N={n}: {}", cache_path(dir, n).display()),
        CacheOutcome::Computed => eprintln!(
            "cache miss for N={n}: computed {}",
            cache_path(dir, n).display()
        ),
    }
}

fn emit_expansion(expansion: &SchurExpansion, format: Format) {
    match format {
        Format::Table => {
            let text = expansion.to_string();
            if !text.is_empty() {
                println!("{text}");
            }
        }
        Format::Json => println!("{}", expansion.to_json()),
        Format::Csv => {
            println!("coeff,partition");
            for (lam, c) in expansion.terms() {
                println!("{c},{}", csv_quote(&lam.to_string()));
            }
        }
    }
}

fn cmd_kronecker(cli: &Cli, lambda: &str, mu: &str, nu: Option<&str>) -> Result<u8, Error> {
    let lambda = parse_partition(lambda)?;
    let mu = parse_partition(mu)?;
    match nu {
        Some(nu) => {
            let nu = parse_partition(nu)?;
            let g = kronecker_coefficient(&lambda, &mu, &nu)?;
            match cli.format {
                Format::Table => println!("{g}"),
                Format::Json => println!("{}", serde_json::json!({ "coefficient": g.to_string() })),
                Format::Csv => println!("coefficient\n{g}"),
            }
        }
        None => {
            if lambda.size() != mu.size() {
                return Err(Error::SizeMismatch {
                    left: lambda.size(),
                    right: mu.size(),
                });
            }
            let table = query_table(cli, lambda.size())?;
            let product = kronecker_product(
                &SchurExpansion::single(lambda),
                &SchurExpansion::single(mu),
                &table,
            )?;
            emit_expansion(&product, cli.format);
        }
    }
    Ok(0)
}

fn cmd_cee(cli: &Cli, mu: &str) -> Result<u8, Error> {
    let mu = parse_partition(mu)?;
    let out = mu.cee();
    match cli.format {
        Format::Table => println!("{out}"),
        Format::Json => println!("{}", serde_json::to_value(&out).expect("partition to json")),
        Format::Csv => println!("partition\n{}", csv_quote(&out.to_string())),
    }
    Ok(0)
}

fn cmd_dominance(cli: &Cli, lambda: &str, mu: &str) -> Result<u8, Error> {
    let lambda = parse_partition(lambda)?;
    let mu = parse_partition(mu)?;
    let dominates = lambda.dominates(&mu)?;
    match cli.format {
        Format::Table => println!("{dominates}"),
        Format::Json => println!("{}", serde_json::json!({ "dominates": dominates })),
        Format::Csv => println!("dominates\n{dominates}"),
    }
    Ok(0)
}

fn cmd_partitions(cli: &Cli, n: u64, distinct: bool, count: bool) -> Result<u8, Error> {
    if count && !distinct {
        let total = partition_count(n);
        match cli.format {
            Format::Table => println!("{total}"),
            Format::Json => println!("{}", serde_json::json!({ "count": total.to_string() })),
            Format::Csv => println!("count\n{total}"),
        }
        return Ok(0);
    }

    if n > PARTITIONS_GATE && !cli.long_run {
        return Err(Error::GateExceeded {
            size: n,
            gate: PARTITIONS_GATE,
        });
    }
    let shapes = if distinct {
        enumerate_distinct_partitions(n)
    } else {
        enumerate_partitions(n)
    };
    if count {
        match cli.format {
            Format::Table => println!("{}", shapes.len()),
            Format::Json => println!("{}", serde_json::json!({ "count": shapes.len().to_string() })),
            Format::Csv => println!("count\n{}", shapes.len()),
        }
        return Ok(0);
    }
    match cli.format {
        Format::Table => {
            for lam in &shapes {
                println!("{lam}");
            }
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_value(&shapes).expect("partitions to json")
            );
        }
        Format::Csv => {
            println!("partition");
            for lam in &shapes {
                println!("{}", csv_quote(&lam.to_string()));
            }
        }
    }
    Ok(0)
}

fn row_values(table: &CharacterTable, row: usize) -> Vec<String> {
    (0..table.classes().class_count())
        .map(|c| table.value_at(row, c).to_string())
        .collect()
}

fn cmd_chartable(cli: &Cli, n: u64, row: Option<&str>) -> Result<u8, Error> {
    if n > CHARTABLE_GATE && !cli.long_run {
        return Err(Error::GateExceeded {
            size: n,
            gate: CHARTABLE_GATE,
        });
    }
    let dir = cli
        .cache_dir
        .clone()
        .unwrap_or_else(|| std::env::temp_dir().join("saxl-ctab"));
    let (table, outcome) = load_or_build(n, &dir)?;
    note_cache(n, &outcome, &dir);

    let selected: Vec<usize> = match row {
        Some(literal) => {
            let lam = parse_partition(literal)?;
            let index = table.row_index(&lam).ok_or(Error::SizeMismatch {
                left: lam.size(),
                right: n,
            })?;
            vec![index]
        }
        None => (0..table.rows().len()).collect(),
    };

    match cli.format {
        Format::Table => {
            for &r in &selected {
                println!("{}", row_values(&table, r).join(" "));
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = selected
                .iter()
                .map(|&r| {
                    serde_json::json!({
                        "partition": table.rows()[r],
                        "values": row_values(&table, r),
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "n": n,
                    "classes": table.classes().classes(),
                    "rows": rows,
                })
            );
        }
        Format::Csv => {
            let header: Vec<String> = std::iter::once("partition".to_string())
                .chain(
                    table
                        .classes()
                        .classes()
                        .iter()
                        .map(|c| csv_quote(&c.to_string())),
                )
                .collect();
            println!("{}", header.join(","));
            for &r in &selected {
                let mut fields = vec![csv_quote(&table.rows()[r].to_string())];
                fields.extend(row_values(&table, r));
                println!("{}", fields.join(","));
            }
        }
    }
    Ok(0)
}

fn emit_report(report: &VerificationReport, format: Format) {
    match format {
        Format::Table => {
            println!("claim: {}", report.claim);
            println!("params: {}", report.params);
            println!("status: {}", report.status.as_str());
            println!("witnesses: {}", report.witnesses.len());
            println!("counterexamples: {}", report.counterexamples.len());
            for c in &report.counterexamples {
                println!("counterexample {}: {}", c.partition, c.detail);
            }
        }
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => {
            println!("claim,params,status,witnesses,counterexamples,elapsed_ms");
            println!(
                "{},{},{},{},{},{}",
                csv_quote(&report.claim),
                csv_quote(&report.params),
                report.status.as_str(),
                report.witnesses.len(),
                report.counterexamples.len(),
                report.elapsed_ms,
            );
        }
    }
}

fn cmd_verify(cli: &Cli, claim: &Claim) -> Result<u8, Error> {
    let opts = VerifyOptions {
        long_run: cli.long_run,
        cache_dir: cli.cache_dir.clone(),
    };
    let report = match claim {
        Claim::SaxlCube { n } => verify_saxl_cube(*n, &opts)?,
        Claim::SaxlSquare { n } => verify_saxl_square(*n, &opts)?,
        Claim::TensorSummand { mu } => verify_tensor_summand(&parse_partition(mu)?, &opts)?,
        Claim::LuoSellke { mu } => verify_luo_sellke(&parse_partition(mu)?, &opts)?,
        Claim::Macdonald { mu } => verify_macdonald_identity(&parse_partition(mu)?, &opts)?,
        Claim::TwoModular { n } => verify_two_modular_shadows(*n, &opts)?,
    };
    emit_report(&report, cli.format);
    Ok(match report.status {
        VerifyStatus::Fail => 1,
        VerifyStatus::Pass
        | VerifyStatus::ConjectureHolds
        | VerifyStatus::CounterexampleToConjecture => 0,
    })
}
