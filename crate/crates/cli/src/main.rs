mod bench;
mod fuzz;

use std::process::ExitCode;

use artin_rrs::oracle::{oracle_geodesic_length, OracleConfig};
use artin_rrs::reducer::{equal_in_g, reduce_to_geodesic, reduce_with_trace};
use artin_rrs::{parse_word, Error, GroupParams, Word};
use clap::{Parser, Subcommand};
use serde_json::json;

#[derive(Debug, Parser)]
#[command(
    name = "artin-rrs",
    version,
    about = "Geodesics and the word problem in G(n) = <a,b,c | aba=bab, ac=ca, (bc..)=(cb..)>"
)]
struct Cli {
    /// Length of the braid relation between b and c.
    #[arg(long, global = true, default_value_t = 5)]
    n: u32,
    /// Accept n = 3 or 4, where results need not be geodesic.
    #[arg(long, global = true)]
    allow_small_n: bool,
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a geodesic word equal to WORD.
    Reduce { word: String },
    /// Print the geodesic length of WORD.
    Length { word: String },
    /// Print whether two words are equal in the group.
    Equal { first: String, second: String },
    /// Print the reducing sequences applied while reading WORD.
    Trace { word: String },
    /// Check invariants on random words.
    Fuzz {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Slack for the search used as a reference.
        #[arg(long, default_value_t = 4)]
        slack: usize,
    },
    /// Time reduction of random words.
    Bench {
        #[arg(long, default_value_t = 1000)]
        len: usize,
        #[arg(long, default_value_t = 5)]
        repeat: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Geodesic length found by bounded search over relator moves.
    OracleLength {
        word: String,
        #[arg(long, default_value_t = 4)]
        slack: usize,
        #[arg(long, default_value_t = 5_000_000)]
        node_cap: usize,
    },
}

/// Failure classes with fixed exit codes.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Violation(String),
    Resource(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Violation(_) => 2,
            Failure::Resource(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Resource(_) => Failure::Resource(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn word(text: &str) -> Result<Word, Failure> {
    parse_word(text).map_err(|e| Failure::Usage(format!("cannot read {text:?}: {e}")))
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string(value).expect("serialisable"));
}

fn run(cli: Cli) -> Result<(), Failure> {
    let params = GroupParams::build(cli.n, cli.allow_small_n)?;
    match cli.command {
        Command::Reduce { word: text } => {
            let g = reduce_to_geodesic(&word(&text)?, &params);
            if cli.json {
                print_json(&json!({"input": text, "n": cli.n, "geodesic": g, "length": g.len()}));
            } else if !g.is_empty() {
                println!("{g}");
            }
        }
        Command::Length { word: text } => {
            let len = reduce_to_geodesic(&word(&text)?, &params).len();
            if cli.json {
                print_json(&json!({"input": text, "n": cli.n, "length": len}));
            } else {
                println!("{len}");
            }
        }
        Command::Equal { first, second } => {
            let equal = equal_in_g(&word(&first)?, &word(&second)?, &params);
            if cli.json {
                print_json(&json!({"first": first, "second": second, "n": cli.n, "equal": equal}));
            } else {
                println!("{equal}");
            }
        }
        Command::Trace { word: text } => {
            let (g, events) = reduce_with_trace(&word(&text)?, &params);
            if cli.json {
                print_json(&json!(events));
            } else {
                for e in &events {
                    println!("{}", serde_json::to_string(e).expect("serialisable"));
                }
                eprintln!("geodesic: {g}");
            }
        }
        Command::Fuzz {
            count,
            max_len,
            seed,
            slack,
        } => {
            let config = OracleConfig::new(slack, OracleConfig::default().node_cap)?;
            let summary = fuzz::run(count, max_len, seed, &config, &params)?;
            if cli.json {
                print_json(&serde_json::to_value(&summary).expect("serialisable"));
            } else {
                println!("{summary}");
            }
            if let Some(v) = summary.violations.first() {
                return Err(Failure::Violation(format!(
                    "{} fails on {} (minimised from {})",
                    v.invariant, v.minimized, v.word
                )));
            }
        }
        Command::Bench { len, repeat, seed } => {
            if repeat == 0 {
                return Err(Failure::Usage("--repeat must be positive".into()));
            }
            let report = bench::run(len, repeat, seed, &params);
            if cli.json {
                print_json(&serde_json::to_value(&report).expect("serialisable"));
            } else {
                println!("{report}");
            }
        }
        Command::OracleLength {
            word: text,
            slack,
            node_cap,
        } => {
            let config = OracleConfig::new(slack, node_cap)?;
            let len = oracle_geodesic_length(&word(&text)?, &config, &params)?;
            if cli.json {
                print_json(&json!({"input": text, "n": cli.n, "slack": slack, "length": len}));
            } else {
                println!("{len}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Violation(m) | Failure::Resource(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
