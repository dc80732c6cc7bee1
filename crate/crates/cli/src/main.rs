//! `fmzv`: compute finite multiple zeta values and verify identities.
//!
//! Exit codes: 0 success / pass, 1 identity failure, 2 usage error.

mod output;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fmzv_core::algebra::{shuffle_sh, shuffle_tilde, Index, IndexCombination};
use fmzv_core::engine::{eval, EvalRequest};
use fmzv_core::identities::{ratio_probe, run_suite, verify, Identity, SuiteConfig};
use fmzv_core::modular::PrimeRange;

use output::{Format, Sink};

#[derive(Parser, Debug)]
#[command(
    name = "fmzv",
    version,
    about = "Finite multiple zeta values modulo p and p^2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct PrimeArgs {
    /// A single prime; overrides --primes.
    #[arg(long)]
    prime: Option<u64>,
    /// Inclusive prime range LO..HI.
    #[arg(long)]
    primes: Option<String>,
    /// Comma-separated primes to leave out.
    #[arg(long, value_delimiter = ',')]
    skip: Vec<u64>,
}

const DEFAULT_PRIMES: &str = "5..500";

impl PrimeArgs {
    fn range(&self, fallback: Option<&PrimeRange>) -> Result<PrimeRange, Failure> {
        let mut range = match (self.prime, &self.primes, fallback) {
            (Some(p), _, _) => {
                if !fmzv_core::modular::is_prime(p) || p >= 1 << 32 {
                    return Err(Failure::Usage(format!("{p} is not a prime below 2^32")));
                }
                PrimeRange::single(p)
            }
            (None, Some(s), _) => s.parse().map_err(usage)?,
            (None, None, Some(r)) => r.clone(),
            (None, None, None) => DEFAULT_PRIMES.parse().expect("default range parses"),
        };
        range.skip.extend(self.skip.iter().copied());
        Ok(range)
    }
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print every per-prime record in text output.
    #[arg(long)]
    verbose: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ShuffleKind {
    Sh,
    Tsh,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one index prime by prime.
    Compute {
        /// Comma-separated positive entries, e.g. 1,2,3 (empty for the empty index).
        #[arg(long, allow_hyphen_values = true)]
        index: String,
        /// Use the non-strict (star) sum.
        #[arg(long)]
        star: bool,
        /// Modulus power, 1 or 2.
        #[arg(long, default_value_t = 2)]
        power: u8,
        #[command(flatten)]
        primes: PrimeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Expand a shuffle product of two indices.
    Shuffle {
        /// `sh` (letter-wise word shuffle) or `tsh` (entry-wise shuffle).
        #[arg(long, value_enum)]
        kind: ShuffleKind,
        /// Left index.
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        /// Right index.
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// Verify one identity instance.
    Verify {
        /// Identity id from the catalog, e.g. mt1, zc, vdm2.
        #[arg(long)]
        id: String,
        /// Parameter l of the identity.
        #[arg(long)]
        l: Option<u32>,
        /// Parameter m of the identity.
        #[arg(long)]
        m: Option<u32>,
        /// Parameter a of the identity.
        #[arg(long)]
        a: Option<u32>,
        /// Parameter b of the identity.
        #[arg(long)]
        b: Option<u32>,
        /// Parameter c of the identity.
        #[arg(long)]
        c: Option<u32>,
        /// Parameter r of the identity.
        #[arg(long)]
        r: Option<u32>,
        /// First index of shuffle_a2.
        #[arg(long, allow_hyphen_values = true)]
        left: Option<String>,
        /// Second index of shuffle_a2.
        #[arg(long, allow_hyphen_values = true)]
        right: Option<String>,
        #[command(flatten)]
        primes: PrimeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a list of identity instances (default: every catalog grid).
    Suite {
        /// JSON suite configuration with `range` and `instances`.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Keep only instances of at most this weight.
        #[arg(long)]
        max_weight: Option<u32>,
        #[command(flatten)]
        primes: PrimeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Test whether an index is a fixed rational multiple of beta_k p.
    Probe {
        /// Comma-separated positive entries.
        #[arg(long, allow_hyphen_values = true)]
        index: String,
        /// Bernoulli index of beta_k.
        #[arg(long)]
        k: u32,
        /// Use the non-strict (star) sum.
        #[arg(long)]
        star: bool,
        #[command(flatten)]
        primes: PrimeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_index(s: &str) -> Result<Index, Failure> {
    s.parse().map_err(usage)
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("FMZV_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            Failure::Usage(format!(
                "FMZV_THREADS must be a positive integer, got {value:?}"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(usage)
}

/// Returns whether the run passed.
fn run(cli: Cli) -> Result<bool, Failure> {
    configure_threads()?;
    match cli.command {
        Command::Compute {
            index,
            star,
            power,
            primes,
            output,
        } => {
            let index = parse_index(&index)?;
            if !(1..=2).contains(&power) {
                return Err(Failure::Usage(format!(
                    "--power must be 1 or 2, got {power}"
                )));
            }
            let single = primes.prime.is_some();
            let range = primes.range(None)?;
            let value = eval(&EvalRequest::new(
                IndexCombination::basis(index.clone()),
                star,
                range,
                power,
            ));
            Sink::new(&output)
                .compute(&index, star, single, &value)
                .map_err(usage)?;
            Ok(true)
        }
        Command::Shuffle { kind, left, right } => {
            let left = IndexCombination::basis(parse_index(&left)?);
            let right = IndexCombination::basis(parse_index(&right)?);
            let product = match kind {
                ShuffleKind::Sh => shuffle_sh(&left, &right),
                ShuffleKind::Tsh => shuffle_tilde(&left, &right),
            };
            println!("{product}");
            Ok(true)
        }
        Command::Verify {
            id,
            l,
            m,
            a,
            b,
            c,
            r,
            left,
            right,
            primes,
            output,
        } => {
            let ints: BTreeMap<String, u32> =
                [("l", l), ("m", m), ("a", a), ("b", b), ("c", c), ("r", r)]
                    .into_iter()
                    .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
                    .collect();
            let mut indices = BTreeMap::new();
            if let Some(s) = left {
                indices.insert("k".to_string(), parse_index(&s)?);
            }
            if let Some(s) = right {
                indices.insert("l".to_string(), parse_index(&s)?);
            }
            let identity = Identity::from_parts(&id, &ints, &indices).map_err(usage)?;
            let range = primes.range(None)?;
            let report = verify(&identity, &range).map_err(usage)?;
            Sink::new(&output)
                .reports(std::slice::from_ref(&report), None)
                .map_err(usage)?;
            Ok(report.passed())
        }
        Command::Suite {
            config,
            max_weight,
            primes,
            output,
        } => {
            let mut suite = match config {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    let config: SuiteConfig = serde_json::from_str(&text)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    let range = primes.range(Some(&config.range))?;
                    SuiteConfig { range, ..config }
                }
                None => SuiteConfig::default_for(primes.range(None)?),
            };
            if max_weight.is_some() {
                suite.max_weight = max_weight;
            }
            let report = run_suite(&suite).map_err(usage)?;
            Sink::new(&output)
                .reports(&report.reports, Some(&report))
                .map_err(usage)?;
            Ok(report.verdict.is_pass())
        }
        Command::Probe {
            index,
            k,
            star,
            primes,
            output,
        } => {
            let index = parse_index(&index)?;
            let range = primes.range(None)?;
            let report =
                ratio_probe(&IndexCombination::basis(index), k, &range, star).map_err(usage)?;
            Sink::new(&output).probe(&report).map_err(usage)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
