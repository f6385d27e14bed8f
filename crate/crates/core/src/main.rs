use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use skewtab::characters::{chi_mn, chi_small, frobenius_skew, SmallSupport};
use skewtab::closed_forms::{kostka_hook, skew_count_closed};
use skewtab::oracles::{aitken_count, enumerate_skew_syt, kostka_enumerate, WeightVector, DEFAULT_ENUM_CAP};
use skewtab::partition::{parse_partition, CycleType, Partition, SkewShape};
use skewtab::table::{skew_table, write_csv, write_json_lines};
use skewtab::verify::{run_suite, Suite, VerifyConfig};
use skewtab::Error;

/// Exact skew tableau counts, hook-weight Kostka numbers and the
/// verification suites behind them.
#[derive(Parser)]
#[command(name = "skewtab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count skew SYT of shape mu/(m)
    Count {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = CountMethod::Closed)]
        method: CountMethod,
        #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
        enum_cap: usize,
    },
    /// Kostka number K(mu, weight); weights like "3,1^3" use the closed forms
    Kostka {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
        enum_cap: usize,
    },
    /// Irreducible character value chi^mu at a cycle type
    Character {
        #[arg(long)]
        mu: String,
        /// Cycle type, fixed points optional ("3,1^3" or "3")
        #[arg(long)]
        cycle_type: String,
        #[arg(long, value_enum, default_value_t = CharMethod::Mn)]
        method: CharMethod,
    },
    /// f and f^{mu/(m)} for every partition of n
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        m: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run a verification suite; exits 1 on any failure
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
        enum_cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum CountMethod {
    Closed,
    Determinant,
    Enumerate,
    Frobenius,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum CharMethod {
    Lassalle,
    Mn,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Serialize)]
struct CountLine<'a> {
    mu: String,
    m: usize,
    method: &'a CountMethod,
    value: String,
}

#[derive(Serialize)]
struct KostkaLine {
    mu: String,
    weight: String,
    method: &'static str,
    value: String,
}

#[derive(Serialize)]
struct CharacterLine<'a> {
    mu: String,
    cycle_type: String,
    method: &'a CharMethod,
    value: String,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let line = serde_json::to_string(value).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut out = io::stdout().lock();
    writeln!(out, "{line}")?;
    Ok(())
}

fn count(mu: &Partition, m: usize, method: CountMethod, cap: usize) -> Result<String, Error> {
    let n = mu.size();
    if m < 1 || m > n {
        return Err(Error::MOutOfRange { m, n });
    }
    if mu.first_row() < m {
        return Err(Error::FirstRowTooShort {
            mu: mu.to_string(),
            m,
        });
    }
    let inner = Partition::row(m);
    let value = match method {
        CountMethod::Closed => skew_count_closed(mu, m)?,
        CountMethod::Determinant => aitken_count(&SkewShape::new(mu.clone(), inner)?),
        CountMethod::Enumerate => enumerate_skew_syt(&SkewShape::new(mu.clone(), inner)?, cap)?,
        CountMethod::Frobenius => frobenius_skew(mu, &inner)?,
    };
    Ok(value.to_string())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count {
            mu,
            m,
            method,
            enum_cap,
        } => {
            let mu = parse_partition(&mu)?;
            let value = count(&mu, m, method, enum_cap)?;
            print_json(&CountLine {
                mu: mu.to_string(),
                m,
                method: &method,
                value,
            })
        }
        Command::Kostka { mu, weight, enum_cap } => {
            let mu = parse_partition(&mu)?;
            let weight = WeightVector::parse(&weight)?;
            if weight.total() != mu.size() {
                return Err(Error::SizeMismatch {
                    expected: mu.size(),
                    actual: weight.total(),
                }
                .into());
            }
            let (method, value) = match weight.as_hook() {
                Some(m) => ("hook", kostka_hook(&mu, m)?),
                None => ("enumerate", kostka_enumerate(&mu, &weight, enum_cap)?),
            };
            let weight_text: Vec<String> = weight.entries().iter().map(|w| w.to_string()).collect();
            print_json(&KostkaLine {
                mu: mu.to_string(),
                weight: weight_text.join(","),
                method,
                value: value.to_string(),
            })
        }
        Command::Character {
            mu,
            cycle_type,
            method,
        } => {
            let mu = parse_partition(&mu)?;
            let cls = CycleType::new(parse_partition(&cycle_type)?, mu.size())?;
            let value = match method {
                CharMethod::Mn => chi_mn(&mu, &cls)?,
                CharMethod::Lassalle => {
                    let support = SmallSupport::from_cycles(&cls.nontrivial())
                        .ok_or_else(|| Error::UnsupportedSupport(cls.to_string()))?;
                    chi_small(&mu, support)?
                }
            };
            print_json(&CharacterLine {
                mu: mu.to_string(),
                cycle_type: cls.to_string(),
                method: &method,
                value: value.to_string(),
            })
        }
        Command::Table { n, m, format } => {
            if n == 0 {
                return Err(Failure::Usage("n must be at least 1".into()));
            }
            let rows = skew_table(n, &m)?;
            let out = io::stdout().lock();
            match format {
                Format::Csv => write_csv(out, &m, &rows).map_err(|e| Failure::Usage(e.to_string())),
                Format::Json => Ok(write_json_lines(out, &m, &rows)?),
            }
        }
        Command::Verify {
            suite,
            max_n,
            enum_cap,
        } => {
            let suite: Suite = suite.parse()?;
            let report = run_suite(suite, &VerifyConfig { max_n, enum_cap })?;
            eprintln!("{report}");
            print_json(&report)?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
