use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use hecke_rgroup::oracle::{OracleConfig, DEFAULT_ORACLE_BOUND};
use hecke_rgroup::sweeps::{Suite, SweepBounds};
use hecke_rgroup::{Bipartition, InductionDatum, Partition, Rational};
use hecke_rgroup_cli::report::TableCsvRow;
use hecke_rgroup_cli::{text, *};

const TABLE_HELP: &str = "CSV columns: n, m, kappa, mu, d, components, gluable_lengths, \
class_size, cardinality, intervals, gluing. Partitions are space-separated parts in \
increasing order; empty cells mean the check does not apply.";

#[derive(Parser)]
#[command(name = "hecke-rgroup", version, about = "R-groups of induced discrete series for type B affine Hecke algebras")]
struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV (table only).
    #[arg(long, global = true)]
    csv: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// R-group, components and checks for one induction datum.
    Rgroup {
        #[arg(short)]
        n: usize,
        /// Label ratio as an exact fraction, e.g. 3 or 1/2.
        #[arg(short, allow_hyphen_values = true)]
        m: String,
        /// Parts of kappa, comma separated; empty for none.
        #[arg(long, default_value = "")]
        kappa: String,
        /// Parts of mu, comma separated; empty for none.
        #[arg(long, default_value = "")]
        mu: String,
        /// Cross-check by exhaustive enumeration of W(B_n).
        #[arg(long)]
        oracle: bool,
        /// Largest n enumerated by --oracle.
        #[arg(long, env = "HECKE_RGROUP_BOUND_N", default_value_t = DEFAULT_ORACLE_BOUND)]
        bound_n: usize,
    },
    /// All residual partitions of l at m.
    Residual {
        #[arg(short)]
        l: usize,
        #[arg(short, allow_hyphen_values = true)]
        m: String,
    },
    /// m-tableau and split of one partition.
    Split {
        #[arg(long)]
        lambda: String,
        #[arg(short, allow_hyphen_values = true)]
        m: String,
    },
    /// m-symbol and similarity class of a bipartition.
    Symbols {
        #[arg(long, default_value = "")]
        xi: String,
        #[arg(long, default_value = "")]
        eta: String,
        #[arg(short, allow_hyphen_values = true)]
        m: String,
    },
    /// One row per valid datum of rank n.
    #[command(after_help = TABLE_HELP)]
    Table {
        #[arg(short)]
        n: usize,
        /// Comma-separated values of m.
        #[arg(short, allow_hyphen_values = true)]
        m: String,
    },
    /// Run the consistency sweeps.
    Selftest {
        /// residual, gluing, pairs, oracle or symbols; repeatable.
        #[arg(long)]
        suite: Vec<String>,
        /// Largest n in the oracle and symbol sweeps.
        #[arg(long, env = "HECKE_RGROUP_BOUND_N")]
        bound_n: Option<usize>,
        /// Largest |lambda| in the residual and gluing sweeps.
        #[arg(long)]
        bound_l: Option<usize>,
    },
    /// Convert type C labels (k1', k2') to (k1, k2) and m.
    ConvertC {
        #[arg(long, allow_hyphen_values = true)]
        k1: String,
        #[arg(long, allow_hyphen_values = true)]
        k2: String,
    },
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<hecke_rgroup::Error> for Failure {
    fn from(e: hecke_rgroup::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn rational(s: &str) -> Result<Rational, Failure> {
    s.trim().parse().map_err(|e: hecke_rgroup::Error| Failure::Usage(e.to_string()))
}

fn partition(s: &str) -> Result<Partition, Failure> {
    s.parse().map_err(|e: hecke_rgroup::Error| Failure::Usage(e.to_string()))
}

fn emit<T: Serialize>(json: bool, value: &T, human: impl FnOnce(&T) -> String) -> Result<(), Failure> {
    let body = if json {
        serde_json::to_string_pretty(value).expect("records serialize") + "\n"
    } else {
        human(value)
    };
    let mut stdout = io::stdout().lock();
    // A closed pipe is not an error worth reporting.
    let _ = stdout.write_all(body.as_bytes());
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    if cli.csv && !matches!(cli.command, Command::Table { .. }) {
        return Err(Failure::Usage("--csv is only available for table".into()));
    }
    match cli.command {
        Command::Rgroup {
            n,
            m,
            kappa,
            mu,
            oracle,
            bound_n,
        } => {
            let datum = InductionDatum::new(n, rational(&m)?, partition(&kappa)?, partition(&mu)?)?;
            let config = OracleConfig {
                bound: bound_n,
                ..OracleConfig::default()
            };
            let report = cmd_rgroup(&datum, oracle.then_some(&config))?;
            emit(cli.json, &report, text::report)?;
            if !report.all_checks_pass() {
                return Err(Failure::Checks);
            }
        }
        Command::Residual { l, m } => {
            let listing = cmd_residual(l, &rational(&m)?)?;
            emit(cli.json, &listing, text::residual)?;
        }
        Command::Split { lambda, m } => {
            let report = cmd_split(&partition(&lambda)?, &rational(&m)?)?;
            emit(cli.json, &report, text::split)?;
        }
        Command::Symbols { xi, eta, m } => {
            let b = Bipartition::new(partition(&xi)?, partition(&eta)?);
            let report = cmd_symbols(&b, &rational(&m)?)?;
            emit(cli.json, &report, text::symbols)?;
        }
        Command::Table { n, m } => {
            let ms = m.split(',').map(rational).collect::<Result<Vec<_>, _>>()?;
            let table = cmd_table(n, &ms)?;
            if cli.csv {
                let mut w = csv::Writer::from_writer(io::stdout().lock());
                for row in &table.rows {
                    w.serialize(TableCsvRow::from(row))
                        .map_err(|e| Failure::Usage(e.to_string()))?;
                }
                let _ = w.flush();
            } else {
                emit(cli.json, &table, text::table)?;
            }
            if !table.rows.iter().all(|r| r.passed()) {
                return Err(Failure::Checks);
            }
        }
        Command::Selftest {
            suite,
            bound_n,
            bound_l,
        } => {
            let suites = suite
                .iter()
                .map(|s| Suite::from_name(s).ok_or_else(|| Failure::Usage(format!("unknown suite {s}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let mut bounds = SweepBounds::default();
            let mut config = OracleConfig::default();
            if let Some(n) = bound_n {
                bounds.n = n;
                config.bound = n;
            }
            if let Some(l) = bound_l {
                bounds.residual_l = l;
                bounds.gluing_l = l;
            }
            let reports = cmd_selftest(&suites, &bounds, &config)?;
            emit(cli.json, &reports, |r| text::selftest(r))?;
            if !reports.iter().all(|r| r.passed()) {
                return Err(Failure::Checks);
            }
        }
        Command::ConvertC { k1, k2 } => {
            let report = cmd_convert_c(&rational(&k1)?, &rational(&k2)?)?;
            emit(cli.json, &report, text::convert)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            log::warn!("could not size the worker pool: {e}");
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
