use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hyperchrom::analysis::{inequality_suite, verify_conjecture, ConjectureStatus};
use hyperchrom::coloring::{
    brooks_edge_color, greedy_color, is_proper, vizing_hyperedge_color, OrderStrategy,
};
use hyperchrom::instances::{self, parse_range, FamilySpec};
use hyperchrom::oracle::{check_lemma_key, chromatic_index, extract_critical, OracleBudget};
use hyperchrom::report::{self, ReportFormat};
use hyperchrom::survey::{self, SurveyConfig, EXIT_OK, EXIT_UNRESOLVED, EXIT_USAGE, EXIT_VIOLATED};
use hyperchrom::{hgr, Error, Hypergraph};

/// Exit code for I/O failures that are not the caller's fault.
const EXIT_IO: u8 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "hyperchrom",
    version,
    about = "Hypergraph edge coloring and chromatic index bounds"
)]
struct Cli {
    #[command(flatten)]
    global: Global,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Node budget of the exact solver.
    #[arg(long, global = true, env = "HYPERCHROM_MAX_NODES", default_value_t = hyperchrom::oracle::DEFAULT_MAX_NODES)]
    budget: u64,

    /// Time limit of the exact solver, in seconds.
    #[arg(long, global = true, env = "HYPERCHROM_TIME_LIMIT", default_value_t = hyperchrom::oracle::DEFAULT_TIME_LIMIT.as_secs_f64())]
    time_limit: f64,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Method {
    Greedy,
    Brooks,
    Vizing,
    Exact,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural statistics and inequality checks.
    Stats { file: PathBuf },
    /// Color the hyperedges of a file.
    Color {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Greedy)]
        method: Method,
        /// index, desc-degree, random or random(SEED).
        #[arg(long, default_value = "desc-degree")]
        order: String,
        /// Seed for `--order random`.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check q(H) <= Δ₂ + 1 and report which hypotheses apply.
    Verify {
        file: PathBuf,
        /// Run the exact solver instead of bracketing q heuristically.
        #[arg(long)]
        exact: bool,
    },
    /// Criticality table and a critical partial hypergraph.
    Critical { file: PathBuf },
    /// Generate an instance, e.g. `--family "affine-plane 3"`.
    Gen {
        #[arg(long)]
        family: String,
        /// Output path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seed for random families that do not name one.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Verify a batch of seeded random linear hypergraphs.
    Survey {
        #[arg(long, default_value = "random-linear")]
        family: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value = "6..12")]
        n_range: String,
        #[arg(long, default_value = "1..16")]
        m_range: String,
        /// Comma-separated uniformities.
        #[arg(long, value_delimiter = ',', default_value = "3")]
        k: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Bracket q heuristically instead of solving exactly.
        #[arg(long)]
        heuristic: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::Io(msg) => Failure::Io(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE as u8)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}

fn budget(global: &Global) -> Result<OracleBudget, Failure> {
    let secs = global.time_limit;
    if !(secs.is_finite() && secs > 0.0) {
        return Err(Failure::Usage(format!(
            "--time-limit must be positive, got {secs}"
        )));
    }
    Ok(OracleBudget::new(
        global.budget,
        Duration::from_secs_f64(secs),
    )?)
}

fn load(path: &Path) -> Result<Hypergraph, Failure> {
    hgr::parse(path).map_err(|e| match e {
        Error::Io(msg) => Failure::Io(format!("{}: {msg}", path.display())),
        other => Failure::Usage(format!("{}: {other}", path.display())),
    })
}

fn format(global: &Global) -> ReportFormat {
    match global.format {
        Format::Text => ReportFormat::Text,
        Format::Json => ReportFormat::Json,
    }
}

fn order_strategy(order: &str, seed: Option<u64>) -> Result<OrderStrategy, Failure> {
    let parsed: OrderStrategy = order.parse()?;
    Ok(match (order.trim(), seed) {
        ("random", Some(seed)) => OrderStrategy::Random(seed),
        _ => parsed,
    })
}

fn run(cli: Cli) -> Result<i32, Failure> {
    let global = &cli.global;
    match &cli.command {
        Command::Stats { file } => {
            let h = load(file)?;
            let r = report::stats_report(&h, &inequality_suite(&h));
            print!("{}", r.render(format(global)));
            Ok(EXIT_OK)
        }
        Command::Color {
            file,
            method,
            order,
            seed,
        } => {
            let h = load(file)?;
            let strategy = order_strategy(order, *seed)?;
            let (coloring, exact, name) = match method {
                Method::Greedy => (
                    greedy_color(&h, strategy),
                    None,
                    format!("greedy {strategy}"),
                ),
                Method::Brooks => (brooks_edge_color(&h), None, "brooks".to_string()),
                Method::Vizing => (vizing_hyperedge_color(&h)?, None, "vizing".to_string()),
                Method::Exact => {
                    let search = chromatic_index(&h, budget(global)?);
                    (search.witness, Some(search.value), "exact".to_string())
                }
            };
            let proper = is_proper(&h, &coloring)?;
            assert!(
                proper,
                "internal inconsistency: {name} produced an improper coloring"
            );
            let r = report::coloring_report(&h, &name, &coloring, proper, exact.as_ref());
            print!("{}", r.render(format(global)));
            Ok(match exact {
                Some(q) if q.exact().is_none() => EXIT_UNRESOLVED,
                _ => EXIT_OK,
            })
        }
        Command::Verify { file, exact } => {
            let h = load(file)?;
            let v = verify_conjecture(&h, budget(global)?, *exact);
            print!("{}", report::verdict_report(&h, &v).render(format(global)));
            Ok(match v.status {
                ConjectureStatus::Holds => EXIT_OK,
                // The conjecture only speaks about loopless linear hypergraphs.
                ConjectureStatus::Violated if v.stats.linear && v.stats.loopless => EXIT_VIOLATED,
                ConjectureStatus::Violated => EXIT_OK,
                ConjectureStatus::Unresolved => EXIT_UNRESOLVED,
            })
        }
        Command::Critical { file } => {
            let h = load(file)?;
            let b = budget(global)?;
            let lemma = check_lemma_key(&h, b);
            let core = extract_critical(&h, b);
            print!(
                "{}",
                report::critical_report(&h, &lemma, &core).render(format(global))
            );
            Ok(if lemma.complete && core.is_final {
                EXIT_OK
            } else {
                EXIT_UNRESOLVED
            })
        }
        Command::Gen { family, out, seed } => {
            let spec = FamilySpec::parse_with_seed(family, *seed)?;
            let h = instances::generate(&spec)?;
            match out {
                Some(path) => hgr::serialize(&h, path)
                    .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
                None => print!("{}", hgr::to_string(&h)),
            }
            Ok(EXIT_OK)
        }
        Command::Survey {
            family,
            count,
            n_range,
            m_range,
            k,
            seed,
            jobs,
            heuristic,
        } => {
            if family != "random-linear" {
                return Err(Failure::Usage(format!(
                    "survey supports only the random-linear family, got '{family}'"
                )));
            }
            let range = |flag: &str, s: &str| {
                parse_range(s).ok_or_else(|| Failure::Usage(format!("{flag}: bad range '{s}'")))
            };
            let cfg = SurveyConfig {
                count: *count,
                n_range: range("--n-range", n_range)?,
                m_range: range("--m-range", m_range)?,
                ks: k.clone(),
                seed: *seed,
                jobs: *jobs,
                budget: budget(global)?,
                use_exact: !heuristic,
            };
            let outcome = survey::run_survey(&cfg)?;
            match global.format {
                Format::Text => print!("{}", outcome.render()),
                Format::Json => print!("{}", outcome.render_json()),
            }
            Ok(outcome.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn random_order_takes_seed_flag() {
        assert_eq!(
            order_strategy("random", Some(9)).unwrap(),
            OrderStrategy::Random(9)
        );
        assert_eq!(
            order_strategy("random(4)", Some(9)).unwrap(),
            OrderStrategy::Random(4)
        );
        assert_eq!(order_strategy("index", None).unwrap(), OrderStrategy::Index);
        assert!(order_strategy("sideways", None).is_err());
    }

    #[test]
    fn global_flags_parse_after_subcommand() {
        let cli = Cli::try_parse_from([
            "hyperchrom",
            "verify",
            "x.hgr",
            "--exact",
            "--format",
            "json",
            "--budget",
            "5",
        ])
        .unwrap();
        assert_eq!(cli.global.budget, 5);
        assert!(matches!(cli.global.format, Format::Json));
        assert!(
            Cli::try_parse_from(["hyperchrom", "color", "x.hgr", "--method", "magic"]).is_err()
        );
    }
}
