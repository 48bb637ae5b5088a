use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod dispatch;
mod errors;
mod fixtures;

use errors::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "trace-ideals",
    version,
    about = "Trace ideals, stable ideals and birational overrings of one-dimensional local rings"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Coefficient field: Q, F2, F3, F9/F3, ...
    #[arg(long, global = true, default_value = "Q")]
    pub field: String,
    /// Largest closure window (in t-degrees) when generating rings.
    #[arg(long, global = true)]
    pub window: Option<i64>,
    /// Override the quotient-dimension cap for exhaustive searches.
    #[arg(long, global = true)]
    pub max_dim: Option<usize>,
    /// Cross-check single-witness shortcuts by brute force.
    #[arg(long, global = true)]
    pub paranoid: bool,
    /// Emit JSON instead of a text summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Modulus of an extension field as `c0,c1,...,1`.
    #[arg(long, global = true)]
    pub modulus: Option<String>,
    /// TOML file with a `[moduli]` table, e.g. `F8 = [1, 1, 0, 1]`.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ring invariants and classification of ideals.
    Analyze {
        /// `sg:4,5,6`, `gens:t2+t3,t5` or `resext:F8/F2`.
        ring: String,
        /// Ideal generators, e.g. `t5,t6,t8` (repeatable).
        #[arg(long = "ideal")]
        ideals: Vec<String>,
        /// Also run the anti-stability check up to this colength.
        #[arg(long)]
        antistable: Option<usize>,
        /// Compare the lattice engine with semigroup arithmetic.
        #[arg(long)]
        cross_check: bool,
    },
    /// Enumerate trace ideals, overrings and stable classes.
    Enumerate {
        ring: String,
        /// Overrings from oversemigroups (also works over Q).
        #[arg(long)]
        monomial_only: bool,
        /// Certify the overring search by scanning every subspace of V/R.
        #[arg(long)]
        scan: bool,
        /// Re-scan ideals this many degrees below the conductor.
        #[arg(long, default_value_t = 0)]
        floor_check: i64,
        /// Compare against the expected fragment of a fixture file.
        #[arg(long)]
        expect: Option<PathBuf>,
    },
    /// Numerical semigroup invariants.
    Sg {
        #[command(subcommand)]
        action: SgAction,
    },
    /// Golden fixture corpus.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
        /// Fixture directory.
        #[arg(long, global = true)]
        dir: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum SgAction {
    /// Gaps, Frobenius number, Apéry set, pseudo-Frobenius numbers, type.
    Info { gens: String },
    /// All oversemigroups.
    Over { gens: String },
}

#[derive(Subcommand, Debug)]
enum FixtureAction {
    List,
    /// Run fixtures whose name contains the filter.
    Run {
        filter: Option<String>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let g = &cli.global;
    match cli.command {
        Command::Analyze {
            ring,
            ideals,
            antistable,
            cross_check,
        } => {
            let task = dispatch::AnalyzeTask {
                ideals,
                antistable,
                cross_check,
                paranoid: g.paranoid,
            };
            let report = dispatch::with_ring(g, &ring, task)?;
            emit(g, &report, dispatch::analyze_text(&report))
        }
        Command::Enumerate {
            ring,
            monomial_only,
            scan,
            floor_check,
            expect,
        } => {
            let opts = trace_ideals::enumerate::EnumOptions {
                max_dim: g.max_dim,
                paranoid: g.paranoid,
                scan_overrings: scan,
                monomial_only,
                floor_check_width: floor_check,
            };
            let report = dispatch::with_ring(g, &ring, dispatch::EnumerateTask { opts })?;
            let value = serde_json::to_value(&report).expect("serializable");
            emit(g, &report, dispatch::enumerate_text(&report))?;
            if let Some(path) = expect {
                let fixture = fixtures::Fixture::load(&path)?;
                let diffs = fixtures::compare(&fixture.expect, &value);
                if !diffs.is_empty() {
                    return Err(CliError::Mismatch(fixtures::mismatch_message(
                        &fixture, &diffs,
                    )));
                }
            }
            Ok(())
        }
        Command::Sg { action } => {
            let (gens, over) = match action {
                SgAction::Info { gens } => (gens, false),
                SgAction::Over { gens } => (gens, true),
            };
            let s: trace_ideals::semigroup::NumericalSemigroup =
                gens.parse()
                    .map_err(|e: trace_ideals::semigroup::SemigroupError| {
                        CliError::Parse(e.to_string())
                    })?;
            if over {
                let list: Vec<trace_ideals::semigroup::SemigroupInfo> =
                    s.oversemigroups().iter().map(|t| t.info()).collect();
                let text = list
                    .iter()
                    .map(|i| {
                        format!(
                            "{:?}  genus {}  type {}",
                            i.generators, i.genus, i.semigroup_type
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n");
                emit(
                    g,
                    &serde_json::json!({"schema": 1, "semigroup": s.to_string(), "oversemigroups": list}),
                    text,
                )
            } else {
                let info = s.info();
                let text = format!(
                    "{s}: gaps {:?}, F = {}, Apéry {:?}, PF {:?}, type {}, symmetric {}, almost symmetric {}",
                    info.gaps, info.frobenius, info.apery, info.pseudo_frobenius, info.semigroup_type, info.symmetric, info.almost_symmetric
                );
                emit(
                    g,
                    &serde_json::json!({"schema": 1, "semigroup": s.to_string(), "info": info}),
                    text,
                )
            }
        }
        Command::Fixtures { action, dir } => {
            let dir = dir.unwrap_or_else(fixtures::default_dir);
            let all = fixtures::load_dir(&dir)?;
            match action {
                FixtureAction::List => {
                    for f in &all {
                        say(&format!("{}\t{}\t{}\t{}", f.name, f.ring, f.field, f.note));
                    }
                    Ok(())
                }
                FixtureAction::Run { filter } => fixtures::run_all(g, &all, filter.as_deref()),
            }
        }
    }
}

fn emit<T: serde::Serialize>(g: &GlobalOpts, value: &T, text: String) -> Result<(), CliError> {
    if g.json {
        say(&serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        say(&text);
    }
    Ok(())
}

/// One line to stdout; a closed pipe (`| head`) ends the process quietly.
pub fn say(line: &str) {
    use std::io::Write;
    if let Err(e) = writeln!(std::io::stdout().lock(), "{line}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("{e}");
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let err = CliError::Parse(e.to_string().trim().to_string());
            eprintln!("{}", err.to_json());
            return ExitCode::from(err.exit_code());
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code())
        }
    }
}
