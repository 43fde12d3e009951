//! `census`: command-line front end over the enumeration engine. Every
//! subcommand is deterministic given its arguments (plus seed and worker
//! count where randomness is involved), so reruns are byte-identical.

mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;

use census_core::asymptotics::{
    asymptotics_rows, lemma6_bound, theorem3_bound, SequenceTable,
};
use census_core::cells::{cell_involution, classify_kostant, ClassifyMode};
use census_core::counting::{
    count_avoiding_involutions, count_avoiding_permutations, count_window_avoiders, q_statistics,
    verify_case, CountCache, CountKind, CountParams, ExactCount,
};
use census_core::montecarlo::{estimate_avoidance, estimate_q_membership, Population};
use census_core::perm::{INV_ENUM_CAP, PERM_ENUM_CAP};
use census_core::{BigUint, Error, Permutation};

use report::{BoundReport, CellInvolutionReport, Format, Report, SequenceEntry, SequenceReport};

#[derive(Parser)]
#[command(
    name = "census",
    version,
    about = "Exact and statistical enumeration around the consecutive 2143 pattern"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Path to the exact-count cache (single JSON file); created on demand.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Worker count for parallel engines and Monte Carlo trial blocks.
    #[arg(long, global = true, env = "CENSUS_WORKERS", default_value_t = 1)]
    workers: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PopulationArg {
    Perm,
    Inv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Quick,
    Cell,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SequenceArg {
    Inv,
    Motzkin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichBound {
    Theorem3,
    Lemma6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QuantityArg {
    Perm,
    Inv,
    Q,
}

#[derive(Subcommand)]
enum Command {
    /// Exact count of consecutive-2143 avoiders.
    Count {
        #[arg(long, value_enum)]
        kind: PopulationArg,
        #[arg(long)]
        n: usize,
    },
    /// Exact count of permutations whose window event holds at every listed block.
    Windows {
        #[arg(long)]
        n: usize,
        /// Comma-separated block indices; empty means no constraint.
        #[arg(long, value_delimiter = ',')]
        blocks: Vec<usize>,
    },
    /// Audit one of the five pinned-block case families.
    #[command(name = "verify-lemma7")]
    VerifyLemma7 {
        #[arg(long)]
        case: u8,
    },
    /// Exact window-event statistics over Q_n.
    Qstats {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Kostant-negativity certificate search for one permutation.
    Classify {
        /// One-line notation, e.g. 2,1,4,3.
        #[arg(long)]
        perm: String,
        #[arg(long, value_enum)]
        mode: ModeArg,
    },
    /// The unique involution in the permutation's left cell.
    #[command(name = "cell-involution")]
    CellInvolution {
        #[arg(long)]
        perm: String,
    },
    /// Integer sequence table (involution or Motzkin numbers).
    Sequence {
        #[arg(long, value_enum)]
        name: SequenceArg,
        #[arg(long)]
        max_n: usize,
    },
    /// Diagnostic table: i_n, M_n, r(n) and the regime union bound.
    Asymptotics {
        #[arg(long)]
        max_n: usize,
    },
    /// Closed-form bounds: (23/24)^k or 16·C(k,2)·i_{n-2}/i_n.
    Bound {
        #[arg(long, value_enum)]
        which: WhichBound,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Seeded Monte Carlo estimate.
    Mc {
        #[arg(long, value_enum)]
        quantity: QuantityArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
}

enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

fn validate_degree(n: usize, cap: usize) -> Result<(), Error> {
    if n < 1 {
        Err(Error::DegreeTooSmall { n, required: 1 })
    } else if n > cap {
        Err(Error::DegreeTooLarge { n, cap })
    } else {
        Ok(())
    }
}

/// Serves exact counts through the cache when one is configured: a hit skips
/// recomputation, a miss computes, stores, and saves.
fn cached_count(
    cache_path: &Option<PathBuf>,
    probe: ExactCount,
    compute: impl FnOnce() -> Result<ExactCount, Error>,
) -> Result<ExactCount, Error> {
    let Some(path) = cache_path else {
        return compute();
    };
    let mut cache = CountCache::open(path)?;
    if let Some(hit) = cache.get(&probe.cache_key()) {
        return Ok(hit.clone());
    }
    let record = compute()?;
    cache.reconcile(record.clone())?;
    cache.save()?;
    Ok(record)
}

/// Verifies freshly computed records against the cache (insert on miss,
/// exact-match check on hit). Used by commands whose point is recomputation.
fn reconcile_records(cache_path: &Option<PathBuf>, records: Vec<ExactCount>) -> Result<(), Error> {
    if let Some(path) = cache_path {
        let mut cache = CountCache::open(path)?;
        for record in records {
            cache.reconcile(record)?;
        }
        cache.save()?;
    }
    Ok(())
}

fn probe(kind: CountKind, n: usize, params: CountParams) -> ExactCount {
    ExactCount {
        kind,
        n,
        params,
        value: BigUint::from(0u32),
    }
}

fn run(command: Command, cache: &Option<PathBuf>, workers: u32) -> Result<Report, CliError> {
    match command {
        Command::Count { kind, n } => {
            let record = match kind {
                PopulationArg::Perm => {
                    validate_degree(n, PERM_ENUM_CAP)?;
                    cached_count(cache, probe(CountKind::PermAvoiders, n, CountParams::None {}), || {
                        count_avoiding_permutations(n)
                    })?
                }
                PopulationArg::Inv => {
                    validate_degree(n, INV_ENUM_CAP)?;
                    cached_count(cache, probe(CountKind::InvAvoiders, n, CountParams::None {}), || {
                        count_avoiding_involutions(n)
                    })?
                }
            };
            Ok(Report::Count(record))
        }
        Command::Windows { n, blocks } => {
            validate_degree(n, PERM_ENUM_CAP)?;
            let mut sorted = blocks.clone();
            sorted.sort_unstable();
            sorted.dedup();
            for &b in &sorted {
                if b < 1 || 4 * b > n {
                    return Err(Error::BlockOutOfRange {
                        block: b,
                        n,
                        max: n / 4,
                    }
                    .into());
                }
            }
            let record = cached_count(
                cache,
                probe(
                    CountKind::WindowAvoiders,
                    n,
                    CountParams::Blocks { blocks: sorted },
                ),
                || count_window_avoiders(n, &blocks),
            )?;
            Ok(Report::Count(record))
        }
        Command::VerifyLemma7 { case } => {
            let result = verify_case(case)?;
            let n = 3 + case as usize;
            reconcile_records(
                cache,
                vec![
                    ExactCount {
                        kind: CountKind::CaseTotal,
                        n,
                        params: CountParams::Case { case },
                        value: BigUint::from(result.total),
                    },
                    ExactCount {
                        kind: CountKind::CaseViolators,
                        n,
                        params: CountParams::Case { case },
                        value: BigUint::from(result.violators),
                    },
                ],
            )?;
            Ok(Report::Case(result))
        }
        Command::Qstats { n, k } => {
            let stats = q_statistics(n, k)?;
            reconcile_records(
                cache,
                vec![ExactCount {
                    kind: CountKind::QSize,
                    n,
                    params: CountParams::K { k },
                    value: stats.q_size.clone(),
                }],
            )?;
            Ok(Report::QStats(stats))
        }
        Command::Classify { perm, mode } => {
            let w: Permutation = perm.parse()?;
            let mode = match mode {
                ModeArg::Quick => ClassifyMode::Quick,
                ModeArg::Cell => ClassifyMode::Cell,
            };
            Ok(Report::Verdict(classify_kostant(&w, mode)?))
        }
        Command::CellInvolution { perm } => {
            let w: Permutation = perm.parse()?;
            let u = cell_involution(&w);
            Ok(Report::CellInvolution(CellInvolutionReport {
                perm: w.to_string(),
                involution: u.to_string(),
                cycles: u.cycle_string(),
            }))
        }
        Command::Sequence { name, max_n } => {
            let table = match name {
                SequenceArg::Inv => SequenceTable::involutions(max_n),
                SequenceArg::Motzkin => SequenceTable::motzkin(max_n),
            };
            Ok(Report::Sequence(SequenceReport {
                name: table.name.to_string(),
                max_n,
                values: table
                    .values()
                    .iter()
                    .enumerate()
                    .map(|(n, v)| SequenceEntry {
                        n,
                        value: v.clone(),
                    })
                    .collect(),
            }))
        }
        Command::Asymptotics { max_n } => Ok(Report::Asymptotics(asymptotics_rows(max_n))),
        Command::Bound { which, k, n } => match which {
            WhichBound::Theorem3 => {
                if n.is_some() {
                    return Err(CliError::Usage(
                        "--n only applies to --which lemma6".to_string(),
                    ));
                }
                let k32 = u32::try_from(k)
                    .map_err(|_| CliError::Usage(format!("--k {k} is too large for theorem3")))?;
                let value = theorem3_bound(k32);
                let approx = value.to_f64().unwrap_or(f64::NAN);
                Ok(Report::Bound(BoundReport::Theorem3 {
                    which: "theorem3",
                    k,
                    value: value.to_string(),
                    approx,
                }))
            }
            WhichBound::Lemma6 => {
                let n = n.ok_or_else(|| {
                    CliError::Usage("--n is required for --which lemma6".to_string())
                })?;
                Ok(Report::Bound(BoundReport::Lemma6 {
                    which: "lemma6",
                    k,
                    n,
                    value: lemma6_bound(n, k)?,
                }))
            }
        },
        Command::Mc {
            quantity,
            n,
            k,
            trials,
            seed,
        } => {
            let estimate = match quantity {
                QuantityArg::Perm | QuantityArg::Inv => {
                    if k.is_some() {
                        return Err(CliError::Usage(
                            "--k only applies to --quantity q".to_string(),
                        ));
                    }
                    let population = match quantity {
                        QuantityArg::Perm => Population::Permutations,
                        _ => Population::Involutions,
                    };
                    estimate_avoidance(n, population, trials, seed, workers)?
                }
                QuantityArg::Q => {
                    let k = k.ok_or_else(|| {
                        CliError::Usage("--k is required for --quantity q".to_string())
                    })?;
                    estimate_q_membership(n, k, trials, seed, workers)?
                }
            };
            Ok(Report::Estimate(estimate))
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let workers = cli.workers.max(1);
    // The global pool backs the exact engines; Monte Carlo trial blocks are
    // logical and depend only on the workers value itself.
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers as usize)
        .build_global()
        .ok();
    match run(cli.command, &cli.cache, workers) {
        Ok(result) => println!("{}", result.render(cli.format)),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
