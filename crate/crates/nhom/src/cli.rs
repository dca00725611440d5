use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nhom_core::catalog::Family;
use nhom_core::MemoryGuard;

use crate::commands::{self, AlgebraSpec, CommandOutput, RunError, RunResult, Settings};
use crate::relfile;

#[derive(Debug, Parser)]
#[command(name = "nhom", version, about = "Hilbert series, Koszul duality and plactic checks for N-homogeneous algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraName {
    Parafermion,
    Paraboson,
    Plactic,
    #[value(name = "as", alias = "artin-schelter")]
    ArtinSchelter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Args)]
pub struct Options {
    /// Catalog algebra.
    #[arg(long, global = true, value_enum)]
    pub algebra: Option<AlgebraName>,
    /// Number of generators.
    #[arg(long = "D", global = true)]
    pub generators: Option<usize>,
    /// Parameter q of the two-generator family, e.g. 2 or -1/2.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Parameter r of the two-generator family.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub r: Option<String>,
    /// Relation file (header `D=<int> N=<int>`, one relation per line).
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 6)]
    pub max_degree: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Worker threads for per-degree work; defaults to the available cores.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Refuse degrees whose word count D^n exceeds this bound.
    #[arg(long, global = true, default_value_t = MemoryGuard::default().max_words)]
    pub max_words: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimensions of the graded components A_n.
    Hilbert,
    /// Dual algebra dimensions by two routes, with the explicit dual relation check where known.
    Dual,
    /// P_A, Q_A and the Euler characteristic series, with the Koszul necessary condition.
    Chi,
    /// Homology of the Koszul complex slices and the resulting verdict.
    Koszul,
    /// Cohomology of the dualized length-3 resolution.
    Gorenstein,
    /// Per-position kernel, image and homology of every Koszul slice.
    Homology,
    /// Tableau normal forms and counts.
    Plactic {
        #[command(subcommand)]
        action: PlacticAction,
    },
    /// Every invariant for the selected algebra; exits nonzero if any fails.
    Checks,
}

#[derive(Debug, Subcommand)]
pub enum PlacticAction {
    /// Schensted insertion tableau of a word.
    NormalForm { word: String },
    /// Tableau counts against algebra dimensions.
    Count,
}

/// Configuration resolved from the command line.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub settings: Settings,
    pub format: Format,
}

fn resolve_algebra(o: &Options) -> RunResult<AlgebraSpec> {
    match (&o.algebra, &o.file) {
        (Some(_), Some(_)) => Err(RunError::Usage("give either --algebra or --file, not both".into())),
        (None, None) => Err(RunError::Usage("select an algebra with --algebra or --file".into())),
        (None, Some(path)) => {
            if o.generators.is_some() || o.q.is_some() || o.r.is_some() {
                return Err(RunError::Usage("--D, --q and --r do not apply to --file".into()));
            }
            let p = relfile::read(path).map_err(|e| RunError::Input(e.to_string()))?;
            Ok(AlgebraSpec::file(&path.display().to_string(), p))
        }
        (Some(AlgebraName::ArtinSchelter), None) => {
            let (Some(q), Some(r)) = (&o.q, &o.r) else {
                return Err(RunError::Usage("--algebra as needs --q and --r".into()));
            };
            if o.generators.is_some_and(|d| d != 2) {
                return Err(RunError::Usage("--algebra as has exactly two generators".into()));
            }
            let family = Family::ArtinSchelter {
                q: commands::parse_scalar("--q", q)?,
                r: commands::parse_scalar("--r", r)?,
            };
            AlgebraSpec::catalog(family)
        }
        (Some(name), None) => {
            if o.q.is_some() || o.r.is_some() {
                return Err(RunError::Usage("--q and --r apply only to --algebra as".into()));
            }
            let generators = o
                .generators
                .ok_or_else(|| RunError::Usage("this algebra needs --D".into()))?;
            let family = match name {
                AlgebraName::Parafermion => Family::Parafermion { generators },
                AlgebraName::Paraboson => Family::Paraboson { generators },
                _ => Family::Plactic { generators },
            };
            AlgebraSpec::catalog(family)
        }
    }
}

pub fn config(o: &Options) -> RunConfig {
    let jobs = o
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1);
    RunConfig {
        settings: Settings {
            max_degree: o.max_degree,
            jobs,
            guard: MemoryGuard { max_words: o.max_words },
        },
        format: o.format,
    }
}

pub fn run(cli: &Cli) -> RunResult<CommandOutput> {
    let cfg = config(&cli.options);
    let s = &cfg.settings;
    match &cli.command {
        Command::Plactic { action } => match action {
            PlacticAction::NormalForm { word } => commands::plactic_normal_form(word, cli.options.generators, s),
            PlacticAction::Count => {
                let d = cli
                    .options
                    .generators
                    .ok_or_else(|| RunError::Usage("plactic count needs --D".into()))?;
                commands::plactic_count(d, s)
            }
        },
        command => {
            let spec = resolve_algebra(&cli.options)?;
            match command {
                Command::Hilbert => commands::hilbert(&spec, s),
                Command::Dual => commands::dual(&spec, s),
                Command::Chi => commands::chi(&spec, s),
                Command::Koszul => commands::koszul(&spec, s),
                Command::Gorenstein => commands::gorenstein(&spec, s),
                Command::Homology => commands::homology_tables(&spec, s),
                Command::Checks => commands::checks(&spec, s),
                Command::Plactic { .. } => unreachable!("handled above"),
            }
        }
    }
}
