use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use wvg_control::commands::{
    cmd_control, cmd_index, cmd_oracle, cmd_reduce, cmd_verify, exit_code, CommonOptions, ControlMode, OracleKind,
    ReduceArgs, RunReport,
};
use wvg_control::gadgets::{GadgetKind, GroupLabel};
use wvg_control::verify::Suite;
use wvg_control::{Engine, EngineBudget, Error, Result};

/// Exact Banzhaf indices, control by deleting players, and gadget compilation.
///
/// Exit codes: 0 done (a NO verdict included), 1 a verification check failed,
/// 2 input error, 3 an engine refused within its budget.
#[derive(Parser)]
#[command(name = "wvg", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// enum, mitm, dp, layered or auto.
    #[arg(long, global = true, default_value = "auto")]
    engine: Engine,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest |N| - 1 for the enumeration engine.
    #[arg(long, global = true)]
    budget_enum: Option<usize>,
    /// Largest half size for the meet-in-the-middle engine.
    #[arg(long, global = true)]
    budget_mitm: Option<usize>,
    /// Largest quota for the weight table.
    #[arg(long, global = true)]
    budget_dp: Option<u64>,
    /// Allow small gadgets (any 1 <= k < n) outside the strict parameter range.
    #[arg(long, global = true)]
    relaxed: bool,
    /// Drop clauses containing a literal and its negation instead of rejecting them.
    #[arg(long, global = true)]
    strip_tautologies: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Banzhaf index of one player of a game or instance document.
    Index {
        file: PathBuf,
        /// Defaults to the distinguished player of an instance.
        #[arg(long)]
        player: Option<usize>,
    },
    /// Decide control by deleting players.
    Control {
        instance: PathBuf,
        /// Evaluate this many seeded random candidates instead of all.
        #[arg(long, conflicts_with = "groups")]
        sample: Option<usize>,
        /// Only delete players of these groups, e.g. `A,B`.
        #[arg(long, value_delimiter = ',')]
        groups: Option<Vec<GroupLabel>>,
        /// Override the instance's deletion budget.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Compile a DIMACS formula into a control instance.
    Reduce {
        cnf: PathBuf,
        /// decrease, nonincrease or maintain.
        #[arg(long)]
        kind: GadgetKind,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: Option<u64>,
        /// Add a fresh clause first so the target triples (maintain only).
        #[arg(long)]
        exactify: bool,
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Brute-force formula oracles: count, minority, exact, exact-star.
    Oracle {
        kind: OracleKind,
        cnf: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        ell: Option<u64>,
    },
    /// Run verification suites (all when none are named).
    Verify { suites: Vec<Suite> },
}

fn options(g: &Global) -> CommonOptions {
    let d = EngineBudget::default();
    CommonOptions {
        engine: g.engine,
        budget: EngineBudget {
            max_enum_players: g.budget_enum.unwrap_or(d.max_enum_players),
            max_mitm_half: g.budget_mitm.unwrap_or(d.max_mitm_half),
            max_dp_quota: g.budget_dp.unwrap_or(d.max_dp_quota),
        },
        seed: g.seed,
        relaxed: g.relaxed,
        strip_tautologies: g.strip_tautologies,
    }
}

fn run(cli: Cli) -> Result<RunReport> {
    if let Some(n) = cli.global.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::InvalidParameter(format!("--threads: {e}")))?;
    }
    let opts = options(&cli.global);
    match cli.command {
        Command::Index { file, player } => cmd_index(&file, player, &opts),
        Command::Control { instance, sample, groups, budget } => {
            let mode = match (sample, groups) {
                (Some(trials), _) => ControlMode::Sampled { trials },
                (None, Some(groups)) => ControlMode::Restricted { groups },
                (None, None) => ControlMode::Exhaustive,
            };
            cmd_control(&instance, mode, budget, &opts)
        }
        Command::Reduce { cnf, kind, k, ell, exactify, out } => {
            cmd_reduce(&ReduceArgs { cnf, kind, k, ell, exactify, out }, &opts)
        }
        Command::Oracle { kind, cnf, k, ell } => cmd_oracle(kind, &cnf, k, ell, &opts),
        Command::Verify { suites } => {
            let suites = if suites.is_empty() { Suite::ALL.to_vec() } else { suites };
            cmd_verify(&suites, &opts)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.global.json;
    let result = run(cli);
    match &result {
        Ok(report) if json => println!("{}", report.to_json()),
        Ok(report) => print!("{report}"),
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(exit_code(&result) as u8)
}
