//! Batch commands behind the `wvg` binary. Each returns a [`RunReport`]; the
//! binary only parses flags and prints.

use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::control::{solve_control, SearchMode, SolverConfig, Verdict};
use crate::engines::{banzhaf_with_bands, Engine, EngineBudget};
use crate::error::{Error, Result};
use crate::formula::{count_sat, e_exact_sat, e_exact_sat_star, e_minority_sat, parse_dimacs, CnfFormula};
use crate::gadgets::{
    build_decrease, build_maintain, build_nonincrease, exactify, expected_index, ControlInstance, GadgetKind,
};
use crate::game::{ExactIndex, Game};
use crate::verify::{run_suite, Suite};

/// Flags shared by every command.
#[derive(Clone, Debug)]
pub struct CommonOptions {
    pub engine: Engine,
    pub budget: EngineBudget,
    pub seed: u64,
    pub relaxed: bool,
    pub strip_tautologies: bool,
}

impl Default for CommonOptions {
    fn default() -> Self {
        CommonOptions {
            engine: Engine::Auto,
            budget: EngineBudget::default(),
            seed: 0,
            relaxed: false,
            strip_tautologies: false,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ReportEntry {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub stage: String,
    pub millis: f64,
}

/// What a command did: the command line, a digest of its inputs, results as
/// exact strings, timings, and the engine that produced the numbers.
///
/// Everything except `timings` is a function of inputs, seeds and budgets.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs_digest: String,
    pub results: Vec<ReportEntry>,
    pub timings: Vec<Timing>,
    pub engine: Option<String>,
    /// `Some(false)` when a verification check failed.
    pub passed: Option<bool>,
}

impl RunReport {
    fn new(command: String, inputs: &[&[u8]]) -> Self {
        let mut h = Sha256::new();
        for part in inputs {
            h.update((part.len() as u64).to_le_bytes());
            h.update(part);
        }
        let digest = h.finalize().iter().map(|b| format!("{b:02x}")).collect::<String>();
        RunReport { command, inputs_digest: digest, results: Vec::new(), timings: Vec::new(), engine: None, passed: None }
    }

    fn push(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.results.push(ReportEntry { key: key.into(), value: value.to_string() });
    }

    fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> Result<T>) -> Result<T> {
        let start = Instant::now();
        let out = f();
        self.timings.push(Timing { stage: stage.into(), millis: start.elapsed().as_secs_f64() * 1e3 });
        out
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.results.iter().find(|e| e.key == key).map(|e| e.value.as_str())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command: {}", self.command)?;
        writeln!(f, "inputs sha256: {}", self.inputs_digest)?;
        if let Some(e) = &self.engine {
            writeln!(f, "engine: {e}")?;
        }
        let width = self.results.iter().map(|e| e.key.len()).max().unwrap_or(0);
        for e in &self.results {
            writeln!(f, "  {:width$}  {}", e.key, e.value)?;
        }
        for t in &self.timings {
            writeln!(f, "  time {}: {:.1} ms", t.stage, t.millis)?;
        }
        Ok(())
    }
}

/// `num/2^e (= decimal)`; the decimal has six significant digits and is
/// display only.
pub fn format_index(idx: &ExactIndex) -> String {
    format!("{idx} (= {})", idx.decimal_string())
}

const APPROX_NOTE: &str = "decimals are approximate; fractions are exact";

fn read(path: &Path) -> Result<Vec<u8>> {
    std::fs::read(path).map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))
}

fn utf8(bytes: &[u8], path: &Path) -> Result<String> {
    String::from_utf8(bytes.to_vec()).map_err(|_| Error::Format(format!("{} is not UTF-8", path.display())))
}

/// A game document or, when it names a distinguished player, an instance.
pub enum GameFile {
    Game(Game),
    Instance(Box<ControlInstance>),
}

pub fn parse_game_file(text: &str) -> Result<GameFile> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("distinguished").is_some() {
        Ok(GameFile::Instance(Box::new(ControlInstance::from_json(text)?)))
    } else {
        Ok(GameFile::Game(Game::from_json(text)?))
    }
}

/// β of `player` (default: the instance's distinguished player).
pub fn cmd_index(path: &Path, player: Option<usize>, opts: &CommonOptions) -> Result<RunReport> {
    let bytes = read(path)?;
    let mut report = RunReport::new(format!("index {} player={player:?}", path.display()), &[&bytes]);
    let parsed = parse_game_file(&utf8(&bytes, path)?)?;
    let (game, bands, gadget, player) = match &parsed {
        GameFile::Game(g) => {
            let p = player.ok_or_else(|| Error::InvalidParameter("--player is required for a plain game".into()))?;
            (g, None, None, p)
        }
        GameFile::Instance(inst) => {
            let p = player.unwrap_or(inst.distinguished);
            let bands = inst.bands.as_ref().filter(|b| b.distinguished == p);
            (&inst.game, bands, inst.gadget.as_ref().filter(|_| p == inst.distinguished), p)
        }
    };
    game.check_player(player)?;
    let (idx, engine) = report.time("index", || banzhaf_with_bands(game, player, opts.engine, &opts.budget, bands))?;
    report.engine = Some(engine.to_string());
    report.push("players", game.num_players());
    report.push("player", player);
    report.push("weight", game.weight(player));
    report.push("beta", format_index(&idx));
    if let Some(info) = gadget {
        if let Some(xi) = info.xi {
            let want = expected_index(info.kind, info.k, info.n, xi, info.ell, game.num_players())?;
            report.push("closed form", format!("{want} ({})", if want == idx { "matches" } else { "MISMATCH" }));
        }
    }
    report.push("note", APPROX_NOTE);
    Ok(report)
}

#[derive(Clone, Debug)]
pub enum ControlMode {
    Exhaustive,
    Sampled { trials: usize },
    Restricted { groups: Vec<crate::gadgets::GroupLabel> },
}

pub fn cmd_control(path: &Path, mode: ControlMode, budget_override: Option<usize>, opts: &CommonOptions) -> Result<RunReport> {
    let bytes = read(path)?;
    let mut report = RunReport::new(
        format!("control {} mode={mode:?} budget={budget_override:?} seed={}", path.display(), opts.seed),
        &[&bytes],
    );
    let mut inst = match parse_game_file(&utf8(&bytes, path)?)? {
        GameFile::Instance(i) => *i,
        GameFile::Game(_) => return Err(Error::Format("control needs an instance document with `distinguished`".into())),
    };
    if let Some(b) = budget_override {
        inst.budget = b;
    }
    let config = SolverConfig {
        engine: opts.engine,
        budget: opts.budget,
        mode: match mode {
            ControlMode::Exhaustive => SearchMode::Exhaustive,
            ControlMode::Sampled { trials } => SearchMode::Sampled { seed: opts.seed, trials },
            ControlMode::Restricted { groups } => SearchMode::Restricted { groups },
        },
        cross_check: true,
    };
    let out = report.time("search", || solve_control(&inst, &config))?;
    report.engine = Some(out.engine.to_string());
    report.push("goal", inst.goal);
    report.push("deletion budget", inst.budget);
    report.push("before", format_index(&out.before));
    report.push(
        "verdict",
        match &out.verdict {
            Verdict::Yes { .. } => "YES".to_string(),
            Verdict::NoExhaustive => "NO (exhaustive)".to_string(),
            Verdict::NoSampled { .. } => "NO (sampled evidence only)".to_string(),
        },
    );
    match &out.verdict {
        Verdict::Yes { witness, after } => {
            report.push("witness", format!("{witness:?}"));
            report.push("after", format_index(after));
            report.push("cross-checked with", out.cross_checked_with.map_or("none within budget".into(), |e| e.to_string()));
        }
        Verdict::NoSampled { seed, trials, space } => {
            report.push("trials", trials);
            report.push("seed", seed);
            report.push("candidate space", space);
        }
        Verdict::NoExhaustive => {}
    }
    report.push("candidates evaluated", out.candidates_evaluated);
    if let Some((idx, del)) = &out.lowest {
        report.push("lowest", format!("{} via {del:?}", format_index(idx)));
    }
    if let Some((idx, del)) = &out.highest {
        report.push("highest", format!("{} via {del:?}", format_index(idx)));
    }
    report.push("note", APPROX_NOTE);
    Ok(report)
}

fn read_formula(path: &Path, opts: &CommonOptions) -> Result<(Vec<u8>, CnfFormula)> {
    let bytes = read(path)?;
    let f = parse_dimacs(&utf8(&bytes, path)?, opts.strip_tautologies)?;
    Ok((bytes, f))
}

#[derive(Clone, Debug)]
pub struct ReduceArgs {
    pub cnf: PathBuf,
    pub kind: GadgetKind,
    pub k: usize,
    pub ell: Option<u64>,
    /// Apply the tripling step first so a power-of-two `ell` becomes usable.
    pub exactify: bool,
    pub out: PathBuf,
}

/// Compiles a formula into a gadget instance file.
pub fn cmd_reduce(args: &ReduceArgs, opts: &CommonOptions) -> Result<RunReport> {
    let (bytes, mut f) = read_formula(&args.cnf, opts)?;
    let mut report = RunReport::new(
        format!(
            "reduce {} kind={} k={} ell={:?} exactify={} relaxed={}",
            args.cnf.display(),
            args.kind.goal(),
            args.k,
            args.ell,
            args.exactify,
            opts.relaxed
        ),
        &[&bytes],
    );
    let strict = !opts.relaxed;
    let inst = report.time("build", || match args.kind {
        GadgetKind::Decrease => build_decrease(&f, args.k, strict),
        GadgetKind::Nonincrease => build_nonincrease(&f, args.k, strict),
        GadgetKind::Maintain => {
            let mut ell = args.ell.ok_or_else(|| Error::InvalidParameter("maintain needs --ell".into()))?;
            if args.exactify {
                let (g, _, tripled) = exactify(&f, args.k, ell)?;
                f = g;
                ell = tripled;
            }
            build_maintain(&f, args.k, ell, strict)
        }
    })?;
    let text = inst.to_json();
    std::fs::write(&args.out, &text).map_err(|e| Error::InvalidParameter(format!("{}: {e}", args.out.display())))?;
    let reread = ControlInstance::from_json(&text)?;
    if reread.game != inst.game {
        return Err(Error::Format("instance file does not round-trip".into()));
    }
    report.push("output", args.out.display());
    report.push("players", inst.num_players());
    report.push("quota digits", inst.game.quota().to_str_radix(10).len());
    report.push("goal", inst.goal);
    report.push("deletion budget", inst.budget);
    if let Some(info) = &inst.gadget {
        report.push("t", info.t);
        if let Some(xi) = info.xi {
            report.push("#SAT", xi);
            let idx = expected_index(info.kind, info.k, info.n, xi, info.ell, inst.num_players())?;
            report.push("expected beta", format_index(&idx));
        }
    }
    report.push("round trip", "identical weights and quota");
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    Count,
    Minority,
    Exact,
    ExactStar,
}

impl std::str::FromStr for OracleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "count" | "count-sat" => OracleKind::Count,
            "minority" | "e-minority-sat" => OracleKind::Minority,
            "exact" | "e-exact-sat" => OracleKind::Exact,
            "exact-star" | "e-exact-sat-star" => OracleKind::ExactStar,
            other => return Err(Error::InvalidParameter(format!("unknown oracle `{other}`"))),
        })
    }
}

pub fn cmd_oracle(kind: OracleKind, cnf: &Path, k: Option<usize>, ell: Option<u64>, opts: &CommonOptions) -> Result<RunReport> {
    let (bytes, f) = read_formula(cnf, opts)?;
    let mut report = RunReport::new(format!("oracle {kind:?} {} k={k:?} ell={ell:?}", cnf.display()), &[&bytes]);
    report.push("variables", f.num_vars());
    report.push("clauses", f.num_clauses());
    let need_k = || k.ok_or_else(|| Error::InvalidParameter("this oracle needs --k".into()));
    let need_ell = || ell.ok_or_else(|| Error::InvalidParameter("this oracle needs --ell".into()));
    let witness = report.time("oracle", || {
        Ok(match kind {
            OracleKind::Count => None,
            OracleKind::Minority => Some(e_minority_sat(&f, need_k()?)?),
            OracleKind::Exact => Some(e_exact_sat(&f, need_k()?, need_ell()?, false)?),
            OracleKind::ExactStar => Some(e_exact_sat_star(&f, need_k()?, need_ell()?)?),
        })
    })?;
    match witness {
        None => report.push("#SAT", count_sat(&f)?),
        Some(None) => report.push("answer", "NO"),
        Some(Some(w)) => {
            report.push("answer", "YES");
            report.push("prefix", w.prefix);
            report.push("satisfying suffixes", w.satisfying_suffixes);
        }
    }
    Ok(report)
}

pub fn cmd_verify(suites: &[Suite], opts: &CommonOptions) -> Result<RunReport> {
    let names: Vec<&str> = suites.iter().map(|s| s.name()).collect();
    let mut report = RunReport::new(format!("verify {} seed={}", names.join(","), opts.seed), &[&opts.seed.to_le_bytes()]);
    let mut all = true;
    for &suite in suites {
        let r = run_suite(suite, opts.seed);
        for c in &r.checks {
            all &= c.passed;
            report.push(format!("{suite} {}", if c.passed { "PASS" } else { "FAIL" }), format!("{}: {}", c.name, c.detail));
            report.timings.push(Timing { stage: format!("{suite}: {}", c.name), millis: c.elapsed.as_secs_f64() * 1e3 });
        }
    }
    report.passed = Some(all);
    Ok(report)
}

/// Process exit code for a command result: 0 done, 1 a verification check
/// failed, 2 bad input, 3 budget refusal.
pub fn exit_code(result: &Result<RunReport>) -> i32 {
    match result {
        Ok(r) if r.passed == Some(false) => 1,
        Ok(_) => 0,
        Err(e) if e.is_budget() => 3,
        Err(_) => 2,
    }
}
