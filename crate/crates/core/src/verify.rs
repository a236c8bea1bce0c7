//! Self-verification suites: every construction is checked against an
//! independent oracle on instances small enough to enumerate.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::control::{evaluate_deletion, solve_control, SearchMode, SolverConfig, Verdict};
use crate::engines::{pivot_count_enum, pivot_count_mitm, pivot_count_weight_dp, Engine, EngineBudget};
use crate::error::{Error, Result};
use crate::formula::{
    all_formulas, count_sat, count_subset_sum, e_exact_sat, e_minority_sat, random_formula, suffix_counts, CnfFormula,
};
use crate::gadgets::prereduction::pow10;
use crate::gadgets::{
    build_decrease, build_maintain, build_nonincrease, build_prereduction, case_counts, exactify, expected_cases,
    expected_numerator, witness_deletion, ControlInstance, GadgetKind, Goal, GroupLabel,
};
use crate::game::{ExactIndex, Game};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Example1,
    EngineAgreement,
    Prereduction,
    ClosedForms,
    StrictScale,
    YesDirection,
    NoDirectionSampled,
    Exactify,
    HeavySplit,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Example1,
        Suite::EngineAgreement,
        Suite::Prereduction,
        Suite::ClosedForms,
        Suite::StrictScale,
        Suite::YesDirection,
        Suite::NoDirectionSampled,
        Suite::Exactify,
        Suite::HeavySplit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Example1 => "EXAMPLE1",
            Suite::EngineAgreement => "ENGINE_AGREEMENT",
            Suite::Prereduction => "PREREDUCTION",
            Suite::ClosedForms => "CLOSED_FORMS",
            Suite::StrictScale => "STRICT_SCALE",
            Suite::YesDirection => "YES_DIRECTION",
            Suite::NoDirectionSampled => "NO_DIRECTION_SAMPLED",
            Suite::Exactify => "EXACTIFY",
            Suite::HeavySplit => "HEAVY_SPLIT",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite `{s}`")))
    }
}

/// One named pass/fail result.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Check {
    fn timed(name: &str, f: impl FnOnce() -> Result<std::result::Result<String, String>>) -> Check {
        let start = Instant::now();
        let (passed, detail) = match f() {
            Ok(Ok(d)) => (true, d),
            Ok(Err(d)) => (false, d),
            Err(e) => (false, format!("error: {e}")),
        };
        Check { name: name.into(), passed, detail, elapsed: start.elapsed() }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} ({:.2}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    let checks = match suite {
        Suite::Example1 => example1_checks(),
        Suite::EngineAgreement => vec![engine_agreement(500, seed)],
        Suite::Prereduction => vec![prereduction_identity(seed)],
        Suite::ClosedForms => [GadgetKind::Decrease, GadgetKind::Nonincrease, GadgetKind::Maintain]
            .into_iter()
            .map(|k| closed_forms(k, seed))
            .chain([relaxed_mitm_agreement()])
            .collect(),
        Suite::StrictScale => vec![strict_scale()],
        Suite::YesDirection => vec![yes_direction(seed)],
        Suite::NoDirectionSampled => vec![no_direction(seed, 10_000)],
        Suite::Exactify => vec![exactify_equivalence(seed)],
        Suite::HeavySplit => vec![heavy_split()],
    };
    SuiteReport { suite, checks }
}

fn ok_if(cond: bool, pass: String, fail: String) -> std::result::Result<String, String> {
    if cond {
        Ok(pass)
    } else {
        Err(fail)
    }
}

fn example1_game() -> Game {
    Game::from_u64(&[1, 2, 2, 2, 3, 3], 8).expect("valid game")
}

pub fn example1_checks() -> Vec<Check> {
    let budget = EngineBudget::default();
    let beta = |g: &Game, p: usize| -> Result<ExactIndex> {
        Ok(ExactIndex::for_game(pivot_count_enum(g, p, &budget)?, g.num_players()))
    };
    let quarter = ExactIndex::new(1u32.into(), 2);
    let three_sixteenths = ExactIndex::new(3u32.into(), 4);
    vec![
        Check::timed("weight-2 player has index 1/4", || {
            let b = beta(&example1_game(), 1)?;
            Ok(ok_if(b == quarter, format!("{b}"), format!("got {b}")))
        }),
        Check::timed("deleting a weight-3 player gives 3/16", || {
            let (g, remap) = example1_game().delete_players(&[5])?;
            let b = beta(&g, remap.get(1).expect("kept"))?;
            Ok(ok_if(b == three_sixteenths, format!("{b}"), format!("got {b}")))
        }),
        Check::timed("deleting a weight-2 player keeps 1/4", || {
            let (g, remap) = example1_game().delete_players(&[3])?;
            let b = beta(&g, remap.get(1).expect("kept"))?;
            Ok(ok_if(b == quarter, format!("{b}"), format!("got {b}")))
        }),
    ]
}

/// Enumeration, meet in the middle and weight DP agree on every player of
/// `games` random games with at most 16 players and weights at most 50.
pub fn engine_agreement(games: usize, seed: u64) -> Check {
    Check::timed("enum = mitm = dp on random games", || {
        let budget = EngineBudget::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let instances: Vec<Game> = (0..games)
            .map(|_| {
                let n = rng.gen_range(1..=16);
                let w: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=50)).collect();
                let total: u64 = w.iter().sum();
                let q = rng.gen_range(1..=total + 1);
                Game::from_u64(&w, q).expect("positive quota")
            })
            .collect();
        let failures: Vec<String> = instances
            .par_iter()
            .map(|g| -> Result<Option<String>> {
                for p in 0..g.num_players() {
                    let e = pivot_count_enum(g, p, &budget)?;
                    let m = pivot_count_mitm(g, p, &budget)?;
                    let d = pivot_count_weight_dp(g, p, &budget)?;
                    if e != m || e != d {
                        return Ok(Some(format!("{g} player {p}: enum {e}, mitm {m}, dp {d}")));
                    }
                }
                Ok(None)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        Ok(ok_if(
            failures.is_empty(),
            format!("{games} games agree"),
            format!("{} disagreements, first: {}", failures.len(), failures.first().cloned().unwrap_or_default()),
        ))
    })
}

/// `count` distinct seeded formulas over exactly `n` variables with up to
/// `max_clauses` clauses.
pub fn formula_corpus(n: usize, count: usize, max_clauses: usize, seed: u64) -> Vec<CnfFormula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 32 ^ (max_clauses as u64) << 40);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let min_clauses = n.div_ceil(n.min(3)).max(1);
    let mut attempts = 0;
    while out.len() < count && attempts < 100 * count {
        attempts += 1;
        let m = rng.gen_range(min_clauses..=max_clauses.max(min_clauses));
        let f = random_formula(&mut rng, n, m, n.min(3)).expect("coverable");
        if seen.insert(f.clone()) {
            out.push(f);
        }
    }
    out
}

pub fn prereduction_identity(seed: u64) -> Check {
    Check::timed("#SubsetSum(A∪B∪C, q') = #SubsetSum(E, q'') = #SAT", || {
        let mut corpus = Vec::new();
        for n in 1..=5 {
            corpus.extend(formula_corpus(n, 14, 4, seed));
        }
        let failures: Vec<String> = corpus
            .par_iter()
            .map(|f| -> Result<Option<String>> {
                let xi = BigUint::from(count_sat(f)?);
                let pre = build_prereduction(f, &BigUint::default());
                let abc = pre.all();
                let scale = pow10(pre.t as u64 * (f.num_clauses() as u64 + 1) + f.num_vars() as u64);
                let e: Vec<BigUint> = abc.iter().map(|w| w * &scale).collect();
                let direct = count_subset_sum(&abc, &pre.q_prime)?;
                let scaled = count_subset_sum(&e, &(&pre.q_prime * &scale))?;
                Ok((direct != xi || scaled != xi).then(|| format!("{f}: #SAT {xi}, ABC {direct}, E {scaled}")))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        Ok(ok_if(
            failures.is_empty() && corpus.len() >= 50,
            format!("{} formulas", corpus.len()),
            format!("{} of {} formulas fail: {:?}", failures.len(), corpus.len(), failures.first()),
        ))
    })
}

/// The `(k, n)` grid used for relaxed gadgets.
pub const RELAXED_GRID: [(usize, usize); 3] = [(1, 2), (1, 3), (2, 3)];

/// Layered count and per-case subtotals against the closed forms, over at
/// least ten formulas per grid point (maintain: each with `ell` in 3, 5, 6).
pub fn closed_forms(kind: GadgetKind, seed: u64) -> Check {
    let name = format!("closed form vs layered count ({})", kind.goal());
    Check::timed(&name, || {
        let mut jobs = Vec::new();
        for (k, n) in RELAXED_GRID {
            for f in formula_corpus(n, 10, 3, seed) {
                match kind {
                    GadgetKind::Maintain => jobs.extend([3u64, 5, 6].map(|ell| (f.clone(), k, Some(ell)))),
                    _ => jobs.push((f, k, None)),
                }
            }
        }
        let failures: Vec<String> = jobs
            .par_iter()
            .map(|(f, k, ell)| -> Result<Option<String>> {
                let inst = match kind {
                    GadgetKind::Decrease => build_decrease(f, *k, false)?,
                    GadgetKind::Nonincrease => build_nonincrease(f, *k, false)?,
                    GadgetKind::Maintain => build_maintain(f, *k, ell.expect("set"), false)?,
                };
                let xi = count_sat(f)?;
                let n = f.num_vars();
                let total = inst.band_system()?.pivot_count()?;
                let cases = case_counts(&inst)?;
                let want = expected_numerator(kind, *k, n, xi, *ell)?;
                let want_cases = expected_cases(kind, *k, n, xi, *ell)?;
                Ok((total != want || cases != want_cases)
                    .then(|| format!("{f} k={k} ell={ell:?}: layered {total} [{cases}], expected {want} [{want_cases}]")))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        Ok(ok_if(
            failures.is_empty(),
            format!("{} instances", jobs.len()),
            format!("{} of {} fail, first: {}", failures.len(), jobs.len(), failures.first().cloned().unwrap_or_default()),
        ))
    })
}

/// Light subsets reaching `q - 1 - w_h`, counted by meet in the middle over
/// the light players only, for each heavy player `h`.
///
/// Together with pairwise heavy exclusion and the light total staying below
/// `q - 1`, the per-heavy counts add up to the full pivot count.
pub fn heavy_split_counts(inst: &ControlInstance) -> Result<Vec<(usize, BigUint)>> {
    let layout = inst.bands.as_ref().ok_or(Error::MissingProvenance("band"))?;
    let game = &inst.game;
    let heavy: HashSet<usize> = layout.heavy.iter().copied().collect();
    let lights: Vec<BigUint> = (0..game.num_players())
        .filter(|p| *p != inst.distinguished && !heavy.contains(p))
        .map(|p| game.weight(p).clone())
        .collect();
    let target_base = game.quota() - 1u8;
    layout
        .heavy
        .par_iter()
        .map(|&h| {
            let w = game.weight(h);
            let count = if *w > target_base {
                BigUint::default()
            } else {
                count_subset_sum(&lights, &(&target_base - w))?
            };
            Ok((h, count))
        })
        .collect()
}

fn heavy_split_check(inst: &ControlInstance, what: &str) -> Result<std::result::Result<String, String>> {
    let system = inst.band_system()?;
    let layered = system.breakdown()?;
    let split = heavy_split_counts(inst)?;
    let bad: Vec<usize> = layered.iter().zip(&split).filter(|(a, b)| a != b).map(|(a, _)| a.0).collect();
    Ok(ok_if(
        bad.is_empty(),
        format!("{what}: {} heavy players agree", layered.len()),
        format!("{what}: heavy players {bad:?} disagree"),
    ))
}

/// Relaxed `(k, n) = (1, 2)` gadgets: layered count against full meet in the
/// middle (decrease, nonincrease) or against the per-heavy split (maintain,
/// too large for a full split).
pub fn relaxed_mitm_agreement() -> Check {
    Check::timed("layered = mitm = formula on (k,n) = (1,2)", || {
        let f = CnfFormula::new(2, vec![vec![1, 2]])?;
        let budget = EngineBudget { max_mitm_half: 24, ..EngineBudget::default() };
        let mut notes = Vec::new();
        for kind in [GadgetKind::Decrease, GadgetKind::Nonincrease] {
            let inst = if kind == GadgetKind::Decrease { build_decrease(&f, 1, false)? } else { build_nonincrease(&f, 1, false)? };
            let layered = inst.band_system()?.pivot_count()?;
            let mitm = pivot_count_mitm(&inst.game, 0, &budget)?;
            let formula = expected_numerator(kind, 1, 2, 3, None)?;
            if layered != mitm || layered != formula {
                return Ok(Err(format!("{}: layered {layered}, mitm {mitm}, formula {formula}", kind.goal())));
            }
            notes.push(format!("{} {layered}", kind.goal()));
        }
        let inst = build_maintain(&f, 1, 3, false)?;
        let split: BigUint = heavy_split_counts(&inst)?.into_iter().map(|(_, c)| c).sum();
        let layered = inst.band_system()?.pivot_count()?;
        let formula = expected_numerator(GadgetKind::Maintain, 1, 2, 3, Some(3))?;
        if layered != split || layered != formula {
            return Ok(Err(format!("MAINTAIN: layered {layered}, split mitm {split}, formula {formula}")));
        }
        notes.push(format!("MAINTAIN {layered}"));
        Ok(Ok(notes.join(", ")))
    })
}

/// The reference strict instance: one clause over five variables, `k = 4`.
pub fn strict_reference_instance() -> Result<ControlInstance> {
    let f = CnfFormula::new(5, vec![vec![1, 2, 3, 4, 5]])?;
    build_decrease(&f, 4, true)
}

pub fn strict_scale() -> Check {
    Check::timed("strict k=4 n=5 gadget gives 11904/2^317", || {
        let inst = strict_reference_instance()?;
        let count = inst.band_system()?.pivot_count()?;
        let idx = ExactIndex::for_game(count, inst.num_players());
        let want = ExactIndex::new(BigUint::from(11904u32), 317);
        Ok(ok_if(
            idx.to_string() == want.to_string(),
            format!("{idx} with {} players", inst.num_players()),
            format!("got {idx}"),
        ))
    })
}

fn tiny_corpus(seed: u64) -> Vec<CnfFormula> {
    let mut out = all_formulas(2, 2);
    out.extend(formula_corpus(3, 30, 3, seed));
    out.extend(formula_corpus(4, 20, 4, seed));
    out
}

fn layered_index(inst: &ControlInstance) -> Result<ExactIndex> {
    Ok(ExactIndex::for_game(inst.band_system()?.pivot_count()?, inst.num_players()))
}

fn after_deletion(inst: &ControlInstance, deletion: &[usize]) -> Result<ExactIndex> {
    layered_index(&inst.delete(deletion)?.0)
}

/// Witness deletions realize the goal on every yes-instance of the corpus.
pub fn yes_direction(seed: u64) -> Check {
    Check::timed("witness deletions meet the goal", || {
        let mut jobs: Vec<(CnfFormula, usize, Option<u64>)> = Vec::new();
        for f in tiny_corpus(seed) {
            let n = f.num_vars();
            for k in 1..n {
                if e_minority_sat(&f, k)?.is_some() {
                    jobs.push((f.clone(), k, None));
                }
                for ell in 3..=(1u64 << (n - k)) {
                    if !ell.is_power_of_two() && e_exact_sat(&f, k, ell, false)?.is_some() {
                        jobs.push((f.clone(), k, Some(ell)));
                    }
                }
            }
        }
        let failures: Vec<String> = jobs
            .par_iter()
            .map(|(f, k, ell)| -> Result<Vec<String>> {
                let mut bad = Vec::new();
                match ell {
                    None => {
                        let prefix = e_minority_sat(f, *k)?.expect("yes-instance").prefix;
                        for (inst, goal) in [(build_decrease(f, *k, false)?, Goal::Decrease), (build_nonincrease(f, *k, false)?, Goal::Nonincrease)] {
                            let before = layered_index(&inst)?;
                            let after = after_deletion(&inst, &witness_deletion(&inst, &prefix)?)?;
                            if !goal.holds(&before, &after) {
                                bad.push(format!("{f} k={k} {goal}: {before} -> {after}"));
                            }
                        }
                    }
                    Some(ell) => {
                        let prefix = e_exact_sat(f, *k, *ell, false)?.expect("yes-instance").prefix;
                        let inst = build_maintain(f, *k, *ell, false)?;
                        let before = layered_index(&inst)?;
                        let after = after_deletion(&inst, &witness_deletion(&inst, &prefix)?)?;
                        if before != after {
                            bad.push(format!("{f} k={k} ell={ell}: {before} -> {after}"));
                        }
                    }
                }
                Ok(bad)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        let minority = jobs.iter().filter(|j| j.2.is_none()).count();
        Ok(ok_if(
            failures.is_empty() && minority > 0 && minority < jobs.len(),
            format!("{minority} minority and {} exact instances", jobs.len() - minority),
            format!("{} failures, first: {}", failures.len(), failures.first().cloned().unwrap_or_default()),
        ))
    })
}

/// On no-instances, no deletion of `A` players decreases the index
/// (exhaustive), and neither does any of `trials` sampled multisets over the
/// whole gadget. Sampling is evidence only.
pub fn no_direction(seed: u64, trials: usize) -> Check {
    Check::timed("no decreasing deletion on no-instances (A exhaustive + sampled)", || {
        let mut no_instances = Vec::new();
        for f in tiny_corpus(seed) {
            for k in 1..f.num_vars() {
                if e_minority_sat(&f, k)?.is_none() {
                    no_instances.push((f.clone(), k));
                }
            }
        }
        if no_instances.is_empty() {
            return Ok(Err("corpus has no no-instances".into()));
        }
        let per_instance = trials.div_ceil(no_instances.len());
        let mut total_trials = 0;
        let mut restricted = 0;
        for (i, (f, k)) in no_instances.iter().enumerate() {
            let inst = build_decrease(f, *k, false)?;
            let a_only = SolverConfig {
                engine: Engine::Layered,
                mode: SearchMode::Restricted { groups: vec![GroupLabel::A] },
                cross_check: false,
                ..SolverConfig::default()
            };
            let report = solve_control(&inst, &a_only)?;
            if let Verdict::Yes { witness, after } = report.verdict {
                return Ok(Err(format!("{f} k={k}: deleting A players {witness:?} gives {} -> {after}", report.before)));
            }
            restricted += report.candidates_evaluated;
            let sampled = SolverConfig {
                engine: Engine::Layered,
                mode: SearchMode::Sampled { seed: seed.wrapping_add(i as u64), trials: per_instance },
                cross_check: false,
                ..SolverConfig::default()
            };
            let report = solve_control(&inst, &sampled)?;
            if let Verdict::Yes { witness, after } = report.verdict {
                return Ok(Err(format!("{f} k={k}: sampled deletion {witness:?} gives {} -> {after}", report.before)));
            }
            total_trials += report.candidates_evaluated;
        }
        Ok(Ok(format!(
            "{} no-instances, {restricted} A-only candidates, {total_trials} sampled multisets (sampled evidence)",
            no_instances.len()
        )))
    })
}

/// Formulas for the tripling equivalence: every clause set over one and two
/// variables, every set of at most three clauses over three and four
/// variables, and seeded random formulas with up to six clauses.
pub fn exactify_corpus(seed: u64) -> Vec<CnfFormula> {
    let mut out = all_formulas(1, 2);
    out.extend(all_formulas(2, 8));
    out.extend(all_formulas(3, 3));
    out.extend(all_formulas(4, 3));
    for n in 3..=4 {
        out.extend(formula_corpus(n, 200, 6, seed));
    }
    out
}

pub fn exactify_equivalence(seed: u64) -> Check {
    Check::timed("exact-SAT(phi, k, l) <=> exact-SAT(phi', k, 3l)", || {
        let corpus = exactify_corpus(seed);
        let checked: Vec<Option<String>> = corpus
            .par_iter()
            .map(|f| -> Result<Option<String>> {
                let n = f.num_vars();
                for k in 1..=n {
                    let base = suffix_counts(f, k)?;
                    let (g, _, _) = exactify(f, k, 1)?;
                    let tripled = suffix_counts(&g, k)?;
                    for ell in 1..=(1u64 << (n - k)) + 1 {
                        let lhs = base.contains(&ell);
                        let rhs = tripled.contains(&(3 * ell));
                        if lhs != rhs {
                            return Ok(Some(format!("{f} k={k} ell={ell}: {lhs} vs {rhs}")));
                        }
                    }
                }
                Ok(None)
            })
            .collect::<Result<Vec<_>>>()?;
        let failures: Vec<String> = checked.into_iter().flatten().collect();
        Ok(ok_if(
            failures.is_empty(),
            format!("{} formulas, all k and ell", corpus.len()),
            format!("{} failures, first: {}", failures.len(), failures.first().cloned().unwrap_or_default()),
        ))
    })
}

/// Per heavy player, block product = meet-in-the-middle count of light
/// subsets, for all three relaxed `(1, 2)` gadgets.
pub fn heavy_split() -> Check {
    Check::timed("per-heavy layered count = mitm over light players", || {
        let f = CnfFormula::new(2, vec![vec![1, 2]])?;
        let mut notes = Vec::new();
        for inst in [build_decrease(&f, 1, false)?, build_nonincrease(&f, 1, false)?, build_maintain(&f, 1, 3, false)?] {
            let what = inst.goal.to_string();
            match heavy_split_check(&inst, &what)? {
                Ok(s) => notes.push(s),
                Err(s) => return Ok(Err(s)),
            }
        }
        Ok(Ok(notes.join("; ")))
    })
}

/// Outcome of a witness deletion on a gadget, for reports.
pub fn witness_outcome(inst: &ControlInstance, deletion: &[usize]) -> Result<(ExactIndex, ExactIndex)> {
    let out = evaluate_deletion(inst, deletion, Engine::Auto, &EngineBudget::default())?;
    Ok((out.before, out.after))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("no-direction-sampled".parse::<Suite>().unwrap(), Suite::NoDirectionSampled);
    }

    #[test]
    fn example1_suite_passes() {
        let r = run_suite(Suite::Example1, 0);
        assert_eq!(r.checks.len(), 3);
        assert!(r.passed(), "{:?}", r.checks);
    }

    #[test]
    fn corpus_is_distinct_and_sized() {
        let c = formula_corpus(3, 10, 3, 1);
        assert_eq!(c.len(), 10);
        assert!(c.iter().all(|f| f.num_vars() == 3));
    }
}
