//! Deciding control by deleting players.
//!
//! Players of equal weight are interchangeable for the index of a fixed
//! player, so candidates are multisets over weight classes: "delete two of
//! the weight-3 players" is evaluated once, on the lowest-indexed
//! representatives. Candidates are visited in lexicographic order of their
//! `(class rank, count)` lists with rank 0 the heaviest class, and the first
//! one meeting the goal is the witness.

use std::fmt;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::engines::{pivot_count, Engine, EngineBudget};
use crate::error::{Error, Result};
use crate::game::{ExactIndex, WeightClassPartition};
use crate::gadgets::{ControlInstance, Goal, GroupLabel};

/// Candidates evaluated per parallel batch.
const CHUNK: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    /// `trials` multisets drawn uniformly with a ChaCha8 stream seeded by `seed`.
    Sampled { seed: u64, trials: usize },
    /// Exhaustive over players of the listed groups only.
    Restricted { groups: Vec<GroupLabel> },
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub engine: Engine,
    pub budget: EngineBudget,
    pub mode: SearchMode,
    /// Re-evaluate a YES witness with a second engine when one fits its budget.
    pub cross_check: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { engine: Engine::Auto, budget: EngineBudget::default(), mode: SearchMode::Exhaustive, cross_check: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes { witness: Vec<usize>, after: ExactIndex },
    /// Every candidate was evaluated.
    NoExhaustive,
    /// Only a sample was evaluated; this is evidence, not a proof.
    NoSampled { seed: u64, trials: usize, space: u128 },
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Yes { witness, after } => write!(f, "YES delete {witness:?} -> {after}"),
            Verdict::NoExhaustive => f.write_str("NO (exhaustive)"),
            Verdict::NoSampled { seed, trials, space } => {
                write!(f, "NO (sampled: {trials} trials, seed {seed}, {space} candidates in space)")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub verdict: Verdict,
    pub before: ExactIndex,
    pub engine: Engine,
    pub candidates_evaluated: u64,
    /// Lowest and highest index reached, with the deletion that reached it.
    pub lowest: Option<(ExactIndex, Vec<usize>)>,
    pub highest: Option<(ExactIndex, Vec<usize>)>,
    /// Engine that confirmed a YES witness, if any could.
    pub cross_checked_with: Option<Engine>,
}

/// Indices before and after one deletion, with the verdict of every goal.
#[derive(Clone, Debug)]
pub struct DeletionOutcome {
    pub before: ExactIndex,
    pub after: ExactIndex,
    pub engine: Engine,
    pub relations: Vec<(Goal, bool)>,
}

fn index_of(instance: &ControlInstance, engine: Engine, budget: &EngineBudget) -> Result<(ExactIndex, Engine)> {
    let pc = pivot_count(&instance.game, instance.distinguished, engine, budget, instance.bands.as_ref())?;
    Ok((ExactIndex::for_game(pc.count, instance.num_players()), pc.engine))
}

fn index_after(
    instance: &ControlInstance,
    deletion: &[usize],
    engine: Engine,
    budget: &EngineBudget,
) -> Result<(ExactIndex, Engine)> {
    let (smaller, _) = instance.delete(deletion)?;
    index_of(&smaller, engine, budget)
}

pub fn evaluate_deletion(
    instance: &ControlInstance,
    deletion: &[usize],
    engine: Engine,
    budget: &EngineBudget,
) -> Result<DeletionOutcome> {
    let (before, used) = index_of(instance, engine, budget)?;
    let (after, _) = index_after(instance, deletion, engine, budget)?;
    let relations = Goal::ALL.iter().map(|&g| (g, g.holds(&before, &after))).collect();
    Ok(DeletionOutcome { before, after, engine: used, relations })
}

/// Weight classes available for deletion, heaviest first.
fn candidate_classes(instance: &ControlInstance, mode: &SearchMode) -> Result<WeightClassPartition> {
    let mut eligible: Vec<usize> = (0..instance.num_players()).filter(|&p| p != instance.distinguished).collect();
    if let SearchMode::Restricted { groups } = mode {
        let labels = instance.groups.as_ref().ok_or(Error::MissingProvenance("group"))?;
        eligible.retain(|&p| groups.iter().any(|g| *g == labels[p] || *g == labels[p].family()));
    }
    Ok(WeightClassPartition::of_players(&instance.game, eligible))
}

/// Nonempty multisets over classes with sizes `sizes`, at most `budget` in
/// total, in lexicographic order of `(rank, count)` lists.
struct MultisetWalk {
    sizes: Vec<usize>,
    budget: usize,
    current: Vec<(usize, usize)>,
    total: usize,
    started: bool,
}

impl MultisetWalk {
    fn new(sizes: Vec<usize>, budget: usize) -> Self {
        MultisetWalk { sizes, budget, current: Vec::new(), total: 0, started: false }
    }

    fn push(&mut self, rank: usize, count: usize) {
        self.current.push((rank, count));
        self.total += count;
    }

    fn pop(&mut self) -> Option<(usize, usize)> {
        let last = self.current.pop()?;
        self.total -= last.1;
        Some(last)
    }
}

impl Iterator for MultisetWalk {
    type Item = Vec<(usize, usize)>;

    fn next(&mut self) -> Option<Self::Item> {
        let classes = self.sizes.len();
        if !self.started {
            self.started = true;
            if classes == 0 || self.budget == 0 {
                return None;
            }
            self.push(0, 1);
            return Some(self.current.clone());
        }
        // extend with the next class
        if let Some(&(r, _)) = self.current.last() {
            if self.total < self.budget && r + 1 < classes {
                self.push(r + 1, 1);
                return Some(self.current.clone());
            }
        }
        // otherwise bump the last entry or move it to the next class
        while let Some((r, c)) = self.pop() {
            if c < self.sizes[r] && self.total + c < self.budget {
                self.push(r, c + 1);
                return Some(self.current.clone());
            }
            if r + 1 < classes {
                self.push(r + 1, 1);
                return Some(self.current.clone());
            }
        }
        None
    }
}

/// `ways[r][b]`: count vectors over classes `r..` with total at most `b`,
/// including the empty one.
fn multiset_table(sizes: &[usize], budget: usize) -> Option<Vec<Vec<u128>>> {
    let mut ways = vec![vec![1u128; budget + 1]; sizes.len() + 1];
    for r in (0..sizes.len()).rev() {
        for b in 0..=budget {
            let mut sum = 0u128;
            for c in 0..=sizes[r].min(b) {
                sum = sum.checked_add(ways[r + 1][b - c])?;
            }
            ways[r][b] = sum;
        }
    }
    Some(ways)
}

fn unrank(ways: &[Vec<u128>], sizes: &[usize], budget: usize, mut index: u128) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut b = budget;
    for r in 0..sizes.len() {
        for c in 0..=sizes[r].min(b) {
            let block = ways[r + 1][b - c];
            if index < block {
                if c > 0 {
                    out.push((r, c));
                }
                b -= c;
                break;
            }
            index -= block;
        }
    }
    out
}

/// Number of nonempty deletion multisets of size at most `budget`.
pub fn candidate_space(sizes: &[usize], budget: usize) -> Option<u128> {
    multiset_table(sizes, budget).map(|w| w[0][budget] - 1)
}

fn representative(classes: &WeightClassPartition, key: &[(usize, usize)]) -> Vec<usize> {
    let mut set: Vec<usize> = key.iter().flat_map(|&(r, c)| classes.classes()[r].1[..c].iter().copied()).collect();
    set.sort_unstable();
    set
}

struct Tally {
    evaluated: u64,
    lowest: Option<(ExactIndex, Vec<usize>)>,
    highest: Option<(ExactIndex, Vec<usize>)>,
}

impl Tally {
    fn record(&mut self, after: &ExactIndex, deletion: &[usize]) {
        self.evaluated += 1;
        if self.lowest.as_ref().is_none_or(|(v, _)| after < v) {
            self.lowest = Some((after.clone(), deletion.to_vec()));
        }
        if self.highest.as_ref().is_none_or(|(v, _)| after > v) {
            self.highest = Some((after.clone(), deletion.to_vec()));
        }
    }
}

/// Evaluates candidates in order, a batch at a time, and returns the first
/// that meets the goal.
fn scan(
    instance: &ControlInstance,
    config: &SolverConfig,
    engine: Engine,
    before: &ExactIndex,
    candidates: impl Iterator<Item = Vec<usize>>,
    tally: &mut Tally,
) -> Result<Option<(Vec<usize>, ExactIndex)>> {
    let mut candidates = candidates.peekable();
    while candidates.peek().is_some() {
        let batch: Vec<Vec<usize>> = candidates.by_ref().take(CHUNK).collect();
        let results: Vec<Result<ExactIndex>> = batch
            .par_iter()
            .map(|d| {
                index_after(instance, d, engine, &config.budget)
                    .map(|(idx, _)| idx)
                    .map_err(|e| Error::CandidateRefused { candidate: d.clone(), source: Box::new(e) })
            })
            .collect();
        for (d, r) in batch.iter().zip(results) {
            let after = r?;
            tally.record(&after, d);
            if instance.goal.holds(before, &after) {
                return Ok(Some((d.clone(), after)));
            }
        }
    }
    Ok(None)
}

fn alternate_engines(used: Engine) -> impl Iterator<Item = Engine> {
    [Engine::Mitm, Engine::Dp, Engine::Enum].into_iter().filter(move |&e| e != used)
}

pub fn solve_control(instance: &ControlInstance, config: &SolverConfig) -> Result<SearchReport> {
    let (before, engine) = index_of(instance, config.engine, &config.budget)?;
    let classes = candidate_classes(instance, &config.mode)?;
    let sizes: Vec<usize> = classes.classes().iter().map(|(_, m)| m.len()).collect();
    let budget = instance.budget;
    let mut tally = Tally { evaluated: 0, lowest: None, highest: None };
    let (hit, no_verdict) = match &config.mode {
        SearchMode::Exhaustive | SearchMode::Restricted { .. } => {
            let walk = MultisetWalk::new(sizes, budget).map(|key| representative(&classes, &key));
            (scan(instance, config, engine, &before, walk, &mut tally)?, Verdict::NoExhaustive)
        }
        SearchMode::Sampled { seed, trials } => {
            let ways = multiset_table(&sizes, budget)
                .ok_or_else(|| Error::InvalidParameter("candidate space too large to sample".into()))?;
            let space = ways[0][budget] - 1;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let draws: Vec<Vec<usize>> = if space == 0 {
                Vec::new()
            } else {
                (0..*trials)
                    .map(|_| representative(&classes, &unrank(&ways, &sizes, budget, rng.gen_range(1..=space))))
                    .collect()
            };
            let verdict = Verdict::NoSampled { seed: *seed, trials: *trials, space };
            (scan(instance, config, engine, &before, draws.into_iter(), &mut tally)?, verdict)
        }
    };
    let mut cross_checked_with = None;
    let verdict = match hit {
        None => no_verdict,
        Some((witness, after)) => {
            // re-verify before emitting
            let (again, _) = index_after(instance, &witness, engine, &config.budget)?;
            if again != after || !instance.goal.holds(&before, &again) {
                return Err(Error::Disagreement(format!("witness {witness:?} did not re-verify")));
            }
            if config.cross_check {
                for alt in alternate_engines(engine) {
                    match (index_of(instance, alt, &config.budget), index_after(instance, &witness, alt, &config.budget)) {
                        (Ok((b, _)), Ok((a, _))) => {
                            if b != before || a != after {
                                return Err(Error::Disagreement(format!(
                                    "{} gives {b} -> {a}, {} gives {before} -> {after}",
                                    alt.name(),
                                    engine.name()
                                )));
                            }
                            cross_checked_with = Some(alt);
                            break;
                        }
                        (Err(e), _) | (_, Err(e)) if e.is_budget() => continue,
                        (Err(e), _) | (_, Err(e)) => return Err(e),
                    }
                }
            }
            Verdict::Yes { witness, after }
        }
    };
    Ok(SearchReport {
        verdict,
        before,
        engine,
        candidates_evaluated: tally.evaluated,
        lowest: tally.lowest,
        highest: tally.highest,
        cross_checked_with,
    })
}

/// Pivot count of the distinguished player after deleting `deletion`.
pub fn pivot_count_after(instance: &ControlInstance, deletion: &[usize], engine: Engine, budget: &EngineBudget) -> Result<BigUint> {
    let (smaller, _) = instance.delete(deletion)?;
    Ok(pivot_count(&smaller.game, smaller.distinguished, engine, budget, smaller.bands.as_ref())?.count)
}
