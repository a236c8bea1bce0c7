//! CNF formulas and brute-force oracles: `#SAT`, E-Minority-SAT,
//! E-Exact-SAT and `#SubsetSum`.
//!
//! Assignments are packed into integers with `x1` as the most significant
//! bit, so the first `k` variables form the high bits and ascending prefix
//! order is lexicographic order with false before true.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::subset_sum::{count_pairs_in_range, half_sums, narrow, SumInt};

/// Largest variable count the enumerating oracles accept.
pub const MAX_SAT_VARS: usize = 26;

/// Largest item count accepted by [`count_subset_sum`].
pub const MAX_SUBSET_SUM_ITEMS: usize = 44;

/// A CNF formula over variables `1..=n`; literal `v` is `x_v`, `-v` is `not x_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    /// Validates and normalizes the clauses (literals sorted by variable,
    /// duplicates merged). Tautological clauses and variables that never
    /// occur are rejected.
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        let mut used = vec![false; num_vars + 1];
        let mut normalized = Vec::with_capacity(clauses.len());
        for (j, mut clause) in clauses.into_iter().enumerate() {
            for &lit in &clause {
                let v = lit.unsigned_abs() as usize;
                if lit == 0 || v > num_vars {
                    return Err(Error::InvalidParameter(format!(
                        "clause {} has literal {lit} outside 1..={num_vars}",
                        j + 1
                    )));
                }
                used[v] = true;
            }
            clause.sort_by_key(|l| (l.unsigned_abs(), *l));
            clause.dedup();
            if clause.windows(2).any(|p| p[0] == -p[1]) {
                return Err(Error::Tautology { clause: j + 1 });
            }
            normalized.push(clause);
        }
        if let Some(v) = (1..=num_vars).find(|&v| !used[v]) {
            return Err(Error::UnusedVariable(v));
        }
        Ok(CnfFormula { num_vars, clauses: normalized })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Whether clause `j` (0-based) contains literal `lit`.
    pub fn clause_contains(&self, j: usize, lit: i32) -> bool {
        self.clauses[j].contains(&lit)
    }

    /// `self` with one extra clause over fresh variables.
    pub fn with_fresh_clause(&self, width: usize) -> CnfFormula {
        let n = self.num_vars;
        let mut clauses = self.clauses.clone();
        clauses.push((1..=width).map(|i| (n + i) as i32).collect());
        CnfFormula { num_vars: n + width, clauses }
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                out.push_str(&l.to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }

    fn masks(&self) -> Vec<(u32, u32)> {
        let n = self.num_vars;
        self.clauses
            .iter()
            .map(|c| {
                let mut pos = 0u32;
                let mut neg = 0u32;
                for &l in c {
                    let bit = 1u32 << (n - l.unsigned_abs() as usize);
                    if l > 0 {
                        pos |= bit;
                    } else {
                        neg |= bit;
                    }
                }
                (pos, neg)
            })
            .collect()
    }

    /// Evaluates the formula on a full assignment.
    pub fn eval(&self, assignment: &Assignment) -> Result<bool> {
        if assignment.len() != self.num_vars {
            return Err(Error::InvalidParameter(format!(
                "assignment has {} values, formula has {} variables",
                assignment.len(),
                self.num_vars
            )));
        }
        Ok(self
            .clauses
            .iter()
            .all(|c| c.iter().any(|&l| assignment.bits[l.unsigned_abs() as usize - 1] == (l > 0))))
    }

    fn check_budget(&self) -> Result<()> {
        if self.num_vars > MAX_SAT_VARS {
            return Err(Error::BudgetExceeded {
                engine: "sat",
                budget: "maxSatVars",
                limit: MAX_SAT_VARS as u64,
                required: self.num_vars as u64,
            });
        }
        Ok(())
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return f.write_str("true");
        }
        for (j, c) in self.clauses.iter().enumerate() {
            if j > 0 {
                f.write_str(" & ")?;
            }
            f.write_str("(")?;
            for (i, l) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" | ")?;
                }
                if *l < 0 {
                    f.write_str("!")?;
                }
                write!(f, "x{}", l.unsigned_abs())?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Parses DIMACS cnf. With `strip_tautologies`, clauses holding a variable
/// and its negation are dropped instead of rejected.
pub fn parse_dimacs(text: &str, strip_tautologies: bool) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut last_line = 0;
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parsed = match parts.as_slice() {
                ["p", "cnf", n, m] => n.parse().ok().zip(m.parse().ok()),
                _ => None,
            };
            if header.is_some() || parsed.is_none() {
                return Err(Error::Parse { line: line_no, message: format!("bad header `{line}`") });
            }
            header = parsed;
            continue;
        }
        let Some((n, _)) = header else {
            return Err(Error::Parse { line: line_no, message: "clause before `p cnf` header".into() });
        };
        for tok in line.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| Error::Parse { line: line_no, message: format!("bad literal `{tok}`") })?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > n {
                return Err(Error::Parse { line: line_no, message: format!("literal {lit} exceeds {n} variables") });
            } else {
                current.push(lit);
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::Parse { line: last_line, message: "missing `p cnf` header".into() });
    };
    if !current.is_empty() {
        return Err(Error::Parse { line: last_line, message: "last clause is not terminated by 0".into() });
    }
    if clauses.len() != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("header declares {m} clauses, found {}", clauses.len()),
        });
    }
    if strip_tautologies {
        clauses.retain(|c| !c.iter().any(|l| c.contains(&-l)));
    }
    CnfFormula::new(n, clauses)
}

/// A truth assignment to `x1..x_len`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment {
    bits: Vec<bool>,
}

impl Assignment {
    pub fn new(bits: Vec<bool>) -> Self {
        Assignment { bits }
    }

    /// The `len`-bit assignment whose packed value is `value` (`x1` highest).
    pub fn from_packed(value: u64, len: usize) -> Self {
        Assignment { bits: (0..len).map(|i| value >> (len - 1 - i) & 1 == 1).collect() }
    }

    pub fn packed(&self) -> u64 {
        self.bits.iter().fold(0, |acc, &b| acc << 1 | u64::from(b))
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Value of `x_i` for 1-based `i`.
    pub fn value(&self, i: usize) -> bool {
        self.bits[i - 1]
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Assignment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidParameter(format!("assignment `{s}` is not a bit string"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Assignment::new)
    }
}

/// A prefix assignment together with the number of satisfying completions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixWitness {
    pub prefix: Assignment,
    pub satisfying_suffixes: u64,
}

/// Number of satisfying completions of every prefix of length `k`,
/// indexed by packed prefix value.
///
/// One sweep over all `2^n` assignments, bucketed by prefix.
pub fn suffix_counts(formula: &CnfFormula, k: usize) -> Result<Vec<u64>> {
    formula.check_budget()?;
    let n = formula.num_vars;
    if k > n {
        return Err(Error::InvalidParameter(format!("prefix length {k} exceeds {n} variables")));
    }
    let masks = formula.masks();
    let full = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let sat = |a: u32| masks.iter().all(|&(p, q)| a & p != 0 || !a & full & q != 0);
    let shift = n - k;
    Ok((0u32..1 << k)
        .into_par_iter()
        .map(|prefix| {
            let base = prefix << shift;
            (0u32..1 << shift).into_par_iter().filter(|s| sat(base | s)).count() as u64
        })
        .collect())
}

/// `#SAT`: the number of satisfying total assignments.
pub fn count_sat(formula: &CnfFormula) -> Result<u64> {
    Ok(suffix_counts(formula, 0)?[0])
}

fn check_prefix_len(formula: &CnfFormula, k: usize) -> Result<()> {
    if k == 0 || k > formula.num_vars {
        return Err(Error::InvalidParameter(format!(
            "prefix length {k} must lie in 1..={}",
            formula.num_vars
        )));
    }
    Ok(())
}

fn first_prefix(counts: &[u64], k: usize, accept: impl Fn(u64) -> bool) -> Option<PrefixWitness> {
    counts.iter().position(|&c| accept(c)).map(|p| PrefixWitness {
        prefix: Assignment::from_packed(p as u64, k),
        satisfying_suffixes: counts[p],
    })
}

/// E-Minority-SAT: the lexicographically least prefix of length `k` that
/// leaves at most half of the `2^(n-k)` suffixes satisfying, if one exists.
pub fn e_minority_sat(formula: &CnfFormula, k: usize) -> Result<Option<PrefixWitness>> {
    check_prefix_len(formula, k)?;
    let counts = suffix_counts(formula, k)?;
    let space = 1u64 << (formula.num_vars - k);
    Ok(first_prefix(&counts, k, |c| 2 * c <= space))
}

/// The least prefix of length `k` with at most `bound` satisfying suffixes.
pub fn minority_with_threshold(formula: &CnfFormula, k: usize, bound: u64) -> Result<Option<PrefixWitness>> {
    check_prefix_len(formula, k)?;
    let counts = suffix_counts(formula, k)?;
    Ok(first_prefix(&counts, k, |c| c <= bound))
}

/// E-Exact-SAT: the lexicographically least prefix of length `k` leaving
/// exactly `ell` satisfying suffixes. `ell = 0` is an input error unless
/// `allow_zero` is set.
pub fn e_exact_sat(formula: &CnfFormula, k: usize, ell: u64, allow_zero: bool) -> Result<Option<PrefixWitness>> {
    check_prefix_len(formula, k)?;
    if ell == 0 && !allow_zero {
        return Err(Error::InvalidParameter("ell must be positive".into()));
    }
    if ell > 1u64 << (formula.num_vars - k) {
        formula.check_budget()?;
        return Ok(None);
    }
    let counts = suffix_counts(formula, k)?;
    Ok(first_prefix(&counts, k, |c| c == ell))
}

/// E-Exact-SAT restricted to `ell` that is not a power of two.
pub fn e_exact_sat_star(formula: &CnfFormula, k: usize, ell: u64) -> Result<Option<PrefixWitness>> {
    if ell.is_power_of_two() {
        return Err(Error::InvalidParameter(format!("ell = {ell} is a power of two")));
    }
    e_exact_sat(formula, k, ell, false)
}

/// `#SubsetSum`: index subsets of `sizes` summing to `target`, by meet in the middle.
pub fn count_subset_sum(sizes: &[BigUint], target: &BigUint) -> Result<BigUint> {
    if sizes.len() > MAX_SUBSET_SUM_ITEMS {
        return Err(Error::BudgetExceeded {
            engine: "subset-sum",
            budget: "maxSubsetSumItems",
            limit: MAX_SUBSET_SUM_ITEMS as u64,
            required: sizes.len() as u64,
        });
    }
    let half = sizes.len() / 2;
    let count = match narrow(sizes, target) {
        Some(w) => sweep(&w, half, &u128::try_from(target).expect("narrowed")),
        None => sweep(sizes, half, target),
    };
    Ok(BigUint::from(count))
}

fn sweep<T: SumInt>(w: &[T], half: usize, target: &T) -> u128 {
    let (a, b) = w.split_at(half);
    let (left, right) = rayon::join(|| half_sums(a), || half_sums(b));
    count_pairs_in_range(&left, &right, target, target)
}

/// Every non-tautological nonempty clause over `x1..xn`, in a fixed order.
pub fn all_clauses(n: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    // each variable is absent, positive or negative
    for code in 1..3usize.pow(n as u32) {
        let mut c = Vec::new();
        let mut rest = code;
        for v in 1..=n as i32 {
            match rest % 3 {
                1 => c.push(v),
                2 => c.push(-v),
                _ => {}
            }
            rest /= 3;
        }
        out.push(c);
    }
    out
}

/// All valid formulas over exactly `n` variables with `1..=max_clauses`
/// distinct clauses, each clause set listed once.
pub fn all_formulas(n: usize, max_clauses: usize) -> Vec<CnfFormula> {
    let pool = all_clauses(n);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(pool: &[Vec<i32>], n: usize, max: usize, start: usize, chosen: &mut Vec<usize>, out: &mut Vec<CnfFormula>) {
        if !chosen.is_empty() {
            let clauses = chosen.iter().map(|&i| pool[i].clone()).collect();
            if let Ok(f) = CnfFormula::new(n, clauses) {
                out.push(f);
            }
        }
        if chosen.len() == max {
            return;
        }
        for i in start..pool.len() {
            chosen.push(i);
            rec(pool, n, max, i + 1, chosen, out);
            chosen.pop();
        }
    }
    rec(&pool, n, max_clauses, 0, &mut chosen, &mut out);
    out
}

/// A random valid formula with `n` variables and `m` clauses of width
/// `1..=max_width`. Every variable occurs somewhere.
pub fn random_formula<R: Rng>(rng: &mut R, n: usize, m: usize, max_width: usize) -> Result<CnfFormula> {
    if n == 0 || m == 0 || max_width == 0 || m * max_width.min(n) < n {
        return Err(Error::InvalidParameter(format!(
            "cannot cover {n} variables with {m} clauses of width <= {max_width}"
        )));
    }
    loop {
        let mut clauses: Vec<Vec<i32>> = (0..m)
            .map(|_| {
                let width = rng.gen_range(1..=max_width.min(n));
                let vars = rand::seq::index::sample(rng, n, width);
                vars.iter().map(|v| if rng.gen_bool(0.5) { v as i32 + 1 } else { -(v as i32 + 1) }).collect()
            })
            .collect();
        // place uncovered variables into clauses with room
        let mut missing: Vec<usize> = (1..=n).filter(|v| !clauses.iter().flatten().any(|l| l.unsigned_abs() as usize == *v)).collect();
        while let Some(v) = missing.pop() {
            let open: Vec<usize> = (0..m).filter(|&j| clauses[j].len() < max_width).collect();
            if open.is_empty() {
                break;
            }
            let j = open[rng.gen_range(0..open.len())];
            clauses[j].push(if rng.gen_bool(0.5) { v as i32 } else { -(v as i32) });
        }
        if let Ok(f) = CnfFormula::new(n, clauses) {
            return Ok(f);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cnf(n: usize, clauses: &[&[i32]]) -> CnfFormula {
        CnfFormula::new(n, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    /// Independent oracle: evaluate every assignment literally.
    fn brute_counts(f: &CnfFormula, k: usize) -> Vec<u64> {
        let n = f.num_vars();
        let mut counts = vec![0u64; 1 << k];
        for a in 0..1u64 << n {
            let asg = Assignment::from_packed(a, n);
            if f.eval(&asg).unwrap() {
                counts[(a >> (n - k)) as usize] += 1;
            }
        }
        counts
    }

    #[test]
    fn parses_dimacs() {
        let f = parse_dimacs("p cnf 2 1\n1 2 0\n", false).unwrap();
        assert_eq!(f.clauses(), &[vec![1, 2]]);
        let f = parse_dimacs("c comment\np cnf 3 2\n1 2 0\n-3 0\n", false).unwrap();
        assert_eq!((f.num_vars(), f.num_clauses()), (3, 2));
        let f = parse_dimacs("p cnf 2 2\n-2 1\n 0 2 0\n%\n0\n", false).unwrap();
        assert_eq!(f.clauses(), &[vec![1, -2], vec![2]]);
    }

    #[test]
    fn rejects_bad_dimacs() {
        assert!(matches!(parse_dimacs("p cnf 1 1\n1 -1 0\n", false), Err(Error::Tautology { clause: 1 })));
        assert!(matches!(parse_dimacs("p cnf 2 1\n1 0\n", false), Err(Error::UnusedVariable(2))));
        assert!(matches!(parse_dimacs("1 2 0\n", false), Err(Error::Parse { .. })));
        assert!(matches!(parse_dimacs("p cnf 2 2\n1 2 0\n", false), Err(Error::Parse { .. })));
        assert!(matches!(parse_dimacs("p cnf 2 1\n1 3 0\n", false), Err(Error::Parse { .. })));
        assert!(matches!(parse_dimacs("p cnf 2 1\n1 2\n", false), Err(Error::Parse { .. })));
        let f = parse_dimacs("p cnf 2 2\n1 -1 0\n1 2 0\n", true).unwrap();
        assert_eq!(f.num_clauses(), 1);
    }

    #[test]
    fn dimacs_round_trip() {
        let f = cnf(3, &[&[1, -2], &[3], &[-1, 2, -3]]);
        assert_eq!(parse_dimacs(&f.to_dimacs(), false).unwrap(), f);
    }

    #[test]
    fn counts_models() {
        assert_eq!(count_sat(&cnf(2, &[&[1, 2]])).unwrap(), 3);
        assert_eq!(count_sat(&cnf(1, &[&[1], &[-1]])).unwrap(), 0);
        assert_eq!(count_sat(&cnf(5, &[&[1, 2, 3, 4, 5]])).unwrap(), 31);
        assert!(count_sat(&cnf(27, &[&(1..=27).collect::<Vec<_>>()])).unwrap_err().is_budget());
    }

    #[test]
    fn minority_sat_examples() {
        let w = e_minority_sat(&cnf(2, &[&[1, 2]]), 1).unwrap().unwrap();
        assert_eq!((w.prefix.to_string(), w.satisfying_suffixes), ("0".into(), 1));
        assert!(e_minority_sat(&cnf(1, &[&[1], &[-1]]), 1).unwrap().is_some());
        let w = e_minority_sat(&cnf(2, &[&[1, -2], &[1, 2]]), 1).unwrap().unwrap();
        assert_eq!(w.prefix.to_string(), "0");
        // either value of x1 leaves 3 of 4 completions satisfying
        assert!(e_minority_sat(&cnf(3, &[&[1, 2, 3], &[-1, 2, 3]]), 1).unwrap().is_none());
        assert!(e_minority_sat(&cnf(2, &[&[1, 2]]), 0).is_err());
    }

    #[test]
    fn exact_sat_examples() {
        let f = cnf(2, &[&[1, 2]]);
        assert_eq!(e_exact_sat(&f, 1, 1, false).unwrap().unwrap().prefix.to_string(), "0");
        assert_eq!(e_exact_sat(&f, 1, 2, false).unwrap().unwrap().prefix.to_string(), "1");
        assert!(e_exact_sat(&f, 1, 3, false).unwrap().is_none());
        assert!(e_exact_sat(&f, 1, 0, false).is_err());
        assert!(e_exact_sat(&cnf(1, &[&[1]]), 1, 0, true).unwrap().is_some());
        assert!(e_exact_sat_star(&f, 1, 2).is_err());
    }

    #[test]
    fn subset_sum_examples() {
        let s = |v: &[u64]| v.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>();
        assert_eq!(count_subset_sum(&s(&[1, 2, 3]), &BigUint::from(3u8)).unwrap(), BigUint::from(2u8));
        assert_eq!(count_subset_sum(&s(&[5, 7]), &BigUint::from(0u8)).unwrap(), BigUint::from(1u8));
        assert_eq!(count_subset_sum(&[], &BigUint::from(0u8)).unwrap(), BigUint::from(1u8));
        let huge: BigUint = BigUint::from(1u8) << 200usize;
        let sizes = vec![huge.clone(), huge.clone(), BigUint::from(1u8)];
        assert_eq!(count_subset_sum(&sizes, &(huge + 1u8)).unwrap(), BigUint::from(2u8));
        assert!(count_subset_sum(&s(&[1; 45]), &BigUint::from(1u8)).unwrap_err().is_budget());
    }

    #[test]
    fn formula_corpus_is_valid_and_distinct() {
        assert_eq!(all_clauses(2).len(), 8);
        let fs = all_formulas(2, 8);
        let mut set = std::collections::HashSet::new();
        for f in &fs {
            assert!(set.insert(f.clone()));
        }
        // clause sets over 8 clauses that cover both variables
        let brute = (1u32..256)
            .filter(|mask| {
                let cs: Vec<_> = (0..8).filter(|i| mask >> i & 1 == 1).map(|i| all_clauses(2)[i].clone()).collect();
                CnfFormula::new(2, cs).is_ok()
            })
            .count();
        assert_eq!(fs.len(), brute);
    }

    proptest! {
        #[test]
        fn sweep_matches_literal_evaluation(seed in any::<u64>(), n in 1usize..7, m in 1usize..5, k in 0usize..7) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = m.max(n.div_ceil(3));
            let f = random_formula(&mut rng, n, m, 3).unwrap();
            let k = k.min(n);
            let counts = suffix_counts(&f, k).unwrap();
            prop_assert_eq!(&counts, &brute_counts(&f, k));
            prop_assert_eq!(counts.iter().sum::<u64>(), count_sat(&f).unwrap());
        }

        #[test]
        fn full_bound_always_holds(seed in any::<u64>(), n in 1usize..7, k in 1usize..7) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = random_formula(&mut rng, n, n, 3).unwrap();
            let k = k.min(n);
            prop_assert!(minority_with_threshold(&f, k, 1 << (n - k)).unwrap().is_some());
            if let Some(w) = e_minority_sat(&f, k).unwrap() {
                let counts = brute_counts(&f, k);
                prop_assert!(counts[..w.prefix.packed() as usize].iter().all(|&c| 2 * c > 1 << (n - k)));
            }
        }

        #[test]
        fn subset_sum_symmetries(sizes in proptest::collection::vec(0u64..40, 0..12), target in 0u64..200, rot in 0usize..12) {
            let big: Vec<BigUint> = sizes.iter().map(|&s| BigUint::from(s)).collect();
            let t = BigUint::from(target);
            let base = count_subset_sum(&big, &t).unwrap();
            let brute = (0u32..1 << sizes.len())
                .filter(|m| (0..sizes.len()).filter(|i| m >> i & 1 == 1).map(|i| sizes[i]).sum::<u64>() == target)
                .count();
            prop_assert_eq!(&base, &BigUint::from(brute));
            let mut rotated = big.clone();
            if !rotated.is_empty() {
                let r = rot % rotated.len();
                rotated.rotate_left(r);
            }
            prop_assert_eq!(&count_subset_sum(&rotated, &t).unwrap(), &base);
            let mut extended = big.clone();
            extended.push(BigUint::from(sizes.iter().sum::<u64>() + target + 1));
            prop_assert_eq!(&count_subset_sum(&extended, &t).unwrap(), &base);
        }
    }
}
