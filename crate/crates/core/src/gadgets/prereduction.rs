//! Decimal-band encoding of a formula as subset-sum weights.
//!
//! Variable `x_i` owns the decimal digit `t(m+1)+i`, clause `j` owns the
//! base-`10^t` digit `j`. Picking one of `a_i`, `b_i` per variable fixes an
//! assignment; the clause digits then count true literals and the `c_{j,s}`
//! fillers top each one up to `2^ceil(log2 n)` in exactly one way, provided
//! at least one literal is true.

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};

use crate::formula::CnfFormula;

/// Weights of the `A`, `B` and `C` groups with the target `q'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrereductionWeights {
    /// `ceil(log2 n) - 1`; `-1` for a single variable, which leaves no fillers.
    pub r: i64,
    pub t: u32,
    /// `a_i` for `i = 1..=n`.
    pub a: Vec<BigUint>,
    /// `b_i` for `i = 1..=n`.
    pub b: Vec<BigUint>,
    /// `c_{j,s}` clause-major: `(j, s)` for `j = 1..=m`, `s = 0..=r`.
    pub c: Vec<BigUint>,
    pub q_prime: BigUint,
}

pub fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

pub fn pow10(e: u64) -> BigUint {
    BigUint::from(10u8).pow(e)
}

/// Smallest `t >= 1` with `10^t > 2^(ceil(log2 n)+1)` and `10^t > floor`.
pub fn minimal_t(n: usize, floor: &BigUint) -> u32 {
    let digit_bound = BigUint::one() << (ceil_log2(n) + 1);
    let mut t = 1;
    while pow10(t as u64) <= digit_bound || pow10(t as u64) <= *floor {
        t += 1;
    }
    t
}

pub fn build_prereduction(formula: &CnfFormula, t_floor: &BigUint) -> PrereductionWeights {
    let n = formula.num_vars();
    let m = formula.num_clauses();
    let t = minimal_t(n, t_floor);
    let tt = t as u64;
    let lg = ceil_log2(n);
    let top = |i: usize| pow10(tt * (m as u64 + 1) + i as u64);
    let clause_digit = |j: usize| pow10(tt * j as u64);
    let literal_weight = |i: usize, lit: i32| {
        let mut w = top(i);
        for j in 0..m {
            if formula.clause_contains(j, lit) {
                w += clause_digit(j + 1);
            }
        }
        w
    };
    let a = (1..=n).map(|i| literal_weight(i, i as i32)).collect();
    let b = (1..=n).map(|i| literal_weight(i, -(i as i32))).collect();
    let mut c = Vec::new();
    for j in 1..=m {
        for s in 0..lg {
            c.push((BigUint::one() << s) * clause_digit(j));
        }
    }
    let mut q_prime = BigUint::zero();
    for i in 1..=n {
        q_prime += top(i);
    }
    for j in 1..=m {
        q_prime += (BigUint::one() << lg) * clause_digit(j);
    }
    PrereductionWeights { r: lg as i64 - 1, t, a, b, c, q_prime }
}

impl PrereductionWeights {
    /// `A ∪ B ∪ C` in a fixed order: all `a_i`, all `b_i`, then `c_{j,s}`.
    pub fn all(&self) -> Vec<BigUint> {
        self.a.iter().chain(&self.b).chain(&self.c).cloned().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{count_sat, count_subset_sum};

    #[test]
    fn small_parameters() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(5), 3);
        let f = CnfFormula::new(2, vec![vec![1, 2]]).unwrap();
        let w = build_prereduction(&f, &BigUint::zero());
        assert_eq!((w.r, w.t), (0, 1));
        // a_1 = 10^3 + 10, b_1 = 10^3, c_{1,0} = 10, q' = 10^3 + 10^4 + 2*10
        assert_eq!(w.a[0], BigUint::from(1010u32));
        assert_eq!(w.b[0], BigUint::from(1000u32));
        assert_eq!(w.c, vec![BigUint::from(10u32)]);
        assert_eq!(w.q_prime, BigUint::from(11020u32));
        assert_eq!(count_subset_sum(&w.all(), &w.q_prime).unwrap(), BigUint::from(count_sat(&f).unwrap()));
        assert_eq!(minimal_t(2, &BigUint::from(100u32)), 3);
    }

    #[test]
    fn single_variable_needs_no_fillers() {
        let f = CnfFormula::new(1, vec![vec![1]]).unwrap();
        let w = build_prereduction(&f, &BigUint::zero());
        assert_eq!(w.r, -1);
        assert!(w.c.is_empty());
        assert_eq!(count_subset_sum(&w.all(), &w.q_prime).unwrap(), BigUint::one());
    }
}
