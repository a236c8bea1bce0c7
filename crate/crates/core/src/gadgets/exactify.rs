use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::formula::CnfFormula;

/// Binary digits of `ell` with one weight level per set bit.
///
/// `exponents` are descending; level `j` holds `exponents[j]` players of
/// weight `level_weights[j]`, where the first level weighs 1 and each next
/// level weighs `(exponents[j-1] + 1)` times the previous one. That keeps
/// every level above the combined weight of all earlier levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaDecomposition {
    pub ell: u64,
    pub exponents: Vec<u32>,
    pub level_weights: Vec<BigUint>,
}

impl DeltaDecomposition {
    pub fn new(ell: u64) -> Result<Self> {
        if ell == 0 {
            return Err(Error::InvalidParameter("ell must be positive".into()));
        }
        let exponents: Vec<u32> = (0..64).rev().filter(|b| ell >> b & 1 == 1).collect();
        let mut level_weights = vec![BigUint::from(1u8)];
        for j in 1..exponents.len() {
            let next = &level_weights[j - 1] * (exponents[j - 1] + 1);
            level_weights.push(next);
        }
        Ok(DeltaDecomposition { ell, exponents, level_weights })
    }

    pub fn levels(&self) -> usize {
        self.exponents.len()
    }

    /// `(δ_h + 1) δ'_h`: the first weight above every level.
    pub fn ceiling(&self) -> BigUint {
        let h = self.levels() - 1;
        &self.level_weights[h] * (self.exponents[h] + 1)
    }
}

/// Turns an E-Exact-SAT instance into one whose target is not a power of two:
/// `φ ∧ (x_{n+1} ∨ x_{n+2})` triples every completion count.
pub fn exactify(formula: &CnfFormula, k: usize, ell: u64) -> Result<(CnfFormula, usize, u64)> {
    if ell == 0 {
        return Err(Error::InvalidParameter("ell must be positive".into()));
    }
    let tripled = ell
        .checked_mul(3)
        .ok_or_else(|| Error::InvalidParameter(format!("3 * {ell} overflows")))?;
    Ok((formula.with_fresh_clause(2), k, tripled))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::e_exact_sat;

    #[test]
    fn decomposition_levels_do_not_carry() {
        for ell in 1..200u64 {
            let d = DeltaDecomposition::new(ell).unwrap();
            assert_eq!(d.exponents.iter().map(|&e| 1u64 << e).sum::<u64>(), ell);
            let mut below = BigUint::default();
            for (e, w) in d.exponents.iter().zip(&d.level_weights) {
                assert!(below < *w);
                below += w * *e;
            }
            assert!(below < d.ceiling());
        }
        let d = DeltaDecomposition::new(10).unwrap();
        assert_eq!(d.exponents, vec![3, 1]);
        assert_eq!(d.level_weights, vec![BigUint::from(1u8), BigUint::from(4u8)]);
    }

    #[test]
    fn tripling_examples() {
        let f = CnfFormula::new(2, vec![vec![1, 2]]).unwrap();
        let (g, k, l) = exactify(&f, 1, 1).unwrap();
        assert_eq!((g.num_vars(), k, l), (4, 1, 3));
        assert!(!l.is_power_of_two());
        assert_eq!(exactify(&f, 1, 4).unwrap().2, 12);
        assert!(e_exact_sat(&f, 1, 1, false).unwrap().is_some());
        assert!(e_exact_sat(&g, 1, 3, false).unwrap().is_some());
        assert!(exactify(&f, 1, 0).is_err());
    }
}
