use std::fmt;

use num_bigint::BigUint;

use super::exactify::DeltaDecomposition;
use super::instance::GadgetKind;
use super::prereduction::ceil_log2;
use crate::error::{Error, Result};
use crate::game::{pow2, ExactIndex};

/// Pivot counts for cases 1 to 6: heavy player in `D`, `F`, `S`, `T`, `U`, `V`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CaseCounts(pub [BigUint; 6]);

impl fmt::Display for CaseCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "case{}={c}", i + 1)?;
        }
        Ok(())
    }
}

/// Closed-form case counts of the distinguished player.
///
/// `ell` is required for the maintain gadget and ignored otherwise.
pub fn expected_cases(kind: GadgetKind, k: usize, n: usize, xi: u64, ell: Option<u64>) -> Result<CaseCounts> {
    let (k64, xi) = (k as u64, BigUint::from(xi));
    let kb = BigUint::from(k64);
    let p = |e: usize| pow2(e as u64);
    let one = BigUint::from(1u8);
    let two = BigUint::from(2u8);
    let c1 = &kb * 2u8 * (p(k) - &one) * &xi;
    let c2 = &kb * 2u8 * &xi;
    Ok(CaseCounts(match kind {
        GadgetKind::Decrease => [
            c1,
            c2,
            &kb * p(k + 1) * (p(k + 1) - &two),
            &kb * p(n) * (p(k + 1) - &two),
            &kb * p(k + 1),
            &kb * p(n),
        ],
        GadgetKind::Nonincrease => [
            c1,
            c2,
            BigUint::default(),
            &kb * p(n) * (p(k + 1) - &two),
            BigUint::default(),
            &kb * p(n),
        ],
        GadgetKind::Maintain => {
            let ell = BigUint::from(ell.ok_or_else(|| Error::InvalidParameter("maintain needs ell".into()))?);
            let kl = &kb * &ell;
            [
                c1,
                c2,
                &kl * p(k + 1) * (p(k) - &one),
                &kl * p(n + 2) * (p(k) - &one),
                &kl * (p(k + 1) - &two),
                &kl * (p(n + 2) + &two),
            ]
        }
    }))
}

/// The numerator of the distinguished player's index in its compact form.
pub fn expected_numerator(kind: GadgetKind, k: usize, n: usize, xi: u64, ell: Option<u64>) -> Result<BigUint> {
    let kb = BigUint::from(k as u64);
    let p = |e: usize| pow2(e as u64);
    let sat = &kb * 2u8 * p(k) * xi;
    Ok(match kind {
        GadgetKind::Decrease => sat + &kb * (p(n) + p(k + 1)) * (p(k + 1) - 1u8),
        GadgetKind::Nonincrease => sat + &kb * p(n) * (p(k + 1) - 1u8),
        GadgetKind::Maintain => {
            let ell = ell.ok_or_else(|| Error::InvalidParameter("maintain needs ell".into()))?;
            sat + &kb * ell * (p(n + 2) + p(k + 1)) * p(k)
        }
    })
}

pub fn expected_index(
    kind: GadgetKind,
    k: usize,
    n: usize,
    xi: u64,
    ell: Option<u64>,
    players: usize,
) -> Result<ExactIndex> {
    Ok(ExactIndex::for_game(expected_numerator(kind, k, n, xi, ell)?, players))
}

/// Player count of a gadget, summed group by group.
pub fn expected_players(kind: GadgetKind, k: usize, n: usize, m: usize, ell: Option<u64>) -> Result<usize> {
    let c = m * ceil_log2(n) as usize;
    let base = 1 + 2 * k + (2 * n - 2 * k) + c + k + (2 * n + c) + 1;
    Ok(match kind {
        GadgetKind::Decrease | GadgetKind::Nonincrease => {
            let heavy = k * k * (k + 2) + k * k * (n + 1) + k * (k + 2) + k * (n + 1);
            let chain = k + 2 * k + (k + 1) + n + (k + 1) + n + (k + 1) + (k + 1) + k;
            let all = base + heavy + chain;
            if kind == GadgetKind::Decrease {
                all
            } else {
                all - (k * k * (k + 2) + k * (k + 2) + 3 * (k + 1))
            }
        }
        GadgetKind::Maintain => {
            let ell = ell.ok_or_else(|| Error::InvalidParameter("maintain needs ell".into()))?;
            let d = DeltaDecomposition::new(ell)?;
            let per_level = k * k * (k + 2) + k * k * (n + 3) + k * k + k * (n + 5);
            let levels: usize = d.exponents.iter().map(|&di| di as usize + (di as usize + 1) * per_level).sum();
            let chain = k + 2 * k + (k + 1) + (n + 2) + (k + 1) + (n + 2) + k + k + k;
            base + levels + chain
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_decrease_reference_values() {
        assert_eq!(expected_players(GadgetKind::Decrease, 4, 5, 1, None).unwrap(), 318);
        let n = expected_numerator(GadgetKind::Decrease, 4, 5, 31, None).unwrap();
        assert_eq!(n, BigUint::from(11904u32));
        let cases = expected_cases(GadgetKind::Decrease, 4, 5, 31, None).unwrap();
        assert_eq!(cases.total(), n);
        let idx = expected_index(GadgetKind::Decrease, 4, 5, 31, None, 318).unwrap();
        assert_eq!(idx.to_string(), "11904/2^317");
    }

    #[test]
    fn compact_forms_match_case_sums() {
        for k in 1..6 {
            for n in k + 1..8 {
                for xi in [0u64, 1, 7, 1 << n] {
                    for kind in [GadgetKind::Decrease, GadgetKind::Nonincrease] {
                        assert_eq!(
                            expected_cases(kind, k, n, xi, None).unwrap().total(),
                            expected_numerator(kind, k, n, xi, None).unwrap()
                        );
                    }
                    for ell in [3u64, 5, 6, 12] {
                        let e = Some(ell);
                        assert_eq!(
                            expected_cases(GadgetKind::Maintain, k, n, xi, e).unwrap().total(),
                            expected_numerator(GadgetKind::Maintain, k, n, xi, e).unwrap()
                        );
                    }
                }
            }
        }
        let nonincrease = expected_numerator(GadgetKind::Nonincrease, 4, 5, 31, None).unwrap();
        // 2*4*16*31 + 4*32*(2^5 - 1)
        assert_eq!(nonincrease, BigUint::from(3968u32 + 3968));
        let players = expected_players(GadgetKind::Decrease, 4, 5, 1, None).unwrap()
            - expected_players(GadgetKind::Nonincrease, 4, 5, 1, None).unwrap();
        assert_eq!(players, 16 * 6 + 4 * 6 + 15);
    }
}
