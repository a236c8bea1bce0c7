use num_bigint::BigUint;
use rayon::prelude::*;

use super::{pivot_window, EngineBudget};
use crate::error::{Error, Result};
use crate::game::Game;
use crate::subset_sum::narrow;

/// Bits fixed per parallel task.
const SPLIT_BITS: usize = 6;

/// Walks all `2^(|N|-1)` coalitions of the other players and counts those
/// inside the pivot window. The low bits of each task are visited in Gray-code
/// order so every step is a single add or subtract.
pub fn pivot_count_enum(game: &Game, player: usize, budget: &EngineBudget) -> Result<BigUint> {
    game.check_player(player)?;
    let others = game.other_weights(player);
    if others.len() > budget.max_enum_players {
        return Err(Error::BudgetExceeded {
            engine: "enum",
            budget: "maxEnumPlayers",
            limit: budget.max_enum_players as u64,
            required: others.len() as u64,
        });
    }
    let Some((lo, hi)) = pivot_window(game, player) else {
        return Ok(BigUint::ZERO);
    };
    let total = match narrow(others.iter().copied(), game.quota()) {
        Some(w) => {
            let (lo, hi) = (u128::try_from(&lo).unwrap(), u128::try_from(&hi).unwrap());
            count_u128(&w, lo, hi)
        }
        None => {
            let w: Vec<BigUint> = others.into_iter().cloned().collect();
            count_big(&w, &lo, &hi)
        }
    };
    Ok(BigUint::from(total))
}

fn split(n: usize) -> (usize, usize) {
    let high = n.min(SPLIT_BITS);
    (high, n - high)
}

fn count_u128(w: &[u128], lo: u128, hi: u128) -> u128 {
    let (high, low) = split(w.len());
    let (low_w, high_w) = w.split_at(low);
    (0u64..1 << high)
        .into_par_iter()
        .map(|prefix| {
            let mut sum: u128 = high_w.iter().enumerate().filter(|(b, _)| prefix >> b & 1 == 1).map(|(_, x)| x).sum();
            let mut hits = u128::from(lo <= sum && sum <= hi);
            let mut gray = 0u64;
            for i in 1u64..1 << low {
                let bit = i.trailing_zeros() as usize;
                gray ^= 1 << bit;
                if gray >> bit & 1 == 1 {
                    sum += low_w[bit];
                } else {
                    sum -= low_w[bit];
                }
                hits += u128::from(lo <= sum && sum <= hi);
            }
            hits
        })
        .sum()
}

fn count_big(w: &[BigUint], lo: &BigUint, hi: &BigUint) -> u128 {
    let (high, low) = split(w.len());
    let (low_w, high_w) = w.split_at(low);
    (0u64..1 << high)
        .into_par_iter()
        .map(|prefix| {
            let mut sum: BigUint = high_w.iter().enumerate().filter(|(b, _)| prefix >> b & 1 == 1).map(|(_, x)| x).sum();
            let mut hits = u128::from(*lo <= sum && sum <= *hi);
            let mut gray = 0u64;
            for i in 1u64..1 << low {
                let bit = i.trailing_zeros() as usize;
                gray ^= 1 << bit;
                if gray >> bit & 1 == 1 {
                    sum += &low_w[bit];
                } else {
                    sum -= &low_w[bit];
                }
                hits += u128::from(*lo <= sum && sum <= *hi);
            }
            hits
        })
        .sum()
}
