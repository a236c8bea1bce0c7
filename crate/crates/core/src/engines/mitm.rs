use num_bigint::BigUint;

use super::{pivot_window, EngineBudget};
use crate::error::{Error, Result};
use crate::game::Game;
use crate::subset_sum::{count_pairs_in_range, half_sums, narrow, SumInt};

/// Splits the other players into two halves, tabulates each half's subset
/// sums with multiplicities and counts cross pairs landing in `[q - w_i, q - 1]`.
pub fn pivot_count_mitm(game: &Game, player: usize, budget: &EngineBudget) -> Result<BigUint> {
    game.check_player(player)?;
    let others = game.other_weights(player);
    let half = others.len().div_ceil(2);
    if half > budget.max_mitm_half {
        return Err(Error::BudgetExceeded {
            engine: "mitm",
            budget: "maxMitmHalf",
            limit: budget.max_mitm_half as u64,
            required: half as u64,
        });
    }
    let Some((lo, hi)) = pivot_window(game, player) else {
        return Ok(BigUint::ZERO);
    };
    let total = match narrow(others.iter().copied(), game.quota()) {
        Some(w) => {
            let (lo, hi) = (u128::try_from(&lo).unwrap(), u128::try_from(&hi).unwrap());
            sweep(&w, half, &lo, &hi)
        }
        None => {
            let w: Vec<BigUint> = others.into_iter().cloned().collect();
            sweep(&w, half, &lo, &hi)
        }
    };
    Ok(BigUint::from(total))
}

fn sweep<T: SumInt>(w: &[T], half: usize, lo: &T, hi: &T) -> u128 {
    let (a, b) = w.split_at(half);
    let (left, right) = rayon::join(|| half_sums(a), || half_sums(b));
    count_pairs_in_range(&left, &right, lo, hi)
}
