use std::ops::AddAssign;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::{pivot_window, EngineBudget};
use crate::error::{Error, Result};
use crate::game::Game;

/// Number of subsets per achievable sum `0..q`, with every sum `>= q` folded
/// into a single sink bucket. Table width is the quota regardless of total weight.
pub fn pivot_count_weight_dp(game: &Game, player: usize, budget: &EngineBudget) -> Result<BigUint> {
    game.check_player(player)?;
    let quota = match game.quota().to_u64() {
        Some(q) if q <= budget.max_dp_quota => q as usize,
        _ => {
            return Err(Error::BudgetExceeded {
                engine: "dp",
                budget: "maxDpQuota",
                limit: budget.max_dp_quota,
                required: game.quota().to_u64().unwrap_or(u64::MAX),
            })
        }
    };
    let Some((lo, _)) = pivot_window(game, player) else {
        return Ok(BigUint::ZERO);
    };
    let lo = lo.to_usize().expect("below quota");
    // weights at or above the quota only ever reach the sink
    let others: Vec<Option<usize>> = game
        .other_weights(player)
        .into_iter()
        .map(|w| w.to_usize().filter(|&w| w < quota))
        .collect();
    // counts never exceed 2^(|N|-1)
    if others.len() < 127 {
        let (table, _) = fill::<u128>(&others, quota);
        Ok(BigUint::from(table[lo..quota].iter().sum::<u128>()))
    } else {
        let (table, _) = fill::<BigUint>(&others, quota);
        Ok(table[lo..quota].iter().sum())
    }
}

fn fill<C>(weights: &[Option<usize>], quota: usize) -> (Vec<C>, C)
where
    C: Clone + Zero + for<'a> AddAssign<&'a C> + From<u8>,
{
    let mut table = vec![C::zero(); quota];
    let mut sink = C::zero();
    table[0] = C::from(1u8);
    for &w in weights {
        match w {
            None => {
                // every subset with this player lands in the sink
                let mut add = sink.clone();
                for c in &table {
                    add += c;
                }
                sink += &add;
            }
            Some(0) => {
                for c in table.iter_mut() {
                    let old = c.clone();
                    *c += &old;
                }
                let old = sink.clone();
                sink += &old;
            }
            Some(w) => {
                let old = sink.clone();
                sink += &old;
                for s in (0..quota).rev() {
                    if table[s].is_zero() {
                        continue;
                    }
                    let c = table[s].clone();
                    if s + w >= quota {
                        sink += &c;
                    } else {
                        table[s + w] += &c;
                    }
                }
            }
        }
    }
    (table, sink)
}
