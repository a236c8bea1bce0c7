//! Exact pivotal-coalition counts `η(G, i)` and the probabilistic
//! Penrose-Banzhaf index `β(G, i) = η / 2^(|N|-1)`.
//!
//! Three unstructured engines (full enumeration, meet-in-the-middle, and a
//! pseudo-polynomial weight table) serve as mutual oracles. The fourth,
//! [`Engine::Layered`], needs band metadata and lives in [`crate::layered`].
//! An engine that cannot handle an instance within its [`EngineBudget`]
//! returns [`Error::BudgetExceeded`]; there is no silent fallback.

mod enumerate;
mod mitm;
mod weight_dp;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

pub use enumerate::pivot_count_enum;
pub use mitm::pivot_count_mitm;
pub use weight_dp::pivot_count_weight_dp;

use crate::error::{Error, Result};
use crate::game::{ExactIndex, Game};
use crate::layered::{BandLayout, BandSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineBudget {
    /// Largest `|N| - 1` the enumeration engine accepts.
    pub max_enum_players: usize,
    /// Largest half size the meet-in-the-middle engine accepts.
    pub max_mitm_half: usize,
    /// Largest quota the weight table accepts.
    pub max_dp_quota: u64,
}

impl Default for EngineBudget {
    fn default() -> Self {
        EngineBudget { max_enum_players: 24, max_mitm_half: 22, max_dp_quota: 2_000_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Enum,
    Mitm,
    Dp,
    Layered,
    Auto,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Enum => "enum",
            Engine::Mitm => "mitm",
            Engine::Dp => "dp",
            Engine::Layered => "layered",
            Engine::Auto => "auto",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "enum" => Engine::Enum,
            "mitm" => Engine::Mitm,
            "dp" => Engine::Dp,
            "layered" => Engine::Layered,
            "auto" => Engine::Auto,
            other => return Err(Error::InvalidParameter(format!("unknown engine {other:?}"))),
        })
    }
}

/// A pivot count together with the engine that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotCount {
    pub count: BigUint,
    pub engine: Engine,
}

/// Resolves `Auto` into a concrete engine for this instance.
pub fn choose_engine(game: &Game, player: usize, bands: Option<&BandLayout>, budget: &EngineBudget) -> Engine {
    if let Some(layout) = bands {
        if layout.distinguished == player {
            return Engine::Layered;
        }
    }
    let others = game.num_players().saturating_sub(1);
    if others <= budget.max_enum_players.min(18) {
        return Engine::Enum;
    }
    if game.quota().to_u64().is_some_and(|q| q <= budget.max_dp_quota) {
        return Engine::Dp;
    }
    if others.div_ceil(2) <= budget.max_mitm_half {
        return Engine::Mitm;
    }
    Engine::Enum
}

/// Counts the coalitions `player` is pivotal for with the requested engine.
///
/// `bands` is only consulted by the layered engine (and by `Auto` when present).
pub fn pivot_count(
    game: &Game,
    player: usize,
    engine: Engine,
    budget: &EngineBudget,
    bands: Option<&BandLayout>,
) -> Result<PivotCount> {
    game.check_player(player)?;
    let engine = match engine {
        Engine::Auto => choose_engine(game, player, bands, budget),
        e => e,
    };
    let count = match engine {
        Engine::Enum => pivot_count_enum(game, player, budget)?,
        Engine::Mitm => pivot_count_mitm(game, player, budget)?,
        Engine::Dp => pivot_count_weight_dp(game, player, budget)?,
        Engine::Layered => {
            let layout = bands.ok_or_else(|| Error::Structural("layered engine needs band metadata".into()))?;
            if layout.distinguished != player {
                return Err(Error::Structural(format!(
                    "layered engine only counts for the distinguished player {}, not {player}",
                    layout.distinguished
                )));
            }
            let system = BandSystem::new(game, layout)?;
            system.pivot_count()?
        }
        Engine::Auto => unreachable!("resolved above"),
    };
    Ok(PivotCount { count, engine })
}

pub fn banzhaf(game: &Game, player: usize, engine: Engine, budget: &EngineBudget) -> Result<ExactIndex> {
    banzhaf_with_bands(game, player, engine, budget, None).map(|(idx, _)| idx)
}

pub fn banzhaf_with_bands(
    game: &Game,
    player: usize,
    engine: Engine,
    budget: &EngineBudget,
    bands: Option<&BandLayout>,
) -> Result<(ExactIndex, Engine)> {
    let pc = pivot_count(game, player, engine, budget, bands)?;
    Ok((ExactIndex::for_game(pc.count, game.num_players()), pc.engine))
}

/// `[q - w_i, q - 1]` clamped at zero, or `None` when empty (`w_i = 0`).
pub(crate) fn pivot_window(game: &Game, player: usize) -> Option<(BigUint, BigUint)> {
    let q = game.quota();
    let w = game.weight(player);
    if w == &BigUint::ZERO {
        return None;
    }
    let lo = if w >= q { BigUint::ZERO } else { q - w };
    Some((lo, q - 1u32))
}
