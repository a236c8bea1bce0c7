//! Exact Penrose-Banzhaf indices for weighted voting games, control by
//! deleting players, and compilation of minority-SAT formulas into control
//! instances whose answers mirror the formula.

pub mod commands;
pub mod control;
pub mod engines;
pub mod formula;
pub mod gadgets;
pub mod error;
pub mod game;
pub mod layered;
mod subset_sum;
pub mod verify;

pub use engines::{banzhaf, pivot_count, Engine, EngineBudget};
pub use error::{Error, Result};
pub use game::{Coalition, ExactIndex, Game, IndexRemap};
