//! Compilation of formulas into control instances.
//!
//! Each builder emits a weighted voting game with distinguished player `0`
//! of weight 1, the group label of every player and the band layout the
//! layered counter needs. The index of player `0` is a closed form in the
//! model count `ξ` of the formula, and deleting the `A` players that encode
//! a prefix assignment moves it by an amount governed by that prefix's
//! completion count.

mod build;
mod closed_form;
mod exactify;
mod instance;
pub mod prereduction;

pub use build::{build_decrease, build_maintain, build_nonincrease, ChainWeights};
pub use closed_form::{expected_cases, expected_index, expected_numerator, expected_players, CaseCounts};
pub use exactify::{exactify, DeltaDecomposition};
pub use instance::{
    case_counts, witness_deletion, ControlInstance, GadgetInfo, GadgetKind, Goal, GroupLabel,
};
pub use prereduction::{build_prereduction, PrereductionWeights};
