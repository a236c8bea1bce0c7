//! Searching for a deletion that meets a goal: exhaustively on a small game,
//! and by seeded sampling on a gadget.
//!
//! ```text
//! cargo run --example control_search
//! ```

use wvg_control::control::{solve_control, SearchMode, SolverConfig};
use wvg_control::formula::CnfFormula;
use wvg_control::gadgets::{build_decrease, ControlInstance, Goal};
use wvg_control::{Game, Result};

pub fn run_example() -> Result<Vec<String>> {
    let game = Game::from_u64(&[1, 2, 2, 2, 3, 3], 8)?;
    let mut lines = Vec::new();
    for goal in [Goal::Decrease, Goal::Maintain, Goal::Increase] {
        let inst = ControlInstance::new(game.clone(), 1, 1, goal)?;
        let report = solve_control(&inst, &SolverConfig::default())?;
        lines.push(format!("{goal}: {} after {} candidates", report.verdict, report.candidates_evaluated));
    }

    // every prefix of x1 leaves 3 of 4 completions, so no deletion should decrease
    let f = CnfFormula::new(3, vec![vec![1, 2, 3], vec![-1, 2, 3]])?;
    let inst = build_decrease(&f, 1, false)?;
    let config = SolverConfig { mode: SearchMode::Sampled { seed: 3, trials: 500 }, ..SolverConfig::default() };
    let report = solve_control(&inst, &config)?;
    lines.push(format!("{f} gadget, {} players: {}", inst.num_players(), report.verdict));
    Ok(lines)
}

fn main() -> Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
