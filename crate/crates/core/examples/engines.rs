//! The three general engines agree, and each refuses instances past its budget.
//!
//! ```text
//! cargo run --example engines
//! ```

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wvg_control::engines::{pivot_count_enum, pivot_count_mitm, pivot_count_weight_dp};
use wvg_control::{Engine, EngineBudget, Game, Result};

pub fn run_example() -> Result<Vec<String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let weights: Vec<u64> = (0..16).map(|_| rng.gen_range(1..=50)).collect();
    let quota = weights.iter().sum::<u64>() / 2 + 1;
    let game = Game::from_u64(&weights, quota)?;
    let budget = EngineBudget::default();
    let mut lines = vec![format!("{game}")];

    for p in 0..4 {
        let e = pivot_count_enum(&game, p, &budget)?;
        let m = pivot_count_mitm(&game, p, &budget)?;
        let d = pivot_count_weight_dp(&game, p, &budget)?;
        assert!(e == m && m == d);
        lines.push(format!("player {p} (weight {}): {e} pivotal coalitions", game.weight(p)));
    }

    let tight = EngineBudget { max_enum_players: 10, ..budget };
    match wvg_control::banzhaf(&game, 0, Engine::Enum, &tight) {
        Err(e) if e.is_budget() => lines.push(format!("refused: {e}")),
        other => lines.push(format!("unexpected: {other:?}")),
    }
    Ok(lines)
}

fn main() -> Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
