//! Exact Banzhaf indices on a six-player game, before and after deletions.
//!
//! ```text
//! cargo run --example power_index
//! ```

use wvg_control::{banzhaf, Engine, EngineBudget, Game, Result};

pub fn run_example() -> Result<Vec<String>> {
    let game = Game::from_u64(&[1, 2, 2, 2, 3, 3], 8)?;
    let budget = EngineBudget::default();
    let mut lines = Vec::new();

    let beta = banzhaf(&game, 1, Engine::Auto, &budget)?;
    lines.push(format!("{game}: beta(player 1) = {beta} = {}", beta.decimal_string()));

    for victim in [5, 3] {
        let (smaller, remap) = game.delete_players(&[victim])?;
        let p = remap.get(1).expect("player 1 is kept");
        let after = banzhaf(&smaller, p, Engine::Auto, &budget)?;
        lines.push(format!(
            "delete player {victim} (weight {}): beta = {after} = {}",
            game.weight(victim),
            after.decimal_string()
        ));
    }
    Ok(lines)
}

fn main() -> Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
