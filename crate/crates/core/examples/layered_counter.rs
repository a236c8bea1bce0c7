//! Pivot counting on a gadget through its band metadata, one heavy player at
//! a time, next to the same count by meet in the middle.
//!
//! ```text
//! cargo run --example layered_counter
//! ```

use wvg_control::engines::pivot_count_mitm;
use wvg_control::formula::CnfFormula;
use wvg_control::gadgets::build_decrease;
use wvg_control::{EngineBudget, Result};

pub fn run_example() -> Result<Vec<String>> {
    let f = CnfFormula::new(2, vec![vec![1, 2]])?;
    let inst = build_decrease(&f, 1, false)?;
    let system = inst.band_system()?;
    let mut lines = vec![format!("{} players, {} heavy", inst.num_players(), system.heavy().len())];

    for b in system.blocks() {
        lines.push(format!(
            "block {:>4} {:<20} {:>2} members, granularity {}",
            b.label(),
            b.kind().to_string(),
            b.members().len(),
            b.granularity()
        ));
    }
    for (h, count) in system.breakdown()? {
        if count > 0u8.into() {
            lines.push(format!("heavy player {h}: {count}"));
        }
    }
    let layered = system.pivot_count()?;
    let budget = EngineBudget { max_mitm_half: 24, ..EngineBudget::default() };
    let mitm = pivot_count_mitm(&inst.game, inst.distinguished, &budget)?;
    lines.push(format!("layered {layered}, meet in the middle {mitm}"));
    Ok(lines)
}

fn main() -> Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
