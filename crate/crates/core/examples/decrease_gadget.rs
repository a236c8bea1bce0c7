//! Compiling a formula into a decrease instance and checking the witness
//! deletion built from a minority prefix.
//!
//! ```text
//! cargo run --example decrease_gadget
//! ```

use wvg_control::formula::{count_sat, e_minority_sat, CnfFormula};
use wvg_control::gadgets::{build_decrease, build_nonincrease, case_counts, expected_index, witness_deletion};
use wvg_control::{ExactIndex, Result};

pub fn run_example() -> Result<Vec<String>> {
    let f = CnfFormula::new(3, vec![vec![1, 2, 3], vec![-1, -2]])?;
    let k = 1;
    let xi = count_sat(&f)?;
    let mut lines = vec![format!("{f}: #SAT = {xi}")];

    for inst in [build_decrease(&f, k, false)?, build_nonincrease(&f, k, false)?] {
        let kind = inst.gadget.as_ref().expect("gadget info").kind;
        let n = inst.num_players();
        let before = ExactIndex::for_game(inst.band_system()?.pivot_count()?, n);
        let want = expected_index(kind, k, 3, xi, None, n)?;
        lines.push(format!("{}: {n} players, beta = {before} (closed form {want})", inst.goal));
        lines.push(format!("  {}", case_counts(&inst)?));

        if let Some(w) = e_minority_sat(&f, k)? {
            let deletion = witness_deletion(&inst, &w.prefix)?;
            let (smaller, _) = inst.delete(&deletion)?;
            let after = ExactIndex::for_game(smaller.band_system()?.pivot_count()?, smaller.num_players());
            lines.push(format!("  prefix {} deletes {deletion:?}: {before} -> {after}, goal met: {}", w.prefix, inst.goal.holds(&before, &after)));
        }
    }
    Ok(lines)
}

fn main() -> Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
