//! Maintain instances: exact-target prefixes keep the index unchanged, and a
//! power-of-two target is handled by tripling it first.
//!
//! ```text
//! cargo run --example maintain_gadget
//! ```

use wvg_control::formula::{e_exact_sat, CnfFormula};
use wvg_control::gadgets::{build_maintain, exactify, witness_deletion, ControlInstance};
use wvg_control::{ExactIndex, Result};

fn index(inst: &ControlInstance) -> Result<ExactIndex> {
    Ok(ExactIndex::for_game(inst.band_system()?.pivot_count()?, inst.num_players()))
}

fn run(f: &CnfFormula, k: usize, ell: u64, lines: &mut Vec<String>) -> Result<()> {
    let inst = build_maintain(f, k, ell, false)?;
    let before = index(&inst)?;
    lines.push(format!("{f}, k = {k}, ell = {ell}: {} players, beta = {before}", inst.num_players()));
    match e_exact_sat(f, k, ell, false)? {
        Some(w) => {
            let deletion = witness_deletion(&inst, &w.prefix)?;
            let after = index(&inst.delete(&deletion)?.0)?;
            lines.push(format!("  prefix {} deletes {deletion:?}: after = {after}, equal: {}", w.prefix, before == after));
        }
        None => lines.push("  no prefix has exactly ell completions".into()),
    }
    Ok(())
}

pub fn run_example() -> Result<Vec<String>> {
    let mut lines = Vec::new();
    let f = CnfFormula::new(3, vec![vec![1, 2, 3]])?;
    run(&f, 1, 3, &mut lines)?;

    let g = CnfFormula::new(2, vec![vec![1, -2]])?;
    let (tripled, k, ell) = exactify(&g, 1, 1)?;
    run(&tripled, k, ell, &mut lines)?;
    Ok(lines)
}

fn main() -> Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
