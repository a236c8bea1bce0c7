//! Brute-force formula oracles on a DIMACS input.
//!
//! ```text
//! cargo run --example formula_oracles
//! ```

use wvg_control::formula::{count_sat, e_exact_sat, e_minority_sat, parse_dimacs, suffix_counts};
use wvg_control::gadgets::exactify;
use wvg_control::Result;

const CNF: &str = "c two clauses over three variables
p cnf 3 2
1 2 3 0
-1 2 0
";

pub fn run_example() -> Result<Vec<String>> {
    let f = parse_dimacs(CNF, false)?;
    let mut lines = vec![format!("{f}"), format!("#SAT = {}", count_sat(&f)?)];
    lines.push(format!("completions per x1: {:?}", suffix_counts(&f, 1)?));

    match e_minority_sat(&f, 1)? {
        Some(w) => lines.push(format!("minority prefix x1 = {} with {} completions", w.prefix, w.satisfying_suffixes)),
        None => lines.push("no minority prefix".into()),
    }
    let exact_two = e_exact_sat(&f, 1, 2, false)?;
    lines.push(format!("prefix with exactly 2 completions: {:?}", exact_two.map(|w| w.prefix.to_string())));

    let (g, k, ell) = exactify(&f, 1, 2)?;
    let tripled = e_exact_sat(&g, k, ell, false)?;
    lines.push(format!("after adding a fresh clause, target {ell}: {:?}", tripled.map(|w| w.prefix.to_string())));
    Ok(lines)
}

fn main() -> Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
