use std::path::Path;
use std::process::{Command, Output};

use wvg_control::gadgets::ControlInstance;
use wvg_control::Game;

fn wvg(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wvg")).args(args).current_dir(dir).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn index_prints_exact_fraction() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("g.json"), r#"{"weights": ["1","2","2","2","3","3"], "quota": "8"}"#).unwrap();
    let o = wvg(&["index", "g.json", "--player", "1"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("8/2^5 (= 0.25)"));

    std::fs::write(dir.path().join("z.json"), r#"{"weights": ["0","2","3"], "quota": "4"}"#).unwrap();
    let o = wvg(&["index", "z.json", "--player", "0"], dir.path());
    assert!(stdout(&o).contains("0/2^2"));
}

#[test]
fn reduce_round_trips_and_index_uses_layered() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("f.cnf"), "p cnf 3 2\n1 2 3 0\n-1 2 0\n").unwrap();
    let o = wvg(&["reduce", "f.cnf", "--kind", "decrease", "--k", "1", "--relaxed", "-o", "d.json"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));

    let text = std::fs::read_to_string(dir.path().join("d.json")).unwrap();
    let inst = ControlInstance::from_json(&text).unwrap();
    let again = ControlInstance::from_json(&inst.to_json()).unwrap();
    assert_eq!(inst.game, again.game);
    let game = Game::from_json(&text).unwrap();
    assert_eq!(game, inst.game);

    let o = wvg(&["index", "d.json", "--json"], dir.path());
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["engine"], "layered");
    let text = stdout(&o);
    assert!(text.contains("matches"), "{text}");
}

#[test]
fn control_reports_verdicts_with_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let inst = r#"{"weights": ["1","2","2","2","3","3"], "quota": "8", "distinguished": 1, "budget": 1, "goal": "DECREASE"}"#;
    std::fs::write(dir.path().join("i.json"), inst).unwrap();
    let o = wvg(&["control", "i.json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("YES"));
    assert!(stdout(&o).contains("3/2^4"));

    let o = wvg(&["control", "i.json", "--budget", "0"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("NO (exhaustive)"));
}

#[test]
fn exit_codes_distinguish_input_errors_and_budget_refusals() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("taut.cnf"), "p cnf 2 1\n1 -1 2 0\n").unwrap();
    let o = wvg(&["oracle", "count", "taut.cnf"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let o = wvg(&["oracle", "count", "taut.cnf", "--strip-tautologies"], dir.path());
    assert_eq!(o.status.code(), Some(2), "stripping leaves x1 and x2 unused");

    std::fs::write(dir.path().join("ok.cnf"), "p cnf 2 2\n1 -1 2 0\n-2 1 0\n").unwrap();
    let o = wvg(&["oracle", "count", "ok.cnf", "--strip-tautologies"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("#SAT"));

    let weights: Vec<String> = (1..=30).map(|w| format!("\"{w}\"")).collect();
    std::fs::write(dir.path().join("big.json"), format!(r#"{{"weights": [{}], "quota": "200"}}"#, weights.join(","))).unwrap();
    let o = wvg(&["index", "big.json", "--player", "0", "--engine", "enum"], dir.path());
    assert_eq!(o.status.code(), Some(3));
    let o = wvg(&["index", "missing.json", "--player", "0"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_prints_bit_string_witness() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("f.cnf"), "p cnf 3 2\n1 2 3 0\n-1 2 0\n").unwrap();
    let o = wvg(&["oracle", "minority", "f.cnf", "--k", "1"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("YES") && text.contains("prefix"), "{text}");
}

#[test]
fn verify_example1_suite() {
    let dir = tempfile::tempdir().unwrap();
    let o = wvg(&["verify", "example1"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("EXAMPLE1 PASS").count(), 3);
}
