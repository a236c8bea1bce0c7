//! Acceptance criteria, one PASS/FAIL line each. Exit status is nonzero when
//! any criterion fails or overruns its time limit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use wvg_control::gadgets::GadgetKind;
use wvg_control::verify::{self, Check};

const SEED: u64 = 20_241_016;

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Vec<Check>,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, title: "example game indices (exact)", limit: secs(1), run: verify::example1_checks },
        Criterion {
            id: 2,
            title: "enum, mitm and dp agree on 500 random games",
            limit: secs(30),
            run: || vec![verify::engine_agreement(500, SEED)],
        },
        Criterion {
            id: 3,
            title: "prereduction subset-sum counts equal #SAT",
            limit: secs(60),
            run: || vec![verify::prereduction_identity(SEED)],
        },
        Criterion {
            id: 4,
            title: "decrease gadget closed form and cases",
            limit: secs(120),
            run: || vec![verify::closed_forms(GadgetKind::Decrease, SEED)],
        },
        Criterion {
            id: 5,
            title: "nonincrease gadget closed form and cases",
            limit: secs(120),
            run: || vec![verify::closed_forms(GadgetKind::Nonincrease, SEED)],
        },
        Criterion {
            id: 6,
            title: "maintain gadget closed form and cases, ell in {3,5,6}",
            limit: secs(180),
            run: || vec![verify::closed_forms(GadgetKind::Maintain, SEED)],
        },
        Criterion { id: 7, title: "strict k=4 n=5 numerator 11904/2^317", limit: secs(120), run: || vec![verify::strict_scale()] },
        Criterion { id: 8, title: "yes-direction witnesses", limit: secs(180), run: || vec![verify::yes_direction(SEED)] },
        Criterion {
            id: 9,
            title: "no-direction, A-only exhaustive + 10000 sampled (sampled evidence)",
            limit: secs(300),
            run: || vec![verify::no_direction(SEED, 10_000)],
        },
        Criterion {
            id: 10,
            title: "tripling preserves exact-SAT answers",
            limit: secs(60),
            run: || vec![verify::exactify_equivalence(SEED)],
        },
        Criterion {
            id: 11,
            title: "layered = mitm per heavy player on (k,n) = (1,2)",
            limit: secs(60),
            run: || vec![verify::heavy_split(), verify::relaxed_mitm_agreement()],
        },
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in criteria() {
        let start = Instant::now();
        let checks = (c.run)();
        let elapsed = start.elapsed();
        let ok = checks.iter().all(|k| k.passed) && elapsed <= c.limit;
        if !ok {
            failed += 1;
        }
        let detail: Vec<String> = checks.iter().map(|k| format!("{}: {}", k.name, k.detail)).collect();
        println!(
            "{} criterion {:>2} {} [{:.2}s / limit {}s] {}",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            detail.join("; ")
        );
    }
    println!("{failed} of 11 criteria failed");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
