//! Acceptance run. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Runs without the libtest harness so the lines are
//! never captured.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use unitring::gamma::gamma_unit_group;
use unitring::quaternion::obstruction_certificate;
use unitring::ring::Budget;
use unitring::verify::{
    check_center_and_normal_subgroups, check_characteristic_exclusion, check_characteristic_two_branches,
    check_f2_dihedral_algebras, check_gl_orders, check_indecomposability, check_one_plus_two_t, check_un_formula,
    radical_corpus_timed, verify_table, CheckResult, CORPUS,
};

const SEEDS: [u64; 3] = [1, 2024, 0x5eed];

struct Outcome {
    pass: bool,
    detail: String,
}

fn run(id: usize, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let in_time = limit.is_none_or(|l| elapsed < l);
    let pass = out.pass && in_time;
    let limit_note = limit.map(|l| format!(" (limit {}s)", l.as_secs())).unwrap_or_default();
    println!(
        "{} criterion {id}: {name} [{:.2}s{limit_note}] {}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        out.detail
    );
    pass
}

fn from_checks(checks: &[CheckResult]) -> Outcome {
    let failed: Vec<String> = checks.iter().filter(|c| !c.pass).map(|c| format!("{}: {}", c.id, c.detail)).collect();
    Outcome {
        pass: failed.is_empty(),
        detail: if failed.is_empty() { format!("{} checks", checks.len()) } else { failed.join("; ") },
    }
}

fn criterion_1() -> Outcome {
    let rows = verify_table(Budget::default());
    let failed: Vec<String> = rows.iter().filter(|r| !r.pass).map(|r| format!("{} ({})", r.ring, r.found)).collect();
    Outcome {
        pass: rows.len() == 19 && failed.is_empty(),
        detail: format!(
            "{}/{} rows pass{}",
            rows.len() - failed.len(),
            rows.len(),
            if failed.is_empty() { String::new() } else { format!("; failed: {}", failed.join(", ")) }
        ),
    }
}

fn criterion_2() -> Outcome {
    let c = check_un_formula(Budget::default());
    Outcome { pass: c.pass, detail: c.detail }
}

fn criterion_3() -> Outcome {
    let mut fails = Vec::new();
    for k in 1..=64 {
        match obstruction_certificate(k) {
            Ok(c) if c.nonzero && c.re_value > BigInt::from(1) => {}
            other => fails.push(format!("k={k}: {other:?}")),
        }
    }
    let c1 = obstruction_certificate(1).expect("k = 1");
    if c1.norm_value != BigInt::from(-1152) || c1.re_value != BigInt::from(577) {
        fails.push(format!("k=1 gives N = {}, Re = {}", c1.norm_value, c1.re_value));
    }
    Outcome {
        pass: fails.is_empty(),
        detail: if fails.is_empty() {
            "k = 1..=64; N(z^8 - 1) = -1152, Re(z^8) = 577".into()
        } else {
            fails.join("; ")
        },
    }
}

fn criterion_4() -> Outcome {
    let mut fails = Vec::new();
    for k in (1..=25u64).step_by(2) {
        match gamma_unit_group(k, Budget::default()) {
            Ok(g) => {
                let ku = k as usize;
                if g.group.order() != 4 * ku || g.structure.dihedral_n() != Some(2 * ku) || !g.relations_hold {
                    fails.push(format!("k={k}: {}", g.structure));
                }
                if k == 1 && g.structure.invariants().map(|i| i.factors().to_vec()) != Some(vec![2, 2]) {
                    fails.push("k=1 lacks invariants {2,2}".into());
                }
            }
            Err(e) => fails.push(format!("k={k}: {e}")),
        }
    }
    Outcome {
        pass: fails.is_empty(),
        detail: if fails.is_empty() { "odd k = 1..=25".into() } else { fails.join("; ") },
    }
}

fn criterion_5() -> Outcome {
    let (c, timings) = radical_corpus_timed(Budget::default());
    let d12 = timings.iter().find(|(n, _)| *n == "GA(GF(2),D(12))").map(|t| t.1);
    let d12_ok = d12.is_some_and(|t| t < 120.0);
    Outcome {
        pass: c.pass && CORPUS.len() >= 20 && timings.len() == CORPUS.len() && d12_ok,
        detail: format!("{}; F2[D12] radical {:.1}s", c.detail, d12.unwrap_or(f64::NAN)),
    }
}

fn criterion_6() -> Outcome {
    let b = Budget::default();
    from_checks(&[
        check_center_and_normal_subgroups(12),
        check_characteristic_exclusion(),
        check_indecomposability(b),
        check_f2_dihedral_algebras(b),
        check_one_plus_two_t(b),
        check_characteristic_two_branches(b),
        check_gl_orders(b),
    ])
}

fn criterion_7() -> Outcome {
    let mut fails = Vec::new();
    for seed in SEEDS {
        let results = [
            ("quaternion laws", common::quaternion_laws(seed, 2000)),
            ("gamma ring laws", common::gamma_ring_laws(seed, 2000)),
            ("semidirect law", common::semidirect_law(seed, 20).map(|_| ())),
            ("parser fuzz", common::parser_fuzz(seed, 100_000).map(|_| ())),
        ];
        for (name, r) in results {
            if let Err(e) = r {
                fails.push(format!("seed {seed} {name}: {e}"));
            }
        }
    }
    Outcome {
        pass: fails.is_empty(),
        detail: if fails.is_empty() { format!("seeds {SEEDS:?}; 10^5 fuzz inputs per seed") } else { fails.join("; ") },
    }
}

fn main() {
    let results = [
        run(1, "table of rings with dihedral unit groups", Some(Duration::from_secs(30)), criterion_1),
        run(2, "closed form for units of F_p[x]/(x^n)", Some(Duration::from_secs(60)), criterion_2),
        run(3, "split quaternion obstruction", Some(Duration::from_secs(1)), criterion_3),
        run(4, "Gamma_k unit groups", Some(Duration::from_secs(5)), criterion_4),
        run(5, "radical corpus", None, criterion_5),
        run(6, "desk checks", None, criterion_6),
        run(7, "property suites under three seeds", None, criterion_7),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("{passed}/{} criteria pass", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
