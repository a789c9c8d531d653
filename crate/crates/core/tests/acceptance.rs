//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use affine_qschur::tensor::Variant;
use affine_qschur::verify::{
    verify_affine_hecke, verify_commuting, verify_drinfeld, verify_eval_compat, verify_jm, verify_lemmas, verify_qgl,
    verify_roundtrip, Report, SuiteConfig, Status, Which,
};
use affine_qschur::Result;

const QGL_CONFIGS: [(usize, usize); 3] = [(2, 2), (3, 2), (3, 3)];

struct Outcome {
    ok: bool,
    detail: String,
}

fn summarize(reports: &[Report]) -> Outcome {
    let ok = reports.iter().all(|r| r.status == Status::Pass);
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    let failures: usize = reports.iter().map(|r| r.failures_total).sum();
    let mut detail = format!("{} runs, {cases} cases, {failures} failures", reports.len());
    if let Some(bad) = reports.iter().find(|r| r.status != Status::Pass) {
        detail += &format!("; first bad run {} {}", bad.suite, bad.config);
        if let Some(f) = bad.failures.first() {
            detail += &format!(": {}", f.case);
        }
    }
    Outcome { ok, detail }
}

fn run_suites(f: impl Fn() -> Result<Vec<Report>>) -> Outcome {
    match f() {
        Ok(reports) => summarize(&reports),
        Err(e) => Outcome { ok: false, detail: format!("error: {e}") },
    }
}

fn c1() -> Outcome {
    run_suites(|| QGL_CONFIGS.iter().map(|&(n, r)| verify_qgl(&SuiteConfig::new(n, r))).collect())
}

fn c2() -> Outcome {
    run_suites(|| QGL_CONFIGS.iter().map(|&(n, r)| verify_affine_hecke(&SuiteConfig::new(n, r))).collect())
}

fn c3() -> Outcome {
    run_suites(|| [(3, 2), (3, 3)].iter().map(|&(n, r)| verify_commuting(&SuiteConfig::new(n, r))).collect())
}

fn c4() -> Outcome {
    let configs = [(2usize, 2usize), (3, 2), (3, 3), (4, 2)];
    let mut out = run_suites(|| configs.iter().map(|&(n, r)| verify_eval_compat(&SuiteConfig::new(n, r), Which::En)).collect());
    for &(n, r) in &configs {
        match verify_eval_compat(&SuiteConfig::new(n, r), Which::En) {
            Ok(rep) if rep.cases == n.pow(r as u32) => {}
            Ok(rep) => {
                out.ok = false;
                out.detail += &format!("; ({n},{r}) checked {} vectors, expected {}", rep.cases, n.pow(r as u32));
            }
            Err(_) => out.ok = false,
        }
    }
    let mut agree = 0;
    for &(n, r) in &configs {
        match verify_eval_compat(&SuiteConfig::new(n, r), Which::Fn) {
            Ok(rep) if rep.status == Status::ReportOnly => agree += (rep.failures_total == 0) as usize,
            _ => {
                out.ok = false;
                out.detail += &format!("; Fn report missing for ({n},{r})");
            }
        }
    }
    out.detail += &format!("; Fn reported for {} configs, agreeing in {agree}", configs.len());
    out
}

fn c5() -> Outcome {
    run_suites(|| {
        let mut reps = Vec::new();
        for n in 2..=4 {
            for r in 1..=4 {
                reps.push(verify_lemmas(&SuiteConfig::new(n, r))?);
            }
        }
        Ok(reps)
    })
}

fn c6() -> Outcome {
    run_suites(|| (1..=4).map(|r| verify_jm(r, 2)).collect())
}

fn c7() -> Outcome {
    run_suites(|| Ok(vec![verify_drinfeld(6, 7, 0)?]))
}

fn c8() -> Outcome {
    run_suites(|| Ok(vec![verify_roundtrip(200, 5, 7, 2024)?]))
}

/// The first of suites 1-4 that fails under `variant`, if any.
fn caught_by(variant: Variant) -> Result<Option<String>> {
    for &(n, r) in &QGL_CONFIGS {
        let cfg = SuiteConfig::new(n, r).with_variant(variant);
        let reps = [
            verify_qgl(&cfg)?,
            verify_affine_hecke(&cfg)?,
            verify_commuting(&cfg)?,
            verify_eval_compat(&cfg, Which::En)?,
        ];
        if let Some(bad) = reps.iter().find(|r| r.status == Status::Fail) {
            return Ok(Some(format!("{} at (n,r)=({n},{r}), {} failures", bad.suite, bad.failures_total)));
        }
    }
    Ok(None)
}

fn c9() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for v in [Variant::FlippedMiddleExponent, Variant::FlippedECoproduct] {
        match caught_by(v) {
            Ok(Some(by)) => parts.push(format!("{v:?} caught by {by}")),
            Ok(None) => {
                ok = false;
                parts.push(format!("{v:?} NOT caught"));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{v:?}: error {e}"));
            }
        }
    }
    Outcome { ok, detail: parts.join("; ") }
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, u64, fn() -> Outcome); 9] = [
        (1, "quantum affine relations on windowed tensors", 120, c1),
        (2, "affine Hecke relations, right action", 60, c2),
        (3, "commuting actions", 120, c3),
        (4, "evaluation compatibility for E_n (F_n reported)", 60, c4),
        (5, "closed formulas for u T..T, f_k and z_t", 180, c5),
        (6, "Murphy operator congruences, r <= 4", 300, c6),
        (7, "Drinfeld polynomial identities, r <= 6, n = 7", 30, c7),
        (8, "multisegment round trip, 200 samples", 10, c8),
        (9, "mutation sensitivity", 600, c9),
    ];
    let mut all = true;
    for (k, what, limit, f) in criteria {
        let start = Instant::now();
        let out = f();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(limit);
        let ok = out.ok && in_time;
        all &= ok;
        println!(
            "criterion {k}: {} — {what} ({:.2} s, limit {limit} s{}) [{}]",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            if in_time { "" } else { ", over time" },
            out.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
