//! Acceptance criteria, one line of output each. Runs without the libtest
//! harness so the summary is printed even when everything passes.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};

use qsd::divergence::{skew_divergence, SkewParameter};
use qsd::hermitian::DensityMatrix;
use qsd::verify::{find_check, run_check, CheckRecord, CHECKS, PROPERTIES};

const SEED: u64 = 20_240_611;
const GLOBAL_TOL: f64 = 1e-8;
const ALL_DIMS: [usize; 7] = [2, 3, 4, 5, 6, 7, 8];
const FIVE_DIMS: [usize; 5] = [2, 3, 4, 6, 8];

struct Outcome {
    ok: bool,
    detail: String,
}

/// Runs `id` and requires at least `min_trials` instances with no violation
/// and no error, at the tolerance `tol` the criterion states.
fn require(id: &str, dims: &[usize], trials: usize, min_trials: usize, tol: f64, notes: &mut Vec<String>) -> bool {
    let spec = find_check(id).unwrap_or_else(|| panic!("unknown check {id}"));
    let rec: CheckRecord = run_check(spec, dims, trials, SEED, GLOBAL_TOL);
    let enough = rec.trials >= min_trials;
    let tol_ok = rec.tolerance <= tol;
    let ok = rec.passed() && enough && tol_ok;
    notes.push(format!(
        "{id}: n={} worst={:.2e} tol={:.0e}{}",
        rec.trials,
        rec.worst_slack.unwrap_or(f64::NAN),
        rec.tolerance,
        if ok { String::new() } else { format!(" FAILED ({} violations, {} errors)", rec.violations, rec.errors) }
    ));
    ok
}

fn checks(list: &[(&str, &[usize], usize, usize, f64)]) -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (id, dims, trials, min, tol) in list {
        ok &= require(id, dims, *trials, *min, *tol, &mut notes);
    }
    Outcome { ok, detail: notes.join("; ") }
}

fn range_and_orthogonality() -> Outcome {
    let mut out = checks(&[
        ("sd-range", &ALL_DIMS, 1500, 10_000, 1e-9),
        ("sd-orthogonal-pairs", &ALL_DIMS, 300, 1800, 1e-9),
        ("sd-overlapping-pairs", &ALL_DIMS, 300, 2100, 0.0),
    ]);
    // basis states |0> and |1>: the closed form is exactly 1
    let rho = DensityMatrix::from_diagonal(&[1.0, 0.0]).unwrap();
    let sigma = DensityMatrix::from_diagonal(&[0.0, 1.0]).unwrap();
    for a in [0.01, 0.5, 0.99] {
        let v = skew_divergence(&rho, &sigma, SkewParameter::new(a).unwrap()).unwrap();
        if (v - 1.0).abs() > 1e-9 {
            out.ok = false;
            out.detail.push_str(&format!("; basis pair at alpha {a}: {v}"));
        }
    }
    out
}

fn trace_norm_sandwich() -> Outcome {
    let mut out = checks(&[
        ("sd-trace-norm-sandwich", &ALL_DIMS, 300, 2000, 1e-8),
        ("sd-trace-norm-tightness", &[3, 4, 6], 200, 600, 1e-9),
    ]);
    // S(rho||alpha rho + (1-alpha) sigma) = t(-log alpha), so SD = t
    let mut worst: f64 = 0.0;
    for k in 1..=9 {
        let t = k as f64 / 10.0;
        let rho = DensityMatrix::from_diagonal(&[t, 0.0, 1.0 - t]).unwrap();
        let sigma = DensityMatrix::from_diagonal(&[0.0, t, 1.0 - t]).unwrap();
        for a in [0.1, 0.5, 0.9] {
            let v = skew_divergence(&rho, &sigma, SkewParameter::new(a).unwrap()).unwrap();
            worst = worst.max((v - t).abs());
        }
    }
    out.ok &= worst <= 1e-9;
    out.detail.push_str(&format!("; diagonal family max |SD - t| = {worst:.2e}"));
    out
}

fn frechet_oracles() -> Outcome {
    checks(&[
        ("frechet-quadrature", &FIVE_DIMS, 100, 500, 1e-6),
        ("frechet-finite-difference", &FIVE_DIMS, 100, 500, 1e-6),
        ("second-derivative-quadrature", &FIVE_DIMS, 100, 500, 1e-6),
    ])
}

fn operator_lemmas() -> Outcome {
    checks(&[
        ("frechet-sum-lemma", &FIVE_DIMS, 100, 500, 1e-9),
        ("second-derivative-sum-lemma", &FIVE_DIMS, 100, 500, 1e-9),
        ("second-derivative-identity", &FIVE_DIMS, 100, 500, 1e-8),
    ])
}

fn metric_inequality() -> Outcome {
    checks(&[("metric-increment", &FIVE_DIMS, 100, 500, 1e-8)])
}

fn dsd_calculus() -> Outcome {
    checks(&[
        ("dsd-symmetry", &FIVE_DIMS, 100, 500, 1e-10),
        ("sd-averaging", &FIVE_DIMS, 100, 500, 1e-6),
        ("dsd-derivative", &FIVE_DIMS, 100, 500, 1e-6),
        ("chi2-relation", &FIVE_DIMS, 100, 500, 1e-9),
    ])
}

fn continuity_family() -> Outcome {
    checks(&[
        ("proposition-bounds", &FIVE_DIMS, 100, 500, 1e-8),
        ("dsd-increment-bounds", &FIVE_DIMS, 100, 500, 1e-8),
        ("continuity-bounds", &FIVE_DIMS, 100, 500, 1e-8),
        ("continuity-equality", &FIVE_DIMS, 100, 500, 1e-9),
    ])
}

fn small_incremental_mixing() -> Outcome {
    checks(&[
        ("sim-bound", &FIVE_DIMS, 200, 1000, 1e-8),
        ("svsd-identity", &FIVE_DIMS, 200, 1000, 1e-8),
        ("sd-unitary-perturbation", &FIVE_DIMS, 200, 1000, 1e-8),
    ])
}

fn holevo_suite() -> Outcome {
    let dims: &[usize] = &[2, 3, 4, 6];
    checks(&[
        ("chi-three-ways", dims, 125, 500, 1e-9),
        ("chi-bound-chain", dims, 125, 500, 1e-8),
        ("chi-continuity", dims, 125, 500, 1e-8),
        ("chi-roga", dims, 125, 500, 1e-8),
    ])
}

fn end_to_end() -> Outcome {
    let dir = tempfile::tempdir().expect("temp dir");
    let report_path = dir.path().join("report.json");
    let status = Command::new(env!("CARGO_BIN_EXE_qsd"))
        .args(["verify", "--suite", "all", "--dims", "2,3,4,6", "--trials", "200", "--seed", "42", "--out"])
        .arg(&report_path)
        .env_remove("QSD_SEED")
        .status()
        .expect("run qsd");
    let text = std::fs::read_to_string(&report_path).unwrap_or_default();
    let report: serde_json::Value = serde_json::from_str(&text).unwrap_or(serde_json::Value::Null);
    let listed: BTreeSet<&str> = report["checks"]
        .as_array()
        .map(|cs| cs.iter().filter_map(|c| c["check_id"].as_str()).collect())
        .unwrap_or_default();
    let covered: BTreeSet<&str> = report["properties"]
        .as_object()
        .map(|m| {
            m.iter().filter(|(_, v)| v.as_array().is_some_and(|a| !a.is_empty())).map(|(k, _)| k.as_str()).collect()
        })
        .unwrap_or_default();
    let missing_checks = CHECKS.iter().filter(|c| !listed.contains(c.id)).count();
    let missing_props: Vec<&str> = PROPERTIES.iter().map(|p| p.id).filter(|p| !covered.contains(p)).collect();
    let violations = report["violations"].as_u64();
    let ok = status.code() == Some(0) && missing_checks == 0 && missing_props.is_empty() && violations == Some(0);
    Outcome {
        ok,
        detail: format!(
            "exit {:?}, {} checks, {}/{} properties covered, violations {:?}, {:.1}s{}",
            status.code(),
            listed.len(),
            covered.len(),
            PROPERTIES.len(),
            violations,
            report["wall_time"].as_f64().unwrap_or(f64::NAN),
            if missing_props.is_empty() { String::new() } else { format!(", missing {missing_props:?}") }
        ),
    }
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("range and orthogonality of SD", range_and_orthogonality),
        ("trace-norm sandwich and its tight family", trace_norm_sandwich),
        ("Frechet derivative oracles", frechet_oracles),
        ("operator lemmas for T and R", operator_lemmas),
        ("metric increment inequality", metric_inequality),
        ("differential skew divergence calculus", dsd_calculus),
        ("continuity family and equality case", continuity_family),
        ("small incremental mixing", small_incremental_mixing),
        ("Holevo information bounds", holevo_suite),
        ("end-to-end verify run", end_to_end),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let out = run();
        if !out.ok {
            failed += 1;
        }
        println!("criterion {:>2} {} {name}: {}", k + 1, if out.ok { "PASS" } else { "FAIL" }, out.detail);
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
