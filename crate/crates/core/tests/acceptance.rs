//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Exits 0 after printing unless `QUASIDET_ACCEPTANCE_STRICT` is set, in which
//! case any FAIL gives exit code 1.

use std::collections::BTreeMap;
use std::process::ExitCode;

use quasidet::harness::{self, replay, run_suite, IdentityVerdict, Report, RunConfig, Status};
use quasidet::quasidet::qdet_formula;

const DEFINITION_IDS: &[&str] = &["QDET-DEF-AGREE", "QDET-2X2-CLOSED", "QDET-3X3-CLOSED"];
const COMMUTATIVE_IDS: &[&str] = &["QDET-COMMUTATIVE"];
const HEIGHT_IDS: &[&str] = &["QDET-FORMULA"];
const ASYMMETRY_WITNESSES: &[&str] = &["NEG-Y1Y2-SYM", "NEG-S2-REVERSED"];

struct Check {
    ok: bool,
    detail: String,
}

impl Check {
    /// The detail is kept only on failure.
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Check { ok, detail: if ok { String::new() } else { detail.into() } }
    }

    fn and(self, o: Check) -> Check {
        let detail = match (self.detail.is_empty(), o.detail.is_empty()) {
            (true, _) => o.detail,
            (_, true) => self.detail,
            _ => format!("{}; {}", self.detail, o.detail),
        };
        Check { ok: self.ok && o.ok, detail }
    }
}

fn modules() -> BTreeMap<String, &'static str> {
    harness::catalog().iter().map(|e| (e.info().id.clone(), e.info().module)).collect()
}

fn ids_in(report: &Report, module: &str, exclude: &[&str]) -> Vec<String> {
    let m = modules();
    report
        .verdicts
        .iter()
        .map(|v| v.id.clone())
        .filter(|id| m.get(id).copied() == Some(module) && !exclude.contains(&id.as_str()))
        .collect()
}

fn verdict<'a>(report: &'a Report, id: &str) -> Option<&'a IdentityVerdict> {
    report.verdict(id)
}

/// Every listed identity ends Verified; problems are listed by ID.
fn all_verified<S: AsRef<str>>(report: &Report, ids: &[S]) -> Check {
    let mut bad = Vec::new();
    for id in ids {
        match verdict(report, id.as_ref()) {
            Some(v) if v.status == Status::Verified => {}
            Some(v) => {
                let cells: Vec<String> = v
                    .cells
                    .iter()
                    .filter(|c| c.status != Status::Verified)
                    .map(|c| format!("n{}d{}:{:?}", c.n, c.d, c.status))
                    .collect();
                bad.push(format!("{} {:?} [{}]", v.id, v.status, cells.join(" ")));
            }
            None => bad.push(format!("{} missing", id.as_ref())),
        }
    }
    Check::new(bad.is_empty(), bad.join(", "))
}

fn exhausted_fraction<S: AsRef<str>>(report: &Report, ids: &[S]) -> Check {
    let cells: Vec<_> =
        ids.iter().filter_map(|id| verdict(report, id.as_ref())).flat_map(|v| v.cells.iter()).collect();
    let exhausted = cells.iter().filter(|c| c.status == Status::DomainExhausted).count();
    Check::new(exhausted * 20 < cells.len().max(1), format!("{exhausted}/{} cells exhausted", cells.len()))
}

fn witnesses(report: &Report, ids: &[&str]) -> Check {
    let missing: Vec<&str> = ids
        .iter()
        .copied()
        .filter(|id| !verdict(report, id).is_some_and(|v| v.status == Status::Counterexample))
        .collect();
    Check::new(missing.is_empty(), format!("no witness: {}", missing.join(", ")))
}

fn heights() -> Check {
    let mut bad = Vec::new();
    for n in 1..=6 {
        for (p, q) in [(1, 1), (n, n), (1, n), (n, 1)] {
            match qdet_formula(n, p, q) {
                Ok(f) if f.height() == n - 1 => {}
                Ok(f) => bad.push(format!("n={n} ({p},{q}) height {}", f.height())),
                Err(e) => bad.push(format!("n={n} ({p},{q}) {e}")),
            }
        }
    }
    Check::new(bad.is_empty(), bad.join(", "))
}

fn integrity(report: &Report, config: &RunConfig) -> Check {
    let quick = RunConfig { samples: 2, ..config.clone() };
    let det = match (run_suite(&quick), run_suite(&quick)) {
        (Ok(a), Ok(b)) => Check::new(
            a.deterministic().to_json() == b.deterministic().to_json(),
            "fixed-seed reports differ",
        ),
        (Err(e), _) | (_, Err(e)) => Check::new(false, e.to_string()),
    };

    let controls: Vec<&str> = report
        .verdicts
        .iter()
        .filter(|v| v.expect == harness::Expect::Fails)
        .map(|v| v.id.as_str())
        .collect();
    let neg = Check::new(!controls.is_empty(), "no negative controls").and(witnesses(report, &controls));

    let mut replay_bad = Vec::new();
    let mut replayed = 0;
    for v in &report.verdicts {
        for (k, _) in v.counterexamples().enumerate() {
            replayed += 1;
            match replay(report, &v.id, k) {
                Ok(o) if o.reproduced && o.still_differs => {}
                Ok(_) => replay_bad.push(format!("{}#{k} not reproduced", v.id)),
                Err(e) => replay_bad.push(format!("{}#{k}: {e}", v.id)),
            }
        }
    }
    let rep = Check::new(replay_bad.is_empty(), replay_bad.join(", "));
    det.and(neg).and(rep).and(Check::new(replayed > 0, "nothing to replay"))
}

fn main() -> ExitCode {
    let config = RunConfig::default();
    let report = match run_suite(&config) {
        Ok(r) => r,
        Err(e) => {
            println!("FAIL suite did not run: {e}");
            return ExitCode::FAILURE;
        }
    };

    let chapter1 = ids_in(&report, "quasidet", &[DEFINITION_IDS, COMMUTATIVE_IDS, HEIGHT_IDS].concat());
    let chapter2 = ids_in(&report, "pluecker", &[]);
    let chapter3 = ids_in(&report, "symmfn", &[]);
    let chapter4 = ids_in(&report, "contfrac", &[]);

    let results = [
        ("definition coherence", all_verified(&report, DEFINITION_IDS)),
        ("commutative specialization", all_verified(&report, COMMUTATIVE_IDS)),
        (
            "quasideterminant identity suite",
            all_verified(&report, &chapter1).and(exhausted_fraction(&report, &chapter1)),
        ),
        ("formula height", heights().and(all_verified(&report, HEIGHT_IDS))),
        ("quasi-Pluecker suite", all_verified(&report, &chapter2)),
        (
            "symmetric function suite",
            all_verified(&report, &chapter3).and(witnesses(&report, ASYMMETRY_WITNESSES)),
        ),
        ("continued fraction suite", all_verified(&report, &chapter4)),
        ("harness integrity", integrity(&report, &config)),
    ];

    let mut failed = 0;
    for (k, (name, c)) in results.iter().enumerate() {
        if !c.ok {
            failed += 1;
        }
        let tail = if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) };
        println!("{} criterion {}: {name}{tail}", if c.ok { "PASS" } else { "FAIL" }, k + 1);
    }
    let s = &report.summary;
    println!(
        "acceptance: {}/{} criteria passed; {} identities, {} verified cells, {} counterexample cells",
        results.len() - failed,
        results.len(),
        s.identities,
        s.verified_cells,
        s.counterexample_cells
    );
    if failed > 0 && std::env::var_os("QUASIDET_ACCEPTANCE_STRICT").is_some() {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
