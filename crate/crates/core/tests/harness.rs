//! Harness behaviour on a small slice of the catalog.

use quasidet::harness::{catalog, replay, run_suite, Expect, Report, RunConfig, Status};

fn config(only: &[&str]) -> RunConfig {
    RunConfig { samples: 3, only: only.iter().map(|s| s.to_string()).collect(), ..RunConfig::default() }
}

#[test]
fn catalog_ids_are_unique_and_controls_exist() {
    let all = catalog();
    let mut ids: Vec<&str> = all.iter().map(|e| e.info().id.as_str()).collect();
    ids.sort_unstable();
    let n = ids.len();
    ids.dedup();
    assert_eq!(ids.len(), n);
    assert!(all.iter().filter(|e| e.info().expect == Expect::Fails).count() >= 3);
}

#[test]
fn fixed_seed_is_byte_deterministic() {
    let c = config(&["SYLVESTER", "VIETA-33", "NEG-COMMUTE"]);
    let a = run_suite(&c).unwrap().deterministic().to_json();
    let b = run_suite(&c).unwrap().deterministic().to_json();
    assert_eq!(a, b);
    let other = run_suite(&RunConfig { seed: 7, ..c }).unwrap().deterministic().to_json();
    assert_ne!(a, other);
}

#[test]
fn report_round_trips_and_counterexamples_replay() {
    let rep = run_suite(&config(&["NEG-QDET-CORNER", "NEG-S2-REVERSED"])).unwrap();
    let back = Report::from_json(&rep.to_json()).unwrap();
    assert_eq!(back.deterministic().to_json(), rep.deterministic().to_json());
    for v in &back.verdicts {
        assert_eq!(v.status, Status::Counterexample);
        assert!(v.passed);
        for k in 0..v.counterexamples().count() {
            let o = replay(&back, &v.id, k).unwrap();
            assert!(o.reproduced && o.still_differs);
        }
    }
    assert_eq!(back.exit_code(), 0);
}

#[test]
fn unknown_identity_is_rejected() {
    assert!(run_suite(&config(&["NO-SUCH-ID"])).is_err());
}
