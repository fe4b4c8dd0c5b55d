use subproj_core::Ring;
use subproj_harness::{run_suite, Execution, HarnessError, TrialConfig, SUITES};

fn ring_for(id: &str) -> Ring {
    match id {
        "snf" | "prop-hered" => Ring::Integers,
        "prop-semisimple" => Ring::IntegersMod(6),
        _ => Ring::IntegersMod(4),
    }
}

#[test]
fn every_suite_agrees_on_a_small_run() {
    for id in SUITES {
        let cfg = TrialConfig::new(ring_for(id), 20, 11);
        let report = run_suite(id, &cfg).unwrap_or_else(|e| panic!("{id}: {e}"));
        assert_eq!(report.agreements + report.counterexamples.len(), report.trials, "{id}");
        assert!(report.passed(), "{id}: {:#?}", report.counterexamples.first());
    }
}

#[test]
fn sequential_and_parallel_reports_match() {
    for id in ["thm-4-1", "prop-spherR", "lem-nul1"] {
        let base = TrialConfig::new(Ring::IntegersMod(4), 24, 3);
        let a = run_suite(id, &base.clone().with_execution(Execution::Sequential)).unwrap();
        let b = run_suite(id, &base.with_execution(Execution::Parallel)).unwrap();
        assert!(a.same_outcome(&b), "{id}");
    }
}

#[test]
fn same_seed_same_report() {
    let cfg = TrialConfig::new(Ring::Integers, 15, 99);
    let a = run_suite("prop-shift", &cfg).unwrap();
    let b = run_suite("prop-shift", &cfg).unwrap();
    assert!(a.same_outcome(&b));
}

#[test]
fn fixed_suites_hold_over_several_rings() {
    for ring in [Ring::Integers, Ring::IntegersMod(4), Ring::IntegersMod(9), Ring::IntegersMod(12)] {
        for id in ["exmp-1-spherR", "exmp-2-spherR", "ex-2main1"] {
            let r = run_suite(id, &TrialConfig::new(ring, 1, 0)).unwrap();
            assert!(r.passed() && r.trials > 0, "{id} over {ring}: {:#?}", r.counterexamples);
        }
    }
}

#[test]
fn unsuitable_rings_and_unknown_suites_are_rejected() {
    let z = TrialConfig::new(Ring::Integers, 1, 0);
    assert!(matches!(run_suite("oracle", &z), Err(HarnessError::UnsuitableRing(_))));
    assert!(matches!(run_suite("prop-semisimple", &z), Err(HarnessError::UnsuitableRing(_))));
    let z4 = TrialConfig::new(Ring::IntegersMod(4), 1, 0);
    assert!(matches!(run_suite("ex-2main1", &TrialConfig::new(Ring::IntegersMod(6), 1, 0)), Err(HarnessError::UnsuitableRing(_))));
    assert!(matches!(run_suite("prop-hered", &z4), Err(HarnessError::UnsuitableRing(_))));
    assert!(matches!(run_suite("nope", &z4), Err(HarnessError::UnknownSuite(_))));
}
