mod common;

use apartness::verify::{check_axiom, generate_instance, instance_seed, replay, run_suite, AxiomId, Outcome};
use apartness::{Fuel, Point};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn generators_are_non_vacuous() {
    let report = run_suite(AxiomId::ALL, 1000, 42, &Fuel::default()).unwrap();
    for s in &report.axioms {
        assert!(s.non_vacuous_fraction() >= 0.5, "{}: {:.3}", s.axiom, s.non_vacuous_fraction());
        assert_eq!(s.failed, 0, "{}: seeds {:?}", s.axiom, s.failing_seeds);
        assert_eq!(s.unknown, 0, "{}: seeds {:?}", s.axiom, s.failing_seeds);
    }
    assert!(report.ok());
}

#[test]
fn axioms_hold_on_unbiased_tuples() {
    let f = Fuel::default();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for &axiom in AxiomId::ALL {
        for _ in 0..300 {
            let qs = common::tuple(&mut rng, axiom.arity());
            let pts: Vec<Point> = qs.iter().map(common::to_point).collect();
            let r = check_axiom(axiom, &pts, &f).unwrap();
            assert!(
                matches!(r.outcome, Outcome::Passed | Outcome::Vacuous),
                "{axiom} {:?} on {qs:?}",
                r.outcome
            );
        }
    }
}

#[test]
fn reports_replay_from_seed() {
    let f = Fuel::default();
    for &axiom in AxiomId::ALL {
        for i in 0..5 {
            let seed = instance_seed(42, axiom, i);
            let a = replay(axiom, seed, &f);
            let b = check_axiom(axiom, &generate_instance(axiom, seed), &f).unwrap();
            assert_eq!(a.seed, seed);
            assert_eq!(a.outcome, b.outcome);
            assert_eq!(serde_json::to_string(&a.instance).unwrap(), serde_json::to_string(&b.instance).unwrap());
        }
    }
}

#[test]
fn report_does_not_depend_on_thread_count() {
    let f = Fuel::default();
    let axioms = [AxiomId::U10, AxiomId::E25, AxiomId::C4, AxiomId::SteinerLehmus];
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| run_suite(&axioms, 100, 3, &f).unwrap());
    let many = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap()
        .install(|| run_suite(&axioms, 100, 3, &f).unwrap());
    assert_eq!(single, many);
    assert_ne!(run_suite(&axioms, 100, 4, &f).unwrap().axioms[0].passed, 0);
}

#[test]
fn report_json_shape() {
    let report = run_suite(&[AxiomId::U6], 10, 1, &Fuel::default()).unwrap();
    let v = serde_json::to_value(&report).unwrap();
    let entry = &v["axioms"][0];
    for key in ["axiom", "passed", "failed", "vacuous", "unknown", "failing_seeds"] {
        assert!(entry.get(key).is_some(), "{key}");
    }
    assert_eq!(entry["axiom"], "U6");
}

#[test]
fn group_constants_partition_the_statements() {
    let mut all: Vec<AxiomId> = AxiomId::UNIVERSAL.to_vec();
    all.extend(AxiomId::CONSTRUCTION);
    all.extend(AxiomId::AUXILIARY);
    all.extend([AxiomId::ThmCollinearCases, AxiomId::LemParallelogram, AxiomId::SteinerLehmus]);
    all.sort();
    let mut expected = AxiomId::ALL.to_vec();
    expected.sort();
    assert_eq!(all, expected);
}
