//! Property-based replay of the axioms and auxiliary theorems in the
//! exact-rational model.
//!
//! Each [`AxiomId`] pairs a hypothesis-satisfying generator with a checker
//! that evaluates the hypotheses and, when they hold, the conclusion.
//! Instances whose hypotheses fail are reported as vacuous, never as passes.

mod check;
mod gen;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exact::Fuel;
use crate::kernel::Point;
use crate::verdict::Verdict;

pub use check::sl_sign_law;
pub use gen::{generate_instance, generate_instance_with, GenConfig};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("{axiom} takes {expected} points, got {got}")]
    ArityMismatch { axiom: AxiomId, expected: usize, got: usize },
    #[error("unknown axiom {0:?}")]
    UnknownAxiom(String),
    #[error("sample count must be at least 1")]
    NoSamples,
}

macro_rules! axioms {
    ($($id:ident => $name:literal, $arity:literal;)*) => {
        /// Axioms, the collinear case split, and the auxiliary theorems.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum AxiomId {
            $($id,)*
        }

        impl AxiomId {
            pub const ALL: &'static [AxiomId] = &[$(AxiomId::$id,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(AxiomId::$id => $name,)*
                }
            }

            /// Number of points in an instance.
            pub fn arity(self) -> usize {
                match self {
                    $(AxiomId::$id => $arity,)*
                }
            }
        }
    };
}

axioms! {
    U1 => "U1", 3;
    U2 => "U2", 4;
    U3 => "U3", 3;
    U4 => "U4", 6;
    U5 => "U5", 6;
    U6 => "U6", 3;
    U7 => "U7", 3;
    U8 => "U8", 3;
    U9 => "U9", 4;
    U10 => "U10", 8;
    U11 => "U11", 5;
    U12 => "U12", 5;
    U13 => "U13", 4;
    C1 => "C1", 3;
    C2 => "C2", 4;
    C3 => "C3", 0;
    C4 => "C4", 4;
    C5 => "C5", 6;
    ThmCollinearCases => "ThmCollinearCases", 3;
    E4 => "E4", 6;
    E5 => "E5", 5;
    E6 => "E6", 3;
    E10 => "E10", 2;
    E15 => "E15", 5;
    E18 => "E18", 3;
    E25 => "E25", 6;
    E27 => "E27", 6;
    GeoExtend => "GeoExtend", 4;
    IntersectionUnicity => "IntersectionUnicity", 6;
    LeftConvexLemma => "LeftConvexLemma", 4;
    GeoLeftOut => "GeoLeftOut", 4;
    StrictBetweenLeftRight => "StrictBetweenLeftRight", 5;
    OuterPasch => "OuterPasch", 5;
    AngleSumLt4 => "AngleSumLt4", 18;
    LemParallelogram => "LemParallelogram", 5;
    SteinerLehmus => "SteinerLehmus", 3;
}

impl AxiomId {
    pub const UNIVERSAL: &'static [AxiomId] = &[
        AxiomId::U1,
        AxiomId::U2,
        AxiomId::U3,
        AxiomId::U4,
        AxiomId::U5,
        AxiomId::U6,
        AxiomId::U7,
        AxiomId::U8,
        AxiomId::U9,
        AxiomId::U10,
        AxiomId::U11,
        AxiomId::U12,
        AxiomId::U13,
    ];

    pub const CONSTRUCTION: &'static [AxiomId] =
        &[AxiomId::C1, AxiomId::C2, AxiomId::C3, AxiomId::C4, AxiomId::C5];

    /// The auxiliary propositions used on the way to Steiner-Lehmus.
    pub const AUXILIARY: &'static [AxiomId] = &[
        AxiomId::E4,
        AxiomId::E5,
        AxiomId::E6,
        AxiomId::E10,
        AxiomId::E15,
        AxiomId::E18,
        AxiomId::E25,
        AxiomId::E27,
        AxiomId::GeoExtend,
        AxiomId::IntersectionUnicity,
        AxiomId::LeftConvexLemma,
        AxiomId::GeoLeftOut,
        AxiomId::StrictBetweenLeftRight,
        AxiomId::OuterPasch,
        AxiomId::AngleSumLt4,
    ];
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AxiomId::ALL
            .iter()
            .copied()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| VerifyError::UnknownAxiom(s.to_string()))
    }
}

impl Serialize for AxiomId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Passed,
    Failed,
    Vacuous,
    Unknown,
}

/// The result of checking one instance; replayable from `(axiom, seed)`.
#[derive(Clone, Debug, Serialize)]
pub struct InstanceReport {
    pub axiom: AxiomId,
    pub seed: u64,
    pub instance: Vec<Point>,
    pub hypothesis: Verdict,
    pub conclusion: Option<Verdict>,
    pub outcome: Outcome,
}

impl InstanceReport {
    pub fn hypothesis_satisfied(&self) -> bool {
        self.hypothesis.holds()
    }
}

/// Evaluates `axiom` on `instance`.
pub fn check_axiom(axiom: AxiomId, instance: &[Point], fuel: &Fuel) -> Result<InstanceReport, VerifyError> {
    check_seeded(axiom, instance.to_vec(), 0, fuel)
}

fn check_seeded(axiom: AxiomId, instance: Vec<Point>, seed: u64, fuel: &Fuel) -> Result<InstanceReport, VerifyError> {
    if instance.len() != axiom.arity() {
        return Err(VerifyError::ArityMismatch {
            axiom,
            expected: axiom.arity(),
            got: instance.len(),
        });
    }
    let eval = check::evaluate(axiom, &instance, fuel);
    let outcome = match (&eval.hypothesis, &eval.conclusion) {
        (Verdict::Fails(_), _) => Outcome::Vacuous,
        (Verdict::Holds(_), Some(Verdict::Holds(_))) => Outcome::Passed,
        (Verdict::Holds(_), Some(Verdict::Fails(_))) => Outcome::Failed,
        _ => Outcome::Unknown,
    };
    Ok(InstanceReport {
        axiom,
        seed,
        instance,
        hypothesis: eval.hypothesis,
        conclusion: eval.conclusion,
        outcome,
    })
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of the `index`-th instance of `axiom` in a suite run with `seed`.
pub fn instance_seed(seed: u64, axiom: AxiomId, index: u64) -> u64 {
    let tag = splitmix64(axiom as u64 + 1);
    splitmix64(splitmix64(seed ^ tag).wrapping_add(index))
}

/// Generates and checks the instance with the given seed.
pub fn replay(axiom: AxiomId, seed: u64, fuel: &Fuel) -> InstanceReport {
    check_seeded(axiom, generate_instance(axiom, seed), seed, fuel).expect("generators match arity")
}

/// Per-axiom tallies of a suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomSummary {
    pub axiom: AxiomId,
    pub passed: usize,
    pub failed: usize,
    pub vacuous: usize,
    pub unknown: usize,
    pub failing_seeds: Vec<u64>,
}

impl AxiomSummary {
    pub fn samples(&self) -> usize {
        self.passed + self.failed + self.vacuous + self.unknown
    }

    /// Share of instances whose hypotheses held.
    pub fn non_vacuous_fraction(&self) -> f64 {
        let n = self.samples();
        if n == 0 {
            0.0
        } else {
            (n - self.vacuous) as f64 / n as f64
        }
    }

    /// No failures, no undecided instances, and at least half non-vacuous.
    pub fn ok(&self) -> bool {
        self.failed == 0 && self.unknown == 0 && self.non_vacuous_fraction() >= 0.5
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub samples: usize,
    pub axioms: Vec<AxiomSummary>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.axioms.iter().all(AxiomSummary::ok)
    }
}

/// Checks `samples` generated instances of each axiom, in parallel.
///
/// The report depends only on the arguments: each instance has its own
/// seed and results are collected in input order.
pub fn run_suite(axioms: &[AxiomId], samples: usize, seed: u64, fuel: &Fuel) -> Result<SuiteReport, VerifyError> {
    if samples == 0 {
        return Err(VerifyError::NoSamples);
    }
    let jobs: Vec<(AxiomId, u64)> = axioms
        .iter()
        .flat_map(|&a| (0..samples as u64).map(move |i| (a, instance_seed(seed, a, i))))
        .collect();
    let outcomes: Vec<(AxiomId, u64, Outcome)> = jobs
        .into_par_iter()
        .map(|(a, s)| (a, s, replay(a, s, fuel).outcome))
        .collect();
    let summaries = axioms
        .iter()
        .map(|&axiom| {
            let mut sum = AxiomSummary {
                axiom,
                passed: 0,
                failed: 0,
                vacuous: 0,
                unknown: 0,
                failing_seeds: Vec::new(),
            };
            for (_, s, o) in outcomes.iter().filter(|(a, _, _)| *a == axiom) {
                match o {
                    Outcome::Passed => sum.passed += 1,
                    Outcome::Failed => {
                        sum.failed += 1;
                        sum.failing_seeds.push(*s);
                    }
                    Outcome::Vacuous => sum.vacuous += 1,
                    Outcome::Unknown => {
                        sum.unknown += 1;
                        sum.failing_seeds.push(*s);
                    }
                }
            }
            sum
        })
        .collect();
    Ok(SuiteReport { seed, samples, axioms: summaries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::int(x, y)
    }

    #[test]
    fn worked_examples() {
        let f = Fuel::default();
        let r = check_axiom(AxiomId::U1, &[p(0, 0), p(1, 2), p(3, 4)], &f).unwrap();
        assert_eq!(r.outcome, Outcome::Passed);
        let r = check_axiom(AxiomId::U6, &[p(0, 0), p(1, 0), p(3, 0)], &f).unwrap();
        assert_eq!(r.outcome, Outcome::Passed);
        let r = check_axiom(AxiomId::E15, &[p(1, 0), p(0, 0), p(1, 1), p(-1, 0), p(-1, -1)], &f).unwrap();
        assert_eq!(r.outcome, Outcome::Passed);
    }

    #[test]
    fn vacuous_is_not_a_pass() {
        let f = Fuel::default();
        let r = check_axiom(AxiomId::U7, &[p(0, 0), p(1, 0), p(2, 0)], &f).unwrap();
        assert_eq!(r.outcome, Outcome::Vacuous);
    }

    #[test]
    fn arity_and_samples_are_checked() {
        let f = Fuel::default();
        assert!(matches!(check_axiom(AxiomId::U1, &[p(0, 0)], &f), Err(VerifyError::ArityMismatch { .. })));
        assert_eq!(run_suite(&[AxiomId::U1], 0, 1, &f), Err(VerifyError::NoSamples));
    }

    #[test]
    fn generators_match_arity() {
        for &a in AxiomId::ALL {
            for s in 0..5 {
                assert_eq!(generate_instance(a, s).len(), a.arity(), "{a}");
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for &a in AxiomId::ALL {
            assert_eq!(a.name().parse::<AxiomId>().unwrap(), a);
        }
    }

    #[test]
    fn suite_is_deterministic() {
        let f = Fuel::default();
        let a = run_suite(&[AxiomId::U9, AxiomId::C5], 20, 7, &f).unwrap();
        let b = run_suite(&[AxiomId::U9, AxiomId::C5], 20, 7, &f).unwrap();
        assert_eq!(a, b);
        assert!(a.ok(), "{a:?}");
    }
}
