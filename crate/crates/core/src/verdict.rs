//! Three-valued outcomes of fuel-bounded relation checks.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::exact::WitnessIndex;
use crate::kernel::Point;

/// Evidence attached to a decided verdict.
#[derive(Clone, Debug)]
pub enum Witness {
    /// Decided by exact arithmetic on surd coordinates.
    Exact,
    /// A `>` witness on approximants.
    Index(WitnessIndex),
    /// Points realizing an existential.
    Points(Vec<Point>),
    /// Evidence for each conjunct or disjunct that contributed.
    All(Vec<Witness>),
}

impl Witness {
    fn merge(self, other: Witness) -> Witness {
        match (self, other) {
            (Witness::Exact, Witness::Exact) => Witness::Exact,
            (Witness::All(mut v), w) => {
                v.push(w);
                Witness::All(v)
            }
            (a, b) => Witness::All(vec![a, b]),
        }
    }

    /// Witness points carried directly or inside a composite.
    pub fn points(&self) -> Vec<Point> {
        match self {
            Witness::Points(p) => p.clone(),
            Witness::All(ws) => ws.iter().flat_map(Witness::points).collect(),
            _ => Vec::new(),
        }
    }
}

/// `Holds` and `Fails` carry evidence that re-verifies; `Unknown` records
/// that the fuel ran out before either side was certified.
#[derive(Clone, Debug)]
pub enum Verdict {
    Holds(Witness),
    Fails(Witness),
    Unknown { fuel_spent: u64 },
}

impl Verdict {
    pub fn exact(b: bool) -> Verdict {
        if b {
            Verdict::Holds(Witness::Exact)
        } else {
            Verdict::Fails(Witness::Exact)
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds(_))
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Holds(_) => "holds",
            Verdict::Fails(_) => "fails",
            Verdict::Unknown { .. } => "unknown",
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds(w) | Verdict::Fails(w) => Some(w),
            Verdict::Unknown { .. } => None,
        }
    }

    /// Negation swaps the decided sides; the evidence refuting `P` proves `¬P`.
    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Verdict {
        match self {
            Verdict::Holds(w) => Verdict::Fails(w),
            Verdict::Fails(w) => Verdict::Holds(w),
            u => u,
        }
    }

    /// Kleene conjunction; `rhs` is skipped once `self` fails.
    pub fn and(self, rhs: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Fails(w) => Verdict::Fails(w),
            Verdict::Holds(w) => match rhs() {
                Verdict::Holds(v) => Verdict::Holds(w.merge(v)),
                other => other,
            },
            Verdict::Unknown { fuel_spent } => match rhs() {
                Verdict::Fails(v) => Verdict::Fails(v),
                Verdict::Unknown { fuel_spent: f } => Verdict::Unknown { fuel_spent: fuel_spent.max(f) },
                Verdict::Holds(_) => Verdict::Unknown { fuel_spent },
            },
        }
    }

    /// Kleene disjunction; `rhs` is skipped once `self` holds.
    pub fn or(self, rhs: impl FnOnce() -> Verdict) -> Verdict {
        self.not().and(|| rhs().not()).not()
    }

    pub fn implies(self, rhs: impl FnOnce() -> Verdict) -> Verdict {
        self.not().or(rhs)
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Witness::Exact => serializer.serialize_str("exact"),
            Witness::Index(w) => {
                let mut m = serializer.serialize_map(Some(1))?;
                m.serialize_entry("index", &w.0)?;
                m.end()
            }
            Witness::Points(p) => {
                let mut m = serializer.serialize_map(Some(1))?;
                m.serialize_entry("points", p)?;
                m.end()
            }
            Witness::All(ws) => {
                let mut m = serializer.serialize_map(Some(1))?;
                m.serialize_entry("all", ws)?;
                m.end()
            }
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(None)?;
        m.serialize_entry("state", self.label())?;
        match self {
            Verdict::Holds(w) | Verdict::Fails(w) => m.serialize_entry("witness", w)?,
            Verdict::Unknown { fuel_spent } => m.serialize_entry("fuel_spent", fuel_spent)?,
        }
        m.end()
    }
}
