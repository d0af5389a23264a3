//! Case analysis for collinear triples.

use serde::Serialize;

use super::relation::{between, col, equiv};
use super::{KernelError, Point};
use crate::exact::Fuel;

/// One disjunct of the weak-betweenness conclusion for collinear `a, b, c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CollinearCase {
    /// `B(abc)`
    Babc,
    /// `B(cab)`
    Bcab,
    /// `B(bca)`
    Bbca,
    /// `a ≡ b`
    EqAB,
    /// `a ≡ c`
    EqAC,
    /// `b ≡ c`
    EqBC,
}

impl CollinearCase {
    pub const ALL: [CollinearCase; 6] = [
        CollinearCase::Babc,
        CollinearCase::Bcab,
        CollinearCase::Bbca,
        CollinearCase::EqAB,
        CollinearCase::EqAC,
        CollinearCase::EqBC,
    ];

    /// Whether this disjunct holds for `a, b, c`.
    pub fn holds_for(self, a: &Point, b: &Point, c: &Point, fuel: &Fuel) -> bool {
        use CollinearCase::*;
        match self {
            Babc => between(a, b, c, fuel).holds(),
            Bcab => between(c, a, b, fuel).holds(),
            Bbca => between(b, c, a, fuel).holds(),
            EqAB => equiv(a, b, fuel).holds(),
            EqAC => equiv(a, c, fuel).holds(),
            EqBC => equiv(b, c, fuel).holds(),
        }
    }
}

/// The first disjunct, in declaration order, that holds for the collinear
/// triple. Only exact inputs are accepted since the split is otherwise not
/// decidable.
pub fn collinear_case(a: &Point, b: &Point, c: &Point) -> Result<CollinearCase, KernelError> {
    if !(a.is_exact() && b.is_exact() && c.is_exact()) {
        return Err(KernelError::IrrationalInput);
    }
    let fuel = Fuel::default();
    if !col(a, b, c, &fuel).holds() {
        return Err(KernelError::NotCollinear);
    }
    CollinearCase::ALL
        .into_iter()
        .find(|k| k.holds_for(a, b, c, &fuel))
        .ok_or(KernelError::NotCollinear)
}
