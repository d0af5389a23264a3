//! Exact arithmetic: rationals, regular-sequence reals, and surd sums.

mod rational;
mod real;
mod surd;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use rational::Rational;
pub use real::{
    approx, is_regular_on, real_add, real_cotrans, real_from_rational, real_gt, real_mul,
    real_neg, real_sqrt_nonneg, real_sub, verify_gt_witness, Cotrans, Real,
};
pub use surd::Surd;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
    #[error("square root of a value certified negative")]
    NegativeInput,
    #[error("witness does not satisfy its defining inequality")]
    InvalidWitness,
    #[error("no apartness from zero found up to index {max_index}")]
    NotApart { max_index: u64 },
    #[error("approximant index overflow")]
    IndexOverflow,
    #[error("fuel bounds must be at least 1")]
    InvalidFuel,
}

/// Index `n` at which `x(n) > y(n) + 4` was observed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WitnessIndex(pub u64);

/// Budget for semi-decision procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fuel {
    /// Largest approximant index a witness search may probe.
    pub max_index: u64,
    /// Binary digits of accuracy for derived quantities shown to users.
    pub precision_bits: u32,
}

impl Fuel {
    pub const DEFAULT_MAX_INDEX: u64 = 1 << 16;
    pub const DEFAULT_PRECISION_BITS: u32 = 40;

    pub fn new(max_index: u64, precision_bits: u32) -> Result<Self, ArithError> {
        if max_index == 0 || precision_bits == 0 {
            return Err(ArithError::InvalidFuel);
        }
        Ok(Fuel { max_index, precision_bits })
    }

    pub fn with_max_index(max_index: u64) -> Self {
        Fuel {
            max_index: max_index.max(1),
            precision_bits: Self::DEFAULT_PRECISION_BITS,
        }
    }
}

impl Default for Fuel {
    fn default() -> Self {
        Fuel {
            max_index: Self::DEFAULT_MAX_INDEX,
            precision_bits: Self::DEFAULT_PRECISION_BITS,
        }
    }
}

/// Searches `1, 2, 4, …` up to `max_index` for an index satisfying `pred`.
///
/// On the first hit at `2^k` the window `(2^(k-1), 2^k]` is refined: a
/// linear scan for narrow windows, otherwise a bisection that only ever
/// moves its upper end to indices where `pred` holds. The result is the least
/// satisfying index among those probed. `Err` carries the last index probed.
///
/// Only powers of two decide success, so raising `max_index` never turns a
/// hit into a miss.
pub(crate) fn search_witness(max_index: u64, pred: impl Fn(u64) -> bool) -> Result<u64, u64> {
    let mut prev = 0u64;
    let mut n = 1u64;
    while n <= max_index {
        if pred(n) {
            if n - prev <= 64 {
                return Ok((prev + 1..=n).find(|&i| pred(i)).unwrap_or(n));
            }
            let (mut lo, mut hi) = (prev, n);
            while hi - lo > 1 {
                let mid = lo + (hi - lo) / 2;
                if pred(mid) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            return Ok(hi);
        }
        prev = n;
        n = match n.checked_mul(2) {
            Some(next) => next,
            None => break,
        };
    }
    Err(prev)
}
