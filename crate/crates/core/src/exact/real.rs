use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::{search_witness, ArithError, Fuel, Rational, WitnessIndex};
use crate::verdict::{Verdict, Witness};

type Approximant = dyn Fn(&BigInt) -> BigInt + Send + Sync;

/// A constructive real given by a regular integer sequence.
///
/// The approximant `x(n)` satisfies `|x(n) - n·v| <= 2` for the represented
/// value `v`, hence `|i·x(j) - j·x(i)| <= 2(i + j)` for all `i, j >= 1`.
/// Every constructor in this module upholds that bound; [`Real::from_fn`]
/// trusts the caller.
///
/// Cloning is cheap and clones share the approximant cache.
#[derive(Clone)]
pub struct Real(Arc<Inner>);

struct Inner {
    approximant: Box<Approximant>,
    memo: Mutex<HashMap<BigInt, BigInt>>,
}

impl Real {
    /// Wraps a raw approximant. The caller is responsible for regularity.
    pub fn from_fn(f: impl Fn(&BigInt) -> BigInt + Send + Sync + 'static) -> Self {
        Real(Arc::new(Inner {
            approximant: Box::new(f),
            memo: Mutex::new(HashMap::new()),
        }))
    }

    /// Builds a real from rational approximations `f(k)` with `|f(k) - v| <= 1/k`.
    ///
    /// `x(n) = round(n · f(2n))` is then within `1/2 + 1/2` of `n·v`.
    pub fn from_approximator(f: impl Fn(&BigInt) -> Rational + Send + Sync + 'static) -> Self {
        Real::from_fn(move |n| {
            let q = f(&(n * 2u32));
            (Rational::from_integer(n.clone()) * q).round_half_away()
        })
    }

    pub fn from_rational(q: &Rational) -> Self {
        let q = q.clone();
        Real::from_fn(move |n| (Rational::from_integer(n.clone()) * &q).round_half_away())
    }

    pub fn from_integer(n: i64) -> Self {
        Real::from_rational(&Rational::from_integer(n))
    }

    pub fn zero() -> Self {
        Real::from_integer(0)
    }

    /// The `n`th approximant. Panics if `n` is zero.
    pub fn at(&self, n: u64) -> BigInt {
        self.at_big(&BigInt::from(n))
    }

    pub fn at_big(&self, n: &BigInt) -> BigInt {
        assert!(n.is_positive(), "approximant index must be positive");
        if let Some(v) = self.0.memo.lock().expect("memo poisoned").get(n) {
            return v.clone();
        }
        // Computed outside the lock: nested reals may query their own
        // operands, and a racing writer stores the identical integer.
        let v = (self.0.approximant)(n);
        self.0
            .memo
            .lock()
            .expect("memo poisoned")
            .entry(n.clone())
            .or_insert(v)
            .clone()
    }

    /// A rational within `1/k` of the value, taken as `x(2k)/(2k)`.
    pub fn approx(&self, k: u64) -> Rational {
        self.approx_big(&BigInt::from(k.max(1)))
    }

    pub fn approx_big(&self, k: &BigInt) -> Rational {
        let idx = k * 2u32;
        let x = self.at_big(&idx);
        Rational::new(x, idx).expect("positive index")
    }

    /// An integer `B` with `|v| <= B`.
    pub fn magnitude_bound(&self) -> BigInt {
        self.at(1).abs() + 2u32
    }

    /// Multiplicative inverse; searches for a certificate that the value is
    /// apart from zero within `fuel`.
    pub fn recip(&self, fuel: &Fuel) -> Result<Real, ArithError> {
        let a = self.clone();
        let n = match search_witness(fuel.max_index, |n| a.at(n).abs() > BigInt::from(4)) {
            Ok(n) => n,
            Err(_) => return Err(ArithError::NotApart { max_index: fuel.max_index }),
        };
        // |v| >= (|x(n)| - 2)/n
        let lower = Rational::new(self.at(n).abs() - 2u32, n).expect("positive index");
        let a = self.clone();
        Ok(Real::from_approximator(move |k| {
            let k = Rational::from_integer(k.clone());
            let two = Rational::from_integer(2);
            let need1 = &two / &lower;
            let need2 = &(&two * &k) / &lower.square();
            let need = if need1 > need2 { need1 } else { need2 };
            let q = a.approx_big(&need.ceil());
            q.recip().expect("approximation bounded away from zero")
        }))
    }

    /// Square root of a value certified nonnegative by the caller.
    ///
    /// Returns [`ArithError::NegativeInput`] if a probed approximant shows the
    /// value is negative.
    pub fn sqrt_nonneg(&self, fuel: &Fuel) -> Result<Real, ArithError> {
        let mut n = 1u64;
        while n <= fuel.max_index {
            if self.at(n) < BigInt::from(-2) {
                return Err(ArithError::NegativeInput);
            }
            match n.checked_mul(2) {
                Some(next) => n = next,
                None => break,
            }
        }
        let a = self.clone();
        let probe_limit = fuel.max_index.min(1 << 12);
        if let Ok(n) = search_witness(probe_limit, |n| a.at(n) > BigInt::from(4)) {
            // v >= L > 0; |sqrt(q) - sqrt(v)| <= |q - v| / sqrt(L).
            let lower = Rational::new(self.at(n) - 2u32, n).expect("positive index");
            let s = (lower.denom() / lower.numer()) + 1u32;
            let root_lower = Rational::new(1, s).expect("nonzero");
            return Ok(Real::from_approximator(move |k| {
                let eps_inv = (Rational::from_integer(k * 2u32) / root_lower.clone()).ceil();
                let q = a.approx_big(&eps_inv);
                floor_sqrt_scaled(&q, &(k * 2u32))
            }));
        }
        Ok(Real::from_approximator(move |k| {
            // |q - v| <= 1/(4k^2) gives |sqrt(q) - sqrt(v)| <= 1/(2k).
            let q = a.approx_big(&(k * k * 4u32));
            floor_sqrt_scaled(&q, &(k * 2u32))
        }))
    }

    /// Semi-decides `self > other` with the regular-sequence comparison
    /// `x(n) > y(n) + 4`.
    pub fn gt(&self, other: &Real, fuel: &Fuel) -> Verdict {
        real_gt(self, other, fuel)
    }
}

/// `floor(sqrt(max(q,0)) · scale) / scale`, within `1/scale` of `sqrt(max(q,0))`.
fn floor_sqrt_scaled(q: &Rational, scale: &BigInt) -> Rational {
    if !q.is_positive() {
        return Rational::zero();
    }
    let scaled = (q * &Rational::from_integer(scale * scale)).floor();
    Rational::new(scaled.sqrt(), scale.clone()).expect("positive scale")
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real(~{})", self.approx(1 << 20).to_decimal(6))
    }
}

pub fn real_from_rational(q: &Rational) -> Real {
    Real::from_rational(q)
}

pub fn real_add(a: &Real, b: &Real) -> Real {
    let (a, b) = (a.clone(), b.clone());
    Real::from_fn(move |n| {
        let m = n * 4u32;
        let sum = a.at_big(&m) + b.at_big(&m);
        Rational::new(sum, 4).expect("nonzero").round_half_away()
    })
}

pub fn real_neg(a: &Real) -> Real {
    let a = a.clone();
    Real::from_fn(move |n| -a.at_big(n))
}

pub fn real_sub(a: &Real, b: &Real) -> Real {
    real_add(a, &real_neg(b))
}

pub fn real_mul(a: &Real, b: &Real) -> Real {
    let (a, b) = (a.clone(), b.clone());
    let bound_a = a.magnitude_bound();
    let bound_b = b.magnitude_bound();
    Real::from_approximator(move |k| {
        // |ab - a'b'| <= |a||b - b'| + |b'||a - a'|
        let ka = k * 2u32 * (&bound_b + 1u32);
        let kb = k * 2u32 * &bound_a;
        a.approx_big(&ka) * b.approx_big(&kb)
    })
}

pub fn real_sqrt_nonneg(a: &Real, fuel: &Fuel) -> Result<Real, ArithError> {
    a.sqrt_nonneg(fuel)
}

/// A rational within `1/k` of `a`.
pub fn approx(a: &Real, k: u64) -> Rational {
    a.approx(k)
}

/// `a > b` iff some `n` has `a(n) > b(n) + 4`.
///
/// `Holds` carries the least witness among the probed indices; otherwise
/// `Unknown`. Never `Fails`: strict order on reals is only semi-decidable.
/// Soundness: `a(n) - b(n) >= 5` gives `a - b >= (a(n) - b(n) - 4)/n >= 1/n`.
pub fn real_gt(a: &Real, b: &Real, fuel: &Fuel) -> Verdict {
    let four = BigInt::from(4);
    match search_witness(fuel.max_index, |n| a.at(n) > b.at(n) + &four) {
        Ok(n) => Verdict::Holds(Witness::Index(WitnessIndex(n))),
        Err(spent) => Verdict::Unknown { fuel_spent: spent },
    }
}

/// Re-checks the defining inequality of a `>` witness.
pub fn verify_gt_witness(a: &Real, b: &Real, w: WitnessIndex) -> bool {
    w.0 >= 1 && a.at(w.0) > b.at(w.0) + 4u32
}

/// Which side of a cotransitivity split was certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cotrans {
    /// `a > z` with this witness.
    Left(WitnessIndex),
    /// `z > b` with this witness.
    Right(WitnessIndex),
}

/// Given a witness for `a > b`, decides `a > z` or `z > b` for any `z`.
///
/// At index `m` with `m(a - b) >= 13`, `a(m) - b(m) >= 9`, so one of the two
/// gaps `a(m) - z(m)` and `z(m) - b(m)` is at least 5.
pub fn real_cotrans(a: &Real, b: &Real, z: &Real, w: WitnessIndex) -> Result<Cotrans, ArithError> {
    if !verify_gt_witness(a, b, w) {
        return Err(ArithError::InvalidWitness);
    }
    let n = w.0;
    let d = a.at(n) - b.at(n);
    // a - b >= (d - 4)/n
    let slack = d - 4u32;
    let factor = BigInt::from(13u32).div_ceil(&slack).max(BigInt::from(2));
    let m = factor * n;
    let m: u64 = u64::try_from(&m).map_err(|_| ArithError::IndexOverflow)?;
    let left_gap = a.at(m) - z.at(m);
    let right_gap = z.at(m) - b.at(m);
    let (side, gap) = if left_gap >= right_gap {
        (Cotrans::Left(WitnessIndex(m)), left_gap)
    } else {
        (Cotrans::Right(WitnessIndex(m)), right_gap)
    };
    if gap > BigInt::from(4) {
        Ok(side)
    } else {
        Err(ArithError::InvalidWitness)
    }
}

impl Add for &Real {
    type Output = Real;
    fn add(self, rhs: &Real) -> Real {
        real_add(self, rhs)
    }
}

impl Sub for &Real {
    type Output = Real;
    fn sub(self, rhs: &Real) -> Real {
        real_sub(self, rhs)
    }
}

impl Mul for &Real {
    type Output = Real;
    fn mul(self, rhs: &Real) -> Real {
        real_mul(self, rhs)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        real_neg(self)
    }
}

impl Add for Real {
    type Output = Real;
    fn add(self, rhs: Real) -> Real {
        real_add(&self, &rhs)
    }
}

impl Sub for Real {
    type Output = Real;
    fn sub(self, rhs: Real) -> Real {
        real_sub(&self, &rhs)
    }
}

impl Mul for Real {
    type Output = Real;
    fn mul(self, rhs: Real) -> Real {
        real_mul(&self, &rhs)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        real_neg(&self)
    }
}

impl From<&Rational> for Real {
    fn from(q: &Rational) -> Real {
        Real::from_rational(q)
    }
}

impl From<Rational> for Real {
    fn from(q: Rational) -> Real {
        Real::from_rational(&q)
    }
}

/// `true` iff `|i·x(j) - j·x(i)| <= 2(i + j)` for all sampled pairs.
pub fn is_regular_on(a: &Real, indices: &[u64]) -> bool {
    indices.iter().all(|&i| {
        indices.iter().all(|&j| {
            let lhs = (BigInt::from(i) * a.at(j) - BigInt::from(j) * a.at(i)).abs();
            lhs <= BigInt::from(2 * (i + j))
        })
    })
}
