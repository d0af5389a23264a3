use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::exact::{real_gt, ArithError, Fuel, Rational, Real, Surd};
use crate::verdict::Verdict;

/// A coordinate-level number: exact when it stays inside finite surd sums,
/// otherwise a regular-sequence real.
#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(Surd),
    Approx(Real),
}

impl Scalar {
    pub fn rational(q: Rational) -> Self {
        Scalar::Exact(Surd::from_rational(q))
    }

    pub fn int(n: i64) -> Self {
        Scalar::Exact(Surd::from_integer(n))
    }

    pub fn to_real(&self) -> Real {
        match self {
            Scalar::Exact(s) => s.to_real(),
            Scalar::Approx(r) => r.clone(),
        }
    }

    pub fn as_exact(&self) -> Option<&Surd> {
        match self {
            Scalar::Exact(s) => Some(s),
            Scalar::Approx(_) => None,
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a + b),
            _ => Scalar::Approx(&self.to_real() + &o.to_real()),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a - b),
            _ => Scalar::Approx(&self.to_real() - &o.to_real()),
        }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a * b),
            _ => Scalar::Approx(&self.to_real() * &o.to_real()),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Exact(a) => Scalar::Exact(-a),
            Scalar::Approx(r) => Scalar::Approx(-r),
        }
    }

    pub fn scale(&self, q: &Rational) -> Scalar {
        match self {
            Scalar::Exact(a) => Scalar::Exact(a.scale(q)),
            Scalar::Approx(r) => Scalar::Approx(r * &Real::from_rational(q)),
        }
    }

    /// Division; falls back to reals when the exact reciprocal is unavailable.
    pub fn div(&self, o: &Scalar, fuel: &Fuel) -> Result<Scalar, ArithError> {
        if let Scalar::Exact(b) = o {
            if b.is_zero() {
                return Err(ArithError::DivisionByZero);
            }
            if let (Scalar::Exact(a), Some(inv)) = (self, b.recip()) {
                return Ok(Scalar::Exact(a * &inv));
            }
        }
        let inv = o.to_real().recip(fuel)?;
        Ok(Scalar::Approx(&self.to_real() * &inv))
    }

    /// Square root of a nonnegative scalar.
    pub fn sqrt(&self, fuel: &Fuel) -> Result<Scalar, ArithError> {
        if let Scalar::Exact(s) = self {
            if s.is_negative() {
                return Err(ArithError::NegativeInput);
            }
            if let Some(r) = s.sqrt() {
                return Ok(Scalar::Exact(r));
            }
        }
        Ok(Scalar::Approx(self.to_real().sqrt_nonneg(fuel)?))
    }

    /// Three-valued `self > 0`.
    pub fn positive(&self, fuel: &Fuel) -> Verdict {
        match self {
            Scalar::Exact(s) => Verdict::exact(s.is_positive()),
            Scalar::Approx(r) => real_gt(r, &Real::zero(), fuel),
        }
    }

    /// Three-valued `self = 0`, decided as `¬(self > 0 ∨ self < 0)`.
    pub fn zero(&self, fuel: &Fuel) -> Verdict {
        self.positive(fuel).or(|| self.neg().positive(fuel)).not()
    }

    pub fn approx(&self, k: u64) -> Rational {
        match self {
            Scalar::Exact(s) => s.approx(k),
            Scalar::Approx(r) => r.approx(k),
        }
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::rational(q)
    }
}

impl From<Surd> for Scalar {
    fn from(s: Surd) -> Self {
        Scalar::Exact(s)
    }
}

impl From<Real> for Scalar {
    fn from(r: Real) -> Self {
        Scalar::Approx(r)
    }
}

/// A point of the real plane.
///
/// Coordinates are regular-sequence reals. When they are known exactly as
/// surd sums (rational inputs and ruler-and-compass constructions on them)
/// the exact form is kept alongside, and relation checks decide exactly.
#[derive(Clone)]
pub struct Point {
    exact: Option<Arc<(Surd, Surd)>>,
    reals: OnceLock<(Real, Real)>,
}

impl Point {
    pub fn rational(x: Rational, y: Rational) -> Point {
        Point::from_surds(Surd::from_rational(x), Surd::from_rational(y))
    }

    pub fn int(x: i64, y: i64) -> Point {
        Point::rational(Rational::from_integer(x), Rational::from_integer(y))
    }

    /// Rational point from `(p/q, r/s)` pairs; panics on a zero denominator.
    pub fn frac(x: (i64, i64), y: (i64, i64)) -> Point {
        Point::rational(
            Rational::new(x.0, x.1).expect("nonzero denominator"),
            Rational::new(y.0, y.1).expect("nonzero denominator"),
        )
    }

    pub fn from_surds(x: Surd, y: Surd) -> Point {
        Point {
            exact: Some(Arc::new((x, y))),
            reals: OnceLock::new(),
        }
    }

    pub fn from_reals(x: Real, y: Real) -> Point {
        let reals = OnceLock::new();
        let _ = reals.set((x, y));
        Point { exact: None, reals }
    }

    pub fn from_scalars(x: Scalar, y: Scalar) -> Point {
        match (x, y) {
            (Scalar::Exact(x), Scalar::Exact(y)) => Point::from_surds(x, y),
            (x, y) => Point::from_reals(x.to_real(), y.to_real()),
        }
    }

    fn reals(&self) -> &(Real, Real) {
        self.reals.get_or_init(|| {
            let (x, y) = &**self.exact.as_ref().expect("point without coordinates");
            (x.to_real(), y.to_real())
        })
    }

    pub fn x(&self) -> &Real {
        &self.reals().0
    }

    pub fn y(&self) -> &Real {
        &self.reals().1
    }

    pub fn exact(&self) -> Option<(&Surd, &Surd)> {
        self.exact.as_ref().map(|e| (&e.0, &e.1))
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    /// Both coordinates as rationals, when they are.
    pub fn rational_hint(&self) -> Option<(Rational, Rational)> {
        let (x, y) = self.exact()?;
        Some((x.as_rational()?, y.as_rational()?))
    }

    pub fn coords(&self) -> (Scalar, Scalar) {
        match self.exact() {
            Some((x, y)) => (Scalar::Exact(x.clone()), Scalar::Exact(y.clone())),
            None => {
                let (x, y) = self.reals();
                (Scalar::Approx(x.clone()), Scalar::Approx(y.clone()))
            }
        }
    }

    /// Coordinates within `1/k`.
    pub fn approx(&self, k: u64) -> (Rational, Rational) {
        match self.exact() {
            Some((x, y)) => (x.approx(k), y.approx(k)),
            None => (self.x().approx(k), self.y().approx(k)),
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        let (x, y) = self.approx(1 << 40);
        (x.to_f64(), y.to_f64())
    }

    /// Structural equality of exact coordinates; `false` unless both are exact.
    pub fn exact_eq(&self, other: &Point) -> bool {
        match (self.exact(), other.exact()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some((x, y)) => write!(f, "({x}, {y})"),
            None => {
                let (x, y) = self.approx(1_000_000);
                write!(f, "(~{}, ~{})", x.to_decimal(6), y.to_decimal(6))
            }
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Serializes as `{"x": .., "y": .., "approx": [..]}`; exact coordinates are
/// written symbolically, approximations with 12 decimal places.
impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (ax, ay) = self.approx(1_000_000_000_000);
        let approx = [ax.to_decimal(12), ay.to_decimal(12)];
        let mut m = serializer.serialize_map(None)?;
        if let Some((x, y)) = self.exact() {
            m.serialize_entry("x", x)?;
            m.serialize_entry("y", y)?;
        }
        m.serialize_entry("approx", &approx)?;
        m.end()
    }
}

/// An ordered pair of points; null segments are allowed.
#[derive(Clone, Debug)]
pub struct Segment {
    pub first: Point,
    pub second: Point,
}

impl Segment {
    pub fn new(first: Point, second: Point) -> Self {
        Segment { first, second }
    }
}

/// The angle `arm1 – vertex – arm2`.
#[derive(Clone, Debug)]
pub struct AngleTriple {
    pub arm1: Point,
    pub vertex: Point,
    pub arm2: Point,
}

impl AngleTriple {
    pub fn new(arm1: Point, vertex: Point, arm2: Point) -> Self {
        AngleTriple { arm1, vertex, arm2 }
    }

    pub fn points(&self) -> [&Point; 3] {
        [&self.arm1, &self.vertex, &self.arm2]
    }
}

/// Planar vector helpers over [`Scalar`].
pub(crate) mod vec2 {
    use super::{Point, Scalar};

    pub type V = (Scalar, Scalar);

    pub fn of(p: &Point) -> V {
        p.coords()
    }

    pub fn sub(a: &V, b: &V) -> V {
        (a.0.sub(&b.0), a.1.sub(&b.1))
    }

    pub fn add(a: &V, b: &V) -> V {
        (a.0.add(&b.0), a.1.add(&b.1))
    }

    pub fn mul(a: &V, s: &Scalar) -> V {
        (a.0.mul(s), a.1.mul(s))
    }

    pub fn dot(a: &V, b: &V) -> Scalar {
        a.0.mul(&b.0).add(&a.1.mul(&b.1))
    }

    pub fn cross(a: &V, b: &V) -> Scalar {
        a.0.mul(&b.1).sub(&a.1.mul(&b.0))
    }

    /// Rotation by +90°.
    pub fn perp(a: &V) -> V {
        (a.1.neg(), a.0.clone())
    }

    pub fn norm_sq(a: &V) -> Scalar {
        dot(a, a)
    }

    pub fn point(v: V) -> Point {
        Point::from_scalars(v.0, v.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_points_keep_hints() {
        let p = Point::frac((1, 3), (2, 7));
        let (x, y) = p.rational_hint().unwrap();
        assert_eq!(x.to_string(), "1/3");
        assert_eq!(y.to_string(), "2/7");
        assert!((p.x().approx(1000) - x).abs() <= Rational::new(1, 1000).unwrap());
    }

    #[test]
    fn real_points_have_no_hint() {
        let p = Point::from_reals(Real::from_integer(1), Real::from_integer(2));
        assert!(p.rational_hint().is_none());
        assert!(!p.is_exact());
    }

    #[test]
    fn scalar_division_prefers_exact() {
        let fuel = Fuel::default();
        let two = Scalar::int(2);
        let root = Scalar::Exact(Surd::sqrt_of_rational(&Rational::from_integer(2)).unwrap());
        match two.div(&root, &fuel).unwrap() {
            Scalar::Exact(s) => assert_eq!(s, Surd::sqrt_of_rational(&Rational::from_integer(2)).unwrap()),
            Scalar::Approx(_) => panic!("expected exact quotient"),
        }
        assert!(two.div(&Scalar::int(0), &fuel).is_err());
    }
}
