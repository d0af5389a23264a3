//! Exact finite sums `Σ cᵢ·√rᵢ` with rational `cᵢ` and positive integer `rᵢ`.
//!
//! Radicands are kept pairwise square-independent (no `rᵢ·rⱼ` is a perfect
//! square), so by the linear independence of such square roots over ℚ a sum
//! is zero exactly when it has no terms. Nonzero sums therefore have a sign
//! that interval refinement always finds, which makes comparisons between
//! ruler-and-compass coordinates decidable.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Serialize, Serializer};

use super::{Real, Rational};

const SMALL_PRIMES_UP_TO: u32 = 1000;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Surd {
    /// Sorted by radicand; radicand 1 is the rational part. Coefficients are nonzero.
    terms: Vec<(BigInt, Rational)>,
}

impl Surd {
    pub fn zero() -> Self {
        Surd { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Surd::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        if q.is_zero() {
            Surd::zero()
        } else {
            Surd { terms: vec![(BigInt::one(), q)] }
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Surd::from_rational(Rational::from_integer(n))
    }

    /// `√q` for `q >= 0`; `None` for negative `q`.
    pub fn sqrt_of_rational(q: &Rational) -> Option<Self> {
        if q.is_negative() {
            return None;
        }
        if q.is_zero() {
            return Some(Surd::zero());
        }
        // √(p/d) = √(p·d) / d
        let radicand = q.numer() * q.denom();
        let coeff = Rational::new(1, q.denom().clone()).expect("positive denominator");
        let mut out = Surd::zero();
        out.push_term(radicand, coeff);
        Some(out)
    }

    /// Number of distinct square-root classes (the rational part counts as one).
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &Rational)> {
        self.terms.iter().map(|(r, c)| (r, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(r, c)] if r.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    fn push_term(&mut self, radicand: BigInt, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let (square, free) = split_square(radicand);
        let mut coeff = coeff * Rational::from_integer(square);
        let mut radicand = free;
        // Merge with a term in the same square class, if any.
        for (r, _) in &self.terms {
            if *r == radicand {
                break;
            }
            let prod = r * &radicand;
            let root = prod.sqrt();
            if &root * &root == prod {
                // √radicand = √(r·radicand) / r · √r
                coeff = coeff * Rational::new(root, r.clone()).expect("positive radicand");
                radicand = r.clone();
                break;
            }
        }
        match self.terms.binary_search_by(|(r, _)| r.cmp(&radicand)) {
            Ok(i) => {
                let sum = &self.terms[i].1 + &coeff;
                if sum.is_zero() {
                    self.terms.remove(i);
                } else {
                    self.terms[i].1 = sum;
                }
            }
            Err(i) => self.terms.insert(i, (radicand, coeff)),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Surd::zero();
        }
        Surd {
            terms: self.terms.iter().map(|(r, c)| (r.clone(), c * q)).collect(),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Exact sign: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if let Some(q) = self.as_rational() {
            return q.signum();
        }
        let mut bits = 32u32;
        loop {
            let (lo, hi) = self.enclosure(bits);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            bits *= 2;
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Rational interval containing the value, each root resolved to `2^-bits`.
    fn enclosure(&self, bits: u32) -> (Rational, Rational) {
        let scale = BigInt::one() << bits;
        let scale_sq = &scale * &scale;
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        for (r, c) in &self.terms {
            if r.is_one() {
                lo = lo + c;
                hi = hi + c;
                continue;
            }
            let floor = (r * &scale_sq).sqrt();
            let a = Rational::new(floor.clone(), scale.clone()).expect("nonzero") * c;
            let b = Rational::new(floor + 1u32, scale.clone()).expect("nonzero") * c;
            if c.is_positive() {
                lo = lo + a;
                hi = hi + b;
            } else {
                lo = lo + b;
                hi = hi + a;
            }
        }
        (lo, hi)
    }

    /// A rational within `1/k` of the value.
    pub fn approx_big(&self, k: &BigInt) -> Rational {
        if let Some(q) = self.as_rational() {
            return q;
        }
        let weight: Rational = self
            .terms
            .iter()
            .fold(Rational::zero(), |acc, (_, c)| acc + c.abs());
        let scale = (Rational::from_integer(k.clone()) * weight).ceil() + 1u32;
        let mut sum = Rational::zero();
        for (r, c) in &self.terms {
            let root = if r.is_one() {
                Rational::one()
            } else {
                Rational::new((r * &scale * &scale).sqrt(), scale.clone()).expect("nonzero")
            };
            sum = sum + root * c;
        }
        sum
    }

    pub fn approx(&self, k: u64) -> Rational {
        self.approx_big(&BigInt::from(k.max(1)))
    }

    pub fn to_real(&self) -> Real {
        match self.as_rational() {
            Some(q) => Real::from_rational(&q),
            None => {
                let s = self.clone();
                Real::from_approximator(move |k| s.approx_big(k))
            }
        }
    }

    /// Multiplicative inverse for sums with at most one irrational class.
    ///
    /// `1/(a + b√r) = (a - b√r) / (a² - b²r)`. Wider sums return `None` and
    /// callers fall back to [`Real`] arithmetic.
    pub fn recip(&self) -> Option<Self> {
        match self.terms.as_slice() {
            [] => None,
            [(r, c)] if r.is_one() => Some(Surd::from_rational(c.recip().ok()?)),
            [(r, c)] => {
                // 1/(c√r) = √r / (c·r)
                let q = (c * &Rational::from_integer(r.clone())).recip().ok()?;
                Some(Surd { terms: vec![(r.clone(), q)] })
            }
            [(one, a), (r, b)] if one.is_one() => {
                let norm = a.square() - b.square() * Rational::from_integer(r.clone());
                let inv = norm.recip().ok()?;
                Some(Surd {
                    terms: vec![(one.clone(), a * &inv), (r.clone(), -(b * &inv))],
                })
            }
            _ => None,
        }
    }

    pub fn checked_div(&self, other: &Surd) -> Option<Self> {
        Some(self * &other.recip()?)
    }

    /// `√self` when the result is again a finite surd sum.
    pub fn sqrt(&self) -> Option<Self> {
        let q = self.as_rational()?;
        Surd::sqrt_of_rational(&q)
    }

    pub fn to_f64(&self) -> f64 {
        self.approx(1 << 40).to_f64()
    }
}

/// Splits `n > 0` as `s²·f` with `f` free of small prime squares and not a
/// perfect square.
fn split_square(n: BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.is_positive());
    let root = n.sqrt();
    if &root * &root == n {
        return (root, BigInt::one());
    }
    let mut square = BigInt::one();
    let mut rest = n;
    for p in small_primes() {
        let p = BigInt::from(*p);
        let pp = &p * &p;
        if pp > rest {
            break;
        }
        while rest.is_multiple_of(&pp) {
            rest /= &pp;
            square *= &p;
        }
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        return (square * root, BigInt::one());
    }
    (square, rest)
}

fn small_primes() -> &'static [u32] {
    use std::sync::OnceLock;
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut sieve = vec![true; SMALL_PRIMES_UP_TO as usize + 1];
        let mut out = Vec::new();
        for i in 2..=SMALL_PRIMES_UP_TO as usize {
            if sieve[i] {
                out.push(i as u32);
                let mut j = i * i;
                while j <= SMALL_PRIMES_UP_TO as usize {
                    sieve[j] = false;
                    j += i;
                }
            }
        }
        out
    })
}

impl Add<&Surd> for &Surd {
    type Output = Surd;
    fn add(self, rhs: &Surd) -> Surd {
        let mut out = self.clone();
        for (r, c) in &rhs.terms {
            out.push_term(r.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Surd> for &Surd {
    type Output = Surd;
    fn sub(self, rhs: &Surd) -> Surd {
        let mut out = self.clone();
        for (r, c) in &rhs.terms {
            out.push_term(r.clone(), -c);
        }
        out
    }
}

impl Mul<&Surd> for &Surd {
    type Output = Surd;
    fn mul(self, rhs: &Surd) -> Surd {
        let mut out = Surd::zero();
        for (r1, c1) in &self.terms {
            for (r2, c2) in &rhs.terms {
                // √(r1·r2) = g·√(r1/g · r2/g) with g = gcd(r1, r2)
                let g = r1.gcd(r2);
                let radicand = (r1 / &g) * (r2 / &g);
                out.push_term(radicand, c1 * c2 * Rational::from_integer(g));
            }
        }
        out
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            terms: self.terms.iter().map(|(r, c)| (r.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $method:ident) => {
        impl $tr<Surd> for Surd {
            type Output = Surd;
            fn $method(self, rhs: Surd) -> Surd {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Surd> for Surd {
            type Output = Surd;
            fn $method(self, rhs: &Surd) -> Surd {
                (&self).$method(rhs)
            }
        }
        impl $tr<Surd> for &Surd {
            type Output = Surd;
            fn $method(self, rhs: Surd) -> Surd {
                self.$method(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        -&self
    }
}

impl From<Rational> for Surd {
    fn from(q: Rational) -> Surd {
        Surd::from_rational(q)
    }
}

impl From<&Rational> for Surd {
    fn from(q: &Rational) -> Surd {
        Surd::from_rational(q.clone())
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (r, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = (c.is_negative(), c.abs());
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if r.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "sqrt({r})")?;
            } else {
                write!(f, "{mag}*sqrt({r})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Surd {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d).unwrap()
    }

    fn root(p: i64, d: i64) -> Surd {
        Surd::sqrt_of_rational(&q(p, d)).unwrap()
    }

    #[test]
    fn perfect_squares_fold_to_rationals() {
        assert_eq!(root(9, 4).as_rational(), Some(q(3, 2)));
        assert_eq!(root(8, 1).to_string(), "2*sqrt(2)");
        assert_eq!(root(1, 2).to_string(), "1/2*sqrt(2)");
    }

    #[test]
    fn same_square_class_merges() {
        let s = &root(2, 1) + &root(8, 1);
        assert_eq!(s, root(2, 1).scale(&q(3, 1)));
        assert!((&root(18, 1) - &root(2, 1).scale(&q(3, 1))).is_zero());
        // 1009 is above the trial-division bound.
        let big = &root(1009 * 1009 * 3, 1) - &root(3, 1).scale(&q(1009, 1));
        assert!(big.is_zero());
    }

    #[test]
    fn products_reduce() {
        let p = &root(6, 1) * &root(10, 1);
        assert_eq!(p, root(15, 1).scale(&q(2, 1)));
        let s2 = root(2, 1);
        assert_eq!((&s2 * &s2).as_rational(), Some(q(2, 1)));
    }

    #[test]
    fn signs_are_exact() {
        // √2 + √3 vs √10: 5 + 2√6 < 10 ⇔ 2√6 < 5 ⇔ 24 < 25
        let lhs = &root(2, 1) + &root(3, 1);
        assert_eq!((&lhs - &root(10, 1)).signum(), -1);
        let near = &root(10001, 1) - &Surd::from_integer(100);
        assert_eq!(near.signum(), 1);
        assert_eq!(Surd::zero().signum(), 0);
    }

    #[test]
    fn reciprocal_of_quadratic() {
        let x = &Surd::from_integer(1) + &root(2, 1);
        let inv = x.recip().unwrap();
        assert_eq!((&x * &inv).as_rational(), Some(q(1, 1)));
        let three = &(&root(2, 1) + &root(3, 1)) + &Surd::one();
        assert!(three.recip().is_none());
    }

    #[test]
    fn approximations_are_within_tolerance() {
        let s = &root(2, 1).scale(&q(-7, 3)) + &root(5, 1);
        for k in [1u64, 10, 1000, 1 << 30] {
            let a = s.approx(k);
            let (lo, hi) = s.enclosure(80);
            let tol = q(1, 1) / Rational::from_integer(k as i64);
            assert!(a.clone() >= lo - tol.clone() && a <= hi + tol);
        }
    }
}
