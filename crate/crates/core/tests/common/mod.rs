#![allow(dead_code)]

use apartness::kernel::RelationKind;
use apartness::{Point, Rational};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

pub type Q = BigRational;
pub type P = (Q, Q);

pub fn q(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_point(p: &P) -> Point {
    let conv = |v: &Q| Rational::new(v.numer().clone(), v.denom().clone()).unwrap();
    Point::rational(conv(&p.0), conv(&p.1))
}

fn sub(a: &P, b: &P) -> P {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn cross(u: &P, v: &P) -> Q {
    &u.0 * &v.1 - &u.1 * &v.0
}

pub fn sq(a: &P, b: &P) -> Q {
    let d = sub(b, a);
    &d.0 * &d.0 + &d.1 * &d.1
}

/// `cross(b − a, c − a)`.
pub fn orient(a: &P, b: &P, c: &P) -> Q {
    cross(&sub(b, a), &sub(c, a))
}

/// `Left(a, bc)`: `a` strictly left of the directed line `b → c`.
pub fn left(a: &P, b: &P, c: &P) -> bool {
    orient(b, c, a).is_positive()
}

pub fn gt(a: &P, b: &P, c: &P, d: &P) -> bool {
    sq(a, b) > sq(c, d)
}

fn between(a: &P, b: &P, c: &P) -> bool {
    orient(a, b, c).is_zero() && sq(a, c) >= sq(a, b) && sq(a, c) >= sq(b, c)
}

/// The defining formula of each relation, evaluated over the rationals.
pub fn relation(kind: RelationKind, p: &[P]) -> bool {
    use RelationKind::*;
    match kind {
        PointApart => sq(&p[0], &p[1]).is_positive(),
        LenApart => sq(&p[0], &p[1]) != sq(&p[2], &p[3]),
        GeLen => sq(&p[0], &p[1]) >= sq(&p[2], &p[3]),
        PointSegApart => !orient(&p[0], &p[1], &p[2]).is_zero(),
        Equiv => p[0] == p[1],
        Col => orient(&p[0], &p[1], &p[2]).is_zero(),
        Between => between(&p[0], &p[1], &p[2]),
        StrictBetween => between(&p[0], &p[1], &p[2]) && p[0] != p[1] && p[1] != p[2],
        Cong => sq(&p[0], &p[1]) == sq(&p[2], &p[3]),
        Out => p[0] != p[1] && p[0] != p[2] && (between(&p[0], &p[1], &p[2]) || between(&p[0], &p[2], &p[1])),
        Parallel => p[0] != p[1] && p[2] != p[3] && cross(&sub(&p[1], &p[0]), &sub(&p[3], &p[2])).is_zero(),
    }
}

/// Cosine-free angle comparison: `θ(abc) = θ(xyz)` iff the signs of the
/// dot products agree and `dot₁²·|u₂|²|w₂|² = dot₂²·|u₁|²|w₁|²`.
pub fn angle_cong(abc: [&P; 3], xyz: [&P; 3]) -> Option<bool> {
    let parts = |t: [&P; 3]| {
        let u = sub(t[0], t[1]);
        let w = sub(t[2], t[1]);
        let dot = &u.0 * &w.0 + &u.1 * &w.1;
        let n = (&u.0 * &u.0 + &u.1 * &u.1) * (&w.0 * &w.0 + &w.1 * &w.1);
        (dot, n)
    };
    let (d1, n1) = parts(abc);
    let (d2, n2) = parts(xyz);
    if n1.is_zero() || n2.is_zero() {
        return None;
    }
    Some(d1.signum() == d2.signum() && &d1 * &d1 * &n2 == &d2 * &d2 * &n1)
}

/// `θ(abc) < θ(xyz)`, i.e. `cos θ(abc) > cos θ(xyz)`.
pub fn angle_lt(abc: [&P; 3], xyz: [&P; 3]) -> Option<bool> {
    let parts = |t: [&P; 3]| {
        let u = sub(t[0], t[1]);
        let w = sub(t[2], t[1]);
        let dot = &u.0 * &w.0 + &u.1 * &w.1;
        let n = (&u.0 * &u.0 + &u.1 * &u.1) * (&w.0 * &w.0 + &w.1 * &w.1);
        (dot, n)
    };
    let (d1, n1) = parts(abc);
    let (d2, n2) = parts(xyz);
    if n1.is_zero() || n2.is_zero() {
        return None;
    }
    // Signed squares: cos₁ > cos₂ iff d1|d1|·n2 > d2|d2|·n1.
    let lhs = &d1 * d1.abs() * &n2;
    let rhs = &d2 * d2.abs() * &n1;
    Some(lhs > rhs)
}

fn coord(rng: &mut impl Rng) -> Q {
    let den = [1, 1, 1, 2, 3][rng.gen_range(0..5)];
    q(rng.gen_range(-4..=4), den)
}

/// `n` rational points biased towards coincidences, collinearity and equal
/// lengths so that every relation is exercised both ways.
pub fn tuple(rng: &mut impl Rng, n: usize) -> Vec<P> {
    let mut pts: Vec<P> = Vec::with_capacity(n);
    for _ in 0..n {
        let k = pts.len();
        let p = match rng.gen_range(0..10) {
            0 | 1 if k >= 1 => pts[rng.gen_range(0..k)].clone(),
            2 | 3 if k >= 2 => {
                let a = pts[rng.gen_range(0..k)].clone();
                let b = pts[rng.gen_range(0..k)].clone();
                let t = [q(-1, 1), q(1, 2), q(2, 1), q(1, 3), q(3, 2), q(0, 1)][rng.gen_range(0..6)].clone();
                (&a.0 + &t * (&b.0 - &a.0), &a.1 + &t * (&b.1 - &a.1))
            }
            4 if k >= 1 => {
                let a = &pts[rng.gen_range(0..k)];
                (-a.1.clone(), a.0.clone())
            }
            _ => (coord(rng), coord(rng)),
        };
        pts.push(p);
    }
    pts
}

/// Squared internal bisector from the vertex with adjacent sides `p`, `r`
/// and opposite side `o`: `pr(1 − (o/(p + r))²)`.
fn bisector_sq(p: f64, r: f64, o: f64) -> f64 {
    p * r * (1.0 - (o / (p + r)).powi(2))
}

/// Tabulates `sign(|cx|² − |ay|²)` against `sign(|cb|² − |ab|²)` over
/// random scalene integer triangles in floating point. Returns the bisector
/// sign observed for side sign −1 and +1, or `None` if either side sign
/// maps to more than one bisector sign.
pub fn sl_sign_oracle(rng: &mut impl Rng, samples: usize) -> Option<[i32; 2]> {
    let mut seen: [Option<i32>; 2] = [None, None];
    let mut done = 0;
    while done < samples {
        let v: Vec<(f64, f64)> = (0..3).map(|_| (rng.gen_range(-30..=30) as f64, rng.gen_range(-30..=30) as f64)).collect();
        let (a, b, c) = (v[0], v[1], v[2]);
        let d = |p: (f64, f64), q: (f64, f64)| ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt();
        let area = ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).abs();
        let (ab, bc, ca) = (d(a, b), d(b, c), d(c, a));
        if area < 1.0 || (ab - bc).abs() < 1e-6 {
            continue;
        }
        let cx = bisector_sq(ca, bc, ab);
        let ay = bisector_sq(ab, ca, bc);
        if (cx - ay).abs() < 1e-9 * cx.max(ay) {
            continue;
        }
        let side = if bc > ab { 1 } else { 0 };
        let bis = if cx > ay { 1 } else { -1 };
        match seen[side] {
            None => seen[side] = Some(bis),
            Some(s) if s != bis => return None,
            _ => {}
        }
        done += 1;
    }
    Some([seen[0]?, seen[1]?])
}
