//! Angle congruence, order and sums.
//!
//! Angles are compared through their cosines `dot/√(|u|²|w|²)`. With the
//! lay-off radii `L₁ = |ba| + |yx|` and `L₂ = |bc| + |yz|` shared by both
//! angles, the chord `a′c′` satisfies `|a′c′|² = L₁² + L₂² − 2L₁L₂·cos θ`,
//! so equal (smaller) cosines are exactly equal (longer) chords and the
//! decision matches the witness configuration returned alongside it.

use std::cmp::Ordering;

use super::point::vec2::{self, V};
use super::relation::{apart, out, sq_dist};
use super::{AngleTriple, KernelError, Point, Scalar};
use crate::exact::{Fuel, Real, Surd};
use crate::verdict::{Verdict, Witness};

/// `num / √den` with `den > 0`.
#[derive(Clone, Debug)]
struct RootRatio {
    num: Scalar,
    den: Scalar,
}

impl RootRatio {
    fn to_real(&self, fuel: &Fuel) -> Option<Real> {
        let root = self.den.sqrt(fuel).ok()?;
        Some(self.num.div(&root, fuel).ok()?.to_real())
    }
}

/// Exact comparison of `u₁/√n₁` with `u₂/√n₂` for positive `n₁, n₂`.
fn cmp_over_root(u1: &Surd, n1: &Surd, u2: &Surd, n2: &Surd) -> Ordering {
    let (s1, s2) = (u1.signum(), u2.signum());
    if s1 != s2 {
        return s1.cmp(&s2);
    }
    if s1 == 0 {
        return Ordering::Equal;
    }
    let diff = (u1.square() * n2 - u2.square() * n1).signum().cmp(&0);
    if s1 > 0 {
        diff
    } else {
        diff.reverse()
    }
}

fn ratio_gt(a: &RootRatio, b: &RootRatio, fuel: &Fuel) -> Verdict {
    if let (Scalar::Exact(u1), Scalar::Exact(n1), Scalar::Exact(u2), Scalar::Exact(n2)) =
        (&a.num, &a.den, &b.num, &b.den)
    {
        return Verdict::exact(cmp_over_root(u1, n1, u2, n2) == Ordering::Greater);
    }
    match (a.to_real(fuel), b.to_real(fuel)) {
        (Some(x), Some(y)) => x.gt(&y, fuel),
        _ => Verdict::Unknown { fuel_spent: fuel.max_index },
    }
}

fn ratio_eq(a: &RootRatio, b: &RootRatio, fuel: &Fuel) -> Verdict {
    ratio_gt(a, b, fuel).or(|| ratio_gt(b, a, fuel)).not()
}

/// Arm vectors and the invariants of the angle they span.
struct Spread {
    dot: Scalar,
    cross: Scalar,
    norm: Scalar,
}

impl Spread {
    fn of(t: &AngleTriple) -> Spread {
        let v = vec2::of(&t.vertex);
        let from = vec2::sub(&vec2::of(&t.arm1), &v);
        let to = vec2::sub(&vec2::of(&t.arm2), &v);
        let dot = vec2::dot(&from, &to);
        let cross = vec2::cross(&from, &to);
        let norm = vec2::norm_sq(&from).mul(&vec2::norm_sq(&to));
        Spread { dot, cross, norm }
    }

    fn cos(&self) -> RootRatio {
        RootRatio { num: self.dot.clone(), den: self.norm.clone() }
    }

    fn abs_cross(&self, fuel: &Fuel) -> Scalar {
        match &self.cross {
            Scalar::Exact(s) => Scalar::Exact(s.abs()),
            Scalar::Approx(_) => {
                // |c| = √(c²) keeps the value regular without a sign decision.
                let sq = self.cross.mul(&self.cross);
                sq.sqrt(fuel).unwrap_or(sq)
            }
        }
    }

    /// Not the zero angle: `cross ≠ 0 ∨ dot < 0`.
    fn nonzero(&self, fuel: &Fuel) -> Verdict {
        self.cross
            .positive(fuel)
            .or(|| self.cross.neg().positive(fuel))
            .or(|| self.dot.neg().positive(fuel))
    }
}

/// Checks `arm1 # vertex ∧ vertex # arm2`.
fn check_arms(t: &AngleTriple, fuel: &Fuel) -> Result<Option<Verdict>, KernelError> {
    match apart(&t.arm1, &t.vertex, fuel).and(|| apart(&t.vertex, &t.arm2, fuel)) {
        Verdict::Holds(_) => Ok(None),
        Verdict::Fails(_) => Err(KernelError::DegenerateAngle),
        unknown => Ok(Some(unknown)),
    }
}

fn check_all_arms(angles: &[&AngleTriple], fuel: &Fuel) -> Result<Option<Verdict>, KernelError> {
    for t in angles {
        if let Some(v) = check_arms(t, fuel)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// `vertex + (arm − vertex)·(1 + √(other_sq/own_sq))`, at distance `|arm| + √other_sq`.
fn lay_off(vertex: &Point, arm: &Point, own_sq: &Scalar, other_sq: &Scalar, fuel: &Fuel) -> Option<Point> {
    let v = vec2::of(vertex);
    let dir = vec2::sub(&vec2::of(arm), &v);
    let factor = Scalar::int(1).add(&other_sq.div(own_sq, fuel).ok()?.sqrt(fuel).ok()?);
    Some(vec2::point(vec2::add(&v, &vec2::mul(&dir, &factor))))
}

/// The point at distance `√len_sq` from `vertex` along the ray to `arm`.
fn along(vertex: &Point, arm: &Point, len_sq: &Scalar, fuel: &Fuel) -> Option<V> {
    let v = vec2::of(vertex);
    let dir = vec2::sub(&vec2::of(arm), &v);
    let factor = len_sq.div(&vec2::norm_sq(&dir), fuel).ok()?.sqrt(fuel).ok()?;
    Some(vec2::add(&v, &vec2::mul(&dir, &factor)))
}

/// `origin + from` rotated by the angle of `spread` toward `toward`
/// (counter-clockwise when `toward` lies on the line of `from`).
fn rotate_toward(origin: &V, from: &V, spread: &Spread, toward: &V, fuel: &Fuel) -> Option<V> {
    let root = spread.norm.sqrt(fuel).ok()?;
    let cos = spread.dot.div(&root, fuel).ok()?;
    let sin = spread.abs_cross(fuel).div(&root, fuel).ok()?;
    let side = vec2::cross(from, &vec2::sub(toward, origin));
    let clockwise = side.neg().positive(fuel).holds();
    let sin = if clockwise { sin.neg() } else { sin };
    let turned = vec2::add(&vec2::mul(from, &cos), &vec2::mul(&vec2::perp(from), &sin));
    Some(vec2::add(origin, &turned))
}

/// Where the ray `origin → through` meets the line `p q`.
fn ray_meets(origin: &V, through: &V, p: &V, q: &V, fuel: &Fuel) -> Option<V> {
    let w = vec2::sub(through, origin);
    let edge = vec2::sub(q, p);
    let lambda = vec2::cross(&edge, &vec2::sub(p, origin))
        .div(&vec2::cross(&edge, &w), fuel)
        .ok()?;
    Some(vec2::add(origin, &vec2::mul(&w, &lambda)))
}

fn with_points(v: Verdict, points: Option<Vec<Point>>) -> Verdict {
    match (v, points) {
        (Verdict::Holds(w), Some(p)) => Verdict::Holds(Witness::All(vec![w, Witness::Points(p)])),
        (v, _) => v,
    }
}

/// `abc ≅ xyz`. `Holds` carries the lay-off points `[a′, c′, x′, z′]`.
pub fn angle_cong(abc: &AngleTriple, xyz: &AngleTriple, fuel: &Fuel) -> Result<Verdict, KernelError> {
    if let Some(v) = check_all_arms(&[abc, xyz], fuel)? {
        return Ok(v);
    }
    let verdict = ratio_eq(&Spread::of(abc).cos(), &Spread::of(xyz).cos(), fuel);
    let points = if verdict.holds() { cong_layoff(abc, xyz, fuel) } else { None };
    Ok(with_points(verdict, points))
}

fn cong_layoff(abc: &AngleTriple, xyz: &AngleTriple, fuel: &Fuel) -> Option<Vec<Point>> {
    let ba = sq_dist(&abc.vertex, &abc.arm1);
    let bc = sq_dist(&abc.vertex, &abc.arm2);
    let yx = sq_dist(&xyz.vertex, &xyz.arm1);
    let yz = sq_dist(&xyz.vertex, &xyz.arm2);
    Some(vec![
        lay_off(&abc.vertex, &abc.arm1, &ba, &yx, fuel)?,
        lay_off(&abc.vertex, &abc.arm2, &bc, &yz, fuel)?,
        lay_off(&xyz.vertex, &xyz.arm1, &yx, &ba, fuel)?,
        lay_off(&xyz.vertex, &xyz.arm2, &yz, &bc, fuel)?,
    ])
}

/// `abc < xyz`. `Holds` carries `[p, p′, x′, z′]`: `p` transports `abc` onto
/// the ray `y→x` toward `z`, and `p′` is where `y→p` crosses `x′z′`.
pub fn angle_lt(abc: &AngleTriple, xyz: &AngleTriple, fuel: &Fuel) -> Result<Verdict, KernelError> {
    if let Some(v) = check_all_arms(&[abc, xyz], fuel)? {
        return Ok(v);
    }
    let first = Spread::of(abc);
    let second = Spread::of(xyz);
    // The cosine is strictly decreasing on [0, π].
    let verdict = out(&xyz.vertex, &xyz.arm1, &xyz.arm2, fuel)
        .not()
        .and(|| ratio_gt(&first.cos(), &second.cos(), fuel));
    let points = if verdict.holds() { lt_witness(&first, xyz, fuel) } else { None };
    Ok(with_points(verdict, points))
}

fn lt_witness(first: &Spread, xyz: &AngleTriple, fuel: &Fuel) -> Option<Vec<Point>> {
    let y = vec2::of(&xyz.vertex);
    let x = vec2::of(&xyz.arm1);
    let z = vec2::of(&xyz.arm2);
    let u = vec2::sub(&x, &y);
    let p = rotate_toward(&y, &u, first, &z, fuel)?;
    let z_far = along(&xyz.vertex, &xyz.arm2, &vec2::norm_sq(&u), fuel)?;
    let p_mid = ray_meets(&y, &p, &x, &z_far, fuel)?;
    Some(vec![vec2::point(p), vec2::point(p_mid), xyz.arm1.clone(), vec2::point(z_far)])
}

/// `abc + xyz = def`. `Holds` carries `[p, p′, d′, f′]`.
///
/// Decided as: both summands nonzero, `θ₁ + θ₂ ≤ π` (`cos θ₁ ≥ −cos θ₂`),
/// and `cos(θ₁ + θ₂) = cos θ₃`, which pins the sum on `[0, π]`. A pair of
/// summands exceeding a straight angle is an error: no `def` can equal it.
pub fn angle_sum_check(
    abc: &AngleTriple,
    xyz: &AngleTriple,
    def: &AngleTriple,
    fuel: &Fuel,
) -> Result<Verdict, KernelError> {
    if let Some(v) = check_all_arms(&[abc, xyz, def], fuel)? {
        return Ok(v);
    }
    let first = Spread::of(abc);
    let second = Spread::of(xyz);
    let total = Spread::of(def);
    let summands = first.nonzero(fuel).and(|| second.nonzero(fuel));
    if !summands.holds() {
        return Ok(summands);
    }
    let neg_second = RootRatio { num: second.dot.neg(), den: second.norm.clone() };
    match ratio_gt(&neg_second, &first.cos(), fuel) {
        Verdict::Holds(_) => return Err(KernelError::SumExceedsStraight),
        Verdict::Unknown { fuel_spent } => return Ok(Verdict::Unknown { fuel_spent }),
        Verdict::Fails(_) => {}
    }
    let sum_cos = RootRatio {
        num: first
            .dot
            .mul(&second.dot)
            .sub(&first.abs_cross(fuel).mul(&second.abs_cross(fuel))),
        den: first.norm.mul(&second.norm),
    };
    let verdict = summands.and(|| ratio_eq(&sum_cos, &total.cos(), fuel));
    let points = if verdict.holds() { sum_witness(&first, def, fuel) } else { None };
    Ok(with_points(verdict, points))
}

fn sum_witness(first: &Spread, def: &AngleTriple, fuel: &Fuel) -> Option<Vec<Point>> {
    let e = vec2::of(&def.vertex);
    let d = vec2::of(&def.arm1);
    let f = vec2::of(&def.arm2);
    let u = vec2::sub(&d, &e);
    let p = rotate_toward(&e, &u, first, &f, fuel)?;
    let f_far = along(&def.vertex, &def.arm2, &vec2::norm_sq(&u), fuel)?;
    let p_mid = ray_meets(&e, &p, &d, &f_far, fuel)?;
    Some(vec![vec2::point(p), vec2::point(p_mid), def.arm1.clone(), vec2::point(f_far)])
}
