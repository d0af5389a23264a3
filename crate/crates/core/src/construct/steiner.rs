//! Triangles with both internal bisector feet, for Steiner-Lehmus checks.

use serde::Serialize;

use super::{bisector_foot, Certificate, ConstructError};
use crate::exact::Fuel;
use crate::kernel::{seg_apart, sq_dist, strict_between, Point, Scalar};

/// Triangle `abc` with `x` the foot of the bisector from `c` on `ab` and `y`
/// the foot of the bisector from `a` on `cb`.
#[derive(Clone, Debug, Serialize)]
pub struct SLInstance {
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub x: Point,
    pub y: Point,
    /// `|ay|²`
    #[serde(serialize_with = "scalar")]
    pub ay_sq: Scalar,
    /// `|cx|²`
    #[serde(serialize_with = "scalar")]
    pub cx_sq: Scalar,
    /// `|ab|²`
    #[serde(serialize_with = "scalar")]
    pub ab_sq: Scalar,
    /// `|cb|²`
    #[serde(serialize_with = "scalar")]
    pub cb_sq: Scalar,
    pub certificates: Vec<Certificate>,
}

fn scalar<S: serde::Serializer>(v: &Scalar, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Scalar::Exact(e) => e.serialize(s),
        Scalar::Approx(r) => s.serialize_str(&format!("~{}", r.approx(1 << 40).to_decimal(12))),
    }
}

impl SLInstance {
    /// Sign of `|cx|² − |ay|²`, when decided exactly.
    pub fn bisector_sign(&self) -> Option<i32> {
        Some(self.cx_sq.sub(&self.ay_sq).as_exact()?.signum())
    }

    /// Sign of `|cb|² − |ab|²`, when decided exactly.
    pub fn side_sign(&self) -> Option<i32> {
        Some(self.cb_sq.sub(&self.ab_sq).as_exact()?.signum())
    }

    pub fn all_hold(&self) -> bool {
        self.certificates.iter().all(|c| c.verdict.holds())
    }
}

/// Builds both bisector feet of the triangle `abc`.
pub fn build_sl_instance(a: &Point, b: &Point, c: &Point, fuel: &Fuel) -> Result<SLInstance, ConstructError> {
    if !seg_apart(a, b, c, fuel).holds() {
        return Err(ConstructError::DegenerateTriangle);
    }
    let fx = bisector_foot(c, a, b, fuel)?;
    let fy = bisector_foot(a, c, b, fuel)?;
    let x = fx.point().clone();
    let y = fy.point().clone();
    let mut certificates = vec![
        Certificate::new("strict_between", &[a, &x, b], strict_between(a, &x, b, fuel)),
        Certificate::new("strict_between", &[c, &y, b], strict_between(c, &y, b, fuel)),
    ];
    certificates.extend(fx.certificates);
    certificates.extend(fy.certificates);
    Ok(SLInstance {
        ay_sq: sq_dist(a, &y),
        cx_sq: sq_dist(c, &x),
        ab_sq: sq_dist(a, b),
        cb_sq: sq_dist(c, b),
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        x,
        y,
        certificates,
    })
}
