//! Coordinate realizations of the construction postulates and of the
//! constructive auxiliary theorems.
//!
//! Every construction first re-checks its hypotheses, then computes the new
//! points directly and attaches certificates: the relations asserted by the
//! postulate, re-evaluated on the output.

mod steiner;

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exact::{real_cotrans, verify_gt_witness, ArithError, Cotrans, Fuel, Rational, Real, WitnessIndex};
use crate::kernel::point::vec2;
use crate::kernel::{
    angle_cong, apart, between, col, cong, gt, left_of, orientation, parallel, seg_apart, sq_dist,
    strict_between, AngleTriple, KernelError, Point, Scalar,
};
use crate::verdict::{Verdict, Witness};

pub use steiner::{build_sl_instance, SLInstance};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("hypothesis {0} is not certified")]
    InvalidWitness(String),
    #[error("degenerate triangle")]
    DegenerateTriangle,
    #[error("unknown construction {0:?}")]
    UnknownConstruction(String),
    #[error("{name} takes {expected} points, got {got}")]
    ArityMismatch { name: String, expected: usize, got: usize },
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// A postcondition re-evaluated on constructed points.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub relation: String,
    pub points: Vec<Point>,
    pub verdict: Verdict,
}

impl Certificate {
    pub fn new(relation: impl Into<String>, points: &[&Point], verdict: Verdict) -> Self {
        Certificate {
            relation: relation.into(),
            points: points.iter().map(|p| (*p).clone()).collect(),
            verdict,
        }
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(Some(3))?;
        m.serialize_entry("relation", &self.relation)?;
        m.serialize_entry("points", &self.points)?;
        m.serialize_entry("verdict", &self.verdict)?;
        m.end()
    }
}

/// Constructed points with the certificates of their postconditions.
#[derive(Clone, Debug, Serialize)]
pub struct ConstructionResult {
    pub points: Vec<Point>,
    pub certificates: Vec<Certificate>,
}

impl ConstructionResult {
    /// The primary constructed point.
    pub fn point(&self) -> &Point {
        &self.points[0]
    }

    pub fn all_hold(&self) -> bool {
        self.certificates.iter().all(|c| c.verdict.holds())
    }

    pub fn failing(&self) -> impl Iterator<Item = &Certificate> {
        self.certificates.iter().filter(|c| !c.verdict.holds())
    }
}

fn require(label: &str, v: Verdict) -> Result<(), ConstructError> {
    if v.holds() {
        Ok(())
    } else {
        Err(ConstructError::InvalidWitness(label.to_string()))
    }
}

/// Which of `a # c`, `b # c` a cotransitivity split certified.
#[derive(Clone, Debug)]
pub enum Separated {
    /// `a # c`
    First(Verdict),
    /// `b # c`
    Second(Verdict),
}

impl Separated {
    pub fn verdict(&self) -> &Verdict {
        match self {
            Separated::First(v) | Separated::Second(v) => v,
        }
    }
}

/// Cotransitivity of apartness: from a certified `a # b`, a certified
/// `a # c` or `b # c`.
///
/// On exact inputs the split is decided directly, preferring `a # c`. On
/// approximate inputs the index witness of `a # b` drives two cotransitivity
/// steps on reals: `|ab|² > 0` gives `2(|ac|² + |bc|²) > 0` by the triangle
/// inequality, and splitting that sum at `2|ac|²` picks the side.
pub fn cotrans_points(a: &Point, b: &Point, c: &Point, w: &Verdict, fuel: &Fuel) -> Result<Separated, ConstructError> {
    let invalid = || ConstructError::InvalidWitness("a # b".into());
    let Verdict::Holds(witness) = w else {
        return Err(invalid());
    };
    if a.is_exact() && b.is_exact() && c.is_exact() {
        require("a # b", apart(a, b, fuel))?;
        let ac = apart(a, c, fuel);
        if ac.holds() {
            return Ok(Separated::First(ac));
        }
        return Ok(Separated::Second(apart(b, c, fuel)));
    }
    let Some(n) = first_index(witness) else {
        return Err(invalid());
    };
    let zero = Real::zero();
    let ab = sq_dist(a, b).sub(&sq_dist(a, a)).to_real();
    if !verify_gt_witness(&ab, &zero, n) {
        return Err(invalid());
    }
    let two = Rational::from_integer(2);
    let ac2 = sq_dist(a, c).scale(&two).to_real();
    let sum = &ac2 + &sq_dist(b, c).scale(&two).to_real();
    let w_sum = match real_cotrans(&ab, &zero, &sum, n)? {
        Cotrans::Right(w) => w,
        Cotrans::Left(_) => return Err(invalid()),
    };
    Ok(match real_cotrans(&sum, &zero, &ac2, w_sum)? {
        Cotrans::Left(_) => Separated::Second(apart(b, c, fuel)),
        Cotrans::Right(_) => Separated::First(apart(a, c, fuel)),
    })
}

fn first_index(w: &Witness) -> Option<WitnessIndex> {
    match w {
        Witness::Index(n) => Some(*n),
        Witness::All(ws) => ws.iter().find_map(first_index),
        _ => None,
    }
}

/// Where the line `ab` crosses the segment `uv`, for `u` left of `ab` and
/// `v` left of `ba`.
pub fn plane_separation(a: &Point, b: &Point, u: &Point, v: &Point, fuel: &Fuel) -> Result<ConstructionResult, ConstructError> {
    require("Left(u,ab)", left_of(u, a, b, fuel))?;
    require("Left(v,ba)", left_of(v, b, a, fuel))?;
    let du = orientation(a, b, u);
    let dv = orientation(a, b, v);
    let t = du.div(&du.sub(&dv), fuel)?;
    let pu = vec2::of(u);
    let x = vec2::point(vec2::add(&pu, &vec2::mul(&vec2::sub(&vec2::of(v), &pu), &t)));
    Ok(ConstructionResult {
        certificates: vec![
            Certificate::new("col", &[a, b, &x], col(a, b, &x, fuel)),
            Certificate::new("between", &[u, &x, v], between(u, &x, v, fuel)),
        ],
        points: vec![x],
    })
}

/// Two apart points.
pub fn nontrivial_pair(fuel: &Fuel) -> ConstructionResult {
    let a = Point::int(0, 0);
    let b = Point::int(1, 0);
    ConstructionResult {
        certificates: vec![Certificate::new("point_apart", &[&a, &b], apart(&a, &b, fuel))],
        points: vec![a, b],
    }
}

/// `x` with `B(qax)` and `ax ≅ bc`.
pub fn extend(q: &Point, a: &Point, b: &Point, c: &Point, fuel: &Fuel) -> Result<ConstructionResult, ConstructError> {
    require("q # a", apart(q, a, fuel))?;
    let pa = vec2::of(a);
    let dir = vec2::sub(&pa, &vec2::of(q));
    let factor = sq_dist(b, c).div(&vec2::norm_sq(&dir), fuel)?.sqrt(fuel)?;
    let x = vec2::point(vec2::add(&pa, &vec2::mul(&dir, &factor)));
    Ok(ConstructionResult {
        certificates: vec![
            Certificate::new("between", &[q, a, &x], between(q, a, &x, fuel)),
            Certificate::new("cong", &[a, &x, b, c], cong(a, &x, b, c, fuel)),
        ],
        points: vec![x],
    })
}

/// The point `u` on the ray `a→b`, at or beyond `b`, on the circle about `c`
/// through `d`, given `B(cbd)`.
pub fn straightedge_compass(a: &Point, b: &Point, c: &Point, d: &Point, fuel: &Fuel) -> Result<ConstructionResult, ConstructError> {
    require("a # b", apart(a, b, fuel))?;
    require("B(cbd)", between(c, b, d, fuel))?;
    let pa = vec2::of(a);
    let w = vec2::sub(&vec2::of(b), &pa);
    let f = vec2::sub(&pa, &vec2::of(c));
    let ww = vec2::norm_sq(&w);
    let fw = vec2::dot(&f, &w);
    let rest = vec2::norm_sq(&f).sub(&sq_dist(c, d));
    // Larger root of |w|²s² + 2(f·w)s + |f|² − R² = 0.
    let disc = fw.mul(&fw).sub(&ww.mul(&rest));
    let s = fw.neg().add(&disc.sqrt(fuel)?).div(&ww, fuel)?;
    let u = vec2::point(vec2::add(&pa, &vec2::mul(&w, &s)));
    let mut certificates = vec![
        Certificate::new("cong", &[c, &u, c, d], cong(c, &u, c, d, fuel)),
        Certificate::new("between", &[a, b, &u], between(a, b, &u, fuel)),
    ];
    if apart(b, d, fuel).holds() {
        certificates.push(Certificate::new("point_apart", &[b, &u], apart(b, &u, fuel)));
    }
    Ok(ConstructionResult { points: vec![u], certificates })
}

/// The intersection `u` of the circle about `a` through `b` with the circle
/// about `c` through `d` that lies left of `ac`. `p` and `q` certify that the
/// circles properly overlap.
pub fn compass_compass(
    a: &Point,
    b: &Point,
    c: &Point,
    d: &Point,
    p: &Point,
    q: &Point,
    fuel: &Fuel,
) -> Result<ConstructionResult, ConstructError> {
    require("a # c", apart(a, c, fuel))?;
    require("ab ≅ ap", cong(a, b, a, p, fuel))?;
    require("cd > cp", gt(c, d, c, p, fuel))?;
    require("cd ≅ cq", cong(c, d, c, q, fuel))?;
    require("ab > aq", gt(a, b, a, q, fuel))?;
    let pa = vec2::of(a);
    let axis = vec2::sub(&vec2::of(c), &pa);
    let e = vec2::norm_sq(&axis);
    let r1 = sq_dist(a, b);
    let r2 = sq_dist(c, d);
    let two_e = e.scale(&Rational::from_integer(2));
    let t = r1.sub(&r2).add(&e).div(&two_e, fuel)?;
    let s = r1.div(&e, fuel)?.sub(&t.mul(&t)).sqrt(fuel)?;
    // Left(u, ac): the orientation determinant equals s·|c − a|² > 0.
    let offset = vec2::add(&vec2::mul(&axis, &t), &vec2::mul(&vec2::perp(&axis), &s));
    let u = vec2::point(vec2::add(&pa, &offset));
    Ok(ConstructionResult {
        certificates: vec![
            Certificate::new("cong", &[a, b, a, &u], cong(a, b, a, &u, fuel)),
            Certificate::new("cong", &[c, d, c, &u], cong(c, d, c, &u, fuel)),
            Certificate::new("left", &[&u, a, c], left_of(&u, a, c, fuel)),
        ],
        points: vec![u],
    })
}

fn mid(a: &Point, b: &Point) -> Point {
    let half = Rational::new(1, 2).expect("nonzero");
    let (ax, ay) = a.coords();
    let (bx, by) = b.coords();
    Point::from_scalars(ax.add(&bx).scale(&half), ay.add(&by).scale(&half))
}

/// `d` with `SB(adb)` and `ad ≅ db`.
pub fn midpoint(a: &Point, b: &Point, fuel: &Fuel) -> Result<ConstructionResult, ConstructError> {
    require("a # b", apart(a, b, fuel))?;
    let d = mid(a, b);
    Ok(ConstructionResult {
        certificates: vec![
            Certificate::new("strict_between", &[a, &d, b], strict_between(a, &d, b, fuel)),
            Certificate::new("cong", &[a, &d, &d, b], cong(a, &d, &d, b, fuel)),
        ],
        points: vec![d],
    })
}

/// `p` with `SB(bxp)` and `SB(cpa)`, given `x # bq`, `SB(bqc)`, `SB(qxa)`.
pub fn outer_pasch(a: &Point, b: &Point, c: &Point, x: &Point, q: &Point, fuel: &Fuel) -> Result<ConstructionResult, ConstructError> {
    require("x # bq", seg_apart(x, b, q, fuel))?;
    require("SB(bqc)", strict_between(b, q, c, fuel))?;
    require("SB(qxa)", strict_between(q, x, a, fuel))?;
    let pb = vec2::of(b);
    let pc = vec2::of(c);
    let w = vec2::sub(&vec2::of(x), &pb);
    let side = vec2::sub(&vec2::of(a), &pc);
    let lambda = vec2::cross(&w, &vec2::sub(&pb, &pc)).div(&vec2::cross(&w, &side), fuel)?;
    let p = vec2::point(vec2::add(&pc, &vec2::mul(&side, &lambda)));
    Ok(ConstructionResult {
        certificates: vec![
            Certificate::new("strict_between", &[b, x, &p], strict_between(b, x, &p, fuel)),
            Certificate::new("strict_between", &[c, &p, a], strict_between(c, &p, a, fuel)),
        ],
        points: vec![p],
    })
}

/// The fourth vertex `t` of the parallelogram on `a, x, y`, with `t` opposite
/// `a`, and the common midpoint `m` of `xy` and `at`. A collinear `a, x, y`
/// is reported through a failing `a # xy` certificate rather than an error.
pub fn parallelogram_fourth(a: &Point, x: &Point, y: &Point, fuel: &Fuel) -> Result<ConstructionResult, ConstructError> {
    require("a # x", apart(a, x, fuel))?;
    require("a # y", apart(a, y, fuel))?;
    require("x # y", apart(x, y, fuel))?;
    let m = mid(x, y);
    let t = vec2::point(vec2::sub(&vec2::add(&vec2::of(x), &vec2::of(y)), &vec2::of(a)));
    Ok(ConstructionResult {
        certificates: vec![
            Certificate::new("parallel", &[y, &t, a, x], parallel(y, &t, a, x, fuel)),
            Certificate::new("parallel", &[x, &t, a, y], parallel(x, &t, a, y, fuel)),
            Certificate::new("cong", &[a, x, y, &t], cong(a, x, y, &t, fuel)),
            Certificate::new("cong", &[x, &t, a, y], cong(x, &t, a, y, fuel)),
            Certificate::new("point_seg_apart", &[a, x, y], seg_apart(a, x, y, fuel)),
        ],
        points: vec![t, m],
    })
}

/// Foot on `s1 s2` of the internal bisector of the angle at `vertex`.
///
/// The foot divides `s1 s2` in the ratio `|v s1| : |v s2|`. With
/// `l₁ = |v s1|`, `l₂ = |v s2|` the fraction `l₁/(l₁ + l₂)` is rationalized
/// to `(l₁² − l₁l₂)/(l₁² − l₂²)` so that rational triangles stay exact.
pub fn bisector_foot(vertex: &Point, s1: &Point, s2: &Point, fuel: &Fuel) -> Result<ConstructionResult, ConstructError> {
    let distinct = apart(vertex, s1, fuel)
        .and(|| apart(vertex, s2, fuel))
        .and(|| apart(s1, s2, fuel));
    if !distinct.holds() {
        return Err(ConstructError::DegenerateTriangle);
    }
    let r1 = sq_dist(vertex, s1);
    let r2 = sq_dist(vertex, s2);
    let den = r1.sub(&r2);
    let ratio = if den.zero(fuel).holds() {
        Scalar::rational(Rational::new(1, 2).expect("nonzero"))
    } else {
        r1.sub(&r1.mul(&r2).sqrt(fuel)?).div(&den, fuel)?
    };
    let p1 = vec2::of(s1);
    let foot = vec2::point(vec2::add(&p1, &vec2::mul(&vec2::sub(&vec2::of(s2), &p1), &ratio)));
    let halves = angle_cong(
        &AngleTriple::new(s1.clone(), vertex.clone(), foot.clone()),
        &AngleTriple::new(foot.clone(), vertex.clone(), s2.clone()),
        fuel,
    )?;
    Ok(ConstructionResult {
        certificates: vec![Certificate::new("angle_cong", &[s1, vertex, &foot, &foot, vertex, s2], halves)],
        points: vec![foot],
    })
}

/// Named constructions available to scripts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionKind {
    Midpoint,
    Extend,
    StraightedgeCompass,
    CompassCompass,
    PlaneSeparation,
    OuterPasch,
    ParallelogramFourth,
    BisectorFoot,
}

impl ConstructionKind {
    pub const ALL: [ConstructionKind; 8] = [
        ConstructionKind::Midpoint,
        ConstructionKind::Extend,
        ConstructionKind::StraightedgeCompass,
        ConstructionKind::CompassCompass,
        ConstructionKind::PlaneSeparation,
        ConstructionKind::OuterPasch,
        ConstructionKind::ParallelogramFourth,
        ConstructionKind::BisectorFoot,
    ];

    pub fn name(self) -> &'static str {
        use ConstructionKind::*;
        match self {
            Midpoint => "midpoint",
            Extend => "extend",
            StraightedgeCompass => "straightedge_compass",
            CompassCompass => "compass_compass",
            PlaneSeparation => "plane_separation",
            OuterPasch => "outer_pasch",
            ParallelogramFourth => "parallelogram_fourth",
            BisectorFoot => "bisector_foot",
        }
    }

    pub fn arity(self) -> usize {
        use ConstructionKind::*;
        match self {
            Midpoint => 2,
            ParallelogramFourth | BisectorFoot => 3,
            Extend | StraightedgeCompass | PlaneSeparation => 4,
            OuterPasch => 5,
            CompassCompass => 6,
        }
    }

    /// Number of points the construction returns.
    pub fn outputs(self) -> usize {
        match self {
            ConstructionKind::ParallelogramFourth => 2,
            _ => 1,
        }
    }

    pub fn apply(self, args: &[Point], fuel: &Fuel) -> Result<ConstructionResult, ConstructError> {
        if args.len() != self.arity() {
            return Err(ConstructError::ArityMismatch {
                name: self.name().to_string(),
                expected: self.arity(),
                got: args.len(),
            });
        }
        let p = args;
        use ConstructionKind::*;
        match self {
            Midpoint => midpoint(&p[0], &p[1], fuel),
            Extend => extend(&p[0], &p[1], &p[2], &p[3], fuel),
            StraightedgeCompass => straightedge_compass(&p[0], &p[1], &p[2], &p[3], fuel),
            CompassCompass => compass_compass(&p[0], &p[1], &p[2], &p[3], &p[4], &p[5], fuel),
            PlaneSeparation => plane_separation(&p[0], &p[1], &p[2], &p[3], fuel),
            OuterPasch => outer_pasch(&p[0], &p[1], &p[2], &p[3], &p[4], fuel),
            ParallelogramFourth => parallelogram_fourth(&p[0], &p[1], &p[2], fuel),
            BisectorFoot => bisector_foot(&p[0], &p[1], &p[2], fuel),
        }
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for ConstructionKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl FromStr for ConstructionKind {
    type Err = ConstructError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ConstructionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| ConstructError::UnknownConstruction(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Surd;

    fn p(x: i64, y: i64) -> Point {
        Point::int(x, y)
    }

    fn f() -> Fuel {
        Fuel::default()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn is_at(pt: &Point, x: Rational, y: Rational) -> bool {
        pt.rational_hint() == Some((x, y))
    }

    #[test]
    fn cotrans_examples() {
        let fu = f();
        let (a, b) = (p(0, 0), p(1, 0));
        let w = apart(&a, &b, &fu);
        assert!(matches!(cotrans_points(&a, &b, &p(1, 0), &w, &fu).unwrap(), Separated::First(v) if v.holds()));
        assert!(matches!(cotrans_points(&a, &b, &p(0, 0), &w, &fu).unwrap(), Separated::Second(v) if v.holds()));
        assert!(cotrans_points(&a, &b, &Point::frac((1, 2), (0, 1)), &w, &fu).unwrap().verdict().holds());
        let bad = apart(&a, &a, &fu);
        assert!(cotrans_points(&a, &a, &b, &bad, &fu).is_err());
    }

    #[test]
    fn cotrans_on_reals() {
        let fu = Fuel::with_max_index(1 << 20);
        let r = |x: i64, y: i64| Point::from_reals(Real::from_integer(x), Real::from_integer(y));
        let (a, b) = (r(0, 0), r(3, 0));
        let w = apart(&a, &b, &fu);
        assert!(w.holds());
        for c in [r(3, 0), r(0, 0), r(1, 1)] {
            let side = cotrans_points(&a, &b, &c, &w, &fu).unwrap();
            assert!(side.verdict().holds(), "{side:?}");
        }
    }

    #[test]
    fn plane_separation_examples() {
        let fu = f();
        let r = plane_separation(&p(0, 0), &p(2, 0), &p(1, 1), &p(1, -1), &fu).unwrap();
        assert!(is_at(r.point(), rat(1, 1), rat(0, 1)) && r.all_hold());
        let r = plane_separation(&p(0, 0), &p(1, 0), &p(0, 5), &p(0, -5), &fu).unwrap();
        assert!(is_at(r.point(), rat(0, 1), rat(0, 1)) && r.all_hold());
        assert!(plane_separation(&p(0, 0), &p(1, 0), &p(0, -5), &p(0, 5), &fu).is_err());
    }

    #[test]
    fn extend_examples() {
        let fu = f();
        let r = extend(&p(0, 0), &p(1, 0), &p(0, 0), &p(2, 0), &fu).unwrap();
        assert!(is_at(r.point(), rat(3, 1), rat(0, 1)) && r.all_hold());
        let r = extend(&p(0, 0), &p(1, 0), &p(4, 4), &p(4, 4), &fu).unwrap();
        assert!(is_at(r.point(), rat(1, 1), rat(0, 1)) && r.all_hold());
        let r = extend(&p(0, 0), &p(3, 4), &p(0, 0), &p(5, 0), &fu).unwrap();
        assert!(is_at(r.point(), rat(6, 1), rat(8, 1)) && r.all_hold());
    }

    #[test]
    fn straightedge_compass_examples() {
        let fu = f();
        let r = straightedge_compass(&p(0, 0), &p(1, 0), &p(0, 0), &p(3, 0), &fu).unwrap();
        assert!(is_at(r.point(), rat(3, 1), rat(0, 1)) && r.all_hold());
        assert_eq!(r.certificates.len(), 3);
        let r = straightedge_compass(&p(0, 0), &p(1, 0), &p(1, 0), &p(1, 0), &fu).unwrap();
        assert!(is_at(r.point(), rat(1, 1), rat(0, 1)) && r.all_hold());
        let r = straightedge_compass(&p(0, -1), &p(0, 0), &p(0, 0), &p(0, 2), &fu).unwrap();
        assert!(is_at(r.point(), rat(0, 1), rat(2, 1)) && r.all_hold());
    }

    #[test]
    fn compass_compass_examples() {
        let fu = f();
        let r = compass_compass(&p(0, 0), &p(1, 0), &p(1, 0), &p(2, 0), &p(1, 0), &p(0, 0), &fu).unwrap();
        let (x, y) = r.point().exact().unwrap();
        assert_eq!(x.as_rational(), Some(rat(1, 2)));
        assert_eq!(y, &Surd::sqrt_of_rational(&rat(3, 4)).unwrap());
        assert!(r.all_hold());
        let tangent = compass_compass(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0), &p(1, 0), &p(1, 0), &fu);
        assert!(tangent.is_err());
        let r = compass_compass(&p(0, 0), &p(5, 0), &p(8, 0), &p(3, 0), &p(5, 0), &p(3, 0), &fu).unwrap();
        assert!(is_at(r.point(), rat(4, 1), rat(3, 1)) && r.all_hold());
    }

    #[test]
    fn midpoint_examples() {
        let fu = f();
        let r = midpoint(&p(0, 0), &p(2, 0), &fu).unwrap();
        assert!(is_at(r.point(), rat(1, 1), rat(0, 1)) && r.all_hold());
        let r = midpoint(&p(-3, 0), &p(0, 4), &fu).unwrap();
        assert!(is_at(r.point(), rat(-3, 2), rat(2, 1)) && r.all_hold());
        let r = midpoint(&p(1, 1), &p(1, 3), &fu).unwrap();
        assert!(is_at(r.point(), rat(1, 1), rat(2, 1)) && r.all_hold());
    }

    #[test]
    fn outer_pasch_examples() {
        let fu = f();
        let r = outer_pasch(&p(1, 2), &p(0, 0), &p(3, 0), &p(1, 1), &p(1, 0), &fu).unwrap();
        assert!(is_at(r.point(), rat(3, 2), rat(3, 2)) && r.all_hold());
        let r = outer_pasch(&p(2, 4), &p(0, 0), &p(6, 0), &p(2, 2), &p(2, 0), &fu).unwrap();
        assert!(is_at(r.point(), rat(3, 1), rat(3, 1)) && r.all_hold());
        let r = outer_pasch(&p(2, 4), &p(0, 0), &p(4, 0), &p(2, 2), &p(2, 0), &fu).unwrap();
        assert!(is_at(r.point(), rat(8, 3), rat(8, 3)) && r.all_hold());
        assert!(outer_pasch(&p(2, 4), &p(0, 0), &p(4, 0), &p(1, 0), &p(2, 0), &fu).is_err());
    }

    #[test]
    fn parallelogram_examples() {
        let fu = f();
        let r = parallelogram_fourth(&p(0, 2), &p(0, 0), &p(2, 0), &fu).unwrap();
        assert!(is_at(r.point(), rat(2, 1), rat(-2, 1)) && r.all_hold());
        let r = parallelogram_fourth(&p(0, 0), &p(1, 0), &p(0, 1), &fu).unwrap();
        assert!(is_at(r.point(), rat(1, 1), rat(1, 1)) && r.all_hold());
        let r = parallelogram_fourth(&p(0, 0), &p(1, 0), &p(2, 0), &fu).unwrap();
        assert!(is_at(r.point(), rat(3, 1), rat(0, 1)));
        let failing: Vec<_> = r.failing().map(|c| c.relation.as_str()).collect();
        assert_eq!(failing, ["point_seg_apart"]);
    }

    #[test]
    fn bisector_foot_examples() {
        let fu = f();
        let r = bisector_foot(&p(3, 0), &p(-3, 0), &p(0, 4), &fu).unwrap();
        assert!(is_at(r.point(), rat(-15, 11), rat(24, 11)) && r.all_hold());
        let r = bisector_foot(&p(-3, 0), &p(3, 0), &p(0, 4), &fu).unwrap();
        assert!(is_at(r.point(), rat(15, 11), rat(24, 11)) && r.all_hold());
        let r = bisector_foot(&p(0, 0), &p(1, 0), &p(0, 1), &fu).unwrap();
        assert!(is_at(r.point(), rat(1, 2), rat(1, 2)) && r.all_hold());
        assert_eq!(bisector_foot(&p(0, 0), &p(0, 0), &p(0, 1), &fu).unwrap_err(), ConstructError::DegenerateTriangle);
    }

    #[test]
    fn kinds_dispatch() {
        let fu = f();
        let k: ConstructionKind = "midpoint".parse().unwrap();
        assert!(k.apply(&[p(0, 0), p(2, 2)], &fu).unwrap().all_hold());
        assert!(matches!(k.apply(&[p(0, 0)], &fu), Err(ConstructError::ArityMismatch { .. })));
        assert!("trisect".parse::<ConstructionKind>().is_err());
    }
}
