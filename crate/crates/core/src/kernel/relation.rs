//! Atomic and derived point relations.
//!
//! Everything reduces to two atomic predicates: strict comparison of segment
//! lengths and leftness. Negatively defined relations (equivalence,
//! collinearity, betweenness, congruence, parallelism) can only be certified
//! to hold when the inputs are exact; on approximate inputs they either fail,
//! with the positive witness that refutes them, or stay unknown.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::point::vec2;
use super::{KernelError, Point, Scalar, Segment};
use crate::exact::Fuel;
use crate::verdict::{Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    /// `a # b := ab > aa`
    PointApart,
    /// `ab # cd := ab > cd ∨ cd > ab`
    LenApart,
    /// `ab ≥ cd := ¬(cd > ab)`
    GeLen,
    /// `a # bc := Left(a,bc) ∨ Left(a,cb)`
    PointSegApart,
    /// `a ≡ b := ¬(a # b)`
    Equiv,
    /// `col(abc) := ¬(a # bc)`
    Col,
    /// `B(abc) := col(abc) ∧ ac ≥ ab ∧ ac ≥ bc`
    Between,
    /// `SB(abc) := B(abc) ∧ a # b ∧ b # c`
    StrictBetween,
    /// `ab ≅ cd := ¬(ab # cd)`
    Cong,
    /// `out(p,ab) := p # a ∧ p # b ∧ ¬(¬B(pab) ∧ ¬B(pba))`
    Out,
    /// `ab ∥ cd := a # b ∧ c # d ∧ ¬∃x,y. col(xab) ∧ col(yab) ∧ Left(x,cd) ∧ Left(y,dc)`
    Parallel,
}

impl RelationKind {
    pub const ALL: [RelationKind; 11] = [
        RelationKind::PointApart,
        RelationKind::LenApart,
        RelationKind::GeLen,
        RelationKind::PointSegApart,
        RelationKind::Equiv,
        RelationKind::Col,
        RelationKind::Between,
        RelationKind::StrictBetween,
        RelationKind::Cong,
        RelationKind::Out,
        RelationKind::Parallel,
    ];

    pub fn arity(self) -> usize {
        use RelationKind::*;
        match self {
            PointApart | Equiv => 2,
            PointSegApart | Col | Between | StrictBetween | Out => 3,
            LenApart | GeLen | Cong | Parallel => 4,
        }
    }

    /// Defined by negation, hence only certifiable on exact inputs.
    pub fn is_negative(self) -> bool {
        use RelationKind::*;
        matches!(self, GeLen | Equiv | Col | Between | Cong | Parallel)
    }

    pub fn name(self) -> &'static str {
        use RelationKind::*;
        match self {
            PointApart => "point_apart",
            LenApart => "len_apart",
            GeLen => "ge_len",
            PointSegApart => "point_seg_apart",
            Equiv => "equiv",
            Col => "col",
            Between => "between",
            StrictBetween => "strict_between",
            Cong => "cong",
            Out => "out",
            Parallel => "parallel",
        }
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RelationKind {
    type Err = KernelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RelationKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| KernelError::UnknownRelation(s.to_string()))
    }
}

pub(crate) fn sq_dist(a: &Point, b: &Point) -> Scalar {
    vec2::norm_sq(&vec2::sub(&vec2::of(b), &vec2::of(a)))
}

/// Determinant of rows `(x₀,y₀,1), (x₁,y₁,1), (x₂,y₂,1)`.
pub(crate) fn orientation(a: &Point, b: &Point, c: &Point) -> Scalar {
    let pa = vec2::of(a);
    vec2::cross(&vec2::sub(&vec2::of(b), &pa), &vec2::sub(&vec2::of(c), &pa))
}

/// `ab > cd` on points.
pub fn gt(a: &Point, b: &Point, c: &Point, d: &Point, fuel: &Fuel) -> Verdict {
    // Lengths are nonnegative, so comparing squares is equivalent.
    sq_dist(a, b).sub(&sq_dist(c, d)).positive(fuel)
}

/// Atomic `ab > cd`.
pub fn seg_gt(ab: &Segment, cd: &Segment, fuel: &Fuel) -> Verdict {
    gt(&ab.first, &ab.second, &cd.first, &cd.second, fuel)
}

/// Atomic `Left(a, bc)`: the orientation determinant is strictly positive.
pub fn left(a: &Point, bc: &Segment, fuel: &Fuel) -> Verdict {
    left_of(a, &bc.first, &bc.second, fuel)
}

pub fn left_of(a: &Point, b: &Point, c: &Point, fuel: &Fuel) -> Verdict {
    orientation(a, b, c).positive(fuel)
}

pub fn apart(a: &Point, b: &Point, fuel: &Fuel) -> Verdict {
    gt(a, b, a, a, fuel)
}

pub fn len_apart(a: &Point, b: &Point, c: &Point, d: &Point, fuel: &Fuel) -> Verdict {
    gt(a, b, c, d, fuel).or(|| gt(c, d, a, b, fuel))
}

pub fn ge(a: &Point, b: &Point, c: &Point, d: &Point, fuel: &Fuel) -> Verdict {
    gt(c, d, a, b, fuel).not()
}

pub fn seg_apart(a: &Point, b: &Point, c: &Point, fuel: &Fuel) -> Verdict {
    left_of(a, b, c, fuel).or(|| left_of(a, c, b, fuel))
}

pub fn equiv(a: &Point, b: &Point, fuel: &Fuel) -> Verdict {
    apart(a, b, fuel).not()
}

pub fn col(a: &Point, b: &Point, c: &Point, fuel: &Fuel) -> Verdict {
    seg_apart(a, b, c, fuel).not()
}

pub fn between(a: &Point, b: &Point, c: &Point, fuel: &Fuel) -> Verdict {
    col(a, b, c, fuel)
        .and(|| ge(a, c, a, b, fuel))
        .and(|| ge(a, c, b, c, fuel))
}

pub fn strict_between(a: &Point, b: &Point, c: &Point, fuel: &Fuel) -> Verdict {
    between(a, b, c, fuel)
        .and(|| apart(a, b, fuel))
        .and(|| apart(b, c, fuel))
}

pub fn cong(a: &Point, b: &Point, c: &Point, d: &Point, fuel: &Fuel) -> Verdict {
    len_apart(a, b, c, d, fuel).not()
}

/// `out(p, ab)`: `a` and `b` lie on one ray from `p`.
pub fn out(p: &Point, a: &Point, b: &Point, fuel: &Fuel) -> Verdict {
    apart(p, a, fuel)
        .and(|| apart(p, b, fuel))
        .and(|| {
            between(p, a, b, fuel)
                .not()
                .and(|| between(p, b, a, fuel).not())
                .not()
        })
}

/// Some pair of points on line `ab` lies on opposite sides of `cd`, with `x`
/// left of `cd` and `y` left of `dc`. `Holds` carries `[x, y]`.
fn straddles(a: &Point, b: &Point, c: &Point, d: &Point, fuel: &Fuel) -> Verdict {
    let dir = vec2::sub(&vec2::of(b), &vec2::of(a));
    let other = vec2::sub(&vec2::of(d), &vec2::of(c));
    let skew = vec2::cross(&dir, &other);
    let pos = skew.positive(fuel);
    let skew_positive = pos.holds();
    let decided = pos.or(|| skew.neg().positive(fuel));
    match decided {
        Verdict::Holds(w) => match straddle_points(a, &dir, c, &other, &skew, skew_positive, fuel) {
            Some(points) => Verdict::Holds(Witness::All(vec![w, Witness::Points(points)])),
            None => Verdict::Holds(w),
        },
        other => other,
    }
}

/// Points `P ± dir` around the intersection `P` of the two lines.
fn straddle_points(
    a: &Point,
    dir: &vec2::V,
    c: &Point,
    other: &vec2::V,
    skew: &Scalar,
    skew_positive: bool,
    fuel: &Fuel,
) -> Option<Vec<Point>> {
    let pa = vec2::of(a);
    let t = vec2::cross(&vec2::sub(&vec2::of(c), &pa), other)
        .div(skew, fuel)
        .ok()?;
    let hit = vec2::add(&pa, &vec2::mul(dir, &t));
    let fwd = vec2::point(vec2::add(&hit, dir));
    let back = vec2::point(vec2::sub(&hit, dir));
    // Left(hit + dir, cd) iff cross(other, dir) > 0 iff skew < 0.
    Some(if skew_positive { vec![back, fwd] } else { vec![fwd, back] })
}

pub fn parallel(a: &Point, b: &Point, c: &Point, d: &Point, fuel: &Fuel) -> Verdict {
    apart(a, b, fuel)
        .and(|| apart(c, d, fuel))
        .and(|| straddles(a, b, c, d, fuel).not())
}

/// Evaluates a relation on an ordered point list.
pub fn relation(kind: RelationKind, points: &[Point], fuel: &Fuel) -> Result<Verdict, KernelError> {
    if points.len() != kind.arity() {
        return Err(KernelError::ArityMismatch {
            relation: kind.name().to_string(),
            expected: kind.arity(),
            got: points.len(),
        });
    }
    let p = points;
    use RelationKind::*;
    Ok(match kind {
        PointApart => apart(&p[0], &p[1], fuel),
        LenApart => len_apart(&p[0], &p[1], &p[2], &p[3], fuel),
        GeLen => ge(&p[0], &p[1], &p[2], &p[3], fuel),
        PointSegApart => seg_apart(&p[0], &p[1], &p[2], fuel),
        Equiv => equiv(&p[0], &p[1], fuel),
        Col => col(&p[0], &p[1], &p[2], fuel),
        Between => between(&p[0], &p[1], &p[2], fuel),
        StrictBetween => strict_between(&p[0], &p[1], &p[2], fuel),
        Cong => cong(&p[0], &p[1], &p[2], &p[3], fuel),
        Out => out(&p[0], &p[1], &p[2], fuel),
        Parallel => parallel(&p[0], &p[1], &p[2], &p[3], fuel),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Real;

    fn p(x: i64, y: i64) -> Point {
        Point::int(x, y)
    }

    fn fuel() -> Fuel {
        Fuel::default()
    }

    #[test]
    fn seg_gt_examples() {
        let f = fuel();
        let s = |a, b| Segment::new(a, b);
        assert!(seg_gt(&s(p(0, 0), p(3, 0)), &s(p(0, 0), p(1, 0)), &f).holds());
        assert!(seg_gt(&s(p(0, 0), p(0, 0)), &s(p(0, 0), p(0, 0)), &f).fails());
        assert!(seg_gt(&s(p(0, 0), p(1, 0)), &s(p(0, 0), p(1, 1)), &f).fails());
    }

    #[test]
    fn left_examples() {
        let f = fuel();
        let bc = Segment::new(p(0, 0), p(1, 0));
        assert!(left(&p(0, 1), &bc, &f).holds());
        assert!(left(&p(0, 0), &bc, &f).fails());
        assert!(left(&p(0, -1), &bc, &f).fails());
    }

    #[test]
    fn relation_examples() {
        let f = fuel();
        let r = |k, pts: &[Point]| relation(k, pts, &f).unwrap();
        assert!(r(RelationKind::Equiv, &[p(1, 2), p(1, 2)]).holds());
        assert!(r(RelationKind::Between, &[p(0, 0), p(1, 0), p(2, 0)]).holds());
        assert!(r(RelationKind::Cong, &[p(0, 0), p(1, 0), p(5, 5), p(5, 6)]).holds());
        assert!(r(RelationKind::Parallel, &[p(0, 0), p(1, 0), p(0, 1), p(1, 1)]).holds());
        let v = r(RelationKind::Parallel, &[p(0, 0), p(1, 0), p(0, 0), p(0, 1)]);
        assert!(v.fails());
        let pts = v.witness().unwrap().points();
        assert_eq!(pts.len(), 2);
        assert!(left_of(&pts[0], &p(0, 0), &p(0, 1), &f).holds());
        assert!(left_of(&pts[1], &p(0, 1), &p(0, 0), &f).holds());
        assert!(col(&pts[0], &p(0, 0), &p(1, 0), &f).holds());
        assert!(col(&pts[1], &p(0, 0), &p(1, 0), &f).holds());
    }

    #[test]
    fn arity_is_checked() {
        let err = relation(RelationKind::Cong, &[p(0, 0)], &fuel()).unwrap_err();
        assert!(matches!(err, KernelError::ArityMismatch { expected: 4, got: 1, .. }));
    }

    #[test]
    fn approximate_inputs_never_certify_negative_relations() {
        let f = Fuel::with_max_index(1 << 10);
        let a = Point::from_reals(Real::from_integer(1), Real::from_integer(2));
        let b = Point::from_reals(Real::from_integer(1), Real::from_integer(2));
        assert!(equiv(&a, &b, &f).is_unknown());
        let c = Point::from_reals(Real::from_integer(4), Real::from_integer(2));
        assert!(equiv(&a, &c, &f).fails());
        assert!(apart(&a, &c, &f).holds());
    }

    #[test]
    fn out_requires_same_ray() {
        let f = fuel();
        assert!(out(&p(0, 0), &p(1, 0), &p(3, 0), &f).holds());
        assert!(out(&p(0, 0), &p(1, 0), &p(-3, 0), &f).fails());
        assert!(out(&p(0, 0), &p(0, 0), &p(3, 0), &f).fails());
    }

    #[test]
    fn names_round_trip() {
        for k in RelationKind::ALL {
            assert_eq!(k.name().parse::<RelationKind>().unwrap(), k);
        }
    }
}
