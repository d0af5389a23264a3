//! Hypothesis-satisfying instance generators over rational coordinates.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::AxiomId;
use crate::exact::Rational;
use crate::kernel::Point;

/// Bounds for generated coordinates: numerators up to
/// `magnitude · denominator` over denominators `1..=denominator`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub magnitude: i64,
    pub denominator: i64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig { magnitude: 12, denominator: 4 }
    }
}

type Q2 = (Rational, Rational);

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

fn add(a: &Q2, b: &Q2) -> Q2 {
    (&a.0 + &b.0, &a.1 + &b.1)
}

fn sub(a: &Q2, b: &Q2) -> Q2 {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn scale(a: &Q2, t: &Rational) -> Q2 {
    (&a.0 * t, &a.1 * t)
}

/// `a + t(b − a)`
fn lerp(a: &Q2, b: &Q2, t: &Rational) -> Q2 {
    add(a, &scale(&sub(b, a), t))
}

fn perp(v: &Q2) -> Q2 {
    (-&v.1, v.0.clone())
}

fn cross(a: &Q2, b: &Q2) -> Rational {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn orient(a: &Q2, b: &Q2, p: &Q2) -> Rational {
    cross(&sub(b, a), &sub(p, a))
}

fn norm_sq(v: &Q2) -> Rational {
    &v.0 * &v.0 + &v.1 * &v.1
}

/// Rotation with rational `(cos, sin)`.
type Rot = (Rational, Rational);

fn rotate(v: &Q2, r: &Rot) -> Q2 {
    (&r.0 * &v.0 - &r.1 * &v.1, &r.1 * &v.0 + &r.0 * &v.1)
}

fn compose(r: &Rot, s: &Rot) -> Rot {
    (&r.0 * &s.0 - &r.1 * &s.1, &r.1 * &s.0 + &r.0 * &s.1)
}

fn inverse(r: &Rot) -> Rot {
    (r.0.clone(), -&r.1)
}

const TRIPLES: [(i64, i64, i64); 8] = [
    (3, 4, 5),
    (5, 12, 13),
    (8, 15, 17),
    (7, 24, 25),
    (20, 21, 29),
    (12, 35, 37),
    (9, 40, 41),
    (11, 60, 61),
];

/// Distance-preserving map `p ↦ R(σp) + shift`, `σ` an optional reflection.
struct Motion {
    rot: Rot,
    shift: Q2,
    reflect: bool,
}

impl Motion {
    fn apply(&self, p: &Q2) -> Q2 {
        let p = if self.reflect { (p.0.clone(), -&p.1) } else { p.clone() };
        add(&rotate(&p, &self.rot), &self.shift)
    }
}

struct Sampler {
    rng: ChaCha8Rng,
    cfg: GenConfig,
}

impl Sampler {
    fn new(seed: u64, cfg: GenConfig) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), cfg }
    }

    fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    fn coord(&mut self) -> Rational {
        let d = self.rng.gen_range(1..=self.cfg.denominator.max(1));
        let m = self.cfg.magnitude.max(1) * d;
        q(self.rng.gen_range(-m..=m), d)
    }

    fn point(&mut self) -> Q2 {
        (self.coord(), self.coord())
    }

    fn point_apart(&mut self, from: &Q2) -> Q2 {
        loop {
            let p = self.point();
            if p != *from {
                return p;
            }
        }
    }

    /// A rational strictly inside `(0, 1)`.
    fn unit_open(&mut self) -> Rational {
        let m = self.rng.gen_range(2..=9);
        q(self.rng.gen_range(1..m), m)
    }

    /// A rational in `[0, 1]`, hitting the endpoints now and then.
    fn unit_closed(&mut self) -> Rational {
        match self.rng.gen_range(0..10) {
            0 => q(0, 1),
            1 => q(1, 1),
            _ => self.unit_open(),
        }
    }

    /// A rational in `(1, 4]`.
    fn beyond(&mut self) -> Rational {
        q(1, 1) + self.unit_open() * q(self.rng.gen_range(1..=3), 1)
    }

    /// A nonzero rational in `[-3, 3]`.
    fn nonzero(&mut self) -> Rational {
        let t = self.unit_open() * q(self.rng.gen_range(1..=3), 1);
        if self.chance(0.5) {
            -t
        } else {
            t
        }
    }

    fn triple(&mut self) -> (Rational, Rational) {
        let (a, b, c) = TRIPLES[self.rng.gen_range(0..TRIPLES.len())];
        if self.chance(0.5) {
            (q(a, c), q(b, c))
        } else {
            (q(b, c), q(a, c))
        }
    }

    /// Any rational rotation, occasionally axis aligned.
    fn rotation(&mut self) -> Rot {
        if self.chance(0.1) {
            let (c, s) = [(1, 0), (0, 1), (-1, 0), (0, -1)][self.rng.gen_range(0..4)];
            return (q(c, 1), q(s, 1));
        }
        let (c, s) = self.triple();
        let c = if self.chance(0.5) { -c } else { c };
        let s = if self.chance(0.5) { -s } else { s };
        (c, s)
    }

    /// A rotation by an angle strictly between 0 and π/2.
    fn acute(&mut self) -> Rot {
        self.triple()
    }

    fn motion(&mut self) -> Motion {
        Motion { rot: self.rotation(), shift: self.point(), reflect: self.chance(0.5) }
    }

    fn triangle(&mut self) -> (Q2, Q2, Q2) {
        loop {
            let (a, b, c) = (self.point(), self.point(), self.point());
            if !orient(&a, &b, &c).is_zero() {
                return (a, b, c);
            }
        }
    }

    /// A point strictly left of `ab`, for `a ≠ b`.
    fn left_of(&mut self, a: &Q2, b: &Q2) -> Q2 {
        loop {
            let p = self.point();
            let o = orient(a, b, &p);
            if o.is_positive() {
                return p;
            }
            if o.is_negative() {
                return sub(&add(a, b), &p);
            }
        }
    }

    fn segment(&mut self) -> (Q2, Q2) {
        let a = self.point();
        (a.clone(), self.point_apart(&a))
    }
}

/// Three segments ordered by nonincreasing length.
fn sorted_segments(s: &mut Sampler) -> Vec<Q2> {
    let mut segs: Vec<(Q2, Q2)> = (0..3).map(|_| (s.point(), s.point())).collect();
    segs.sort_by_key(|x| std::cmp::Reverse(norm_sq(&sub(&x.1, &x.0))));
    segs.into_iter().flat_map(|(a, b)| [a, b]).collect()
}

/// An angle with vertex `v`, first arm along direction `dir`, opening by `r`.
fn angle_at(s: &mut Sampler, r: &Rot) -> Vec<Q2> {
    let v = s.point();
    let dir = rotate(&(q(1, 1), q(0, 1)), &s.rotation());
    let l1 = q(s.rng.gen_range(1..=6), s.rng.gen_range(1..=2));
    let l2 = q(s.rng.gen_range(1..=6), s.rng.gen_range(1..=2));
    let arm1 = add(&v, &scale(&dir, &l1));
    let arm2 = add(&v, &scale(&rotate(&dir, r), &l2));
    vec![arm1, v, arm2]
}

fn generate(axiom: AxiomId, s: &mut Sampler) -> Vec<Q2> {
    use AxiomId::*;
    match axiom {
        U1 => vec![s.point(), s.point(), s.point()],
        U2 => {
            let mut v = sorted_segments(s);
            v.truncate(4);
            v
        }
        U3 => {
            let (a, b, c) = (s.point(), s.point(), s.point());
            if norm_sq(&sub(&a, &b)) >= norm_sq(&sub(&c, &a)) {
                vec![a, b, c]
            } else {
                vec![a, c, b]
            }
        }
        U4 | U5 => sorted_segments(s),
        U6 => {
            let (a, c) = s.segment();
            let t = if s.chance(0.1) { q(0, 1) } else { s.unit_open() };
            let b = lerp(&a, &c, &t);
            vec![a, b, c]
        }
        U7 | U8 => {
            let (b, c) = s.segment();
            let a = s.left_of(&b, &c);
            vec![a, b, c]
        }
        U9 => {
            let (a, d) = s.segment();
            let b = lerp(&a, &d, &s.unit_closed());
            let c = lerp(&b, &d, &s.unit_closed());
            vec![a, b, c, d]
        }
        U10 => {
            let (a, c) = s.segment();
            let b = lerp(&a, &c, &s.unit_open());
            let d = s.point();
            let m = s.motion();
            let (w, x, y, z) = (m.apply(&a), m.apply(&b), m.apply(&c), m.apply(&d));
            vec![a, b, c, d, w, x, y, z]
        }
        U11 => {
            let (x, y) = s.segment();
            let mid = scale(&add(&x, &y), &q(1, 2));
            let n = perp(&sub(&y, &x));
            let mut on_bisector = || add(&mid, &scale(&n, &s.nonzero()));
            let (a, b, c) = (on_bisector(), on_bisector(), on_bisector());
            vec![a, b, c, x, y]
        }
        U12 => {
            let (a, b) = s.segment();
            let x = s.left_of(&a, &b);
            let y = s.left_of(&a, &b);
            let z = lerp(&x, &y, &s.unit_closed());
            vec![a, b, x, y, z]
        }
        U13 => {
            let (a, b, c) = s.triangle();
            let mut t = s.nonzero();
            if t == q(1, 1) {
                t = q(2, 1);
            }
            let y = lerp(&a, &b, &t);
            vec![a, b, c, y]
        }
        C1 => {
            let (a, b) = s.segment();
            let c = match s.rng.gen_range(0..4) {
                0 => a.clone(),
                1 => b.clone(),
                2 => lerp(&a, &b, &q(1, 2)),
                _ => s.point(),
            };
            vec![a, b, c]
        }
        C2 => {
            let (a, b) = s.segment();
            let u = s.left_of(&a, &b);
            let v = s.left_of(&b, &a);
            vec![a, b, u, v]
        }
        C3 => Vec::new(),
        C4 => {
            let (c, d) = s.segment();
            let b = lerp(&c, &d, &s.unit_closed());
            let a = s.point_apart(&b);
            vec![a, b, c, d]
        }
        C5 => {
            let a = s.point();
            let r1 = q(s.rng.gen_range(2..=12), s.rng.gen_range(1..=2));
            let r2 = q(s.rng.gen_range(2..=12), s.rng.gen_range(1..=2));
            // Centers at a rational distance strictly between |r1 − r2| and r1 + r2.
            let lo = (&r1 - &r2).abs();
            let dist = &lo + (&r1 + &r2 - &lo) * s.unit_open();
            let u = rotate(&(q(1, 1), q(0, 1)), &s.rotation());
            let c = add(&a, &scale(&u, &dist));
            let b = add(&a, &scale(&rotate(&u, &s.rotation()), &r1));
            let d = add(&c, &scale(&rotate(&u, &s.rotation()), &r2));
            let p = add(&a, &scale(&u, &r1));
            let qq = sub(&c, &scale(&u, &r2));
            vec![a, b, c, d, p, qq]
        }
        ThmCollinearCases => {
            let (a, b) = s.segment();
            let c = match s.rng.gen_range(0..6) {
                0 => a.clone(),
                1 => b.clone(),
                _ => lerp(&a, &b, &(q(s.rng.gen_range(-8..=12), 4))),
            };
            let mut v = vec![a, b, c];
            let k = s.rng.gen_range(0..3);
            v.rotate_left(k);
            v
        }
        E4 => {
            let (a, b, c) = s.triangle();
            let m = s.motion();
            let (x, y, z) = (m.apply(&a), m.apply(&b), m.apply(&c));
            vec![a, b, c, x, y, z]
        }
        E5 => {
            let (a, b) = s.segment();
            let c = add(&a, &rotate(&sub(&b, &a), &s.rotation()));
            let x = lerp(&a, &b, &s.beyond());
            let y = lerp(&a, &c, &s.beyond());
            vec![a, b, c, x, y]
        }
        E6 => {
            let (a, b) = s.segment();
            let mid = scale(&add(&a, &b), &q(1, 2));
            let c = add(&mid, &scale(&perp(&sub(&b, &a)), &s.nonzero()));
            vec![a, b, c]
        }
        E10 => {
            let (a, b) = s.segment();
            vec![a, b]
        }
        E15 => {
            let b = s.point();
            let a = s.point_apart(&b);
            let c = s.point_apart(&b);
            let x = lerp(&b, &a, &-s.beyond());
            let y = lerp(&b, &c, &-s.beyond());
            vec![a, b, c, x, y]
        }
        E18 => {
            let (a, b, c) = s.triangle();
            if norm_sq(&sub(&c, &a)) >= norm_sq(&sub(&b, &a)) {
                vec![a, b, c]
            } else {
                vec![a, c, b]
            }
        }
        E25 => {
            let (a, b, _) = s.triangle();
            let ab = sub(&b, &a);
            let len = q(s.rng.gen_range(1..=3), s.rng.gen_range(1..=2));
            let arm = scale(&ab, &len);
            let c = add(&a, &rotate(&arm, &s.acute()));
            let apex = compose(&s.acute(), &s.acute());
            let f0 = add(&a, &rotate(&arm, &apex));
            let m = s.motion();
            let (d, e, f) = (m.apply(&a), m.apply(&b), m.apply(&f0));
            if norm_sq(&sub(&c, &b)) >= norm_sq(&sub(&f0, &b)) {
                vec![a, b, c, d, e, f]
            } else {
                vec![d, e, f, a, b, c]
            }
        }
        E27 => {
            let (x, y) = s.segment();
            let o = scale(&add(&x, &y), &q(1, 2));
            let mut a = s.left_of(&y, &x);
            if s.chance(0.5) {
                a = add(&x, &scale(&rotate(&sub(&x, &y), &s.acute()), &q(1, 1)));
                if !orient(&y, &x, &a).is_positive() {
                    a = sub(&scale(&o, &q(2, 1)), &a);
                }
            }
            let c = sub(&scale(&o, &q(2, 1)), &a);
            let mut t = s.nonzero();
            if t == q(1, 1) {
                t = q(-1, 1);
            }
            let mut u = s.nonzero();
            if u == q(1, 1) {
                u = q(2, 1);
            }
            let b = lerp(&x, &a, &t);
            let d = lerp(&y, &c, &u);
            vec![a, b, c, d, x, y]
        }
        GeoExtend => {
            let (q0, a) = s.segment();
            let (b, c) = if s.chance(0.1) {
                let b = s.point();
                (b.clone(), b)
            } else {
                (s.point(), s.point())
            };
            vec![q0, a, b, c]
        }
        IntersectionUnicity => {
            let (a, b, c) = s.triangle();
            let t = if s.chance(0.2) { q(0, 1) } else { s.nonzero() };
            let p = lerp(&a, &b, &t);
            let d = lerp(&c, &p, &s.beyond());
            // The same intersection, recomputed from the two lines.
            let dir = sub(&b, &a);
            let lambda = cross(&sub(&c, &a), &sub(&d, &c)) / cross(&dir, &sub(&d, &c));
            let qq = add(&a, &scale(&dir, &lambda));
            vec![a, b, c, d, p, qq]
        }
        LeftConvexLemma => {
            let (a, b) = s.segment();
            let x = s.left_of(&a, &b);
            let from = if s.chance(0.5) { a.clone() } else { b.clone() };
            let t = if s.chance(0.5) { s.unit_open() } else { s.beyond() };
            let y = lerp(&from, &x, &t);
            vec![a, b, x, y]
        }
        GeoLeftOut => {
            let (a, b) = s.segment();
            let t = if s.chance(0.5) { s.unit_open() } else { s.beyond() };
            let c = lerp(&a, &b, &t);
            let x = s.left_of(&a, &b);
            vec![a, b, c, x]
        }
        StrictBetweenLeftRight => {
            let (a, b) = s.segment();
            let c = lerp(&a, &b, &q(s.rng.gen_range(-8..=12), 4));
            let x = s.left_of(&a, &b);
            let y = lerp(&c, &x, &-s.beyond());
            let y = if s.chance(0.5) { y } else { lerp(&c, &x, &(q(-1, 1) * s.unit_open())) };
            vec![a, b, c, x, y]
        }
        OuterPasch => {
            let (b, c) = s.segment();
            let qq = lerp(&b, &c, &s.unit_open());
            let a = loop {
                let a = s.point();
                if !orient(&b, &c, &a).is_zero() {
                    break a;
                }
            };
            let x = lerp(&qq, &a, &s.unit_open());
            vec![a, b, c, x, qq]
        }
        AngleSumLt4 => {
            let alpha = s.acute();
            let (beta, beta2) = {
                let (r1, r2) = (s.acute(), s.acute());
                // Larger cosine means the smaller angle.
                if r1.0 < r2.0 {
                    (r1, r2)
                } else {
                    (r2, r1)
                }
            };
            let total = compose(&alpha, &beta);
            let alpha2 = compose(&total, &inverse(&beta2));
            let mut pts = Vec::new();
            for r in [&alpha, &beta, &total, &alpha2, &beta2, &total] {
                pts.extend(angle_at(s, r));
            }
            pts
        }
        LemParallelogram => {
            let (a, b, c) = s.triangle();
            let x = lerp(&a, &b, &s.unit_open());
            let y = lerp(&c, &b, &s.unit_open());
            vec![a, b, c, x, y]
        }
        SteinerLehmus => {
            if s.chance(0.2) {
                // Mirror-symmetric triangle: b on the perpendicular bisector of ac.
                let (a, c) = s.segment();
                let mid = scale(&add(&a, &c), &q(1, 2));
                let b = add(&mid, &scale(&perp(&sub(&c, &a)), &s.nonzero()));
                vec![a, b, c]
            } else {
                let (a, b, c) = s.triangle();
                vec![a, b, c]
            }
        }
    }
}

/// Rational points for `axiom`, reproducible from `seed`.
pub fn generate_instance(axiom: AxiomId, seed: u64) -> Vec<Point> {
    generate_instance_with(axiom, seed, GenConfig::default())
}

pub fn generate_instance_with(axiom: AxiomId, seed: u64, cfg: GenConfig) -> Vec<Point> {
    let mut s = Sampler::new(seed, cfg);
    generate(axiom, &mut s)
        .into_iter()
        .map(|(x, y)| Point::rational(x, y))
        .collect()
}
