//! Hypotheses and conclusions of every axiom and auxiliary theorem.

use super::AxiomId;
use crate::construct::{
    build_sl_instance, compass_compass, cotrans_points, extend, midpoint, nontrivial_pair,
    outer_pasch, parallelogram_fourth, plane_separation, straightedge_compass, ConstructError,
    ConstructionResult,
};
use crate::exact::Fuel;
use crate::kernel::{
    angle_cong, angle_lt, angle_sum_check, apart, between, col, collinear_case, cong, equiv, ge,
    gt, left_of, out, parallel, seg_apart, strict_between, AngleTriple, KernelError, Point,
};
use crate::verdict::Verdict;

pub(crate) struct Evaluation {
    pub hypothesis: Verdict,
    pub conclusion: Option<Verdict>,
}

fn imp(hypothesis: Verdict, conclusion: impl FnOnce() -> Verdict) -> Evaluation {
    let conclusion = hypothesis.holds().then(conclusion);
    Evaluation { hypothesis, conclusion }
}

fn all(vs: impl IntoIterator<Item = Verdict>) -> Verdict {
    vs.into_iter().fold(Verdict::exact(true), |acc, v| acc.and(|| v))
}

/// Angle relations reject degenerate angles; as a formula they are false.
fn angular(r: Result<Verdict, KernelError>) -> Verdict {
    r.unwrap_or_else(|_| Verdict::exact(false))
}

fn certified(r: Result<ConstructionResult, ConstructError>) -> Verdict {
    match r {
        Ok(res) => all(res.certificates.into_iter().map(|c| c.verdict)),
        Err(_) => Verdict::exact(false),
    }
}

fn tri(a: &Point, b: &Point, c: &Point) -> AngleTriple {
    AngleTriple::new(a.clone(), b.clone(), c.clone())
}

/// Sign of `|cx|² − |ay|²` as a function of the sign of `|cb|² − |ab|²` for
/// the bisector feet `x` (from `c`) and `y` (from `a`): the longer side
/// faces the larger angle, whose bisector is the shorter one.
pub fn sl_sign_law(side_sign: i32) -> i32 {
    side_sign
}

pub(crate) fn evaluate(axiom: AxiomId, p: &[Point], f: &Fuel) -> Evaluation {
    use AxiomId::*;
    let cong_a = |x: &AngleTriple, y: &AngleTriple| angular(angle_cong(x, y, f));
    match axiom {
        U1 => imp(Verdict::exact(true), || ge(&p[1], &p[2], &p[0], &p[0], f)),
        U2 => imp(gt(&p[0], &p[1], &p[2], &p[3], f), || ge(&p[0], &p[1], &p[2], &p[3], f)),
        U3 => imp(gt(&p[1], &p[0], &p[0], &p[2], f), || apart(&p[1], &p[2], f)),
        U4 => imp(
            gt(&p[0], &p[1], &p[2], &p[3], f).and(|| ge(&p[2], &p[3], &p[4], &p[5], f)),
            || gt(&p[0], &p[1], &p[4], &p[5], f),
        ),
        U5 => imp(
            ge(&p[0], &p[1], &p[2], &p[3], f).and(|| gt(&p[2], &p[3], &p[4], &p[5], f)),
            || gt(&p[0], &p[1], &p[4], &p[5], f),
        ),
        U6 => imp(
            between(&p[0], &p[1], &p[2], f).and(|| apart(&p[1], &p[2], f)),
            || gt(&p[0], &p[2], &p[0], &p[1], f),
        ),
        U7 => imp(left_of(&p[0], &p[1], &p[2], f), || left_of(&p[1], &p[2], &p[0], f)),
        U8 => imp(left_of(&p[0], &p[1], &p[2], f), || apart(&p[1], &p[2], f)),
        U9 => imp(
            between(&p[0], &p[1], &p[3], f).and(|| between(&p[1], &p[2], &p[3], f)),
            || between(&p[0], &p[1], &p[2], f),
        ),
        U10 => {
            let [a, b, c, d, w, x, y, z] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5], &p[6], &p[7]];
            imp(
                all([
                    apart(a, b, f),
                    between(a, b, c, f),
                    between(w, x, y, f),
                    cong(a, b, w, x, f),
                    cong(b, c, x, y, f),
                    cong(a, d, w, z, f),
                    cong(b, d, x, z, f),
                ]),
                || cong(c, d, y, z, f),
            )
        }
        U11 => {
            let [a, b, c, x, y] = [&p[0], &p[1], &p[2], &p[3], &p[4]];
            imp(
                all([cong(a, x, a, y, f), cong(b, x, b, y, f), cong(c, x, c, y, f), apart(x, y, f)]),
                || col(a, b, c, f),
            )
        }
        U12 => {
            let [a, b, x, y, z] = [&p[0], &p[1], &p[2], &p[3], &p[4]];
            imp(
                all([left_of(x, a, b, f), left_of(y, a, b, f), between(x, z, y, f)]),
                || left_of(z, a, b, f),
            )
        }
        U13 => {
            let [a, b, c, y] = [&p[0], &p[1], &p[2], &p[3]];
            imp(
                all([seg_apart(a, b, c, f), apart(y, b, f), col(y, a, b, f)]),
                || seg_apart(y, b, c, f),
            )
        }
        C1 => {
            let [a, b, c] = [&p[0], &p[1], &p[2]];
            let w = apart(a, b, f);
            imp(w.clone(), || match cotrans_points(a, b, c, &w, f) {
                Ok(side) => side.verdict().clone(),
                Err(_) => Verdict::exact(false),
            })
        }
        C2 => {
            let [a, b, u, v] = [&p[0], &p[1], &p[2], &p[3]];
            imp(left_of(u, a, b, f).and(|| left_of(v, b, a, f)), || {
                certified(plane_separation(a, b, u, v, f))
            })
        }
        C3 => imp(Verdict::exact(true), || certified(Ok(nontrivial_pair(f)))),
        C4 => {
            let [a, b, c, d] = [&p[0], &p[1], &p[2], &p[3]];
            imp(apart(a, b, f).and(|| between(c, b, d, f)), || {
                certified(straightedge_compass(a, b, c, d, f))
            })
        }
        C5 => {
            let [a, b, c, d, pp, q] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]];
            imp(
                all([
                    apart(a, c, f),
                    cong(a, b, a, pp, f),
                    gt(c, d, c, pp, f),
                    cong(c, d, c, q, f),
                    gt(a, b, a, q, f),
                ]),
                || certified(compass_compass(a, b, c, d, pp, q, f)),
            )
        }
        ThmCollinearCases => {
            let [a, b, c] = [&p[0], &p[1], &p[2]];
            imp(col(a, b, c, f), || match collinear_case(a, b, c) {
                Ok(case) => Verdict::exact(case.holds_for(a, b, c, f)),
                Err(_) => Verdict::exact(false),
            })
        }
        E4 => {
            let [a, b, c, x, y, z] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]];
            imp(
                all([
                    apart(a, b, f),
                    apart(a, c, f),
                    apart(b, c, f),
                    apart(x, y, f),
                    apart(x, z, f),
                    apart(y, z, f),
                    cong(a, b, x, y, f),
                    cong(b, c, y, z, f),
                    cong_a(&tri(a, b, c), &tri(x, y, z)),
                ]),
                || {
                    all([
                        cong(a, c, x, z, f),
                        cong_a(&tri(b, a, c), &tri(y, x, z)),
                        cong_a(&tri(b, c, a), &tri(y, z, x)),
                    ])
                },
            )
        }
        E5 => {
            let [a, b, c, x, y] = [&p[0], &p[1], &p[2], &p[3], &p[4]];
            imp(
                all([
                    cong(a, b, a, c, f),
                    seg_apart(a, b, c, f),
                    strict_between(a, b, x, f),
                    strict_between(a, c, y, f),
                ]),
                || all([cong_a(&tri(a, b, c), &tri(a, c, b)), cong_a(&tri(x, b, c), &tri(y, c, b))]),
            )
        }
        E6 => {
            let [a, b, c] = [&p[0], &p[1], &p[2]];
            imp(
                seg_apart(c, a, b, f).and(|| cong_a(&tri(c, a, b), &tri(c, b, a))),
                || cong(c, a, c, b, f),
            )
        }
        E10 => imp(apart(&p[0], &p[1], f), || certified(midpoint(&p[0], &p[1], f))),
        E15 => {
            let [a, b, c, x, y] = [&p[0], &p[1], &p[2], &p[3], &p[4]];
            imp(
                strict_between(a, b, x, f).and(|| strict_between(c, b, y, f)),
                || cong_a(&tri(a, b, c), &tri(x, b, y)),
            )
        }
        E18 => {
            let [a, b, c] = [&p[0], &p[1], &p[2]];
            imp(seg_apart(a, b, c, f).and(|| gt(a, c, a, b, f)), || {
                angular(angle_lt(&tri(b, c, a), &tri(a, b, c), f))
            })
        }
        E25 => {
            let [a, b, c, d, e, ff] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]];
            imp(
                all([
                    seg_apart(a, b, c, f),
                    seg_apart(d, e, ff, f),
                    cong(a, b, d, e, f),
                    cong(a, c, d, ff, f),
                    gt(b, c, e, ff, f),
                ]),
                || angular(angle_lt(&tri(e, d, ff), &tri(b, a, c), f)),
            )
        }
        E27 => {
            let [a, b, c, d, x, y] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]];
            imp(
                all([
                    col(x, a, b, f),
                    col(y, c, d, f),
                    apart(a, b, f),
                    apart(c, d, f),
                    left_of(a, y, x, f),
                    left_of(c, x, y, f),
                    cong_a(&tri(a, x, y), &tri(c, y, x)),
                ]),
                || parallel(a, b, c, d, f),
            )
        }
        GeoExtend => {
            let [q, a, b, c] = [&p[0], &p[1], &p[2], &p[3]];
            imp(apart(q, a, f), || certified(extend(q, a, b, c, f)))
        }
        IntersectionUnicity => {
            let [a, b, c, d, pp, q] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]];
            imp(
                all([
                    col(a, b, c, f).not(),
                    apart(c, d, f),
                    col(a, b, pp, f),
                    col(a, b, q, f),
                    col(c, d, pp, f),
                    col(c, d, q, f),
                ]),
                || equiv(pp, q, f),
            )
        }
        LeftConvexLemma => {
            let [a, b, x, y] = [&p[0], &p[1], &p[2], &p[3]];
            imp(
                left_of(x, a, b, f).and(|| out(a, x, y, f).or(|| out(b, x, y, f))),
                || left_of(y, a, b, f),
            )
        }
        GeoLeftOut => {
            let [a, b, c, x] = [&p[0], &p[1], &p[2], &p[3]];
            imp(left_of(x, a, b, f).and(|| out(a, b, c, f)), || left_of(x, a, c, f))
        }
        StrictBetweenLeftRight => {
            let [a, b, c, x, y] = [&p[0], &p[1], &p[2], &p[3], &p[4]];
            imp(
                all([left_of(x, a, b, f), col(a, b, c, f), strict_between(x, c, y, f)]),
                || left_of(y, b, a, f),
            )
        }
        OuterPasch => {
            let [a, b, c, x, q] = [&p[0], &p[1], &p[2], &p[3], &p[4]];
            imp(
                all([seg_apart(x, b, q, f), strict_between(b, q, c, f), strict_between(q, x, a, f)]),
                || certified(outer_pasch(a, b, c, x, q, f)),
            )
        }
        AngleSumLt4 => {
            let t = |i: usize| tri(&p[3 * i], &p[3 * i + 1], &p[3 * i + 2]);
            let (abc, xyz, ijk, abc2, xyz2, ijk2) = (t(0), t(1), t(2), t(3), t(4), t(5));
            let sep = |t: &AngleTriple| seg_apart(&t.arm1, &t.vertex, &t.arm2, f);
            imp(
                all([
                    angular(angle_sum_check(&abc, &xyz, &ijk, f)),
                    angular(angle_sum_check(&abc2, &xyz2, &ijk2, f)),
                    cong_a(&ijk, &ijk2),
                    sep(&abc2),
                    sep(&xyz2),
                    sep(&xyz),
                    sep(&ijk),
                    angular(angle_lt(&xyz2, &xyz, f)),
                ]),
                || angular(angle_lt(&abc, &abc2, f)),
            )
        }
        LemParallelogram => {
            let [a, b, c, x, y] = [&p[0], &p[1], &p[2], &p[3], &p[4]];
            imp(
                all([seg_apart(a, b, c, f), strict_between(a, x, b, f), strict_between(c, y, b, f)]),
                || match parallelogram_fourth(a, x, y, f) {
                    Ok(res) => {
                        let t = res.point().clone();
                        certified(Ok(res)).and(|| seg_apart(&t, b, c, f))
                    }
                    Err(_) => Verdict::exact(false),
                },
            )
        }
        SteinerLehmus => {
            let [a, b, c] = [&p[0], &p[1], &p[2]];
            imp(seg_apart(a, b, c, f), || match build_sl_instance(a, b, c, f) {
                Ok(sl) => {
                    let law = match (sl.bisector_sign(), sl.side_sign()) {
                        (Some(bis), Some(side)) => Verdict::exact(bis == sl_sign_law(side)),
                        _ => Verdict::Unknown { fuel_spent: f.max_index },
                    };
                    let forward = cong(a, &sl.y, c, &sl.x, f).implies(|| cong(a, b, c, b, f));
                    all(sl.certificates.into_iter().map(|c| c.verdict)).and(|| law).and(|| forward)
                }
                Err(_) => Verdict::exact(false),
            })
        }
    }
}
