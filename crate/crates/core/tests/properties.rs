use apartness::construct::{compass_compass, midpoint, parallelogram_fourth, straightedge_compass, build_sl_instance};
use apartness::exact::{is_regular_on, real_cotrans, real_gt, verify_gt_witness, Cotrans, Real};
use apartness::kernel::{angle_cong, apart, between, col, cong, equiv, relation, AngleTriple, RelationKind};
use apartness::script::{eval_script, parse_script, AssertRel, EmitFormat, ScriptProgram, Stmt};
use apartness::{Fuel, Point, Rational, Verdict, Witness};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn point() -> impl Strategy<Value = Point> {
    (rat(), rat()).prop_map(|(x, y)| Point::rational(x, y))
}

fn small_point() -> impl Strategy<Value = Point> {
    (-3i64..=3, -3i64..=3).prop_map(|(x, y)| Point::int(x, y))
}

fn f() -> Fuel {
    Fuel::default()
}

/// Rotation by the Pythagorean angle (3/5, 4/5) about the origin, plus a shift.
fn moved(p: &Point, dx: i64, dy: i64) -> Point {
    let (x, y) = p.rational_hint().unwrap();
    let c = Rational::new(3, 5).unwrap();
    let s = Rational::new(4, 5).unwrap();
    Point::rational(
        &(&(&c * &x) - &(&s * &y)) + &Rational::from_integer(dx),
        &(&(&s * &x) + &(&c * &y)) + &Rational::from_integer(dy),
    )
}

fn verdict() -> impl Strategy<Value = Verdict> {
    prop_oneof![
        Just(Verdict::exact(true)),
        Just(Verdict::exact(false)),
        Just(Verdict::Unknown { fuel_spent: 1 }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rationals_embed_regularly(q in rat(), r in rat()) {
        let idx = [1, 2, 3, 7, 16, 100, 1024];
        let (a, b) = (Real::from_rational(&q), Real::from_rational(&r));
        prop_assert!(is_regular_on(&a, &idx));
        prop_assert!(is_regular_on(&(&a + &b), &idx));
        prop_assert!(is_regular_on(&(&a * &b), &idx));
        let root = Real::from_rational(&q.abs()).sqrt_nonneg(&f()).unwrap();
        prop_assert!(is_regular_on(&root, &idx));
    }

    #[test]
    fn real_gt_is_sound_and_complete_on_rationals(q in rat(), r in rat()) {
        let v = real_gt(&Real::from_rational(&q), &Real::from_rational(&r), &f());
        prop_assert_eq!(v.holds(), q > r);
        if let Verdict::Holds(Witness::Index(w)) = v {
            prop_assert!(verify_gt_witness(&Real::from_rational(&q), &Real::from_rational(&r), w));
        }
    }

    #[test]
    fn sums_track_rationals(q in rat(), r in rat(), k in 1u64..10_000) {
        let s = &Real::from_rational(&q) + &Real::from_rational(&r);
        let err = (&s.approx(k) - &(&q + &r)).abs();
        prop_assert!(err <= Rational::new(1, k as i64).unwrap());
    }

    #[test]
    fn cotransitivity_witnesses_reverify(q in rat(), r in rat(), z in rat()) {
        let (a, b, c) = (Real::from_rational(&q), Real::from_rational(&r), Real::from_rational(&z));
        if let Verdict::Holds(Witness::Index(w)) = real_gt(&a, &b, &f()) {
            match real_cotrans(&a, &b, &c, w).unwrap() {
                Cotrans::Left(v) => prop_assert!(verify_gt_witness(&a, &c, v) && q > z),
                Cotrans::Right(v) => prop_assert!(verify_gt_witness(&c, &b, v) && z > r),
            }
        }
    }

    #[test]
    fn kleene_connectives(a in verdict(), b in verdict()) {
        let label = |v: Verdict| v.label();
        prop_assert_eq!(label(a.clone().and(|| b.clone())), label(b.clone().and(|| a.clone())));
        prop_assert_eq!(label(a.clone().or(|| b.clone())), label(b.clone().or(|| a.clone())));
        prop_assert_eq!(
            label(a.clone().and(|| b.clone()).not()),
            label(a.clone().not().or(|| b.clone().not()))
        );
        prop_assert_eq!(label(a.clone().not().not()), label(a.clone()));
        prop_assert_eq!(label(a.clone().implies(|| b.clone())), label(a.not().or(|| b)));
    }

    #[test]
    fn betweenness_and_collinearity_symmetries(a in small_point(), b in small_point(), c in small_point()) {
        let fu = f();
        prop_assert_eq!(between(&a, &b, &c, &fu).holds(), between(&c, &b, &a, &fu).holds());
        let base = col(&a, &b, &c, &fu).holds();
        for (x, y, z) in [(&a, &c, &b), (&b, &a, &c), (&b, &c, &a), (&c, &a, &b), (&c, &b, &a)] {
            prop_assert_eq!(col(x, y, z, &fu).holds(), base);
        }
        if between(&a, &b, &c, &fu).holds() {
            prop_assert!(base);
        }
    }

    #[test]
    fn congruence_is_an_equivalence(a in small_point(), b in small_point(), c in small_point(), d in small_point(), e in small_point(), g in small_point()) {
        let fu = f();
        prop_assert!(cong(&a, &b, &a, &b, &fu).holds());
        prop_assert!(cong(&a, &b, &b, &a, &fu).holds());
        prop_assert_eq!(cong(&a, &b, &c, &d, &fu).holds(), cong(&c, &d, &a, &b, &fu).holds());
        if cong(&a, &b, &c, &d, &fu).holds() && cong(&c, &d, &e, &g, &fu).holds() {
            prop_assert!(cong(&a, &b, &e, &g, &fu).holds());
        }
        prop_assert!(equiv(&a, &a, &fu).holds());
        prop_assert_eq!(equiv(&a, &b, &fu).holds(), equiv(&b, &a, &fu).holds());
        if equiv(&a, &b, &fu).holds() && equiv(&b, &c, &fu).holds() {
            prop_assert!(equiv(&a, &c, &fu).holds());
        }
        prop_assert_eq!(equiv(&a, &b, &fu).holds(), !apart(&a, &b, &fu).holds());
    }

    #[test]
    fn angle_congruence_is_an_equivalence(a in point(), b in point(), c in point(), dx in -5i64..5, dy in -5i64..5) {
        let fu = f();
        prop_assume!(apart(&a, &b, &fu).holds() && apart(&c, &b, &fu).holds());
        let abc = AngleTriple::new(a.clone(), b.clone(), c.clone());
        let cba = AngleTriple::new(c.clone(), b.clone(), a.clone());
        let once = AngleTriple::new(moved(&a, dx, dy), moved(&b, dx, dy), moved(&c, dx, dy));
        let twice = AngleTriple::new(
            moved(&moved(&a, dx, dy), dy, dx),
            moved(&moved(&b, dx, dy), dy, dx),
            moved(&moved(&c, dx, dy), dy, dx),
        );
        prop_assert!(angle_cong(&abc, &abc, &fu).unwrap().holds());
        prop_assert!(angle_cong(&abc, &cba, &fu).unwrap().holds());
        prop_assert!(angle_cong(&abc, &once, &fu).unwrap().holds());
        prop_assert!(angle_cong(&once, &abc, &fu).unwrap().holds());
        prop_assert!(angle_cong(&once, &twice, &fu).unwrap().holds());
        prop_assert!(angle_cong(&abc, &twice, &fu).unwrap().holds());
    }

    #[test]
    fn rigid_motions_preserve_relations(a in point(), b in point(), c in point(), d in point(), dx in -5i64..5, dy in -5i64..5) {
        let fu = f();
        let pts = [a, b, c, d];
        let moved_pts: Vec<Point> = pts.iter().map(|p| moved(p, dx, dy)).collect();
        for kind in RelationKind::ALL {
            let n = kind.arity();
            prop_assert_eq!(
                relation(kind, &pts[..n], &fu).unwrap().holds(),
                relation(kind, &moved_pts[..n], &fu).unwrap().holds(),
                "{}", kind
            );
        }
    }

    #[test]
    fn fuel_is_monotone(q in 1i64..200, r in 1i64..200, lo in 1u64..64) {
        // Irrational lengths force the approximate path.
        let x = Real::from_integer(q).sqrt_nonneg(&f()).unwrap();
        let y = Real::from_integer(r).sqrt_nonneg(&f()).unwrap();
        let a = Point::from_reals(Real::zero(), Real::zero());
        let b = Point::from_reals(x, Real::zero());
        let c = Point::from_reals(Real::zero(), y);
        let small = Fuel::with_max_index(lo);
        let large = Fuel::with_max_index(lo * 1024);
        for kind in [RelationKind::PointApart, RelationKind::LenApart, RelationKind::PointSegApart, RelationKind::Cong] {
            let pts = [a.clone(), b.clone(), a.clone(), c.clone()];
            let n = kind.arity();
            let at_small = relation(kind, &pts[..n], &small).unwrap();
            let at_large = relation(kind, &pts[..n], &large).unwrap();
            if at_small.holds() { prop_assert!(at_large.holds(), "{}", kind); }
            if at_small.fails() { prop_assert!(at_large.fails(), "{}", kind); }
        }
    }

    #[test]
    fn straightedge_compass_keeps_b_apart_from_u(a in small_point(), b in small_point(), c in small_point(), t in 1i64..4) {
        let fu = f();
        // d on ray c→b at or beyond b.
        let (bx, by) = b.rational_hint().unwrap();
        let (cx, cy) = c.rational_hint().unwrap();
        let k = Rational::new(t, 2).unwrap() + Rational::one();
        let d = Point::rational(&cx + &(&k * &(&bx - &cx)), &cy + &(&k * &(&by - &cy)));
        if let Ok(r) = straightedge_compass(&a, &b, &c, &d, &fu) {
            prop_assert!(r.all_hold());
            if apart(&b, &d, &fu).holds() {
                prop_assert!(apart(&b, r.point(), &fu).holds());
            }
        }
    }

    #[test]
    fn compass_compass_lands_left(ax in -4i64..4, ay in -4i64..4, e in 1i64..6, r1 in 1i64..6, r2 in 1i64..6) {
        let fu = f();
        let a = Point::int(ax, ay);
        let c = Point::int(ax + e, ay);
        let b = Point::int(ax + r1, ay);
        let d = Point::int(ax + e + r2, ay);
        let p = Point::int(ax + r1, ay);
        let q = Point::int(ax + e - r2, ay);
        if let Ok(r) = compass_compass(&a, &b, &c, &d, &p, &q, &fu) {
            prop_assert!(r.all_hold());
            prop_assert!(r.certificates.iter().any(|c| c.relation == "left" && c.verdict.holds()));
        }
    }

    #[test]
    fn parallelogram_diagonals_bisect(a in point(), x in point(), y in point()) {
        let fu = f();
        let r = parallelogram_fourth(&a, &x, &y, &fu).unwrap();
        let (t, m) = (&r.points[0], &r.points[1]);
        let m1 = midpoint(&a, t, &fu).map(|r| r.points[0].clone());
        let m2 = midpoint(&x, &y, &fu).map(|r| r.points[0].clone());
        if let (Ok(m1), Ok(m2)) = (m1, m2) {
            prop_assert!(m1.exact_eq(&m2) && m1.exact_eq(m));
        }
    }

    #[test]
    fn mirror_triangles_have_equal_bisectors(ax in 1i64..20, by in 1i64..20) {
        let fu = f();
        let sl = build_sl_instance(&Point::int(-ax, 0), &Point::int(0, by), &Point::int(ax, 0), &fu).unwrap();
        prop_assert!(sl.all_hold());
        prop_assert_eq!(sl.bisector_sign(), Some(0));
    }

    #[test]
    fn scripts_round_trip(prog in program()) {
        let text = prog.to_string();
        let parsed = parse_script(&text).unwrap();
        prop_assert_eq!(&parsed, &prog);
        prop_assert_eq!(parsed.to_string(), text);
    }

    #[test]
    fn script_evaluation_is_deterministic(prog in program()) {
        let a = eval_script(&prog, &f());
        let b = eval_script(&prog, &f());
        match (a, b) {
            (Ok(a), Ok(b)) => {
                prop_assert_eq!(a.report_json(), b.report_json());
                prop_assert_eq!(a.to_svg(), b.to_svg());
            }
            (Err(a), Err(b)) => prop_assert_eq!(a, b),
            _ => prop_assert!(false, "evaluation outcome differs"),
        }
    }
}

/// Random well-scoped programs: points first, then midpoints, assertions and emits.
fn program() -> impl Strategy<Value = ScriptProgram> {
    let decls = prop::collection::vec((rat(), rat()), 2..6);
    (decls, prop::collection::vec((0usize..4, any::<prop::sample::Index>(), any::<prop::sample::Index>(), prop::option::of(1u64..500)), 0..8))
        .prop_map(|(decls, ops)| {
            let mut statements = Vec::new();
            let mut names: Vec<String> = Vec::new();
            for (i, (x, y)) in decls.into_iter().enumerate() {
                let name = format!("p{i}");
                statements.push(Stmt::Point { name: name.clone(), x, y });
                names.push(name);
            }
            for (k, (op, i, j, fuel)) in ops.into_iter().enumerate() {
                let a = names[i.index(names.len())].clone();
                let b = names[j.index(names.len())].clone();
                let stmt = match op {
                    0 => {
                        let m = format!("m{k}");
                        let s = Stmt::Let {
                            names: vec![m.clone()],
                            construction: apartness::construct::ConstructionKind::Midpoint,
                            args: vec![a, b],
                        };
                        names.push(m);
                        s
                    }
                    1 => Stmt::Assert { relation: AssertRel::Relation(RelationKind::Cong), args: vec![a.clone(), b.clone(), b, a], fuel },
                    2 => Stmt::Assert { relation: AssertRel::Left, args: vec![a.clone(), b, a], fuel },
                    _ => Stmt::Emit { format: if k % 2 == 0 { EmitFormat::Json } else { EmitFormat::Svg }, path: format!("out \"{k}\".txt") },
                };
                statements.push(stmt);
            }
            let text: String = statements.iter().map(|s| format!("{s}\n")).collect();
            parse_script(&text).expect("generated programs parse")
        })
}
