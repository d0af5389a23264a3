mod common;

use std::collections::HashMap;

use apartness::kernel::{angle_cong, angle_lt, gt, left_of, relation, AngleTriple, RelationKind};
use apartness::{Fuel, Point};
use common::P;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn points(qs: &[P]) -> Vec<Point> {
    qs.iter().map(common::to_point).collect()
}

#[test]
fn every_relation_matches_its_formula() {
    let f = Fuel::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut seen: HashMap<RelationKind, [usize; 2]> = HashMap::new();
    for i in 0..3000 {
        let qs = common::tuple(&mut rng, 4);
        let pts = points(&qs);
        for kind in RelationKind::ALL {
            let n = kind.arity();
            let got = relation(kind, &pts[..n], &f).unwrap();
            let want = common::relation(kind, &qs[..n]);
            assert!(!got.is_unknown(), "tuple {i} {kind}: unknown on rational input");
            assert_eq!(got.holds(), want, "tuple {i} {kind} {:?}", &qs[..n]);
            seen.entry(kind).or_default()[want as usize] += 1;
        }
    }
    for kind in RelationKind::ALL {
        let [no, yes] = seen[&kind];
        assert!(no >= 50 && yes >= 50, "{kind} exercised {yes} true / {no} false");
    }
}

#[test]
fn atomic_predicates_match() {
    let f = Fuel::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..2000 {
        let qs = common::tuple(&mut rng, 4);
        let p = points(&qs);
        assert_eq!(left_of(&p[0], &p[1], &p[2], &f).holds(), common::left(&qs[0], &qs[1], &qs[2]));
        assert_eq!(gt(&p[0], &p[1], &p[2], &p[3], &f).holds(), common::gt(&qs[0], &qs[1], &qs[2], &qs[3]));
        assert!(!left_of(&p[0], &p[1], &p[2], &f).is_unknown());
    }
}

fn triple(p: &[Point]) -> AngleTriple {
    AngleTriple::new(p[0].clone(), p[1].clone(), p[2].clone())
}

#[test]
fn angle_relations_match_cosine_formula() {
    let f = Fuel::default();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let (mut cong_true, mut lt_true, mut total) = (0, 0, 0);
    for _ in 0..2000 {
        let mut qs = common::tuple(&mut rng, 3);
        // Half of the second angles are quarter-turn copies of the first.
        if rand::Rng::gen_bool(&mut rng, 0.5) {
            let rot: Vec<P> = qs.iter().map(|p| (-p.1.clone(), p.0.clone())).collect();
            qs.extend(rot);
        } else {
            qs.extend(common::tuple(&mut rng, 3));
        }
        let p = points(&qs);
        let (abc, xyz) = (triple(&p[..3]), triple(&p[3..]));
        let want_cong = common::angle_cong([&qs[0], &qs[1], &qs[2]], [&qs[3], &qs[4], &qs[5]]);
        let want_lt = common::angle_lt([&qs[0], &qs[1], &qs[2]], [&qs[3], &qs[4], &qs[5]]);
        match (want_cong, angle_cong(&abc, &xyz, &f)) {
            (None, r) => assert!(r.is_err()),
            (Some(w), Ok(v)) => {
                assert_eq!(v.holds(), w, "{qs:?}");
                assert!(!v.is_unknown());
                total += 1;
                cong_true += w as usize;
            }
            (Some(_), Err(e)) => panic!("{e:?} on {qs:?}"),
        }
        if let (Some(w), Ok(v)) = (want_lt, angle_lt(&abc, &xyz, &f)) {
            assert_eq!(v.holds(), w, "{qs:?}");
            lt_true += w as usize;
        }
    }
    assert!(cong_true > 200 && cong_true < total, "{cong_true}/{total}");
    assert!(lt_true > 200, "{lt_true}");
}
