use std::fmt::Write;

use super::eval::{ConstructionRecord, EvalEnv};
use crate::construct::ConstructionKind;
use crate::exact::Rational;
use crate::kernel::Point;

const SCALE: u64 = 10_000;

fn coord(p: &Point) -> (Rational, Rational) {
    let (x, y) = p.approx(SCALE * 100);
    let k = Rational::from_integer(SCALE);
    let round = |v: Rational| Rational::new((&v * &k).round_half_away(), SCALE).expect("nonzero");
    (round(x), round(-y))
}

fn fmt(q: &Rational) -> String {
    let s = q.to_decimal(4);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Segments, as name pairs, drawn for a construction.
fn strokes(c: &ConstructionRecord) -> Vec<(&str, &str)> {
    let a = |i: usize| c.args[i].as_str();
    let o = |i: usize| c.outputs[i].as_str();
    use ConstructionKind::*;
    match c.name {
        Midpoint => vec![(a(0), a(1))],
        Extend => vec![(a(0), o(0)), (a(2), a(3))],
        StraightedgeCompass => vec![(a(0), o(0)), (a(2), o(0))],
        CompassCompass => vec![(a(0), o(0)), (a(2), o(0)), (a(0), a(2))],
        PlaneSeparation => vec![(a(0), o(0)), (a(2), a(3))],
        OuterPasch => vec![(a(1), o(0)), (a(2), a(0))],
        ParallelogramFourth => vec![(a(0), a(1)), (a(1), o(0)), (o(0), a(2)), (a(2), a(0))],
        BisectorFoot => vec![(a(0), o(0)), (a(1), a(2))],
    }
}

/// Static SVG 1.1 figure of the bindings and constructed segments.
///
/// The y axis points up. Coordinates are rounded to `1/10⁴`, so equal
/// environments render to identical bytes.
pub(crate) fn render(env: &EvalEnv) -> String {
    let pts: Vec<(&str, (Rational, Rational))> = env.bindings().map(|(n, p)| (n, coord(p))).collect();
    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    if pts.is_empty() {
        out.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 1 1\"/>\n");
        return out;
    }
    let min = |f: fn(&(Rational, Rational)) -> &Rational| pts.iter().map(|(_, c)| f(c)).min().expect("nonempty").clone();
    let max = |f: fn(&(Rational, Rational)) -> &Rational| pts.iter().map(|(_, c)| f(c)).max().expect("nonempty").clone();
    let (x0, x1) = (min(|c| &c.0), max(|c| &c.0));
    let (y0, y1) = (min(|c| &c.1), max(|c| &c.1));
    let mut span = std::cmp::max(&x1 - &x0, &y1 - &y0);
    if span.is_zero() {
        span = Rational::one();
    }
    let tenth = Rational::new(1, 10).expect("nonzero");
    let w = std::cmp::max(&x1 - &x0, &tenth * &span);
    let h = std::cmp::max(&y1 - &y0, &tenth * &span);
    let margin_x = &w * &tenth;
    let margin_y = &h * &tenth;
    let two = Rational::from_integer(2);
    let vx = &(&x0 - &margin_x) - &(&(&w - &(&x1 - &x0)) / &two);
    let vy = &(&y0 - &margin_y) - &(&(&h - &(&y1 - &y0)) / &two);
    let vw = &w + &(&two * &margin_x);
    let vh = &h + &(&two * &margin_y);
    let r = &span / &Rational::from_integer(80);
    let font = &span / &Rational::from_integer(25);
    let stroke = &span / &Rational::from_integer(400);
    let round = |q: &Rational| fmt(&Rational::new((q * &Rational::from_integer(SCALE)).round_half_away(), SCALE).expect("nonzero"));
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        round(&vx),
        round(&vy),
        round(&vw),
        round(&vh)
    );
    let lookup = |n: &str| pts.iter().rev().find(|(m, _)| *m == n).map(|(_, c)| c);
    let _ = writeln!(out, "<g stroke=\"#333\" stroke-width=\"{}\">", round(&stroke));
    let mut drawn: Vec<(&str, &str)> = Vec::new();
    for c in &env.constructions {
        for (p, q) in strokes(c) {
            if p == q || drawn.contains(&(p, q)) || drawn.contains(&(q, p)) {
                continue;
            }
            drawn.push((p, q));
            let (a, b) = (lookup(p).expect("bound"), lookup(q).expect("bound"));
            let _ = writeln!(
                out,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                fmt(&a.0),
                fmt(&a.1),
                fmt(&b.0),
                fmt(&b.1)
            );
        }
    }
    out.push_str("</g>\n");
    let _ = writeln!(out, "<g font-family=\"sans-serif\" font-size=\"{}\">", round(&font));
    for (name, (x, y)) in &pts {
        let _ = writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#c00\"/><text x=\"{}\" y=\"{}\">{}</text>",
            fmt(x),
            fmt(y),
            round(&r),
            round(&(x + &r)),
            round(&(y - &r)),
            escape(name)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}
