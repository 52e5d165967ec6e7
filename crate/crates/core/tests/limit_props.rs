mod common;

use proptest::prelude::*;
use ratlimit::algebraic::RealAlgebraic;
use ratlimit::arith::{rfrac, rint, Rational};
use ratlimit::bipoly::BiPoly;
use ratlimit::limit::{bilimit, bilimit_with, ExtReal, LimitOptions, RangeInterval, Verdict};
use ratlimit::parse::parse_poly;

use common::arb_poly_at_origin;

const ISOLATED: [&str; 6] = ["x^2 + y^2", "2*x^2 + x*y + y^2", "x^2 + y^4", "x^4 + y^2", "x^4 + y^4", "x^2 - 2*x*y + 2*y^2"];

/// Denominator with an isolated zero at the origin: a definite form times a
/// factor that is a unit there.
fn arb_isolated() -> impl Strategy<Value = BiPoly> {
    (prop::sample::select(ISOLATED.to_vec()), arb_poly_at_origin(3, 2))
        .prop_map(|(g, u)| &parse_poly(g).unwrap() * &(&BiPoly::one() + &u))
}

fn origin() -> (Rational, Rational) {
    (rint(0), rint(0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    // [TRIVIAL] a finite limit found with the range computed has range [L, L].
    #[test]
    fn finite_limit_has_point_range(f in arb_poly_at_origin(4, 4), g in arb_isolated()) {
        let (a, b) = origin();
        let out = bilimit_with(&f, &g, (&a, &b), &LimitOptions { compute_range: true }).unwrap();
        if let Verdict::Exists(l) = &out.verdict {
            prop_assert_eq!(out.range, Some(RangeInterval::point(ExtReal::Finite(l.clone()))));
        }
    }

    // [DERIVED] a common factor that is a unit at the point cancels.
    #[test]
    fn common_unit_factor_cancels(f in arb_poly_at_origin(4, 4), g in arb_isolated(), q in arb_poly_at_origin(2, 2), k in 1i64..=3) {
        let q = &q + &BiPoly::constant(rint(k));
        let (a, b) = origin();
        let plain = bilimit(&f, &g, (&a, &b)).unwrap();
        let scaled = bilimit(&(&q * &f), &(&q * &g), (&a, &b)).unwrap();
        prop_assert_eq!(plain.verdict, scaled.verdict);
        prop_assert_eq!(plain.range, scaled.range);
    }

    // [TRIVIAL]
    #[test]
    fn constant_ratio(g in arb_isolated(), n in -9i64..=9, d in 1i64..=5) {
        let c = rfrac(n, d);
        let (a, b) = origin();
        let out = bilimit(&g.scale(&c), &g, (&a, &b)).unwrap();
        prop_assert_eq!(out.verdict, Verdict::Exists(RealAlgebraic::from_rational(c)));
    }

    // [DERIVED] limits do not depend on the coordinates: shearing the input
    // changes the internal shear constant but not the answer.
    #[test]
    fn shear_invariance(f in arb_poly_at_origin(4, 4), g in arb_isolated(), c in prop::sample::select(vec![1i64, 2, -1])) {
        let (a, b) = origin();
        let c = rint(c);
        let plain = bilimit(&f, &g, (&a, &b)).unwrap();
        let sheared = bilimit(&f.shear_x(&c), &g.shear_x(&c), (&a, &b)).unwrap();
        prop_assert_eq!(plain.verdict, sheared.verdict);
        prop_assert_eq!(plain.range, sheared.range);
    }
}

// [PAPER] the product construction with a common factor: f2 f7 / (g2 g7) -> -3.
#[test]
fn product_construction_from_the_benchmark() {
    let f2 = parse_poly("x^4 + 3*x^2*y - x^2 - y^2").unwrap();
    let g2 = parse_poly("x^2 + y^2").unwrap();
    let f7 = parse_poly("10*x^2*y^2 + x^3 + 2*x^2*y + 4*x*y^2 + 6*x^2 + 6*x*y + 3*y^2").unwrap();
    let g7 = parse_poly("3*x^2*y^2 + 2*x^2 + 2*x*y + y^2").unwrap();
    let (a, b) = origin();
    let out = bilimit(&(&f2 * &f7), &(&g2 * &g7), (&a, &b)).unwrap();
    assert_eq!(out.verdict, Verdict::Exists(RealAlgebraic::from_int(-3)));
    let unit = parse_poly("1 + x - 2*y").unwrap();
    let out = bilimit(&(&unit * &(&f2 * &f7)), &(&unit * &(&g2 * &g7)), (&a, &b)).unwrap();
    assert_eq!(out.verdict, Verdict::Exists(RealAlgebraic::from_int(-3)));
}
