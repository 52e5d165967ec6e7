mod common;

use proptest::prelude::*;
use ratlimit::parse::parse_poly;

use common::arb_poly;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    // [TRIVIAL] printing is canonical and parses back to the same polynomial.
    #[test]
    fn print_parse_round_trip(f in arb_poly(7, 8), k in 1i64..=7) {
        let f = f.scale(&ratlimit::arith::rfrac(1, k));
        let text = f.to_string();
        prop_assert_eq!(parse_poly(&text).unwrap(), f.clone());
        prop_assert_eq!(parse_poly(&text).unwrap().to_string(), text);
    }
}
