//! The 21-case benchmark corpus with expected verdicts.

use std::time::{Duration, Instant};

use crate::algebraic::RealAlgebraic;
use crate::arith::{rfrac, rint, Rational, UniPoly};
use crate::limit::{bilimit, ExtReal, LimitError, LimitOutcome, RangeInterval, Verdict};
use crate::parse::{parse_poly, ParseError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expected {
    Limit(Rational),
    Range(RangeInterval),
    /// No limit; the denominator's zero is not isolated, so no range.
    NonIsolated,
}

#[derive(Clone, Debug)]
pub struct BenchCase {
    pub id: u32,
    pub f: String,
    pub g: String,
    pub expected: Expected,
}

#[derive(Debug)]
pub struct BenchResult {
    pub id: u32,
    pub outcome: Result<LimitOutcome, LimitError>,
    pub passed: bool,
    pub elapsed: Duration,
}

const F2: &str = "x^4 + 3*x^2*y - x^2 - y^2";
const G2: &str = "x^2 + y^2";
const F6: &str = "2*x^2*y^2 + x^2*y + 2*x*y^2 + y^3 + x^2 + 2*x*y + 2*y^2";
const G6: &str = "x^2*y^2 + x^2 + 2*x*y + 2*y^2";
const F7: &str = "10*x^2*y^2 + x^3 + 2*x^2*y + 4*x*y^2 + 6*x^2 + 6*x*y + 3*y^2";
const G7: &str = "3*x^2*y^2 + 2*x^2 + 2*x*y + y^2";
const F8: &str = "10*x^2*y - 26*x^3 + 37*x^2*y^2 - 8*x*y^3 + 2*y^5 - 18*x*y^4 + 3*y^6";
const G8: &str = "24*x^2 + 3*y^2 - 21*x*y^2 - 5*x*y + 2*y^3 + 5*y^4";
const F9: &str = "2*x^2*y^2 + x^2*y + 2*x*y^2 + y^3 + x^2 + 2*x*y + 2*y^2";
const G9: &str = "x^4*y^4 + x^2 + 2*x*y + 2*y^2";

fn product(parts: &[&str]) -> String {
    parts.iter().map(|p| format!("({p})")).collect::<Vec<_>>().join("*")
}

fn range(min: ExtReal, max: ExtReal) -> Expected {
    Expected::Range(RangeInterval { min, max })
}

fn fin(q: Rational) -> ExtReal {
    ExtReal::Finite(RealAlgebraic::from_rational(q))
}

pub fn cases() -> Vec<BenchCase> {
    let lim = |n: i64| Expected::Limit(rint(n));
    let sqrt2_quarter = RealAlgebraic::real_roots(&UniPoly::from_ints(&[-1, 0, 8]));
    let raw: Vec<(String, String, Expected)> = vec![
        ("x^4 + x^2*y + y^2".into(), "x^2 + y^2".into(), range(fin(rint(0)), fin(rint(1)))),
        (F2.into(), G2.into(), lim(-1)),
        (
            "2*y^5 + x^2*y^2 - 8*x*y^3 - 13*y^4 - 2*x^3 + 6*x^2*y + 28*x*y^2 + 24*y^3 - 4*x^2 - 12*x*y - 9*y^2".into(),
            "y^4 - 5*x*y^2 - 4*y^3 + 7*x^2 + 10*x*y + 4*y^2".into(),
            range(fin(rfrac(-19, 3)), fin(rint(0))),
        ),
        (
            "4*x^2*y^2 - 4*x*y^3 + y^4 - 2*x*y^2 + y^3".into(),
            "8*x^2*y^2 - 8*x*y^3 + 3*y^4 + 8*x^2 - 8*x*y + 2*y^2".into(),
            range(ExtReal::Finite(sqrt2_quarter[0].clone()), ExtReal::Finite(sqrt2_quarter[1].clone())),
        ),
        (F7.into(), "3*x^2*y^2 + 2*x^3 + 2*x*y + y^2".into(), Expected::NonIsolated),
        (F6.into(), G6.into(), lim(1)),
        (F7.into(), G7.into(), lim(3)),
        (F8.into(), G8.into(), lim(0)),
        (F9.into(), G9.into(), lim(1)),
        (product(&[F2, F7]), product(&[G2, G7]), lim(-3)),
        (product(&[F6, F7]), product(&[G6, G7]), lim(3)),
        (product(&[F2, F6]), product(&[G2, G6]), lim(-1)),
        (format!("{} + x^6*y^6", product(&[F2, F6])), format!("{} + x^4*y^4", product(&[G2, G6])), lim(-1)),
        (format!("{} + x^10*y^10", product(&[F2, F6])), format!("{} + x^8*y^8", product(&[G2, G6])), lim(-1)),
        (product(&[F2, F6, F7]), product(&[G2, G6, G7]), lim(-3)),
        (product(&[F2, F6, F7, F8]), product(&[G2, G6, G7, G8]), lim(0)),
        (product(&[F2, F6, F7, F9]), product(&[G2, G6, G7, G9]), lim(-3)),
        ("x^2".into(), "x^4 + y^4".into(), range(fin(rint(0)), ExtReal::PosInf)),
        ("x^3".into(), "x^4 + y^4".into(), range(ExtReal::NegInf, ExtReal::PosInf)),
        ("x^4 + x^2*y + y^2".into(), "x^6 + y^2".into(), range(fin(rfrac(3, 4)), ExtReal::PosInf)),
        ("x^4 + x^2*y^2 + y^4".into(), "x^6 + y^4".into(), range(fin(rint(1)), ExtReal::PosInf)),
    ];
    raw.into_iter()
        .enumerate()
        .map(|(i, (f, g, expected))| BenchCase { id: i as u32 + 1, f, g, expected })
        .collect()
}

impl BenchCase {
    pub fn check(&self, out: &LimitOutcome) -> bool {
        match &self.expected {
            Expected::Limit(v) => out.verdict == Verdict::Exists(RealAlgebraic::from_rational(v.clone())),
            Expected::Range(r) => out.verdict == Verdict::DoesNotExist && out.range.as_ref() == Some(r),
            Expected::NonIsolated => {
                out.verdict == Verdict::DoesNotExist && out.range.is_none() && !out.diagnostics.isolated_zero
            }
        }
    }

    pub fn run(&self) -> Result<BenchResult, ParseError> {
        let f = parse_poly(&self.f)?;
        let g = parse_poly(&self.g)?;
        let zero = Rational::from_integer(0.into());
        let start = Instant::now();
        let outcome = bilimit(&f, &g, (&zero, &zero));
        let elapsed = start.elapsed();
        let passed = outcome.as_ref().is_ok_and(|o| self.check(o));
        Ok(BenchResult { id: self.id, outcome, passed, elapsed })
    }
}
