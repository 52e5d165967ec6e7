//! Exact limits of bivariate rational functions at a point.
//!
//! Decides whether `lim f(x, y) / g(x, y)` exists for `f, g` in `Q[x, y]`,
//! returns it as a real algebraic number when it does, and computes the
//! closed range of subsequential limits when the denominator has an isolated
//! zero. Everything is exact: rationals, real algebraic numbers by isolating
//! interval, and Puiseux series with rational exponents.

pub mod algebraic;
pub mod arith;
pub mod bench;
pub mod bipoly;
pub mod limit;
pub mod parse;
pub mod puiseux;
pub mod report;

pub use algebraic::RealAlgebraic;
pub use arith::Rational;
pub use bipoly::BiPoly;
pub use limit::{bilimit, bilimit_with, ExtReal, LimitError, LimitOptions, LimitOutcome, RangeInterval, Verdict};
pub use parse::{parse_poly, ParseError};
pub use puiseux::{expand, BranchSet, PuiseuxBranch, Side};
