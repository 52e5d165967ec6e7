//! Exact rational arithmetic and univariate polynomials over Q.

pub mod factor;
pub mod intpoly;
pub mod resultant;
pub mod sturm;
pub mod upoly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;

pub use factor::{factor, irreducible_factors};
pub use resultant::resultant;
pub use sturm::{count_real_roots, isolate_real_roots, IntervalQ, SturmSeq};
pub use upoly::{Degree, UniPoly};

/// Integer as a rational.
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `n / d` as a rational.
pub fn rfrac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
