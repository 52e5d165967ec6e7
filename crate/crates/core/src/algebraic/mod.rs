//! Real algebraic numbers, real number fields and polynomials over them.

pub mod field;
pub mod kpoly;
pub mod number;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::arith::Rational;

pub use field::{FieldElem, RealField};
pub use kpoly::{real_roots, KPoly, KRoot};
pub use number::{field_elem_value, RealAlgebraic};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraicError {
    #[error("interval does not isolate exactly one root")]
    NotIsolating,
    #[error("no root of the polynomial in the interval")]
    NotARoot,
    #[error("division by zero")]
    DivisionByZero,
}

pub(crate) fn rational_to_f64(q: &Rational) -> f64 {
    // Scale into range before converting to keep precision for huge numerators.
    let n = q.numer().to_f64().unwrap_or(f64::NAN);
    let d = q.denom().to_f64().unwrap_or(f64::NAN);
    if n.is_finite() && d.is_finite() {
        return n / d;
    }
    let shift = q.numer().bits().max(q.denom().bits()) as i64 - 60;
    let s = shift.max(0) as usize;
    let n2 = (q.numer() >> s).to_f64().unwrap_or(0.0);
    let d2 = (q.denom() >> s).to_f64().unwrap_or(1.0);
    n2 / d2
}
