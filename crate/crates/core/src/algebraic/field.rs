//! Real number fields `Q(theta)` with a distinguished real embedding, and their elements.

use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::arith::sturm::{bisect, eval_interval};
use crate::arith::{IntervalQ, Rational, UniPoly};

struct FieldData {
    minpoly: UniPoly,
    theta: Mutex<IntervalQ>,
}

/// `Q(theta)` where `theta` is the real root of a monic irreducible polynomial
/// inside an isolating interval. Degree-one fields are all identified with Q.
#[derive(Clone)]
pub struct RealField(Arc<FieldData>);

impl RealField {
    pub fn rational() -> Self {
        RealField(Arc::new(FieldData {
            minpoly: UniPoly::t(),
            theta: Mutex::new(IntervalQ::point(Rational::zero())),
        }))
    }

    /// Field generated by the root of `minpoly` (monic irreducible) isolated by `iv`.
    pub fn new(minpoly: UniPoly, iv: IntervalQ) -> Self {
        if minpoly.deg() == Some(1) {
            return Self::rational();
        }
        RealField(Arc::new(FieldData { minpoly: minpoly.monic(), theta: Mutex::new(iv) }))
    }

    pub fn degree(&self) -> usize {
        self.0.minpoly.deg().unwrap()
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn minpoly(&self) -> &UniPoly {
        &self.0.minpoly
    }

    pub fn same(&self, other: &RealField) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.is_rational() && other.is_rational())
    }

    pub fn theta_interval(&self) -> IntervalQ {
        self.0.theta.lock().unwrap().clone()
    }

    /// Halve the isolating interval of the generator.
    pub fn refine(&self) {
        let mut g = self.0.theta.lock().unwrap();
        *g = bisect(&self.0.minpoly, &g);
    }

    /// Refine the generator interval to width at most `eps`.
    pub fn refine_to(&self, eps: &Rational) {
        let mut g = self.0.theta.lock().unwrap();
        while !g.is_point() && &g.width() > eps {
            *g = bisect(&self.0.minpoly, &g);
        }
    }

    pub fn theta(&self) -> FieldElem {
        FieldElem::from_poly(self, UniPoly::t())
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::from_poly(self, UniPoly::zero())
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::from_rational(self, Rational::one())
    }
}

impl fmt::Debug for RealField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let iv = self.theta_interval();
        write!(f, "Q[{} ; {}, {}]", self.0.minpoly, iv.lo, iv.hi)
    }
}

/// Element of a [`RealField`], stored as a polynomial in the generator of
/// degree below the field degree.
#[derive(Clone)]
pub struct FieldElem {
    field: RealField,
    poly: UniPoly,
}

impl FieldElem {
    pub fn from_poly(field: &RealField, poly: UniPoly) -> Self {
        let poly = if field.is_rational() {
            UniPoly::constant(poly.coeff(0))
        } else if poly.deg().is_some_and(|d| d >= field.degree()) {
            poly.rem(field.minpoly())
        } else {
            poly
        };
        FieldElem { field: field.clone(), poly }
    }

    pub fn from_rational(field: &RealField, q: Rational) -> Self {
        FieldElem { field: field.clone(), poly: UniPoly::constant(q) }
    }

    pub fn field(&self) -> &RealField {
        &self.field
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.poly.is_constant() && self.poly.coeff(0).is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.poly.is_constant().then(|| self.poly.coeff(0))
    }

    fn check(&self, o: &FieldElem) {
        debug_assert!(self.field.same(&o.field), "mixing elements of different fields");
    }

    pub fn add(&self, o: &FieldElem) -> FieldElem {
        self.check(o);
        FieldElem { field: self.pick_field(o), poly: &self.poly + &o.poly }
    }

    pub fn sub(&self, o: &FieldElem) -> FieldElem {
        self.check(o);
        FieldElem { field: self.pick_field(o), poly: &self.poly - &o.poly }
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem { field: self.field.clone(), poly: -&self.poly }
    }

    pub fn mul(&self, o: &FieldElem) -> FieldElem {
        self.check(o);
        let f = self.pick_field(o);
        if self.poly.is_constant() {
            return FieldElem { field: f, poly: o.poly.scale(&self.poly.coeff(0)) };
        }
        if o.poly.is_constant() {
            return FieldElem { field: f, poly: self.poly.scale(&o.poly.coeff(0)) };
        }
        FieldElem::from_poly(&f, &self.poly * &o.poly)
    }

    pub fn scale(&self, q: &Rational) -> FieldElem {
        FieldElem { field: self.field.clone(), poly: self.poly.scale(q) }
    }

    fn pick_field(&self, o: &FieldElem) -> RealField {
        if self.field.is_rational() {
            o.field.clone()
        } else {
            self.field.clone()
        }
    }

    pub fn inv(&self) -> Option<FieldElem> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(FieldElem::from_rational(&self.field, q.recip()));
        }
        let (g, s, _) = self.poly.ext_gcd(self.field.minpoly());
        debug_assert!(g.is_constant());
        Some(FieldElem::from_poly(&self.field, s))
    }

    pub fn div(&self, o: &FieldElem) -> Option<FieldElem> {
        o.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, k: u32) -> FieldElem {
        let mut acc = self.field.one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Image under the embedding sending the generator to `image`.
    pub fn embed(&self, image: &FieldElem) -> FieldElem {
        if let Some(q) = self.as_rational() {
            return FieldElem::from_rational(image.field(), q);
        }
        let mut acc = image.field().zero();
        for c in self.poly.coeffs().iter().rev() {
            acc = acc.mul(image).add(&FieldElem::from_rational(image.field(), c.clone()));
        }
        acc
    }

    /// Current interval enclosure of the real value.
    pub fn enclosure(&self) -> IntervalQ {
        if let Some(q) = self.as_rational() {
            return IntervalQ::point(q);
        }
        eval_interval(&self.poly, &self.field.theta_interval())
    }

    /// Enclosure of width at most `eps`.
    pub fn enclosure_within(&self, eps: &Rational) -> IntervalQ {
        loop {
            let e = self.enclosure();
            if &e.width() <= eps {
                return e;
            }
            self.field.refine();
        }
    }

    /// Exact sign: zero test is structural, nonzero signs come from refinement.
    pub fn sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        loop {
            if let Some(s) = self.enclosure().sign() {
                if s != 0 {
                    return s;
                }
            }
            self.field.refine();
        }
    }

    pub fn cmp_value(&self, o: &FieldElem) -> Ordering {
        match self.sub(o).sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    /// Approximate value as `f64`.
    pub fn to_f64(&self) -> f64 {
        let e = self.enclosure_within(&Rational::new(1.into(), num_bigint::BigInt::from(1u64 << 60)));
        crate::algebraic::rational_to_f64(&e.mid())
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.same(&other.field) && self.poly == other.poly
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "[{}]@{:?}", self.poly, self.field),
        }
    }
}

/// Compare two field elements that may live in different fields, assuming
/// they are known to be distinct numbers.
pub fn cmp_distinct(a: &FieldElem, b: &FieldElem) -> Ordering {
    loop {
        let ea = a.enclosure();
        let eb = b.enclosure();
        if ea.hi < eb.lo {
            return Ordering::Less;
        }
        if eb.hi < ea.lo {
            return Ordering::Greater;
        }
        if ea.is_point() && eb.is_point() {
            return ea.lo.cmp(&eb.lo);
        }
        a.field().refine();
        b.field().refine();
    }
}
