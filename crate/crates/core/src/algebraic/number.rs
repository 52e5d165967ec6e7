use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{FieldElem, RealField};
use super::AlgebraicError;
use crate::arith::resultant::resultant_in_t;
use crate::arith::sturm::{bisect, isolate_real_roots, SturmSeq};
use crate::arith::{irreducible_factors, IntervalQ, Rational, UniPoly};

/// Real algebraic number: monic irreducible minimal polynomial and an isolating
/// interval. Rational numbers carry a degree-one polynomial and a point interval.
#[derive(Clone)]
pub struct RealAlgebraic {
    minpoly: UniPoly,
    iv: IntervalQ,
}

impl RealAlgebraic {
    pub fn from_rational(q: Rational) -> Self {
        RealAlgebraic {
            minpoly: UniPoly::from_coeffs(vec![-q.clone(), Rational::one()]),
            iv: IntervalQ::point(q),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    /// The root of `p` isolated by `iv`. `p` need not be irreducible or square-free.
    pub fn from_poly_interval(p: &UniPoly, iv: IntervalQ) -> Result<Self, AlgebraicError> {
        if p.is_constant() {
            return Err(AlgebraicError::NotARoot);
        }
        let sq = p.squarefree_part();
        let st = SturmSeq::new(&sq);
        if st.count_closed(&iv.lo, &iv.hi) != 1 {
            return Err(AlgebraicError::NotIsolating);
        }
        if iv.is_point() {
            return Ok(Self::from_rational(iv.lo));
        }
        let factors = irreducible_factors(&sq);
        for q in factors {
            let qs = SturmSeq::new(&q);
            if qs.count_closed(&iv.lo, &iv.hi) == 1 {
                if q.deg() == Some(1) {
                    return Ok(Self::from_rational(-q.coeff(0)));
                }
                // Endpoints of an isolating interval of sq are not roots of q.
                return Ok(RealAlgebraic { minpoly: q, iv });
            }
        }
        Err(AlgebraicError::NotARoot)
    }

    /// All real roots of `p`, increasing.
    pub fn real_roots(p: &UniPoly) -> Vec<RealAlgebraic> {
        let mut out = Vec::new();
        for q in irreducible_factors(p) {
            if q.deg() == Some(1) {
                out.push(Self::from_rational(-q.coeff(0)));
                continue;
            }
            for iv in isolate_real_roots(&q) {
                out.push(RealAlgebraic { minpoly: q.clone(), iv });
            }
        }
        out.sort();
        out
    }

    pub fn minpoly(&self) -> &UniPoly {
        &self.minpoly
    }

    pub fn interval(&self) -> &IntervalQ {
        &self.iv
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg().unwrap()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.iv.is_point().then(|| self.iv.lo.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_zero())
    }

    /// Minimal polynomial scaled to primitive integer coefficients.
    pub fn minpoly_int(&self) -> UniPoly {
        UniPoly::from_int_poly(&self.minpoly.to_primitive_int().1)
    }

    pub fn refine(&mut self) {
        self.iv = bisect(&self.minpoly, &self.iv);
    }

    /// Refined copy whose interval has width at most `eps`.
    pub fn refined(&self, eps: &Rational) -> RealAlgebraic {
        let mut c = self.clone();
        while !c.iv.is_point() && &c.iv.width() > eps {
            c.refine();
        }
        c
    }

    pub fn sign(&self) -> i32 {
        let mut c = self.clone();
        loop {
            if let Some(s) = c.iv.sign() {
                return s;
            }
            c.refine();
        }
    }

    pub fn neg(&self) -> RealAlgebraic {
        let mp = self.minpoly.reflect();
        let mp = mp.monic();
        RealAlgebraic { minpoly: mp, iv: self.iv.neg() }
    }

    pub fn add(&self, o: &RealAlgebraic) -> RealAlgebraic {
        match (self.as_rational(), o.as_rational()) {
            (Some(a), Some(b)) => return Self::from_rational(a + b),
            (Some(a), None) => return o.shift(&a),
            (None, Some(b)) => return self.shift(&b),
            _ => {}
        }
        // Res_t(pa(t), pb(s - t))
        let pb = &self.minpoly;
        let qb = o.minpoly.coeffs();
        let n = qb.len() - 1;
        let mut by_s = vec![UniPoly::zero(); n + 1];
        for (k, bk) in qb.iter().enumerate() {
            for i in 0..=k {
                let c = bk * binom(k, i);
                let term = UniPoly::monomial(if (k - i) % 2 == 1 { -c } else { c }, k - i);
                by_s[i] = &by_s[i] + &term;
            }
        }
        let r = resultant_in_t(pb, &by_s);
        let (mut a, mut b) = (self.clone(), o.clone());
        identify(&r, |_| {
            a.refine();
            b.refine();
            a.iv.add(&b.iv)
        })
    }

    pub fn sub(&self, o: &RealAlgebraic) -> RealAlgebraic {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RealAlgebraic) -> RealAlgebraic {
        match (self.as_rational(), o.as_rational()) {
            (Some(a), Some(b)) => return Self::from_rational(a * b),
            (Some(a), None) => return o.scale(&a),
            (None, Some(b)) => return self.scale(&b),
            _ => {}
        }
        // Res_t(pa(t), t^n pb(s / t))
        let qb = o.minpoly.coeffs();
        let n = qb.len() - 1;
        let by_s: Vec<UniPoly> = qb.iter().enumerate().map(|(k, bk)| UniPoly::monomial(bk.clone(), n - k)).collect();
        let r = resultant_in_t(&self.minpoly, &by_s);
        let (mut a, mut b) = (self.clone(), o.clone());
        identify(&r, |_| {
            a.refine();
            b.refine();
            a.iv.mul(&b.iv)
        })
    }

    pub fn inv(&self) -> Option<RealAlgebraic> {
        if let Some(q) = self.as_rational() {
            return (!q.is_zero()).then(|| Self::from_rational(q.recip()));
        }
        let mp = self.minpoly.reverse().monic();
        let mut c = self.clone();
        while c.iv.sign().is_none() {
            c.refine();
        }
        let iv = IntervalQ::new(c.iv.hi.recip(), c.iv.lo.recip());
        Some(RealAlgebraic { minpoly: mp, iv })
    }

    pub fn div(&self, o: &RealAlgebraic) -> Option<RealAlgebraic> {
        o.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, k: u32) -> RealAlgebraic {
        let mut acc = Self::from_int(1);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    fn shift(&self, q: &Rational) -> RealAlgebraic {
        let mp = self.minpoly.compose(&UniPoly::from_coeffs(vec![-q.clone(), Rational::one()]));
        RealAlgebraic { minpoly: mp, iv: IntervalQ::new(&self.iv.lo + q, &self.iv.hi + q) }
    }

    fn scale(&self, q: &Rational) -> RealAlgebraic {
        if q.is_zero() {
            return Self::zero();
        }
        let mp = self.minpoly.compose(&UniPoly::from_coeffs(vec![Rational::zero(), q.recip()])).monic();
        RealAlgebraic { minpoly: mp, iv: self.iv.scale(q) }
    }

    /// Decimal rendering with exactly `digits` fractional digits, correctly
    /// rounded (ties to even).
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = Rational::from_integer(num_traits::pow(BigInt::from(10), digits));
        let k = match self.as_rational() {
            Some(q) => round_half_even(&(q * &scale)),
            None => {
                let half = Rational::new(1.into(), 2.into());
                let mut c = self.clone();
                loop {
                    let lo = (&c.iv.lo * &scale + &half).floor();
                    let hi = (&c.iv.hi * &scale + &half).floor();
                    if lo == hi {
                        break lo.to_integer();
                    }
                    c.refine();
                }
            }
        };
        format_fixed(&k, digits)
    }

    pub fn to_f64(&self) -> f64 {
        let c = self.refined(&Rational::new(1.into(), BigInt::from(1u64 << 60)));
        super::rational_to_f64(&c.iv.mid())
    }

    /// This number as an element of its own field `Q(self)`.
    pub fn to_field(&self) -> (RealField, FieldElem) {
        if let Some(q) = self.as_rational() {
            let f = RealField::rational();
            let e = FieldElem::from_rational(&f, q);
            return (f, e);
        }
        let f = RealField::new(self.minpoly.clone(), self.iv.clone());
        let e = f.theta();
        (f, e)
    }
}

fn binom(n: usize, k: usize) -> Rational {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(r)
}

fn round_half_even(q: &Rational) -> BigInt {
    let fl = q.floor();
    let frac = q - &fl;
    let half = Rational::new(1.into(), 2.into());
    let base = fl.to_integer();
    match frac.cmp(&half) {
        Ordering::Less => base,
        Ordering::Greater => base + 1,
        Ordering::Equal => {
            if base.is_even() {
                base
            } else {
                base + 1
            }
        }
    }
}

fn format_fixed(k: &BigInt, digits: usize) -> String {
    let neg = k.is_negative();
    let s = k.abs().to_string();
    let body = if digits == 0 {
        s
    } else {
        let s = format!("{s:0>width$}", width = digits + 1);
        let (i, f) = s.split_at(s.len() - digits);
        format!("{i}.{f}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Identify which root of `r` is enclosed by the shrinking intervals produced
/// by `enclose`. The enclosures must converge to a root of `r`.
pub fn identify<F: FnMut(usize) -> IntervalQ>(r: &UniPoly, mut enclose: F) -> RealAlgebraic {
    let mut cands: Vec<(UniPoly, IntervalQ)> = Vec::new();
    for q in irreducible_factors(r) {
        for iv in isolate_real_roots(&q) {
            cands.push((q.clone(), iv));
        }
    }
    let mut step = 0;
    loop {
        let e = enclose(step);
        step += 1;
        let hits: Vec<usize> = (0..cands.len()).filter(|&i| !cands[i].1.disjoint(&e)).collect();
        if hits.len() == 1 {
            let (q, iv) = cands[hits[0]].clone();
            if q.deg() == Some(1) {
                return RealAlgebraic::from_rational(-q.coeff(0));
            }
            return RealAlgebraic { minpoly: q, iv };
        }
        for &i in &hits {
            let (q, iv) = &cands[i];
            cands[i].1 = bisect(q, iv);
        }
    }
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for RealAlgebraic {}

impl PartialOrd for RealAlgebraic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealAlgebraic {
    fn cmp(&self, other: &Self) -> Ordering {
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return a.cmp(&b);
        }
        if self.minpoly == other.minpoly {
            if let Some(i) = self.iv.intersect(&other.iv) {
                if SturmSeq::new(&self.minpoly).count_closed(&i.lo, &i.hi) == 1 {
                    return Ordering::Equal;
                }
            }
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.iv.hi < b.iv.lo {
                return Ordering::Less;
            }
            if b.iv.hi < a.iv.lo {
                return Ordering::Greater;
            }
            a.refine();
            b.refine();
        }
    }
}

impl fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "root({}, [{}, {}])", self.minpoly_int(), self.iv.lo, self.iv.hi),
        }
    }
}

impl fmt::Debug for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Convert a field element to an absolute real algebraic number.
pub fn field_elem_value(e: &FieldElem) -> RealAlgebraic {
    if let Some(q) = e.as_rational() {
        return RealAlgebraic::from_rational(q);
    }
    let field = e.field().clone();
    let p = field.minpoly().clone();
    // Characteristic polynomial Res_t(p(t), s - e(t)) is a power of the minimal polynomial.
    let by_s = vec![-e.poly(), UniPoly::one()];
    let ch = resultant_in_t(&p, &by_s);
    let e2 = e.clone();
    identify(&ch, move |_| {
        field.refine();
        e2.enclosure()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rint;

    fn sqrt(n: i64) -> RealAlgebraic {
        RealAlgebraic::from_poly_interval(&UniPoly::from_ints(&[-n, 0, 1]), IntervalQ::new(rint(0), rint(n + 1)))
            .unwrap()
    }

    #[test]
    fn decimal_of_sqrt2_over_4() {
        let v = sqrt(2).mul(&RealAlgebraic::from_rational(Rational::new(1.into(), 4.into())));
        assert_eq!(v.to_decimal(8), "0.35355339");
        assert_eq!(v.minpoly_int(), UniPoly::from_ints(&[-1, 0, 8]));
    }

    #[test]
    fn nested_identity_is_zero() {
        let s = sqrt(2).add(&sqrt(3));
        let lhs = s.mul(&s).sub(&RealAlgebraic::from_int(5)).sub(&sqrt(6).mul(&RealAlgebraic::from_int(2)));
        assert!(lhs.is_zero());
    }

    #[test]
    fn signs_and_order() {
        assert_eq!(sqrt(2).sub(&RealAlgebraic::from_rational(Rational::new(3.into(), 2.into()))).sign(), -1);
        let a = RealAlgebraic::from_rational(Rational::new(1.into(), 3.into()));
        let b = RealAlgebraic::from_rational(Rational::new(333.into(), 1000.into()));
        assert_eq!(a.cmp(&b), Ordering::Greater);
    }

    #[test]
    fn rounding_ties_to_even() {
        let q = |n, d| RealAlgebraic::from_rational(Rational::new(BigInt::from(n), BigInt::from(d)));
        assert_eq!(q(5, 2).to_decimal(0), "2");
        assert_eq!(q(1, 8).to_decimal(2), "0.12");
        assert_eq!(q(-3, 8).to_decimal(2), "-0.38");
        assert_eq!(q(1, 3).to_decimal(3), "0.333");
    }

    #[test]
    fn field_element_to_number() {
        let f = RealField::new(UniPoly::from_ints(&[-2, 0, 1]), IntervalQ::new(rint(1), rint(2)));
        let th = f.theta();
        let e = th.mul(&th).add(&th); // 2 + sqrt2
        let v = field_elem_value(&e);
        assert_eq!(v, sqrt(2).add(&RealAlgebraic::from_int(2)));
    }
}
