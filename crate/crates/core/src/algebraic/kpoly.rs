//! Univariate polynomials over a real number field, and their real roots.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::field::{cmp_distinct, FieldElem, RealField};
use crate::arith::resultant::resultant_in_t;
use crate::arith::sturm::isolate_real_roots;
use crate::arith::{factor, irreducible_factors, Rational, UniPoly};

/// Dense polynomial with coefficients in a [`RealField`]; no trailing zeros.
#[derive(Clone, Debug)]
pub struct KPoly {
    field: RealField,
    coeffs: Vec<FieldElem>,
}

impl KPoly {
    pub fn new(field: &RealField, mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        KPoly { field: field.clone(), coeffs }
    }

    pub fn from_rational_poly(field: &RealField, p: &UniPoly) -> Self {
        Self::new(field, p.coeffs().iter().map(|c| FieldElem::from_rational(field, c.clone())).collect())
    }

    pub fn field(&self) -> &RealField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> FieldElem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn monic(&self) -> KPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv().unwrap();
        KPoly::new(&self.field, self.coeffs.iter().map(|c| c.mul(&inv)).collect())
    }

    pub fn add(&self, o: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = self.field.zero();
        KPoly::new(
            &self.field,
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z).add(o.coeffs.get(i).unwrap_or(&z)))
                .collect(),
        )
    }

    pub fn sub(&self, o: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = self.field.zero();
        KPoly::new(
            &self.field,
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z).sub(o.coeffs.get(i).unwrap_or(&z)))
                .collect(),
        )
    }

    pub fn mul(&self, o: &KPoly) -> KPoly {
        if self.is_zero() || o.is_zero() {
            return KPoly::new(&self.field, Vec::new());
        }
        let mut v = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        KPoly::new(&self.field, v)
    }

    pub fn divrem(&self, d: &KPoly) -> (KPoly, KPoly) {
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (KPoly::new(&self.field, Vec::new()), self.clone());
        }
        let inv = d.lc().inv().expect("nonzero divisor");
        let mut r = self.coeffs.clone();
        let mut q = vec![self.field.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].mul(&inv);
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].sub(&c.mul(dc));
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (KPoly::new(&self.field, q), KPoly::new(&self.field, r))
    }

    pub fn gcd(&self, o: &KPoly) -> KPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> KPoly {
        KPoly::new(
            &self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rational::from_integer(i.into())))
                .collect(),
        )
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Yun's square-free decomposition over the field.
    pub fn squarefree_decomposition(&self) -> Vec<(KPoly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.divrem(&a0).0;
        let mut c = fp.divrem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.divrem(&a).0;
            if b.is_constant() {
                break;
            }
            c = d.divrem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Coefficients as rational polynomials when the field is Q.
    fn to_rational_poly(&self) -> Option<UniPoly> {
        let mut v = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            v.push(c.as_rational()?);
        }
        Some(UniPoly::from_coeffs(v))
    }
}

/// A real root of a polynomial over `K`, living in an extension field `L`
/// together with the image of the generator of `K` in `L`.
#[derive(Clone, Debug)]
pub struct KRoot {
    pub field: RealField,
    pub embed: FieldElem,
    pub value: FieldElem,
    pub multiplicity: usize,
}

/// All distinct real roots of `p`, increasing, with multiplicities.
pub fn real_roots(p: &KPoly) -> Vec<KRoot> {
    let mut out = Vec::new();
    for (part, mult) in p.squarefree_decomposition() {
        for (field, embed, value) in roots_squarefree(&part) {
            out.push(KRoot { field, embed, value, multiplicity: mult });
        }
    }
    out.sort_by(|a, b| cmp_distinct(&a.value, &b.value));
    out
}

fn roots_squarefree(a: &KPoly) -> Vec<(RealField, FieldElem, FieldElem)> {
    let k = a.field().clone();
    if a.deg() == Some(1) {
        let m = a.monic();
        return vec![(k.clone(), k.theta(), m.coeffs[0].neg())];
    }
    if !k.is_rational() {
        return roots_trager(a, &k);
    }
    let ra = a.to_rational_poly().expect("coefficients over Q");
    let mut out = Vec::new();
    for q in irreducible_factors(&ra) {
        if q.deg() == Some(1) {
            out.push((k.clone(), k.theta(), FieldElem::from_rational(&k, -q.coeff(0))));
            continue;
        }
        for iv in isolate_real_roots(&q) {
            let l = RealField::new(q.clone(), iv);
            out.push((l.clone(), l.zero(), l.theta()));
        }
    }
    out
}

/// Trager-style splitting: shift so that the norm is square-free, factor the
/// norm over Q, and recover each real root in a primitive-element field.
fn roots_trager(a: &KPoly, k: &RealField) -> Vec<(RealField, FieldElem, FieldElem)> {
    let p = k.minpoly().clone();
    let a = a.monic();
    // a's coefficients as polynomials in t.
    let cs: Vec<UniPoly> = a.coeffs().iter().map(|c| c.poly().clone()).collect();
    let n = cs.len() - 1;
    for shift in shifts() {
        // chi(t, z) = a(z - shift*t) with coefficients in t, expanded in z.
        let lin = UniPoly::from_coeffs(vec![Rational::zero(), Rational::from_integer((-shift).into())]);
        let mut by_z = vec![UniPoly::zero(); n + 1];
        for (j, cj) in cs.iter().enumerate() {
            // (z + lin)^j = sum_i C(j,i) z^i lin^(j-i)
            for i in 0..=j {
                let term = (cj * &lin.pow((j - i) as u32)).scale(&binom(j, i));
                by_z[i] = &by_z[i] + &term;
            }
        }
        let norm = resultant_in_t(&p, &by_z);
        if !norm.gcd(&norm.derivative()).is_constant() {
            continue;
        }
        let kth = k.theta();
        let shift_q = Rational::from_integer(shift.into());
        let chi = KPoly::new(
            k,
            by_z.iter().map(|c| FieldElem::from_poly(k, c.clone())).collect(),
        );
        let mut out = Vec::new();
        for (ni, _) in factor(&norm) {
            let nk = KPoly::from_rational_poly(k, &ni);
            let g = chi.gcd(&nk);
            if g.deg() == Some(1) {
                let w = g.coeffs[0].neg();
                let root = w.sub(&kth.scale(&shift_q));
                out.push((k.clone(), kth.clone(), root));
                continue;
            }
            for iv in isolate_real_roots(&ni) {
                let l = RealField::new(ni.clone(), iv);
                let gamma = l.theta();
                // P(t) = chi(t, gamma) over L; its gcd with p(t) is t - theta'.
                let mut pt = KPoly::new(&l, Vec::new());
                let mut gpow = KPoly::new(&l, vec![l.one()]);
                for (j, c) in by_z.iter().enumerate() {
                    let cl = KPoly::new(&l, c.coeffs().iter().map(|q| FieldElem::from_rational(&l, q.clone())).collect());
                    pt = pt.add(&cl.mul(&gpow));
                    if j < n {
                        gpow = gpow.mul(&KPoly::new(&l, vec![gamma.clone()]));
                    }
                }
                let pl = KPoly::from_rational_poly(&l, &p);
                let h = pt.gcd(&pl);
                if h.deg() != Some(1) {
                    continue;
                }
                let theta_img = h.coeffs[0].neg();
                if !is_generator(&theta_img, k) {
                    continue;
                }
                let root = gamma.sub(&theta_img.scale(&shift_q));
                out.push((l.clone(), theta_img, root));
            }
        }
        return out;
    }
    unreachable!("some shift yields a square-free norm")
}

/// Whether `x`, known to be a root of the minimal polynomial of `k`, is the
/// generator of `k`.
fn is_generator(x: &FieldElem, k: &RealField) -> bool {
    let iv = k.theta_interval();
    loop {
        let e = x.enclosure();
        if e.disjoint(&iv) {
            return false;
        }
        if iv.lo <= e.lo && e.hi <= iv.hi {
            return true;
        }
        x.field().refine();
    }
}

fn shifts() -> impl Iterator<Item = i64> {
    (0..).map(|i: i64| if i % 2 == 0 { -(i / 2) } else { i / 2 + 1 })
}

fn binom(n: usize, k: usize) -> Rational {
    let mut r = num_bigint::BigInt::one();
    for i in 0..k {
        r = r * num_bigint::BigInt::from(n - i) / num_bigint::BigInt::from(i + 1);
    }
    Rational::from_integer(r)
}

/// Order of two roots by value.
pub fn cmp_roots(a: &KRoot, b: &KRoot) -> Ordering {
    cmp_distinct(&a.value, &b.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::field_elem_value;
    use crate::arith::{rint, IntervalQ};
    use crate::algebraic::RealAlgebraic;

    fn sqrt2_field(positive: bool) -> RealField {
        let iv = if positive { IntervalQ::new(rint(1), rint(2)) } else { IntervalQ::new(rint(-2), rint(-1)) };
        RealField::new(UniPoly::from_ints(&[-2, 0, 1]), iv)
    }

    #[test]
    fn fourth_root_over_sqrt2() {
        let k = sqrt2_field(true);
        let chi = KPoly::new(&k, vec![k.theta().neg(), k.zero(), k.one()]);
        let roots = real_roots(&chi);
        assert_eq!(roots.len(), 2);
        let v = field_elem_value(&roots[1].value);
        assert_eq!(v.minpoly_int(), UniPoly::from_ints(&[-2, 0, 0, 0, 1]));
        assert!(v.sign() > 0);
        // the embedding sends theta to sqrt 2
        let e = field_elem_value(&roots[1].embed);
        assert_eq!(e.pow(2), RealAlgebraic::from_int(2));
        assert!(e.sign() > 0);
    }

    #[test]
    fn no_real_roots_under_negative_embedding() {
        let k = sqrt2_field(false);
        let chi = KPoly::new(&k, vec![k.theta().neg(), k.zero(), k.one()]);
        assert!(real_roots(&chi).is_empty());
    }

    #[test]
    fn rational_polynomial_splits_in_field() {
        let k = sqrt2_field(true);
        let lin = KPoly::new(&k, vec![k.theta().neg(), k.one()]);
        let chi = lin.mul(&lin).mul(&KPoly::from_rational_poly(&k, &UniPoly::from_ints(&[-2, 0, 1])));
        let roots = real_roots(&chi);
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].multiplicity, 1);
        assert_eq!(roots[1].multiplicity, 3);
        assert_eq!(field_elem_value(&roots[1].value), field_elem_value(&k.theta()));
    }
}
