//! Polynomials in `y` whose coefficients are finite fractional power series in `x`
//! over a real number field, truncated above an `x`-exponent cap.

use std::collections::BTreeMap;

use crate::algebraic::{FieldElem, RealField};
use crate::arith::Rational;
use crate::bipoly::BiPoly;

/// Finite sum of `c * x^e` with rational exponents.
#[derive(Clone, Debug, Default)]
pub(crate) struct XPoly(pub BTreeMap<Rational, FieldElem>);

impl XPoly {
    /// Lowest exponent and its coefficient.
    pub fn lowest(&self) -> Option<(&Rational, &FieldElem)> {
        self.0.iter().next()
    }

    pub fn coeff(&self, e: &Rational) -> Option<&FieldElem> {
        self.0.get(e)
    }

    /// `self += c * x^mu * other`, dropping exponents above `cap`.
    fn add_scaled(&mut self, other: &XPoly, c: &FieldElem, mu: &Rational, cap: Option<&Rational>) {
        for (e, a) in &other.0 {
            let e2 = e + mu;
            if cap.is_some_and(|cap| &e2 > cap) {
                // Exponents are increasing, so the rest is above the cap too.
                break;
            }
            let t = a.mul(c);
            match self.0.get_mut(&e2) {
                Some(b) => {
                    let s = b.add(&t);
                    if s.is_zero() {
                        self.0.remove(&e2);
                    } else {
                        *b = s;
                    }
                }
                None => {
                    self.0.insert(e2, t);
                }
            }
        }
    }

    fn truncate(&mut self, cap: &Rational) {
        self.0.retain(|e, _| e <= cap);
    }
}

/// `sum_j c[j](x) * y^j` over a fixed field.
#[derive(Clone, Debug)]
pub(crate) struct YPoly {
    pub field: RealField,
    pub c: Vec<XPoly>,
}

impl YPoly {
    pub fn from_bipoly(f: &BiPoly, field: &RealField, cap: Option<&Rational>) -> Self {
        let n = f.deg_y().map_or(0, |d| d as usize + 1);
        let mut c = vec![XPoly::default(); n];
        for (m, q) in f.terms() {
            let e = Rational::from_integer(m.x.into());
            if cap.is_some_and(|cap| &e > cap) {
                continue;
            }
            c[m.y as usize].0.insert(e, FieldElem::from_rational(field, q.clone()));
        }
        YPoly { field: field.clone(), c }
    }

    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    /// Valuation of the coefficient of `y^j`, `None` if it vanishes below the cap.
    pub fn val(&self, j: usize) -> Option<&Rational> {
        self.c.get(j).and_then(|p| p.lowest().map(|(e, _)| e))
    }

    /// Coefficient of `x^e y^j`, zero if absent.
    pub fn coeff(&self, j: usize, e: &Rational) -> FieldElem {
        self.c.get(j).and_then(|p| p.coeff(e).cloned()).unwrap_or_else(|| self.field.zero())
    }

    /// Map every coefficient into the field of `image` along `theta -> image`.
    pub fn embed(&self, image: &FieldElem) -> YPoly {
        let c = self
            .c
            .iter()
            .map(|p| XPoly(p.0.iter().map(|(e, a)| (e.clone(), a.embed(image))).collect()))
            .collect();
        YPoly { field: image.field().clone(), c }
    }

    pub fn truncate(&mut self, cap: &Rational) {
        for p in &mut self.c {
            p.truncate(cap);
        }
    }

    /// Replace `y` by `a*x^mu + y` (Taylor shift by synthetic division).
    pub fn shift(&mut self, a: &FieldElem, mu: &Rational, cap: Option<&Rational>) {
        if a.is_zero() {
            return;
        }
        let n = self.deg();
        for i in 0..n {
            for j in (i..n).rev() {
                let (lo, hi) = self.c.split_at_mut(j + 1);
                lo[j].add_scaled(&hi[0], a, mu, cap);
            }
        }
    }

    /// Shift successively by every term of a series.
    pub fn shift_by_terms(&mut self, terms: &[(Rational, FieldElem)], cap: Option<&Rational>) {
        for (mu, a) in terms {
            self.shift(a, mu, cap);
        }
    }
}

/// Embed a list of series terms into a larger field.
pub(crate) fn embed_terms(terms: &[(Rational, FieldElem)], image: &FieldElem) -> Vec<(Rational, FieldElem)> {
    terms.iter().map(|(e, a)| (e.clone(), a.embed(image))).collect()
}

/// Exact `f(x, S(x))` for a finite series `S`, as an `x`-series.
pub(crate) fn substitute(f: &BiPoly, field: &RealField, terms: &[(Rational, FieldElem)]) -> XPoly {
    let mut h = YPoly::from_bipoly(f, field, None);
    h.shift_by_terms(terms, None);
    h.c.into_iter().next().unwrap_or_default()
}
