//! Sparse bivariate polynomials over Q and the constructions used by the
//! limit algorithm: shears, translation, the Jacobian determinant, the
//! tangency polynomial, gcd and square-free regularization.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::resultant::interpolate;
use crate::arith::{Rational, UniPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BiPolyError {
    #[error("the zero polynomial has no order")]
    ZeroPolynomial,
    #[error("polynomial is not y-regular")]
    NotYRegular,
    #[error("polynomial has order 0 at the origin")]
    OrderZero,
    #[error("m*N = {mn} must exceed deg f = {deg}")]
    LevelTooSmall { mn: u64, deg: u32 },
    #[error("regularization constant must be nonzero")]
    ZeroConstant,
    #[error("truncation bound needs d >= 1, got {0}")]
    BadDegree(i64),
}

/// Exponent pair ordered graded-lexicographically (total degree, then x-degree).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.x + self.y
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then(self.x.cmp(&o.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Sparse polynomial in `x`, `y` with rational coefficients; zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial { x: i, y: j }, c);
        p
    }

    /// Build from `(coefficient, x-exponent, y-exponent)` integer triples.
    pub fn from_int_terms(ts: &[(i64, u32, u32)]) -> Self {
        let mut p = Self::zero();
        for &(c, i, j) in ts {
            p.add_term(Monomial { x: i, y: j }, Rational::from_integer(c.into()));
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex descending order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&Monomial { x: i, y: j }).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.y).max()
    }

    /// Order at the origin: lowest total degree of a term; `None` stands for +inf.
    pub fn ord2(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    pub fn homog_component(&self, k: u32) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().filter(|(m, _)| m.degree() == k).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    /// Lowest homogeneous form.
    pub fn initial_form(&self) -> BiPoly {
        match self.ord2() {
            Some(m) => self.homog_component(m),
            None => BiPoly::zero(),
        }
    }

    /// Whether `f_m(0, 1) != 0` for `m = ord f`.
    pub fn is_y_regular(&self) -> Result<bool, BiPolyError> {
        let m = self.ord2().ok_or(BiPolyError::ZeroPolynomial)?;
        Ok(!self.coeff(0, m).is_zero())
    }

    pub fn leading_coeff(&self) -> Rational {
        self.terms.iter().next_back().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, s: &Rational) -> BiPoly {
        if s.is_zero() {
            return BiPoly::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect() }
    }

    pub fn pow(&self, k: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for cx in self.y_coeffs().iter().rev() {
            acc = acc * y + cx.eval(x);
        }
        acc
    }

    pub fn partial_x(&self) -> BiPoly {
        let mut p = BiPoly::zero();
        for (m, c) in &self.terms {
            if m.x > 0 {
                p.add_term(Monomial { x: m.x - 1, y: m.y }, c * Rational::from_integer(m.x.into()));
            }
        }
        p
    }

    pub fn partial_y(&self) -> BiPoly {
        let mut p = BiPoly::zero();
        for (m, c) in &self.terms {
            if m.y > 0 {
                p.add_term(Monomial { x: m.x, y: m.y - 1 }, c * Rational::from_integer(m.y.into()));
            }
        }
        p
    }

    pub fn partial_y_k(&self, k: u32) -> BiPoly {
        let mut p = self.clone();
        for _ in 0..k {
            p = p.partial_y();
        }
        p
    }

    /// Coefficients of `y^j` as polynomials in `x`.
    pub fn y_coeffs(&self) -> Vec<UniPoly> {
        let Some(dy) = self.deg_y() else {
            return Vec::new();
        };
        let mut rows: Vec<Vec<Rational>> = vec![Vec::new(); dy as usize + 1];
        for (m, c) in &self.terms {
            let row = &mut rows[m.y as usize];
            if row.len() <= m.x as usize {
                row.resize(m.x as usize + 1, Rational::zero());
            }
            row[m.x as usize] = c.clone();
        }
        rows.into_iter().map(UniPoly::from_coeffs).collect()
    }

    pub fn from_y_coeffs(cs: &[UniPoly]) -> BiPoly {
        let mut p = BiPoly::zero();
        for (j, cx) in cs.iter().enumerate() {
            for (i, c) in cx.coeffs().iter().enumerate() {
                p.add_term(Monomial { x: i as u32, y: j as u32 }, c.clone());
            }
        }
        p
    }

    /// `f(x, 0)` as a polynomial in `x`.
    pub fn at_y_zero(&self) -> UniPoly {
        self.y_coeffs().into_iter().next().unwrap_or_default()
    }

    /// `f(0, y)` as a polynomial in `y`.
    pub fn at_x_zero(&self) -> UniPoly {
        UniPoly::from_coeffs(self.y_coeffs().iter().map(|c| c.coeff(0)).collect())
    }

    /// Substitute `x <- sx`, `y <- sy`.
    pub fn substitute(&self, sx: &BiPoly, sy: &BiPoly) -> BiPoly {
        let (Some(dx), Some(dy)) = (self.deg_x(), self.deg_y()) else {
            return BiPoly::zero();
        };
        let mut px = vec![BiPoly::one()];
        for k in 0..dx as usize {
            px.push(&px[k] * sx);
        }
        let mut py = vec![BiPoly::one()];
        for k in 0..dy as usize {
            py.push(&py[k] * sy);
        }
        let mut out = BiPoly::zero();
        for (m, c) in &self.terms {
            out = &out + &(&px[m.x as usize] * &py[m.y as usize]).scale(c);
        }
        out
    }

    /// `f(x + c y, y)`.
    pub fn shear_x(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return self.clone();
        }
        let sx = &BiPoly::x() + &BiPoly::monomial(c.clone(), 0, 1);
        self.substitute(&sx, &BiPoly::y())
    }

    /// `f(x, x + y)`.
    pub fn shear_y(&self) -> BiPoly {
        self.substitute(&BiPoly::x(), &(&BiPoly::x() + &BiPoly::y()))
    }

    /// `f(x + a, y + b)`.
    pub fn translate(&self, a: &Rational, b: &Rational) -> BiPoly {
        if a.is_zero() && b.is_zero() {
            return self.clone();
        }
        let sx = &BiPoly::x() + &BiPoly::constant(a.clone());
        let sy = &BiPoly::y() + &BiPoly::constant(b.clone());
        self.substitute(&sx, &sy)
    }

    /// `f(-x, y)`.
    pub fn reflect_x(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, if m.x % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &BiPoly) -> Option<BiPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(BiPoly::zero());
        }
        let (dm, dc) = d.terms.iter().next_back().map(|(m, c)| (*m, c.clone())).unwrap();
        let mut r = self.clone();
        let mut q = BiPoly::zero();
        while let Some((rm, rc)) = r.terms.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            if rm.x < dm.x || rm.y < dm.y {
                return None;
            }
            let t = BiPoly::monomial(rc / &dc, rm.x - dm.x, rm.y - dm.y);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    /// Scale to primitive integer coefficients with positive leading coefficient.
    pub fn normalized(&self) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        let mut s = Rational::new(den, num);
        if self.leading_coeff().is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    /// Product of the distinct irreducible factors involving `y`:
    /// `f / gcd2(f, f_y)`, normalized.
    pub fn squarefree_y(&self) -> BiPoly {
        let fy = self.partial_y();
        if fy.is_zero() {
            return self.normalized();
        }
        let g = gcd2(self, &fy);
        self.div_exact(&g).expect("gcd divides").normalized()
    }

    pub fn is_squarefree_y(&self) -> bool {
        let fy = self.partial_y();
        fy.is_zero() || gcd2(self, &fy).deg_y() == Some(0)
    }
}

/// `f_x g_y - f_y g_x`.
pub fn jacobian_det(f: &BiPoly, g: &BiPoly) -> BiPoly {
    &(&f.partial_x() * &g.partial_y()) - &(&f.partial_y() * &g.partial_x())
}

/// `y (g f_x - f g_x) - x (g f_y - f g_y)`.
pub fn tangency_poly(f: &BiPoly, g: &BiPoly) -> BiPoly {
    let a = &(g * &f.partial_x()) - &(f * &g.partial_x());
    let b = &(g * &f.partial_y()) - &(f * &g.partial_y());
    &(&BiPoly::y() * &a) - &(&BiPoly::x() * &b)
}

/// `((d - 1)^2 + 1) / 2`.
pub fn truncation_bound(d: i64) -> Result<Rational, BiPolyError> {
    if d < 1 {
        return Err(BiPolyError::BadDegree(d));
    }
    Ok(Rational::new(BigInt::from((d - 1) * (d - 1) + 1), BigInt::from(2)))
}

/// `f + c (x^{mN} + y^{mN})` for y-regular `f` of order `m > 0` with `mN > deg f`.
pub fn squarefree_regularize(f: &BiPoly, n: u32, c: &Rational) -> Result<BiPoly, BiPolyError> {
    if !f.is_y_regular()? {
        return Err(BiPolyError::NotYRegular);
    }
    let m = f.ord2().unwrap();
    if m == 0 {
        return Err(BiPolyError::OrderZero);
    }
    if c.is_zero() {
        return Err(BiPolyError::ZeroConstant);
    }
    let mn = u64::from(m) * u64::from(n);
    let deg = f.total_degree().unwrap();
    if mn <= u64::from(deg) {
        return Err(BiPolyError::LevelTooSmall { mn, deg });
    }
    let e = m * n;
    Ok(&(f + &BiPoly::monomial(c.clone(), e, 0)) + &BiPoly::monomial(c.clone(), 0, e))
}

fn poly_content(cs: &[UniPoly]) -> UniPoly {
    let mut g = UniPoly::zero();
    for c in cs {
        g = g.gcd(c);
        if g.deg() == Some(0) {
            break;
        }
    }
    g
}

fn primitive_y(a: &[UniPoly]) -> Vec<UniPoly> {
    let c = poly_content(a);
    a.iter().map(|p| p.div_exact(&c)).collect()
}

/// Gcd in Q[x, y], primitive with positive leading coefficient (graded-lex).
pub fn gcd2(f: &BiPoly, g: &BiPoly) -> BiPoly {
    if f.is_zero() {
        return g.normalized();
    }
    if g.is_zero() {
        return f.normalized();
    }
    let a = f.y_coeffs();
    let b = g.y_coeffs();
    let ca = poly_content(&a);
    let cb = poly_content(&b);
    let cont = ca.gcd(&cb);
    let cont_poly = BiPoly::from_y_coeffs(&[cont]);
    if a.len() == 1 || b.len() == 1 {
        return cont_poly.normalized();
    }
    let pa = primitive_y(&a);
    let pb = primitive_y(&b);
    if specialization_coprime(&pa, &pb) {
        return cont_poly.normalized();
    }
    let h = interpolated_gcd(&pa, &pb);
    (&cont_poly * &h).normalized()
}

/// Gcd of two primitive polynomials in y over Q[x] by specializing x at
/// integer points, taking univariate gcds, and interpolating. The leading
/// coefficient is fixed to the gcd of the input leading coefficients so the
/// images agree; the candidate is accepted once it divides both inputs.
fn interpolated_gcd(a: &[UniPoly], b: &[UniPoly]) -> BiPoly {
    let la = a.last().unwrap();
    let lb = b.last().unwrap();
    let lead = la.gcd(lb);
    let deg_x = |p: &[UniPoly]| p.iter().filter_map(|c| c.deg()).max().unwrap_or(0);
    let needed = deg_x(a).min(deg_x(b)) + lead.deg().unwrap_or(0) + 1;
    let fa = BiPoly::from_y_coeffs(a);
    let fb = BiPoly::from_y_coeffs(b);
    let mut xs: Vec<Rational> = Vec::new();
    let mut images: Vec<UniPoly> = Vec::new();
    let mut best: Option<usize> = None;
    let mut x0 = 0i64;
    loop {
        x0 += 1;
        let xq = Rational::from_integer(x0.into());
        if la.eval(&xq).is_zero() || lb.eval(&xq).is_zero() {
            continue;
        }
        let sa = UniPoly::from_coeffs(a.iter().map(|c| c.eval(&xq)).collect());
        let sb = UniPoly::from_coeffs(b.iter().map(|c| c.eval(&xq)).collect());
        let img = sa.gcd(&sb);
        let d = img.deg().unwrap_or(0);
        if d == 0 {
            return BiPoly::one();
        }
        match best {
            Some(e) if d > e => continue,
            Some(e) if d == e => {}
            _ => {
                best = Some(d);
                xs.clear();
                images.clear();
            }
        }
        images.push(img.scale(&lead.eval(&xq)));
        xs.push(xq);
        if xs.len() < needed {
            continue;
        }
        let coeffs: Vec<UniPoly> = (0..=d)
            .map(|j| {
                let ys: Vec<Rational> = images.iter().map(|p| p.coeff(j)).collect();
                interpolate(&xs, &ys)
            })
            .collect();
        let h = BiPoly::from_y_coeffs(&primitive_y(&coeffs));
        if fa.div_exact(&h).is_some() && fb.div_exact(&h).is_some() {
            return h;
        }
    }
}

/// Cheap certificate that two primitive polynomials in y have no common
/// factor of positive y-degree: specialize x at a point where both leading
/// coefficients survive and check that the univariate gcd is constant.
fn specialization_coprime(a: &[UniPoly], b: &[UniPoly]) -> bool {
    let la = a.last().unwrap();
    let lb = b.last().unwrap();
    for x0 in [3i64, -5, 7, 11, -13] {
        let xq = Rational::from_integer(x0.into());
        if la.eval(&xq).is_zero() || lb.eval(&xq).is_zero() {
            continue;
        }
        let sa = UniPoly::from_coeffs(a.iter().map(|c| c.eval(&xq)).collect());
        let sb = UniPoly::from_coeffs(b.iter().map(|c| c.eval(&xq)).collect());
        return sa.gcd(&sb).deg() == Some(0);
    }
    false
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m = Monomial { x: m1.x + m2.x, y: m1.y + m2.y };
                *acc.entry(m).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        BiPoly { terms: acc }
    }
}

fn fmt_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    match m.x {
        0 => {}
        1 => parts.push("x".to_string()),
        e => parts.push(format!("x^{e}")),
    }
    match m.y {
        0 => {}
        1 => parts.push("y".to_string()),
        e => parts.push(format!("y^{e}")),
    }
    parts.join("*")
}

/// Canonical text form: graded-lex descending, explicit `^` and `*`,
/// rational coefficients written `p/q`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono = fmt_monomial(m);
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rfrac, rint};

    fn f1() -> BiPoly {
        BiPoly::from_int_terms(&[(1, 4, 0), (1, 2, 1), (1, 0, 2)])
    }

    #[test]
    fn order_and_components() {
        assert_eq!(f1().ord2(), Some(2));
        assert_eq!(BiPoly::zero().ord2(), None);
        assert_eq!(f1().homog_component(3), BiPoly::from_int_terms(&[(1, 2, 1)]));
        assert!(BiPoly::from_int_terms(&[(1, 2, 0), (1, 0, 2)]).is_y_regular().unwrap());
        assert!(!BiPoly::from_int_terms(&[(1, 1, 1)]).is_y_regular().unwrap());
    }

    #[test]
    fn shears_and_translation() {
        let circ = BiPoly::from_int_terms(&[(1, 2, 0), (1, 0, 2)]);
        assert_eq!(circ.shear_y(), BiPoly::from_int_terms(&[(2, 2, 0), (2, 1, 1), (1, 0, 2)]));
        let p = BiPoly::from_int_terms(&[(1, 2, 0), (1, 0, 1)]);
        assert_eq!(
            p.translate(&rint(1), &rint(0)),
            BiPoly::from_int_terms(&[(1, 2, 0), (2, 1, 0), (1, 0, 0), (1, 0, 1)])
        );
        assert_eq!(
            BiPoly::from_int_terms(&[(1, 2, 0)]).shear_x(&rint(1)),
            BiPoly::from_int_terms(&[(1, 2, 0), (2, 1, 1), (1, 0, 2)])
        );
    }

    #[test]
    fn jacobian_and_tangency() {
        let g = BiPoly::from_int_terms(&[(1, 2, 0), (1, 0, 2)]);
        assert_eq!(
            jacobian_det(&f1(), &g),
            BiPoly::from_int_terms(&[(8, 3, 1), (4, 1, 2), (-2, 3, 0), (-4, 1, 1)])
        );
        assert_eq!(tangency_poly(&BiPoly::y(), &BiPoly::x()), BiPoly::from_int_terms(&[(-1, 2, 0), (-1, 0, 2)]));
        let f = BiPoly::from_int_terms(&[(1, 1, 2)]);
        assert_eq!(tangency_poly(&f, &BiPoly::y()), BiPoly::from_int_terms(&[(1, 0, 4), (-1, 2, 2)]));
    }

    #[test]
    fn gcd_examples() {
        let a = BiPoly::from_int_terms(&[(1, 2, 0), (-1, 0, 2)]);
        let b = BiPoly::from_int_terms(&[(1, 1, 0), (-1, 0, 1)]);
        assert_eq!(gcd2(&a, &b), b);
        let c = BiPoly::from_int_terms(&[(1, 2, 0), (1, 0, 2)]);
        let d = BiPoly::from_int_terms(&[(1, 1, 0), (1, 0, 1)]);
        assert_eq!(gcd2(&c, &d), BiPoly::one());
        assert_eq!(gcd2(&BiPoly::from_int_terms(&[(1, 1, 2)]), &BiPoly::y()), BiPoly::y());
        let common = BiPoly::from_int_terms(&[(1, 3, 0), (-2, 1, 1), (1, 0, 2), (1, 0, 0)]);
        let u = &common * &BiPoly::from_int_terms(&[(3, 1, 0), (1, 0, 3)]);
        let v = &common * &BiPoly::from_int_terms(&[(1, 2, 2), (-7, 0, 0)]);
        assert_eq!(gcd2(&u, &v), common.normalized());
    }

    #[test]
    fn regularization() {
        let f = BiPoly::from_int_terms(&[(1, 0, 2)]);
        assert_eq!(
            squarefree_regularize(&f, 2, &rint(1)).unwrap(),
            BiPoly::from_int_terms(&[(1, 0, 2), (1, 4, 0), (1, 0, 4)])
        );
        assert!(matches!(squarefree_regularize(&f, 1, &rint(1)), Err(BiPolyError::LevelTooSmall { .. })));
        assert_eq!(truncation_bound(2).unwrap(), rint(1));
        assert_eq!(truncation_bound(3).unwrap(), rfrac(5, 2));
        assert_eq!(truncation_bound(1).unwrap(), rfrac(1, 2));
        assert!(truncation_bound(0).is_err());
    }

    #[test]
    fn canonical_text() {
        assert_eq!(f1().to_string(), "x^4 + x^2*y + y^2");
        let p = BiPoly::from_int_terms(&[(-1, 2, 0), (2, 1, 1), (-1, 0, 2), (3, 0, 0)]).scale(&rfrac(1, 2));
        assert_eq!(p.to_string(), "-1/2*x^2 + x*y - 1/2*y^2 + 3/2");
    }
}
