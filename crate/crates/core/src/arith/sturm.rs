//! Sturm sequences, real root counting and isolation.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::intpoly::{self, IntPoly};
use super::upoly::UniPoly;
use super::Rational;

/// Closed rational interval `[lo, hi]`. When `lo == hi` the interval is a point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalQ {
    pub lo: Rational,
    pub hi: Rational,
}

impl IntervalQ {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        IntervalQ { lo, hi }
    }

    pub fn point(q: Rational) -> Self {
        IntervalQ { lo: q.clone(), hi: q }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn disjoint(&self, other: &IntervalQ) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    pub fn intersect(&self, other: &IntervalQ) -> Option<IntervalQ> {
        let lo = if self.lo > other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi < other.hi { self.hi.clone() } else { other.hi.clone() };
        (lo <= hi).then_some(IntervalQ { lo, hi })
    }

    pub fn add(&self, o: &IntervalQ) -> IntervalQ {
        IntervalQ { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn neg(&self) -> IntervalQ {
        IntervalQ { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn mul(&self, o: &IntervalQ) -> IntervalQ {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        IntervalQ { lo, hi }
    }

    pub fn scale(&self, s: &Rational) -> IntervalQ {
        self.mul(&IntervalQ::point(s.clone()))
    }

    /// Sign if the interval excludes zero (or is the point zero).
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }
}

/// Interval enclosure of `p` over `x` by Horner evaluation.
pub fn eval_interval(p: &UniPoly, x: &IntervalQ) -> IntervalQ {
    let mut acc = IntervalQ::point(Rational::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&IntervalQ::point(c.clone()));
    }
    acc
}

/// Sturm sequence of a polynomial, stored as primitive integer polynomials
/// (positive scalings do not change sign variations).
#[derive(Clone, Debug)]
pub struct SturmSeq {
    seq: Vec<IntPoly>,
}

fn eval_sign(p: &IntPoly, t: &Rational) -> i32 {
    // Sign of d^deg * p(n/d), homogenized Horner in integers.
    let n = t.numer();
    let d = t.denom();
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    for c in p.iter().rev() {
        acc = acc * n + c * &dpow;
        dpow *= d;
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

impl SturmSeq {
    pub fn new(p: &UniPoly) -> Self {
        let (_, p0) = p.to_primitive_int();
        let mut seq = Vec::new();
        if p0.is_empty() {
            return SturmSeq { seq };
        }
        let p1 = intpoly::primitive(&intpoly::derivative(&p0));
        seq.push(p0);
        if p1.is_empty() {
            return SturmSeq { seq };
        }
        seq.push(p1);
        loop {
            let n = seq.len();
            let a = &seq[n - 2];
            let b = &seq[n - 1];
            let r = intpoly::prem(a, b);
            if r.is_empty() {
                break;
            }
            let delta = a.len() - b.len() + 1;
            let lb_neg = b.last().unwrap().is_negative();
            // -rem has the sign of -sign(lc b)^delta * prem.
            let flip = !(lb_neg && delta % 2 == 1);
            let mut next = intpoly::primitive_keep_sign(&r);
            if flip {
                next = next.into_iter().map(|c| -c).collect();
            }
            seq.push(next);
        }
        SturmSeq { seq }
    }

    fn variations<I: Iterator<Item = i32>>(signs: I) -> usize {
        let mut last = 0;
        let mut v = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, t: &Rational) -> usize {
        Self::variations(self.seq.iter().map(|p| eval_sign(p, t)))
    }

    fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| if p.last().unwrap().is_positive() { 1 } else { -1 }))
    }

    fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| {
            let s = if p.last().unwrap().is_positive() { 1 } else { -1 };
            if (p.len() - 1) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        if self.seq.is_empty() || a >= b {
            return 0;
        }
        self.variations_at(a) - self.variations_at(b)
    }

    pub fn count_all(&self) -> usize {
        if self.seq.is_empty() {
            return 0;
        }
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }

    fn is_root(&self, t: &Rational) -> bool {
        eval_sign(&self.seq[0], t) == 0
    }

    /// Distinct real roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        let c = self.count_half_open(a, b);
        if c > 0 && self.is_root(b) {
            c - 1
        } else {
            c
        }
    }

    /// Distinct real roots in the closed interval `[a, b]`.
    pub fn count_closed(&self, a: &Rational, b: &Rational) -> usize {
        if a == b {
            return usize::from(!self.seq.is_empty() && self.is_root(a));
        }
        self.count_half_open(a, b) + usize::from(self.is_root(a))
    }
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`.
pub fn count_real_roots(p: &UniPoly, a: &Rational, b: &Rational) -> usize {
    if p.is_constant() {
        return 0;
    }
    SturmSeq::new(&p.squarefree_part()).count_open(a, b)
}

/// Isolating intervals for all distinct real roots of `p`, in increasing order.
/// Each interval is either a point (exact rational root) or an open-ended
/// interval whose endpoints are not roots and which contains exactly one root.
pub fn isolate_real_roots(p: &UniPoly) -> Vec<IntervalQ> {
    if p.is_constant() {
        return Vec::new();
    }
    let sq = p.squarefree_part();
    let st = SturmSeq::new(&sq);
    let b = sq.root_bound();
    let mut out = Vec::new();
    isolate_rec(&sq, &st, -b.clone(), b, &mut out);
    out
}

fn isolate_rec(p: &UniPoly, st: &SturmSeq, a: Rational, b: Rational, out: &mut Vec<IntervalQ>) {
    // Invariant: a and b are not roots.
    let n = st.count_half_open(&a, &b);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(IntervalQ::new(a, b));
        return;
    }
    let m = (&a + &b) / Rational::from_integer(2.into());
    if p.eval(&m).is_zero() {
        let span = &b - &a;
        let mut eps = span / Rational::from_integer(4.into());
        // Shrink until the neighbourhood of m holds only m.
        loop {
            let l = &m - &eps;
            let r = &m + &eps;
            if st.count_half_open(&l, &r) == 1 && !p.eval(&l).is_zero() {
                isolate_rec(p, st, a, l, out);
                out.push(IntervalQ::point(m));
                isolate_rec(p, st, r, b, out);
                return;
            }
            eps /= Rational::from_integer(2.into());
        }
    }
    isolate_rec(p, st, a, m.clone(), out);
    isolate_rec(p, st, m, b, out);
}

/// Halve an isolating interval of a root of square-free `p`.
pub fn bisect(p: &UniPoly, iv: &IntervalQ) -> IntervalQ {
    if iv.is_point() {
        return iv.clone();
    }
    let m = iv.mid();
    let sm = p.sign_at(&m);
    if sm == 0 {
        return IntervalQ::point(m);
    }
    let slo = p.sign_at(&iv.lo);
    if slo != sm {
        IntervalQ::new(iv.lo.clone(), m)
    } else {
        IntervalQ::new(m, iv.hi.clone())
    }
}

/// Refine until the width is at most `eps`.
pub fn refine_to(p: &UniPoly, iv: &IntervalQ, eps: &Rational) -> IntervalQ {
    let mut cur = iv.clone();
    while !cur.is_point() && &cur.width() > eps {
        cur = bisect(p, &cur);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn counts_roots_of_cubic() {
        let p = UniPoly::from_ints(&[1, -3, 0, 1]);
        assert_eq!(count_real_roots(&p, &q(0), &q(2)), 2);
        assert_eq!(SturmSeq::new(&p).count_all(), 3);
    }

    #[test]
    fn open_interval_excludes_endpoint_roots() {
        let p = UniPoly::from_ints(&[0, -1, 0, 1]);
        assert_eq!(count_real_roots(&p, &q(-1), &q(1)), 1);
        assert_eq!(count_real_roots(&p, &q(-2), &q(2)), 3);
        assert_eq!(SturmSeq::new(&p).count_closed(&q(-1), &q(1)), 3);
    }

    #[test]
    fn isolates_rational_and_irrational_roots() {
        // t (t^2 - 2)
        let p = UniPoly::from_ints(&[0, -2, 0, 1]);
        let iv = isolate_real_roots(&p);
        assert_eq!(iv.len(), 3);
        assert!(iv[1].is_point() && iv[1].lo.is_zero());
        assert!(iv[0].hi < q(0) && iv[2].lo > q(0));
    }
}
