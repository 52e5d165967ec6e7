//! Newton-polygon tree over the roots of positive valuation of a square-free
//! polynomial, expanded up to an exponent bound.

use num_traits::{One, Zero};

use crate::algebraic::{real_roots, FieldElem, KPoly, RealField};
use crate::arith::Rational;
use crate::bipoly::BiPoly;

use super::series::{embed_terms, substitute, YPoly};

pub(crate) type Terms = Vec<(Rational, FieldElem)>;

/// A real root of positive valuation that is alone in its cluster: the
/// remaining terms are determined over the current field.
#[derive(Clone, Debug)]
pub(crate) struct RootCursor {
    poly: BiPoly,
    pub field: RealField,
    pub terms: Terms,
    /// All terms with exponent below `level` are known.
    pub level: Rational,
    /// Valuation of the `y^1` coefficient after shifting by the terms.
    v1: Rational,
    shifted: YPoly,
    cap: Rational,
}

/// Outcome of a bounded expansion at one cluster.
pub(crate) enum Leaf {
    /// A single root, exact up to continuation.
    Root(RootCursor),
    /// Two or more roots sharing `terms`, each with next exponent at least the bound.
    Pending { field: RealField, terms: Terms },
}

struct Cluster {
    field: RealField,
    terms: Terms,
    h: YPoly,
    r: usize,
    vr: Rational,
    cap: Rational,
}

/// Expand `p` (square-free in `y`) with every exponent below `bound` resolved.
pub(crate) fn build(p: &BiPoly, bound: &Rational) -> Vec<Leaf> {
    let q = RealField::rational();
    let probe = YPoly::from_bipoly(p, &q, None);
    // Root vertex: smallest j with minimal valuation.
    let mut best: Option<(usize, Rational)> = None;
    for j in 0..=probe.deg() {
        if let Some(v) = probe.val(j) {
            if best.as_ref().is_none_or(|(_, b)| v < b) {
                best = Some((j, v.clone()));
            }
        }
    }
    let Some((r, vr)) = best else { return Vec::new() };
    if r == 0 {
        return Vec::new();
    }
    let cap = &vr + bound * Rational::from_integer(r.into());
    let mut h = probe;
    h.truncate(&cap);
    let mut out = Vec::new();
    expand_cluster(p, Cluster { field: q, terms: Vec::new(), h, r, vr, cap }, bound, &mut out);
    out
}

/// Leaves come out ordered by the exponent where they branch off, then by
/// the value of the branching coefficient.
fn expand_cluster(p: &BiPoly, cl: Cluster, bound: &Rational, out: &mut Vec<Leaf>) {
    let mut jc = cl.r;
    let mut vc = cl.vr.clone();
    loop {
        // Steepest edge to the left of (jc, vc); ties go to the farthest point.
        let mut pick: Option<(usize, Rational)> = None;
        for j in 0..jc {
            if let Some(v) = cl.h.val(j) {
                let mu = (v - &vc) / Rational::from_integer((jc - j).into());
                if pick.as_ref().is_none_or(|(_, m)| &mu < m) {
                    pick = Some((j, mu));
                }
            }
        }
        let edge = pick.filter(|(_, mu)| mu < bound);
        let Some((j1, mu)) = edge else {
            if jc == 1 {
                out.push(Leaf::Root(RootCursor {
                    poly: p.clone(),
                    field: cl.field.clone(),
                    terms: cl.terms.clone(),
                    level: bound.clone(),
                    v1: vc.clone(),
                    shifted: cl.h.clone(),
                    cap: cl.cap.clone(),
                }));
            } else if jc > 1 {
                out.push(Leaf::Pending { field: cl.field.clone(), terms: cl.terms.clone() });
            }
            break;
        };
        let line = |j: usize| &vc + &mu * Rational::from_integer((jc - j).into());
        let coeffs: Vec<FieldElem> = (j1..=jc).map(|j| cl.h.coeff(j, &line(j))).collect();
        let chi = KPoly::new(&cl.field, coeffs);
        for root in real_roots(&chi) {
            let e = root.multiplicity;
            let ve = line(e);
            let (mut h, mut terms) = if root.field.same(&cl.field) {
                (cl.h.clone(), cl.terms.clone())
            } else {
                (cl.h.embed(&root.embed), embed_terms(&cl.terms, &root.embed))
            };
            let cap = &ve + bound * Rational::from_integer(e.into());
            h.truncate(&cap);
            h.shift(&root.value, &mu, Some(&cap));
            terms.push((mu.clone(), root.value.clone()));
            if e == 1 {
                let mut cur = RootCursor {
                    poly: p.clone(),
                    field: root.field.clone(),
                    terms,
                    level: mu.clone(),
                    v1: ve,
                    shifted: h,
                    cap,
                };
                cur.extend_to(bound);
                out.push(Leaf::Root(cur));
            } else {
                let child = Cluster { field: root.field.clone(), terms, h, r: e, vr: ve, cap };
                expand_cluster(p, child, bound, out);
            }
        }
        vc = cl.h.val(j1).unwrap().clone();
        jc = j1;
    }
}

impl RootCursor {
    /// Compute every term with exponent below `n`.
    pub fn extend_to(&mut self, n: &Rational) {
        if &self.level >= n {
            return;
        }
        let need = &self.v1 + n;
        if need > self.cap {
            let cap = &need + n;
            let mut h = YPoly::from_bipoly(&self.poly, &self.field, Some(&cap));
            h.shift_by_terms(&self.terms, Some(&cap));
            self.shifted = h;
            self.cap = cap;
        }
        let lc1 = self.shifted.coeff(1, &self.v1);
        debug_assert!(!lc1.is_zero());
        loop {
            let Some((v0, a0)) = self.shifted.c[0].lowest() else { break };
            let mu = v0 - &self.v1;
            if &mu >= n {
                break;
            }
            let c = a0.neg().div(&lc1).expect("nonzero vertex coefficient");
            let cap = self.cap.clone();
            self.shifted.shift(&c, &mu, Some(&cap));
            self.terms.push((mu, c));
        }
        if &self.level < n {
            self.level = n.clone();
        }
    }

    /// Terms with exponent below `n`.
    pub fn truncated(&mut self, n: &Rational) -> Terms {
        self.extend_to(n);
        self.terms.iter().filter(|(e, _)| e < n).cloned().collect()
    }

    /// Order and leading coefficient of `h` along the full root, by raising
    /// the known level until the lowest term of `h(x, S + y1)` provably
    /// dominates every term involving the unknown tail `y1`. Returns `None`
    /// if `h` appears to vanish on the root.
    pub fn order_along(&mut self, h: &BiPoly) -> Option<(Rational, FieldElem)> {
        let two = Rational::from_integer(2.into());
        let mut k = if self.level.is_zero() { Rational::one() } else { self.level.clone() };
        let mut xcap = Rational::from_integer(8.into()).max(k.clone());
        for _ in 0..64 {
            self.extend_to(&k);
            let k_eff = self.level.clone();
            let mut hy = YPoly::from_bipoly(h, &self.field, Some(&xcap));
            hy.shift_by_terms(&self.terms, Some(&xcap));
            let Some((v0, a0)) = hy.c.first().and_then(|p| p.lowest()) else {
                // Either the cap is too low or the known terms are an exact
                // root of `h`, in which case more terms are needed.
                match substitute(h, &self.field, &self.terms).lowest() {
                    Some((e, _)) => xcap = e.clone(),
                    None => k = &k_eff * &two,
                }
                continue;
            };
            let ok = (1..hy.c.len()).all(|j| match hy.val(j) {
                None => true,
                Some(vj) => vj > &(v0 - &k_eff * Rational::from_integer(j.into())),
            });
            if ok {
                return Some((v0.clone(), a0.clone()));
            }
            k = &k_eff * &two;
        }
        None
    }
}
