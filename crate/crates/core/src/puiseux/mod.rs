//! Real Newton–Puiseux expansion: truncated branch sets, exact substitution
//! of a branch into a polynomial, membership and multiplicity.

mod series;
mod tree;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use thiserror::Error;

use crate::algebraic::{field_elem_value, FieldElem, RealAlgebraic, RealField};
use crate::arith::Rational;
use crate::bipoly::{truncation_bound, BiPoly, BiPolyError};

pub(crate) use tree::RootCursor;
use tree::{build, Leaf, Terms};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PuiseuxError {
    #[error("the zero polynomial has no Puiseux roots")]
    ZeroPolynomial,
    #[error("polynomial is not y-regular; shear it first")]
    NotYRegular,
    #[error("truncation level must be positive")]
    BadLevel,
    #[error("branch is not a truncated root of the polynomial")]
    NotAMember,
    #[error(transparent)]
    Poly(#[from] BiPolyError),
}

/// Which half-plane a branch lives in: `Minus` parameterizes `x -> 0-`
/// through the roots of `f(-x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Plus, Side::Minus];

    /// `f` in the coordinates where this side is `x > 0`.
    pub fn orient(self, f: &BiPoly) -> BiPoly {
        match self {
            Side::Plus => f.clone(),
            Side::Minus => f.reflect_x(),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "plus",
            Side::Minus => "minus",
        })
    }
}

/// A real Puiseux series truncated below `truncation`.
#[derive(Clone, Debug)]
pub struct PuiseuxBranch {
    side: Side,
    field: RealField,
    terms: Terms,
    truncation: Rational,
}

impl PuiseuxBranch {
    pub fn new(side: Side, field: RealField, terms: Vec<(Rational, FieldElem)>, truncation: Rational) -> Self {
        PuiseuxBranch { side, field, terms, truncation }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn field(&self) -> &RealField {
        &self.field
    }

    pub fn terms(&self) -> &[(Rational, FieldElem)] {
        &self.terms
    }

    pub fn truncation(&self) -> &Rational {
        &self.truncation
    }

    /// Common denominator of the exponents.
    pub fn ramification(&self) -> u64 {
        self.terms
            .iter()
            .fold(BigInt::one(), |acc, (e, _)| acc.lcm(e.denom()))
            .to_u64()
            .unwrap_or(u64::MAX)
    }

    pub fn exponents(&self) -> Vec<Rational> {
        self.terms.iter().map(|(e, _)| e.clone()).collect()
    }

    pub fn coefficient_values(&self) -> Vec<RealAlgebraic> {
        self.terms.iter().map(|(_, c)| field_elem_value(c)).collect()
    }

    /// The same series cut at a lower level.
    pub fn truncate(&self, n: &Rational) -> PuiseuxBranch {
        let n = n.min(&self.truncation).clone();
        let terms = self.terms.iter().filter(|(e, _)| e < &n).cloned().collect();
        PuiseuxBranch { side: self.side, field: self.field.clone(), terms, truncation: n }
    }

    /// Coefficient-wise equality of the truncated series, exact across fields.
    pub fn same_series(&self, o: &PuiseuxBranch) -> bool {
        if self.side != o.side || self.terms.len() != o.terms.len() {
            return false;
        }
        self.terms.iter().zip(&o.terms).all(|((e, a), (f, b))| e == f && same_value(a, b))
    }
}

fn same_value(a: &FieldElem, b: &FieldElem) -> bool {
    if a.field().same(b.field()) {
        return a == b;
    }
    if let (Some(p), Some(q)) = (a.as_rational(), b.as_rational()) {
        return p == q;
    }
    field_elem_value(a) == field_elem_value(b)
}

impl fmt::Display for PuiseuxBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y = ")?;
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mon = format_monomial(e);
            match c.as_rational() {
                Some(q) => {
                    let neg = q.is_negative();
                    let a = q.abs();
                    match (i, neg) {
                        (0, true) => write!(f, "-")?,
                        (0, false) => {}
                        (_, true) => write!(f, " - ")?,
                        (_, false) => write!(f, " + ")?,
                    }
                    if a.is_one() {
                        write!(f, "{mon}")?;
                    } else {
                        write!(f, "{a}*{mon}")?;
                    }
                }
                None => {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{}*{mon}", field_elem_value(c))?;
                }
            }
        }
        if !self.terms.is_empty() {
            write!(f, " + ")?;
        }
        write!(f, "O({})", format_monomial(&self.truncation))
    }
}

fn format_monomial(e: &Rational) -> String {
    if e.is_one() {
        "x".to_string()
    } else if e.is_integer() {
        format!("x^{e}")
    } else {
        format!("x^({e})")
    }
}

/// Truncated real branches of one polynomial on one side.
#[derive(Clone, Debug)]
pub struct BranchSet {
    pub branches: Vec<PuiseuxBranch>,
    pub source: BiPoly,
    pub level: Rational,
    pub side: Side,
}

impl BranchSet {
    pub fn len(&self) -> usize {
        self.branches.len()
    }

    pub fn is_empty(&self) -> bool {
        self.branches.is_empty()
    }

    pub fn contains(&self, b: &PuiseuxBranch) -> bool {
        self.branches.iter().any(|c| c.same_series(b))
    }
}

/// Order and leading coefficient of a fractional power series.
#[derive(Clone, Debug)]
pub enum SeriesLeading {
    /// The series vanishes identically.
    Infinite,
    Term { order: Rational, coeff: FieldElem },
}

impl SeriesLeading {
    pub fn order(&self) -> Option<&Rational> {
        match self {
            SeriesLeading::Infinite => None,
            SeriesLeading::Term { order, .. } => Some(order),
        }
    }
}

fn check_regular(f: &BiPoly) -> Result<(), PuiseuxError> {
    if f.is_zero() {
        return Err(PuiseuxError::ZeroPolynomial);
    }
    if !f.is_y_regular()? {
        return Err(PuiseuxError::NotYRegular);
    }
    Ok(())
}

/// The truncations below `n` of the roots of `f` (on the given side) whose
/// truncation has real coefficients. For `n` above the sound bound of a
/// square-free `f` these are exactly the truncations of the real roots.
pub fn expand(f: &BiPoly, n: &Rational, side: Side) -> Result<BranchSet, PuiseuxError> {
    check_regular(f)?;
    expand_any(f, n, side)
}

/// `expand` without the regularity check; valid for any `f` whose roots of
/// positive valuation are wanted, y-regular or not.
fn expand_any(f: &BiPoly, n: &Rational, side: Side) -> Result<BranchSet, PuiseuxError> {
    if f.is_zero() {
        return Err(PuiseuxError::ZeroPolynomial);
    }
    if !n.is_positive() {
        return Err(PuiseuxError::BadLevel);
    }
    let p = side.orient(&f.squarefree_y());
    let mut branches = Vec::new();
    for leaf in build(&p, n) {
        match leaf {
            Leaf::Root(mut cur) => {
                let terms = cur.truncated(n);
                branches.push(PuiseuxBranch::new(side, cur.field.clone(), terms, n.clone()));
            }
            Leaf::Pending { field, terms } => {
                branches.push(PuiseuxBranch::new(side, field, terms, n.clone()));
            }
        }
    }
    Ok(BranchSet { branches, source: f.clone(), level: n.clone(), side })
}

/// The real roots of positive valuation of `p` (square-free in `y`, already
/// oriented), each alone in its cluster and ready for continuation.
pub(crate) fn real_root_cursors(p: &BiPoly) -> Vec<RootCursor> {
    let mut bound = Rational::from_integer(2.into());
    loop {
        let leaves = build(p, &bound);
        if leaves.iter().all(|l| matches!(l, Leaf::Root(_))) {
            return leaves
                .into_iter()
                .map(|l| match l {
                    Leaf::Root(c) => c,
                    Leaf::Pending { .. } => unreachable!(),
                })
                .collect();
        }
        bound = &bound * Rational::from_integer(2.into());
    }
}

/// Real roots of `f` on one side, each truncated at its own separation
/// point. Works for any `f` with `f(0, y)` not identically zero after
/// removing powers of `x`.
pub fn real_branches(f: &BiPoly, side: Side) -> Vec<PuiseuxBranch> {
    if f.is_zero() {
        return Vec::new();
    }
    let p = side.orient(&f.squarefree_y());
    real_root_cursors(&p)
        .into_iter()
        .map(|c| PuiseuxBranch::new(side, c.field.clone(), c.terms.clone(), c.level.clone()))
        .collect()
}

/// Real roots of `f` on one side truncated below `n`, one per root.
pub fn real_branches_at(f: &BiPoly, n: &Rational, side: Side) -> Vec<PuiseuxBranch> {
    side_cursors(f, side)
        .into_iter()
        .map(|mut c| {
            let terms = c.truncated(n);
            PuiseuxBranch::new(side, c.field.clone(), terms, n.clone())
        })
        .collect()
}

/// Whether `f` has a real half-branch through the origin on either side.
pub fn has_real_branches(f: &BiPoly) -> bool {
    Side::BOTH.iter().any(|&s| !real_branches(f, s).is_empty())
}

/// Order and leading coefficient of `f(±x, S(x))` for the finite series `S`
/// of the branch. Reports `Infinite` when the substitution vanishes or the
/// branch is a truncated root of `f`.
pub fn substitute_order(f: &BiPoly, branch: &PuiseuxBranch) -> SeriesLeading {
    let fo = branch.side.orient(f);
    let h = series::substitute(&fo, &branch.field, &branch.terms);
    match h.lowest() {
        None => SeriesLeading::Infinite,
        Some((e, c)) => {
            if member(f, branch).unwrap_or(false) {
                SeriesLeading::Infinite
            } else {
                SeriesLeading::Term { order: e.clone(), coeff: c.clone() }
            }
        }
    }
}

/// Whether the branch equals the truncation of some root of `f` at the
/// branch's own level.
pub fn member(f: &BiPoly, branch: &PuiseuxBranch) -> Result<bool, PuiseuxError> {
    let fo = branch.side.orient(f);
    if series::substitute(&fo, &branch.field, &branch.terms).lowest().is_none() {
        return Ok(true);
    }
    let set = expand_any(f, &branch.truncation, branch.side)?;
    Ok(set.contains(branch))
}

/// Real roots of positive valuation of `p` on one side; `p` need not be
/// square-free or y-regular.
pub(crate) fn side_cursors(p: &BiPoly, side: Side) -> Vec<RootCursor> {
    if p.is_zero() || p.deg_y().unwrap_or(0) == 0 {
        return Vec::new();
    }
    real_root_cursors(&side.orient(&p.squarefree_y()))
}

/// Order of `f` along `S + c x^k` minimized over `deg_y f + 1` values of `c`;
/// the minimum is the generic order.
pub(crate) fn generic_order(f: &BiPoly, side: Side, field: &RealField, terms: &Terms, k: &Rational) -> Option<Rational> {
    let fo = side.orient(f);
    let tries = f.deg_y().unwrap_or(0) as i64 + 1;
    let mut best: Option<Rational> = None;
    for c in 1..=tries {
        let mut t = terms.clone();
        t.push((k.clone(), FieldElem::from_rational(field, Rational::from_integer(c.into()))));
        let h = series::substitute(&fo, field, &t);
        if let Some((e, _)) = h.lowest() {
            if best.as_ref().is_none_or(|b| e < b) {
                best = Some(e.clone());
            }
        }
    }
    best
}

/// Multiplicity of the root of `f` truncated by `branch`, via the order jump
/// `ord f(x, phi_{N+1} + c x^{N+1}) - ord f(x, phi_N + c x^N)` at generic `c`.
/// Needs `n` above the sound bound for `f`.
pub fn multiplicity(f: &BiPoly, branch: &PuiseuxBranch, n: u32) -> Result<u32, PuiseuxError> {
    check_regular(f)?;
    let nq = Rational::from_integer(n.into());
    let n1 = Rational::from_integer((n + 1).into());
    let base = branch.truncate(&nq);
    let next = expand(f, &n1, branch.side)?;
    let ext = next
        .branches
        .into_iter()
        .find(|b| b.truncate(&nq).same_series(&base))
        .ok_or(PuiseuxError::NotAMember)?;
    let lo = generic_order(f, branch.side, &ext.field, &ext.truncate(&nq).terms, &nq);
    let hi = generic_order(f, branch.side, &ext.field, &ext.terms, &n1);
    match (lo, hi) {
        (Some(a), Some(b)) if b > a => (b - a).to_integer().to_u32().ok_or(PuiseuxError::NotAMember),
        _ => Err(PuiseuxError::NotAMember),
    }
}

/// Smallest level at which truncation maps the real roots of `f` bijectively
/// onto the real-coefficient truncations, capped at `floor(N(deg f)) + 1`.
pub fn separation_level(f: &BiPoly) -> Result<u32, PuiseuxError> {
    check_regular(f)?;
    let d = f.total_degree().unwrap_or(0).max(1);
    let cap = truncation_bound(i64::from(d))?.floor().to_integer().to_u32().unwrap_or(u32::MAX) + 1;
    let roots: Vec<(Side, Vec<RootCursor>)> = Side::BOTH
        .iter()
        .map(|&s| (s, real_root_cursors(&s.orient(&f.squarefree_y()))))
        .collect();
    'level: for m in 1..cap {
        let mq = Rational::from_integer(m.into());
        for (side, cursors) in &roots {
            let set = expand(f, &mq, *side)?;
            if set.len() != cursors.len() {
                continue 'level;
            }
            let truncs: Vec<PuiseuxBranch> = cursors
                .iter()
                .map(|c| {
                    let mut c = c.clone();
                    let t = c.truncated(&mq);
                    PuiseuxBranch::new(*side, c.field.clone(), t, mq.clone())
                })
                .collect();
            for i in 0..truncs.len() {
                for j in 0..i {
                    if truncs[i].same_series(&truncs[j]) {
                        continue 'level;
                    }
                }
            }
        }
        return Ok(m);
    }
    Ok(cap)
}

/// Sound truncation level `floor(N(d)) + 1`.
pub fn sound_level(d: u32) -> u32 {
    truncation_bound(i64::from(d.max(1))).map(|b| b.floor().to_integer().to_u32().unwrap_or(u32::MAX) + 1).unwrap_or(1)
}
