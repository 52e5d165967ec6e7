//! Existence, value and range of `lim f/g` at a point for bivariate
//! polynomials over the rationals.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::algebraic::{field_elem_value, FieldElem, RealAlgebraic};
use crate::arith::Rational;
use crate::bipoly::{gcd2, jacobian_det, tangency_poly, truncation_bound, BiPoly};
use crate::puiseux::{
    generic_order, separation_level, side_cursors, substitute_order, PuiseuxBranch, PuiseuxError, RootCursor,
    SeriesLeading, Side,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LimitError {
    #[error("denominator is identically zero")]
    ZeroDenominator,
    #[error("no shear among the tried constants makes the input y-regular")]
    NoShear,
    #[error("the Jacobian determinant of the pair vanishes identically")]
    DegenerateJacobian,
    #[error("branch lies on the denominator")]
    BranchOnDenominator,
    #[error(transparent)]
    Puiseux(#[from] PuiseuxError),
}

/// A real number or one of the two infinities.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtReal {
    NegInf,
    Finite(RealAlgebraic),
    PosInf,
}

impl ExtReal {
    pub fn zero() -> Self {
        ExtReal::Finite(RealAlgebraic::zero())
    }

    pub fn infinity(sign: i32) -> Self {
        if sign < 0 {
            ExtReal::NegInf
        } else {
            ExtReal::PosInf
        }
    }

    pub fn finite(&self) -> Option<&RealAlgebraic> {
        match self {
            ExtReal::Finite(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => f.write_str("-inf"),
            ExtReal::PosInf => f.write_str("+inf"),
            ExtReal::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// Closed interval of subsequential limit values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeInterval {
    pub min: ExtReal,
    pub max: ExtReal,
}

impl RangeInterval {
    pub fn point(v: ExtReal) -> Self {
        RangeInterval { min: v.clone(), max: v }
    }

    pub fn contains(&self, v: &ExtReal) -> bool {
        &self.min <= v && v <= &self.max
    }
}

impl fmt::Display for RangeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.min, self.max)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Exists(RealAlgebraic),
    /// `f/g` tends to `+inf` or `-inf`; the limit does not exist in the reals.
    Infinite(i32),
    DoesNotExist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShearKind {
    /// `(x, y) -> (x + c y, y)`.
    X,
    /// `(x, y) -> (x, x + y)`.
    Y,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shear {
    pub c: Rational,
    pub kind: ShearKind,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub shear: Option<Shear>,
    /// Separation level of the denominator's branches.
    pub separation: u32,
    /// Sound truncation level for the pair.
    pub truncation: u32,
    /// Half-branches of the critical curve examined.
    pub branch_count: usize,
    pub isolated_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitOutcome {
    pub verdict: Verdict,
    pub range: Option<RangeInterval>,
    pub diagnostics: Diagnostics,
}

impl LimitOutcome {
    pub fn exists(&self) -> bool {
        matches!(self.verdict, Verdict::Exists(_))
    }

    pub fn limit(&self) -> Option<&RealAlgebraic> {
        match &self.verdict {
            Verdict::Exists(v) => Some(v),
            _ => None,
        }
    }

    fn finite(v: RealAlgebraic, diagnostics: Diagnostics) -> Self {
        LimitOutcome { verdict: Verdict::Exists(v), range: None, diagnostics }
    }

    /// A limit decided before any branch work; the range is the point itself.
    fn settled(v: RealAlgebraic, opts: &LimitOptions) -> Self {
        let range = opts.compute_range.then(|| RangeInterval::point(ExtReal::Finite(v.clone())));
        LimitOutcome { verdict: Verdict::Exists(v), range, diagnostics: Diagnostics::default() }
    }

    fn infinite(sign: i32, diagnostics: Diagnostics) -> Self {
        let e = ExtReal::infinity(sign);
        LimitOutcome { verdict: Verdict::Infinite(sign), range: Some(RangeInterval::point(e)), diagnostics }
    }

    fn from_range(range: RangeInterval, diagnostics: Diagnostics) -> Self {
        let verdict = match (&range.min, &range.max) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) if a == b => Verdict::Exists(a.clone()),
            (ExtReal::PosInf, ExtReal::PosInf) => Verdict::Infinite(1),
            (ExtReal::NegInf, ExtReal::NegInf) => Verdict::Infinite(-1),
            _ => Verdict::DoesNotExist,
        };
        LimitOutcome { verdict, range: Some(range), diagnostics }
    }
}

impl fmt::Display for LimitOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.verdict, &self.range) {
            (Verdict::Exists(v), _) => write!(f, "limit = {v}"),
            (Verdict::Infinite(s), _) => write!(f, "no limit; f/g tends to {}", ExtReal::infinity(*s)),
            (Verdict::DoesNotExist, Some(r)) => write!(f, "no limit; range = {r}"),
            (Verdict::DoesNotExist, None) if !self.diagnostics.isolated_zero => {
                write!(f, "no limit; the denominator has a non-isolated zero, range not computed")
            }
            (Verdict::DoesNotExist, None) => write!(f, "no limit"),
        }
    }
}

/// Limit of `f/g` along one half-branch.
#[derive(Clone, Debug)]
pub struct BranchLimit {
    pub branch: PuiseuxBranch,
    pub value: ExtReal,
}

#[derive(Clone, Debug, Default)]
pub struct LimitOptions {
    /// Compute the range even when the limit is settled without it.
    pub compute_range: bool,
}

/// Value of `a t^p / (b t^q)` as `t -> 0+`.
fn ratio_value(of: &Rational, a: &FieldElem, og: &Rational, b: &FieldElem) -> ExtReal {
    match of.cmp(og) {
        Ordering::Greater => ExtReal::zero(),
        Ordering::Equal => ExtReal::Finite(field_elem_value(&a.div(b).expect("nonzero leading coefficient"))),
        Ordering::Less => ExtReal::infinity(a.sign() * b.sign()),
    }
}

/// `lim f/g` along a truncated branch, read off the lowest terms of the two
/// substitutions. The truncation must be deep enough for both orders.
pub fn branch_limit(f: &BiPoly, g: &BiPoly, branch: &PuiseuxBranch) -> Result<BranchLimit, LimitError> {
    let SeriesLeading::Term { order: og, coeff: b } = substitute_order(g, branch) else {
        return Err(LimitError::BranchOnDenominator);
    };
    let value = match substitute_order(f, branch) {
        SeriesLeading::Infinite => ExtReal::zero(),
        SeriesLeading::Term { order: of, coeff: a } => ratio_value(&of, &a, &og, &b),
    };
    Ok(BranchLimit { branch: branch.clone(), value })
}

/// `lim f/g` along the full root under the cursor; `fo`, `go` are already
/// oriented to the cursor's side and neither vanishes on the root.
fn cursor_limit(cur: &mut RootCursor, fo: &BiPoly, go: &BiPoly) -> ExtReal {
    let (of, a) = cur.order_along(fo).expect("numerator does not vanish on the branch");
    let (og, b) = cur.order_along(go).expect("denominator does not vanish on the branch");
    ratio_value(&of, &a, &og, &b)
}

fn order_cmp(cur: &mut RootCursor, fo: &BiPoly, go: &BiPoly) -> Ordering {
    let (of, _) = cur.order_along(fo).expect("numerator does not vanish on the branch");
    let (og, _) = cur.order_along(go).expect("denominator does not vanish on the branch");
    of.cmp(&og)
}

/// Factors of `p` (square-free in `y`) sharing no root with `avoid`.
fn remove_common(p: &BiPoly, avoid: &BiPoly) -> BiPoly {
    let p = p.squarefree_y();
    if avoid.is_zero() {
        return BiPoly::one();
    }
    let c = gcd2(&p, avoid);
    p.div_exact(&c).expect("gcd divides")
}

fn ordinal(q: &Rational) -> u32 {
    q.floor().to_integer().to_u32().unwrap_or(u32::MAX)
}

/// `floor(max N(d_i)) + 1` over the given degrees.
fn sound_level(degrees: &[u32]) -> u32 {
    degrees
        .iter()
        .map(|&d| truncation_bound(i64::from(d.max(1))).map(|b| ordinal(&b)).unwrap_or(0))
        .max()
        .unwrap_or(0)
        + 1
}

fn degree(p: &BiPoly) -> u32 {
    p.total_degree().unwrap_or(0)
}

/// Shear constants in the order tried: 0, 1, -1, 2, -2, ...
fn shear_constants() -> impl Iterator<Item = Rational> {
    (0..64i64).map(|k| {
        let v = if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) };
        Rational::from_integer(v.into())
    })
}

fn regular_or_zero(p: &BiPoly) -> bool {
    p.is_zero() || p.is_y_regular().unwrap_or(false)
}

/// Smallest tried `c` making `f`, `g` and the Jacobian of the sheared pair
/// y-regular.
fn regularize_isolated(f: &BiPoly, g: &BiPoly) -> Result<(BiPoly, BiPoly, Option<Shear>), LimitError> {
    for c in shear_constants() {
        let fs = f.shear_x(&c);
        let gs = g.shear_x(&c);
        if regular_or_zero(&fs) && regular_or_zero(&gs) && regular_or_zero(&jacobian_det(&fs, &gs)) {
            let shear = (!c.is_zero()).then_some(Shear { c, kind: ShearKind::X });
            return Ok((fs, gs, shear));
        }
    }
    Err(LimitError::NoShear)
}

/// Coordinates where `f`, `g` and their tangency polynomial are y-regular
/// (or the tangency polynomial vanishes): an x-shear for `f` and `g`, then a
/// y-shear if the tangency polynomial still needs it.
pub fn regularize_general(f: &BiPoly, g: &BiPoly) -> Result<(BiPoly, BiPoly, Option<Shear>), LimitError> {
    for c in shear_constants() {
        let fs = f.shear_x(&c);
        let gs = g.shear_x(&c);
        if !(regular_or_zero(&fs) && regular_or_zero(&gs)) {
            continue;
        }
        if regular_or_zero(&tangency_poly(&fs, &gs)) {
            let shear = (!c.is_zero()).then_some(Shear { c, kind: ShearKind::X });
            return Ok((fs, gs, shear));
        }
        let (fy, gy) = (fs.shear_y(), gs.shear_y());
        if regular_or_zero(&fy) && regular_or_zero(&gy) && regular_or_zero(&tangency_poly(&fy, &gy)) {
            return Ok((fy, gy, Some(Shear { c: Rational::from_integer(1.into()), kind: ShearKind::Y })));
        }
    }
    Err(LimitError::NoShear)
}

/// Whether `p` has a real half-branch through the origin.
fn has_real_branch(p: &BiPoly) -> bool {
    Side::BOTH.iter().any(|&s| !side_cursors(p, s).is_empty())
}

/// Whether the origin is an isolated real zero of `g` (y-regular, `g(0,0) = 0`).
pub fn isolated_zero_test(g: &BiPoly) -> bool {
    !has_real_branch(g)
}

/// `lim f/g = 0` for y-regular `f`, `g`, `F` with `F != 0` and `g` having an
/// isolated zero: `f` must beat `g` along every critical branch off `f`.
fn limit_zero_prepared(f: &BiPoly, g: &BiPoly, jac: &BiPoly) -> (bool, usize) {
    let crit = remove_common(jac, f);
    let mut count = 0;
    for side in Side::BOTH {
        let (fo, go) = (side.orient(f), side.orient(g));
        for mut cur in side_cursors(&crit, side) {
            count += 1;
            if order_cmp(&mut cur, &fo, &go) != Ordering::Greater {
                return (false, count);
            }
        }
    }
    (true, count)
}

/// Whether `lim f/g = 0` when `g` has an isolated zero at the origin and the
/// Jacobian of the pair does not vanish identically.
pub fn limit_zero_isolated(f: &BiPoly, g: &BiPoly) -> Result<bool, LimitError> {
    if f.is_zero() {
        return Ok(true);
    }
    let (fs, gs, _) = regularize_isolated(f, g)?;
    let jac = jacobian_det(&fs, &gs);
    if jac.is_zero() {
        return Err(LimitError::DegenerateJacobian);
    }
    Ok(limit_zero_prepared(&fs, &gs, &jac).0)
}

fn range_prepared(f: &BiPoly, g: &BiPoly, jac: &BiPoly) -> (RangeInterval, usize) {
    let (mut lo, mut hi) =
        if has_real_branch(f) { (ExtReal::zero(), ExtReal::zero()) } else { (ExtReal::PosInf, ExtReal::NegInf) };
    let crit = remove_common(jac, f);
    let mut count = 0;
    for side in Side::BOTH {
        let (fo, go) = (side.orient(f), side.orient(g));
        for mut cur in side_cursors(&crit, side) {
            count += 1;
            let v = cursor_limit(&mut cur, &fo, &go);
            if v < lo {
                lo = v.clone();
            }
            if v > hi {
                hi = v;
            }
        }
    }
    if lo > hi {
        // No candidate at all; the limit along the y-axis is then the whole range.
        let v = y_axis_limit(f, g);
        return (RangeInterval::point(v), count);
    }
    (RangeInterval { min: lo, max: hi }, count)
}

/// Range of `f/g` at the origin when `g` has an isolated zero there and the
/// Jacobian of the pair does not vanish identically.
pub fn range_isolated(f: &BiPoly, g: &BiPoly) -> Result<RangeInterval, LimitError> {
    let (fs, gs, _) = regularize_isolated(f, g)?;
    let jac = jacobian_det(&fs, &gs);
    if jac.is_zero() {
        return Err(LimitError::DegenerateJacobian);
    }
    Ok(range_prepared(&fs, &gs, &jac).0)
}

/// Lowest coefficient and its degree.
fn lowest_term(p: &crate::arith::UniPoly) -> Option<(usize, Rational)> {
    p.coeffs().iter().enumerate().find(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone()))
}

/// `lim_{y -> 0+} f(0, y) / g(0, y)`; `g(0, y)` must not vanish identically.
fn y_axis_limit(f: &BiPoly, g: &BiPoly) -> ExtReal {
    let (n, b) = lowest_term(&g.at_x_zero()).expect("g(0, y) is not identically zero");
    match lowest_term(&f.at_x_zero()) {
        None => ExtReal::zero(),
        Some((m, a)) => match m.cmp(&n) {
            Ordering::Greater => ExtReal::zero(),
            Ordering::Equal => ExtReal::Finite(RealAlgebraic::from_rational(a / b)),
            Ordering::Less => ExtReal::infinity(if a.is_positive() == b.is_positive() { 1 } else { -1 }),
        },
    }
}

/// The case of an identically vanishing Jacobian: `f/g` is then constant on
/// the level curves of `g` and the limit is the one along the y-axis.
pub fn limit_f_degenerate(f: &BiPoly, g: &BiPoly) -> Result<LimitOutcome, LimitError> {
    if g.at_x_zero().is_zero() {
        return Err(PuiseuxError::NotYRegular.into());
    }
    let diagnostics = Diagnostics { isolated_zero: true, ..Default::default() };
    Ok(LimitOutcome::from_range(RangeInterval::point(y_axis_limit(f, g)), diagnostics))
}

/// `L` with `f_m = L g_n` when the lowest forms have the same degree and are
/// proportional.
fn leading_ratio(f: &BiPoly, g: &BiPoly) -> Option<Rational> {
    let (fm, gn) = (f.initial_form(), g.initial_form());
    if fm.ord2() != gn.ord2() {
        return None;
    }
    for s in 2i64.. {
        for i in 1..s {
            let (a, b) = (Rational::from_integer(i.into()), Rational::from_integer((s - i).into()));
            let (u, v) = (fm.eval(&a, &b), gn.eval(&a, &b));
            if u.is_zero() || v.is_zero() {
                continue;
            }
            let l = u / v;
            return (&fm - &gn.scale(&l)).is_zero().then_some(l);
        }
    }
    unreachable!()
}

/// Decide the limit of `f/g` at `point`, with the range when the denominator
/// has an isolated zero there.
pub fn bilimit(f: &BiPoly, g: &BiPoly, point: (&Rational, &Rational)) -> Result<LimitOutcome, LimitError> {
    bilimit_with(f, g, point, &LimitOptions::default())
}

pub fn bilimit_with(
    f: &BiPoly,
    g: &BiPoly,
    point: (&Rational, &Rational),
    opts: &LimitOptions,
) -> Result<LimitOutcome, LimitError> {
    if g.is_zero() {
        return Err(LimitError::ZeroDenominator);
    }
    let (f, g) = (f.translate(point.0, point.1), g.translate(point.0, point.1));
    let common = gcd2(&f, &g);
    let f = f.div_exact(&common).expect("gcd divides");
    let g = g.div_exact(&common).expect("gcd divides");
    if f.is_zero() {
        return Ok(LimitOutcome::settled(RealAlgebraic::zero(), opts));
    }
    let g00 = g.constant_term();
    if !g00.is_zero() {
        return Ok(LimitOutcome::settled(RealAlgebraic::from_rational(f.constant_term() / g00), opts));
    }

    let (f, g, shear) = regularize_isolated(&f, &g)?;
    let isolated = isolated_zero_test(&g);
    let mut diag = Diagnostics {
        shear,
        separation: separation_level(&g)?,
        truncation: sound_level(&[degree(&g)]),
        branch_count: 0,
        isolated_zero: isolated,
    };
    let f00 = f.constant_term();
    if !f00.is_zero() {
        if !isolated {
            return Ok(LimitOutcome { verdict: Verdict::DoesNotExist, range: None, diagnostics: diag });
        }
        // g keeps one sign near an isolated zero; read it on the y-axis.
        let (_, c) = lowest_term(&g.at_x_zero()).expect("g is y-regular");
        let s = if c.is_positive() == f00.is_positive() { 1 } else { -1 };
        return Ok(LimitOutcome::infinite(s, diag));
    }
    if !isolated {
        return Ok(LimitOutcome { verdict: Verdict::DoesNotExist, range: None, diagnostics: diag });
    }

    let jac = jacobian_det(&f, &g);
    if jac.is_zero() {
        let mut out = limit_f_degenerate(&f, &g)?;
        out.diagnostics = diag;
        return Ok(out);
    }
    diag.truncation = sound_level(&[degree(&f) + degree(&jac), degree(&g)]);

    let (m, n) = (f.ord2().unwrap_or(0), g.ord2().unwrap_or(0));
    let candidate = match m.cmp(&n) {
        Ordering::Greater => Some(Rational::zero()),
        Ordering::Equal => leading_ratio(&f, &g),
        Ordering::Less => None,
    };
    if let Some(l) = candidate {
        let reduced = &f - &g.scale(&l);
        let (zero, count) = limit_zero_prepared(&reduced, &g, &jac);
        diag.branch_count = count;
        if zero && !opts.compute_range {
            return Ok(LimitOutcome::finite(RealAlgebraic::from_rational(l), diag));
        }
    }
    let (range, count) = range_prepared(&f, &g, &jac);
    diag.branch_count = count;
    Ok(LimitOutcome::from_range(range, diag))
}

/// Whether `lim f/g = 0` at the origin, with no assumption on the zero set of
/// `g` and no common-factor cancellation.
pub fn exists_zero_general(f: &BiPoly, g: &BiPoly) -> Result<bool, LimitError> {
    if g.is_zero() {
        return Err(LimitError::ZeroDenominator);
    }
    if f.is_zero() {
        return Ok(true);
    }
    if f.ord2() <= g.ord2() {
        return Ok(false);
    }
    let (f, g, _) = regularize_general(f, g)?;
    let tan = tangency_poly(&f, &g);
    if tan.is_zero() {
        return Ok(true);
    }

    // Tangency branches off both curves.
    let crit = remove_common(&remove_common(&tan, &f), &g);
    for side in Side::BOTH {
        let (fo, go) = (side.orient(&f), side.orient(&g));
        for mut cur in side_cursors(&crit, side) {
            if order_cmp(&mut cur, &fo, &go) != Ordering::Greater {
                return Ok(false);
            }
        }
    }

    // Every branch of g must lie on f, with higher multiplicity or, at equal
    // multiplicity, a faster vanishing of f next to it.
    let gred = g.squarefree_y();
    let shared = gcd2(&gred, &f);
    let alone = gred.div_exact(&shared).expect("gcd divides");
    if has_real_branch(&alone) {
        return Ok(false);
    }
    let level = sound_level(&[degree(&f) + degree(&g)]);
    let n = Rational::from_integer(level.into());
    let n1 = Rational::from_integer((level + 1).into());
    for side in Side::BOTH {
        for mut cur in side_cursors(&shared, side) {
            let at_n = cur.truncated(&n);
            let at_n1 = cur.truncated(&n1);
            let field = cur.field.clone();
            let ord = |h: &BiPoly, terms: &Vec<(Rational, FieldElem)>, k: &Rational| {
                generic_order(h, side, &field, terms, k).expect("nonzero polynomial")
            };
            let (f_lo, g_lo) = (ord(&f, &at_n, &n), ord(&g, &at_n, &n));
            let mult_f = ord(&f, &at_n1, &n1) - &f_lo;
            let mult_g = ord(&g, &at_n1, &n1) - &g_lo;
            match mult_f.cmp(&mult_g) {
                Ordering::Less => return Ok(false),
                Ordering::Equal if f_lo <= g_lo => return Ok(false),
                _ => {}
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rfrac, rint};
    use crate::parse::parse_poly;

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    fn origin(f: &str, g: &str) -> LimitOutcome {
        let z = Rational::zero();
        bilimit(&p(f), &p(g), (&z, &z)).unwrap()
    }

    fn q(v: Rational) -> RealAlgebraic {
        RealAlgebraic::from_rational(v)
    }

    // [PAPER] the limit is -1.
    #[test]
    fn example_two() {
        let out = origin("x^4 + 3*x^2*y - x^2 - y^2", "x^2 + y^2");
        assert_eq!(out.verdict, Verdict::Exists(q(rint(-1))));
    }

    // [PAPER] no limit, range [0, 1].
    #[test]
    fn example_one() {
        let out = origin("x^4 + x^2*y + y^2", "x^2 + y^2");
        assert_eq!(out.verdict, Verdict::DoesNotExist);
        let r = out.range.unwrap();
        assert_eq!(r.min, ExtReal::zero());
        assert_eq!(r.max, ExtReal::Finite(q(rint(1))));
    }

    // [TRIVIAL] nonzero denominator at the point.
    #[test]
    fn regular_point() {
        assert_eq!(origin("x + y", "1 + x").verdict, Verdict::Exists(q(rint(0))));
        let (a, b) = (rint(1), rint(2));
        let out = bilimit(&p("x + y"), &p("x - y + 3"), (&a, &b)).unwrap();
        assert_eq!(out.verdict, Verdict::Exists(q(rint(3) / rint(2))));
    }

    // [TRIVIAL] zero denominator rejected.
    #[test]
    fn zero_denominator() {
        let z = Rational::zero();
        assert_eq!(bilimit(&p("x"), &BiPoly::zero(), (&z, &z)).unwrap_err(), LimitError::ZeroDenominator);
    }

    // [DERIVED] y^4/y^2 and y^2/y^4 along the axis with g = x^2 + y^2.
    #[test]
    fn degenerate_jacobian() {
        assert_eq!(origin("(x^2 + y^2)^2", "x^2 + y^2").verdict, Verdict::Exists(q(rint(0))));
        let out = origin("x^2 + y^2", "(x^2 + y^2)^2");
        assert_eq!(out.verdict, Verdict::Infinite(1));
        let out = limit_f_degenerate(&p("3*x^2 + 3*y^2"), &p("x^2 + y^2")).unwrap();
        assert_eq!(out.verdict, Verdict::Exists(q(rint(3))));
    }

    // [DERIVED] 1/(x^2 + y^2) and -1/(x^2 + y^2) diverge with a fixed sign.
    #[test]
    fn nonzero_numerator() {
        assert_eq!(origin("1 + x", "x^2 + y^2").verdict, Verdict::Infinite(1));
        assert_eq!(origin("-2", "x^2 + y^2").verdict, Verdict::Infinite(-1));
        let out = origin("1", "y^2 - x^3");
        assert_eq!(out.verdict, Verdict::DoesNotExist);
        assert!(out.range.is_none());
        assert!(!out.diagnostics.isolated_zero);
    }

    // [TRIVIAL] isolated zero examples.
    #[test]
    fn isolated_zero_examples() {
        assert!(isolated_zero_test(&p("x^2 + y^2")));
        assert!(!isolated_zero_test(&p("y^2")));
        assert!(!isolated_zero_test(&p("y^2 - x^3")));
    }

    // [DERIVED] x/x^2 -> +inf on the right along the critical line.
    #[test]
    fn branch_limits() {
        let f = p("x^4 + x^2*y + y^2");
        let g = p("x^2 + y^2");
        let q0 = crate::algebraic::RealField::rational();
        let b = PuiseuxBranch::new(
            Side::Plus,
            q0.clone(),
            vec![(rint(2), FieldElem::from_rational(&q0, rfrac(-1, 2)))],
            rint(3),
        );
        assert_eq!(branch_limit(&f, &g, &b).unwrap().value, ExtReal::zero());
        let zero = PuiseuxBranch::new(Side::Plus, q0.clone(), Vec::new(), rint(2));
        assert_eq!(branch_limit(&p("x"), &p("x^2"), &zero).unwrap().value, ExtReal::PosInf);
        assert_eq!(branch_limit(&p("x"), &p("x^2"), &PuiseuxBranch::new(Side::Minus, q0, Vec::new(), rint(2))).unwrap().value, ExtReal::NegInf);
    }

    // [DERIVED] general criterion examples.
    #[test]
    fn general_zero() {
        assert!(exists_zero_general(&p("x*y^2"), &p("y")).unwrap());
        assert!(!exists_zero_general(&p("x"), &p("y")).unwrap());
        assert!(!exists_zero_general(&p("x^2"), &p("x^2 + y^2")).unwrap());
        assert!(exists_zero_general(&p("x^3"), &p("x^2 + y^2")).unwrap());
    }

    // [PAPER] lim 0 after removing the leading ratio -1.
    #[test]
    fn isolated_zero_criterion() {
        assert!(limit_zero_isolated(&p("x^4 + 3*x^2*y"), &p("x^2 + y^2")).unwrap());
        assert!(!limit_zero_isolated(&p("x^4 + x^2*y + y^2"), &p("x^2 + y^2")).unwrap());
    }
}
