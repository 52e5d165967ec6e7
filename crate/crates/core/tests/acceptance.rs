//! One pass/fail line per acceptance criterion.

mod common;

use std::time::Duration;

use num_traits::{ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use ratlimit::algebraic::{FieldElem, RealAlgebraic, RealField};
use ratlimit::arith::{rfrac, rint, Rational};
use ratlimit::bench;
use ratlimit::bipoly::{gcd2, squarefree_regularize, truncation_bound, BiPoly};
use ratlimit::limit::{exists_zero_general, limit_zero_isolated, ExtReal, LimitError};
use ratlimit::parse::parse_poly;
use ratlimit::puiseux::{expand, member, multiplicity, real_branches_at, PuiseuxBranch, Side};

use common::{complex_roots, eval_branch, random_y_regular, specialize_x};

struct Check {
    pass: bool,
    detail: String,
}

fn p(s: &str) -> BiPoly {
    parse_poly(s).unwrap()
}

fn sound(d: u32) -> u32 {
    truncation_bound(i64::from(d.max(1))).unwrap().floor().to_integer().try_into().unwrap()
}

// [PAPER] all 21 verdicts, exact.
fn benchmark_exactness(results: &[bench::BenchResult]) -> Check {
    let failed: Vec<u32> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    Check { pass: failed.is_empty(), detail: format!("{}/21 exact, failing cases {failed:?}", 21 - failed.len()) }
}

// [TRIVIAL] every case under 10 s, suite under 60 s.
fn runtime(results: &[bench::BenchResult]) -> Check {
    let slowest = results.iter().map(|r| r.elapsed).max().unwrap_or_default();
    let total: Duration = results.iter().map(|r| r.elapsed).sum();
    Check {
        pass: slowest < Duration::from_secs(10) && total < Duration::from_secs(60),
        detail: format!("slowest {slowest:.2?}, total {total:.2?}"),
    }
}

fn same_sets(a: &[PuiseuxBranch], b: &[PuiseuxBranch]) -> bool {
    a.len() == b.len() && a.iter().all(|x| b.iter().any(|y| x.same_series(y)))
}

// [DERIVED] adding c (x^{mN} + y^{mN}) leaves the level-N truncations alone.
fn regularization_invariance() -> Check {
    let mut rng = StdRng::seed_from_u64(32);
    let mut bad = 0;
    for _ in 0..100 {
        let f = random_y_regular(&mut rng, 6);
        let m = f.ord2().unwrap();
        let n = f.total_degree().unwrap() / m + 1;
        for c in [1, 2] {
            let ft = squarefree_regularize(&f, n, &rint(c)).unwrap();
            for side in Side::BOTH {
                let a = expand(&f, &rint(n.into()), side).unwrap();
                let b = expand(&ft, &rint(n.into()), side).unwrap();
                if !same_sets(&a.branches, &b.branches) {
                    bad += 1;
                }
            }
        }
    }
    Check { pass: bad == 0, detail: format!("{bad} mismatching branch sets over 100 polynomials x 2 constants x 2 sides") }
}

/// Exponent where two series first differ.
fn first_difference(a: &PuiseuxBranch, b: &PuiseuxBranch) -> Option<Rational> {
    let (ta, tb) = (a.terms(), b.terms());
    for i in 0..ta.len().max(tb.len()) {
        match (ta.get(i), tb.get(i)) {
            (Some((e, c)), Some((f, d))) => {
                if e != f {
                    return Some(e.min(f).clone());
                }
                if RealAlgebraic::cmp(&ratlimit::algebraic::field_elem_value(c), &ratlimit::algebraic::field_elem_value(d))
                    != std::cmp::Ordering::Equal
                {
                    return Some(e.clone());
                }
            }
            (Some((e, _)), None) | (None, Some((e, _))) => return Some(e.clone()),
            (None, None) => return None,
        }
    }
    None
}

// [PAPER] distinct truncations above the bound, first differences below it,
// one truncation per real root.
fn truncation_bijection() -> Check {
    let mut rng = StdRng::seed_from_u64(36);
    let mut tested = 0;
    let mut bad = Vec::new();
    while tested < 100 {
        let f = random_y_regular(&mut rng, 5);
        if !f.is_squarefree_y() {
            continue;
        }
        tested += 1;
        let d = f.total_degree().unwrap();
        let bound = truncation_bound(d.into()).unwrap();
        let n = rint((sound(d) + 1).into());
        for side in Side::BOTH {
            let set = expand(&f, &n, side).unwrap();
            let roots = real_branches_at(&f, &n, side);
            if set.len() != roots.len() || !same_sets(&set.branches, &roots) {
                bad.push(format!("count {} vs {} for {f}", set.len(), roots.len()));
            }
            for i in 0..set.len() {
                for j in 0..i {
                    match first_difference(&set.branches[i], &set.branches[j]) {
                        None => bad.push(format!("duplicate branch for {f}")),
                        Some(e) if e > bound => bad.push(format!("difference at {e} for {f}")),
                        _ => {}
                    }
                }
            }
        }
    }
    Check { pass: bad.is_empty(), detail: format!("100 square-free polynomials, {} violations {:?}", bad.len(), bad.first()) }
}

/// Random square-free product of distinct factors with known behaviour at the origin.
fn oracle_instance(rng: &mut StdRng) -> BiPoly {
    let mut f = BiPoly::one();
    let mut used: Vec<BiPoly> = Vec::new();
    let mut deg = 0;
    let mut slopes = Vec::new();
    while deg < 4 || (deg < 6 && rng.gen_bool(0.5)) {
        let (factor, d) = match rng.gen_range(0..5) {
            0 => {
                let a1 = loop {
                    let a = rng.gen_range(-3..=3);
                    if !slopes.contains(&a) {
                        slopes.push(a);
                        break a;
                    }
                };
                let (a2, a3) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
                (p(&format!("y - ({a1})*x - ({a2})*x^2 - ({a3})*x^3")), 1)
            }
            1 => (p(&format!("y^2 - {}*x^3", rng.gen_range(1..=2))), 2),
            2 => (p(&format!("y^2 - x^3 + ({})*x^2*y + ({})*x^4", rng.gen_range(-2..=2), rng.gen_range(-2..=2))), 2),
            3 => (p("y^2 + x^2"), 2),
            _ => (p("1 + x + y"), 1),
        };
        if deg + d > 6 {
            break;
        }
        if used.contains(&factor) {
            continue;
        }
        used.push(factor.clone());
        f = &f * &factor;
        deg += d;
    }
    f
}

// [DERIVED] branch values against floating-point roots of f(x0, y).
fn numeric_oracle() -> Check {
    let mut rng = StdRng::seed_from_u64(5);
    let t = 1e-3f64;
    let n = 4;
    let tol = t.powi(n) * 1e3;
    let mut bad = Vec::new();
    for _ in 0..50 {
        let f = oracle_instance(&mut rng);
        for side in Side::BOTH {
            let x0 = if side == Side::Plus { t } else { -t };
            let mut numeric: Vec<f64> = complex_roots(&specialize_x(&f, x0))
                .into_iter()
                .filter(|z| z.im.abs() < 1e-9 && z.re.abs() < 0.05)
                .map(|z| z.re)
                .collect();
            let mut exact: Vec<f64> =
                real_branches_at(&f, &rint(n.into()), side).iter().map(|b| eval_branch(b, t)).collect();
            numeric.sort_by(f64::total_cmp);
            exact.sort_by(f64::total_cmp);
            if numeric.len() != exact.len() {
                bad.push(format!("{f} {side}: {} numeric vs {} branches", numeric.len(), exact.len()));
                continue;
            }
            for (a, b) in numeric.iter().zip(&exact) {
                if (a - b).abs() > tol {
                    bad.push(format!("{f} {side}: {a} vs {b}"));
                }
            }
        }
    }
    Check { pass: bad.is_empty(), detail: format!("50 instances, {} mismatches {:?}", bad.len(), bad.first()) }
}

fn sample_point(rng: &mut StdRng) -> (Rational, Rational) {
    loop {
        let x = rfrac(rng.gen_range(-10_000..=10_000), 10_000_000);
        let y = rfrac(rng.gen_range(-10_000..=10_000), 10_000_000);
        if (&x * &x + &y * &y) <= rfrac(1, 1_000_000) && !(x.is_zero() && y.is_zero()) {
            return (x, y);
        }
    }
}

// [DERIVED] exact samples of f/g near the origin stay inside the range.
fn range_sampling(results: &[bench::BenchResult]) -> Check {
    let mut rng = StdRng::seed_from_u64(6);
    let slack = RealAlgebraic::from_rational(rfrac(1, 1_000_000));
    let mut bad = Vec::new();
    let mut cases = 0;
    for (case, res) in bench::cases().iter().zip(results) {
        let Ok(out) = &res.outcome else { continue };
        let Some(range) = &out.range else { continue };
        cases += 1;
        let (f, g) = (p(&case.f), p(&case.g));
        let mut taken = 0;
        while taken < 500 {
            let (x, y) = sample_point(&mut rng);
            let gv = g.eval(&x, &y);
            if gv.is_zero() {
                continue;
            }
            taken += 1;
            let v = RealAlgebraic::from_rational(f.eval(&x, &y) / gv);
            let below = matches!(&range.min, ExtReal::Finite(m) if v < m.sub(&slack));
            let above = matches!(&range.max, ExtReal::Finite(m) if v > m.add(&slack));
            if below || above {
                let end = match (&range.min, &range.max) {
                    (ExtReal::Finite(m), _) if below => m.clone(),
                    (_, ExtReal::Finite(m)) => m.clone(),
                    _ => unreachable!(),
                };
                let r = (x.clone() * &x + y.clone() * &y).to_f64().unwrap().sqrt();
                bad.push(format!(
                    "case {} at ({x}, {y}): {} outside {range}, overshoot/radius {:.3}",
                    case.id,
                    v.to_decimal(9),
                    (v.to_f64() - end.to_f64()).abs() / r
                ));
            }
        }
    }
    Check { pass: bad.is_empty() && cases > 0, detail: format!("{cases} ranges x 500 samples, {} outside {bad:?}", bad.len()) }
}

const ISOLATED: [&str; 7] =
    ["x^2 + y^2", "2*x^2 + x*y + y^2", "x^2 + y^4", "x^4 + y^2", "x^4 + y^4", "x^2 - 2*x*y + 2*y^2", "x^6 + y^2"];

fn random_terms(rng: &mut StdRng, lo: u32, hi: u32, mixed: bool, prob: f64) -> BiPoly {
    let mut f = BiPoly::zero();
    for k in lo..=hi {
        for i in 0..=k {
            if mixed && (i == 0 || i == k) {
                continue;
            }
            if rng.gen_bool(prob) {
                f.add_term(ratlimit::bipoly::Monomial { x: i, y: k - i }, rint(rng.gen_range(-3..=3)));
            }
        }
    }
    f
}

/// `f - L g` when the lowest forms are proportional.
fn reduce(f: &BiPoly, g: &BiPoly) -> BiPoly {
    let (fm, gn) = (f.initial_form(), g.initial_form());
    if fm.ord2() != gn.ord2() {
        return f.clone();
    }
    for (u, v) in [(rint(1), rint(1)), (rint(1), rint(2)), (rint(2), rint(1))] {
        let (fv, gv) = (fm.eval(&u, &v), gn.eval(&u, &v));
        if !gv.is_zero() {
            let l = fv / gv;
            if (&fm - &gn.scale(&l)).is_zero() {
                return f - &g.scale(&l);
            }
            return f.clone();
        }
    }
    f.clone()
}

// [DERIVED] the isolated-zero and general criteria agree on lim = 0.
fn cross_criterion() -> Check {
    let mut rng = StdRng::seed_from_u64(7);
    let (mut tested, mut zeros) = (0, 0);
    let mut bad = Vec::new();
    while tested < 50 {
        let g = &p(ISOLATED[rng.gen_range(0..ISOLATED.len())]) + &random_terms(&mut rng, 5, 6, true, 0.15);
        let lo = if rng.gen_bool(0.5) { g.ord2().unwrap() + 1 } else { 1 };
        let f = reduce(&random_terms(&mut rng, lo, lo + 3, false, 0.3), &g);
        if f.is_zero() || gcd2(&f, &g).total_degree() != Some(0) {
            continue;
        }
        let a = match limit_zero_isolated(&f, &g) {
            Ok(a) => a,
            Err(LimitError::DegenerateJacobian) => continue,
            Err(e) => panic!("{e}"),
        };
        tested += 1;
        let b = exists_zero_general(&f, &g).unwrap();
        zeros += usize::from(a);
        if a != b {
            bad.push(format!("f = {f}, g = {g}: isolated {a}, general {b}"));
        }
    }
    Check { pass: bad.is_empty(), detail: format!("50 pairs ({zeros} with limit 0), {} disagreements {:?}", bad.len(), bad.first()) }
}

fn rational_branch(terms: &[(Rational, Rational)], n: u32) -> PuiseuxBranch {
    let q = RealField::rational();
    let t = terms.iter().map(|(e, c)| (e.clone(), FieldElem::from_rational(&q, c.clone()))).collect();
    PuiseuxBranch::new(Side::Plus, q, t, rint(n.into()))
}

// [DERIVED] order-jump multiplicity equals the count of derivatives the
// truncated root survives.
fn multiplicity_agreement() -> Check {
    let roots: [(&str, Vec<(Rational, Rational)>); 5] = [
        ("y - x", vec![(rint(1), rint(1))]),
        ("y - x^2", vec![(rint(2), rint(1))]),
        ("y + x - 2*x^2", vec![(rint(1), rint(-1)), (rint(2), rint(2))]),
        ("y^2 - x^3", vec![(rfrac(3, 2), rint(1))]),
        ("y", Vec::new()),
    ];
    let cofactors = ["1", "y + x", "y^2 + x^2", "y - 3*x + 1"];
    let mut bad = Vec::new();
    let mut count = 0;
    for (i, (root, terms)) in roots.iter().enumerate() {
        for k in 1..=4u32 {
            let h = cofactors[(i + k as usize) % cofactors.len()];
            let f = p(&format!("({root})^{k}*({h})"));
            let n = sound(f.total_degree().unwrap()) + 1;
            let branch = rational_branch(terms, n);
            count += 1;
            let generic = multiplicity(&f, &branch, n).ok();
            let mut derivative = 0;
            let mut d = f.clone();
            while !d.is_zero() && member(&d, &branch).unwrap() {
                derivative += 1;
                d = d.partial_y();
            }
            if generic != Some(k) || derivative != k {
                bad.push(format!("{f}: built {k}, order jump {generic:?}, derivatives {derivative}"));
            }
        }
    }
    Check { pass: bad.is_empty() && count == 20, detail: format!("{count} polynomials, {} disagreements {:?}", bad.len(), bad.first()) }
}

/// Criteria that cannot hold as stated, with the reason. They still print FAIL.
const KNOWN_RED: &[(usize, &str)] = &[(
    6,
    "near an endpoint approached along a branch, f/g differs from the endpoint by O(r); \
     at radius 1e-3 the fixed 1e-6 slack is exceeded by case 3 even though its range is exact",
)];

fn main() {
    let results: Vec<bench::BenchResult> = bench::cases().iter().map(|c| c.run().unwrap()).collect();
    let timed = |name: &'static str, run: &dyn Fn() -> Check| {
        let start = std::time::Instant::now();
        let c = run();
        eprintln!("{name} took {:.2?}", start.elapsed());
        (name, c)
    };
    let checks = [
        timed("benchmark exactness", &|| benchmark_exactness(&results)),
        timed("desk-scale runtime", &|| runtime(&results)),
        timed("square-free regularization invariance", &regularization_invariance),
        timed("truncation bijection", &truncation_bijection),
        timed("numeric oracle", &numeric_oracle),
        timed("range sampling soundness", &|| range_sampling(&results)),
        timed("cross-criterion agreement", &cross_criterion),
        timed("multiplicity agreement", &multiplicity_agreement),
    ];
    let mut unexpected = 0;
    for (i, (name, c)) in checks.iter().enumerate() {
        println!("criterion {} {name}: {} ({})", i + 1, if c.pass { "PASS" } else { "FAIL" }, c.detail);
        match KNOWN_RED.iter().find(|(n, _)| *n == i + 1) {
            Some((_, why)) if !c.pass => println!("  known red: {why}"),
            Some(_) => println!("  listed as known red but passed; remove it from KNOWN_RED"),
            None => unexpected += usize::from(!c.pass),
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
