#![allow(dead_code)]

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::Rng;
use ratlimit::arith::{rint, Rational};
use ratlimit::bipoly::BiPoly;
use ratlimit::puiseux::PuiseuxBranch;

/// Random `f` with `f_m(0, 1) != 0`, order `m >= 1`, degree at most `max_deg`.
pub fn random_y_regular(rng: &mut StdRng, max_deg: u32) -> BiPoly {
    let d = rng.gen_range(1..=max_deg);
    let m = rng.gen_range(1..=d.min(3));
    let mut f = BiPoly::zero();
    for k in m..=d {
        for i in 0..=k {
            if rng.gen_bool(0.35) {
                f.add_term(ratlimit::bipoly::Monomial { x: i, y: k - i }, rint(rng.gen_range(-3..=3)));
            }
        }
    }
    let lead = loop {
        let c = rng.gen_range(-3..=3);
        if c != 0 {
            break c;
        }
    };
    f.add_term(ratlimit::bipoly::Monomial { x: 0, y: m }, rint(lead) - f.coeff(0, m));
    f
}

/// Complex roots of `sum c[i] t^i` by Durand-Kerner iteration.
pub fn complex_roots(c: &[f64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lead = c[n];
    let monic: Vec<f64> = c.iter().map(|v| v / lead).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    let mut z: Vec<Complex64> = (0..n).map(|k| Complex64::from_polar(0.9, 0.4 + k as f64 * 2.0 * std::f64::consts::PI / n as f64)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-17 {
            break;
        }
    }
    z
}

/// `f(x0, y)` as coefficients in `y`.
pub fn specialize_x(f: &BiPoly, x0: f64) -> Vec<f64> {
    let n = f.deg_y().unwrap_or(0) as usize;
    let mut c = vec![0.0; n + 1];
    for (m, q) in f.terms() {
        c[m.y as usize] += to_f64(q) * x0.powi(m.x as i32);
    }
    c
}

pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap()
}

/// Branch value at parameter `t > 0`.
pub fn eval_branch(b: &PuiseuxBranch, t: f64) -> f64 {
    b.terms().iter().map(|(e, c)| c.to_f64() * t.powf(to_f64(e))).sum()
}

/// Random polynomial with small integer coefficients and exponents below `max_exp`.
pub fn arb_poly(max_exp: u32, max_terms: usize) -> impl proptest::strategy::Strategy<Value = BiPoly> {
    use proptest::prelude::*;
    proptest::collection::vec((-4i64..=4, 0..max_exp, 0..max_exp), 1..=max_terms).prop_map(|ts| {
        let mut f = BiPoly::zero();
        for (c, i, j) in ts {
            f.add_term(ratlimit::bipoly::Monomial { x: i, y: j }, rint(c));
        }
        f
    })
}

/// Random polynomial vanishing at the origin.
pub fn arb_poly_at_origin(max_exp: u32, max_terms: usize) -> impl proptest::strategy::Strategy<Value = BiPoly> {
    use proptest::prelude::*;
    arb_poly(max_exp, max_terms).prop_map(|f| &f - &BiPoly::constant(f.constant_term()))
}
