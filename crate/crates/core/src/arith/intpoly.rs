//! Dense polynomials with integer coefficients, used for fraction-free
//! remainder sequences and factorization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntPoly = Vec<BigInt>;

pub fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &IntPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn content(p: &IntPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
pub fn primitive(p: &IntPoly) -> IntPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut g = content(p);
    if p.last().unwrap().is_negative() {
        g = -g;
    }
    p.iter().map(|c| c / &g).collect()
}

/// Primitive part, keeping the sign of the input.
pub fn primitive_keep_sign(p: &IntPoly) -> IntPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let g = content(p);
    p.iter().map(|c| c / &g).collect()
}

pub fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn sub(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(x - y);
    }
    trim(&mut out);
    out
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
pub fn prem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut r = a.clone();
    trim(&mut r);
    if r.len() <= db {
        return r;
    }
    let delta = r.len() - 1 - db + 1;
    let mut steps = 0;
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (j, c) in b.iter().enumerate() {
            r[j + shift] -= &lr * c;
        }
        trim(&mut r);
        steps += 1;
    }
    let lbp = num_traits::pow(lb, delta - steps);
    if !lbp.is_one() {
        for c in r.iter_mut() {
            *c *= &lbp;
        }
    }
    r
}

/// Exact division over the integers; `None` when `b` does not divide `a`.
pub fn div_exact(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    if b.is_empty() {
        return None;
    }
    let mut r = a.clone();
    trim(&mut r);
    if r.is_empty() {
        return Some(Vec::new());
    }
    if r.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let (qc, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = dr - db;
        for (j, c) in b.iter().enumerate() {
            r[j + shift] -= &qc * c;
        }
        q[shift] = qc;
        trim(&mut r);
    }
    if r.is_empty() {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}

/// Gcd of primitive integer polynomials via the primitive remainder sequence.
/// Result is primitive with positive leading coefficient.
pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut a = primitive(a);
    let mut b = primitive(b);
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = prem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    primitive(&a)
}

pub fn derivative(p: &IntPoly) -> IntPoly {
    let mut out: IntPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    trim(&mut out);
    out
}

pub fn max_abs(p: &IntPoly) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}
