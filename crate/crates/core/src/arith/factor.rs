//! Factorization of univariate polynomials over Q (Zassenhaus: factor modulo a
//! small prime, Hensel-lift, recombine).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::intpoly::{self, IntPoly};
use super::upoly::UniPoly;

type ModPoly = Vec<u64>;

#[derive(Clone, Copy)]
struct Fp {
    p: u64,
}

impl Fp {
    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }
    fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    fn trim(&self, mut a: ModPoly) -> ModPoly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn reduce(&self, a: &IntPoly) -> ModPoly {
        let pb = BigInt::from(self.p);
        self.trim(a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
    }

    fn sub_p(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let n = a.len().max(b.len());
        self.trim((0..n).map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect())
    }

    fn mul_p(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        self.trim(out)
    }

    fn divrem_p(&self, a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly) {
        let db = b.len() - 1;
        if a.len() <= db {
            return (Vec::new(), a.clone());
        }
        let inv = self.inv(*b.last().unwrap());
        let mut r = a.clone();
        let mut q = vec![0u64; a.len() - db];
        for k in (0..q.len()).rev() {
            let c = self.mul(r[k + db], inv);
            if c != 0 {
                for (j, &bc) in b.iter().enumerate() {
                    r[k + j] = self.sub(r[k + j], self.mul(c, bc));
                }
            }
            q[k] = c;
        }
        r.truncate(db);
        (self.trim(q), self.trim(r))
    }

    fn rem_p(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        self.divrem_p(a, b).1
    }

    fn monic(&self, a: &ModPoly) -> ModPoly {
        match a.last() {
            None => Vec::new(),
            Some(&l) => {
                let inv = self.inv(l);
                a.iter().map(|&c| self.mul(c, inv)).collect()
            }
        }
    }

    fn gcd_p(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem_p(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s a + t b = g`, `g` monic.
    fn ext_gcd_p(&self, a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly, ModPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem_p(&r0, &r1);
            let s2 = self.sub_p(&s0, &self.mul_p(&q, &s1));
            let t2 = self.sub_p(&t0, &self.mul_p(&q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        let inv = self.inv(*r0.last().unwrap());
        let sc = |v: &ModPoly| self.trim(v.iter().map(|&c| self.mul(c, inv)).collect());
        (sc(&r0), sc(&s0), sc(&t0))
    }

    fn powmod(&self, base: &ModPoly, e: &BigUint, m: &ModPoly) -> ModPoly {
        let mut result = vec![1u64];
        let b = self.rem_p(base, m);
        for i in (0..e.bits()).rev() {
            result = self.rem_p(&self.mul_p(&result, &result), m);
            if e.bit(i) {
                result = self.rem_p(&self.mul_p(&result, &b), m);
            }
        }
        result
    }

    fn derivative(&self, a: &ModPoly) -> ModPoly {
        self.trim(a.iter().enumerate().skip(1).map(|(i, &c)| self.mul(c, i as u64 % self.p)).collect())
    }

    /// Distinct-degree factorization of a monic square-free polynomial.
    fn ddf(&self, f: &ModPoly) -> Vec<(ModPoly, usize)> {
        let mut out = Vec::new();
        let mut f = f.clone();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let mut d = 0;
        while f.len() > 1 {
            d += 1;
            if 2 * d > f.len() - 1 {
                out.push((f.clone(), f.len() - 1));
                break;
            }
            h = self.powmod(&h, &BigUint::from(self.p), &f);
            let g = self.gcd_p(&f, &self.sub_p(&h, &x));
            if g.len() > 1 {
                f = self.divrem_p(&f, &g).0;
                h = self.rem_p(&h, &f);
                out.push((g, d));
            }
        }
        out
    }

    /// Equal-degree splitting (Cantor-Zassenhaus) of a product of degree-`d` factors.
    fn edf(&self, f: &ModPoly, d: usize, rng: &mut StdRng, out: &mut Vec<ModPoly>) {
        let n = f.len() - 1;
        if n == d {
            out.push(self.monic(f));
            return;
        }
        let e = (num_traits::pow(BigUint::from(self.p), d) - BigUint::one()) / BigUint::from(2u32);
        loop {
            let a: ModPoly = self.trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() <= 1 {
                continue;
            }
            let b = self.sub_p(&self.powmod(&a, &e, f), &vec![1]);
            let g = self.gcd_p(&b, f);
            if g.len() > 1 && g.len() < f.len() {
                let rest = self.divrem_p(f, &g).0;
                self.edf(&g, d, rng, out);
                self.edf(&rest, d, rng, out);
                return;
            }
        }
    }

    fn factor_monic_squarefree(&self, f: &ModPoly, rng: &mut StdRng) -> Vec<ModPoly> {
        let mut out = Vec::new();
        for (g, d) in self.ddf(f) {
            self.edf(&g, d, rng, &mut out);
        }
        out
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

fn symmod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn reduce_mod(a: &IntPoly, m: &BigInt) -> IntPoly {
    let mut v: IntPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    intpoly::trim(&mut v);
    v
}

fn mul_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    reduce_mod(&intpoly::mul(a, b), m)
}

fn sub_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    reduce_mod(&intpoly::sub(a, b), m)
}

fn add_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    let n = a.len().max(b.len());
    let v: IntPoly = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect();
    reduce_mod(&v, m)
}

/// Division by a monic polynomial modulo `m`.
fn divrem_monic_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    let db = b.len() - 1;
    let mut r = reduce_mod(a, m);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].clone();
        if !c.is_zero() {
            for (j, bc) in b.iter().enumerate() {
                r[k + j] = (&r[k + j] - &c * bc).mod_floor(m);
            }
        }
        q[k] = c;
    }
    r.truncate(db);
    intpoly::trim(&mut r);
    intpoly::trim(&mut q);
    (q, r)
}

fn lift_mod_p(a: &ModPoly) -> IntPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lift `f = g h (mod p)` to modulus `target` (a power of `p`).
fn hensel_two(f: &IntPoly, g: &ModPoly, h: &ModPoly, fp: &Fp, target: &BigInt) -> (IntPoly, IntPoly) {
    let (_, s0, t0) = fp.ext_gcd_p(g, h);
    let mut g = lift_mod_p(g);
    let mut h = lift_mod_p(h);
    let mut s = lift_mod_p(&s0);
    let mut t = lift_mod_p(&t0);
    let mut m = BigInt::from(fp.p);
    while &m < target {
        let m2 = {
            let sq = &m * &m;
            if &sq > target {
                target.clone()
            } else {
                sq
            }
        };
        let e = sub_mod(f, &intpoly::mul(&g, &h), &m2);
        let (q, r) = divrem_monic_mod(&mul_mod(&s, &e, &m2), &h, &m2);
        let g2 = add_mod(&add_mod(&g, &mul_mod(&t, &e, &m2), &m2), &mul_mod(&q, &g, &m2), &m2);
        let h2 = add_mod(&h, &r, &m2);
        let b = sub_mod(
            &add_mod(&mul_mod(&s, &g2, &m2), &mul_mod(&t, &h2, &m2), &m2),
            &vec![BigInt::one()],
            &m2,
        );
        let (c, d) = divrem_monic_mod(&mul_mod(&s, &b, &m2), &h2, &m2);
        s = sub_mod(&s, &d, &m2);
        t = sub_mod(&sub_mod(&t, &mul_mod(&t, &b, &m2), &m2), &mul_mod(&c, &g2, &m2), &m2);
        g = g2;
        h = h2;
        m = m2;
    }
    (g, h)
}

/// Lift a factorization `f = lc(f) prod factors (mod p)` into monic factors modulo `target`.
fn hensel_multi(f: &IntPoly, factors: &[ModPoly], fp: &Fp, target: &BigInt) -> Vec<IntPoly> {
    if factors.len() == 1 {
        let lc = f.last().unwrap();
        let inv = lc.modinv(target).expect("leading coefficient invertible");
        return vec![reduce_mod(&f.iter().map(|c| c * &inv).collect(), target)];
    }
    let mid = factors.len() / 2;
    let lcp = fp.reduce(&vec![f.last().unwrap().clone()]);
    let mut g = lcp;
    for a in &factors[..mid] {
        g = fp.mul_p(&g, a);
    }
    let mut h = vec![1u64];
    for a in &factors[mid..] {
        h = fp.mul_p(&h, a);
    }
    let (gl, hl) = hensel_two(f, &g, &h, fp, target);
    let mut out = hensel_multi(&gl, &factors[..mid], fp, target);
    out.extend(hensel_multi(&hl, &factors[mid..], fp, target));
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Irreducible factors of a primitive, square-free integer polynomial with
/// positive leading coefficient.
pub fn factor_squarefree_int(f: &IntPoly) -> Vec<IntPoly> {
    let mut f = intpoly::primitive(f);
    let mut out = Vec::new();
    if f.len() <= 2 {
        if !f.is_empty() && f.len() == 2 {
            out.push(f);
        }
        return out;
    }
    if f[0].is_zero() {
        out.push(vec![BigInt::zero(), BigInt::one()]);
        f.remove(0);
        f = intpoly::primitive(&f);
        if f.len() <= 2 {
            if f.len() == 2 {
                out.push(f);
            }
            return out;
        }
    }
    let n = f.len() - 1;
    let mut rng = StdRng::seed_from_u64(0x5eed_f00d);

    // Choose among a few good primes the one with fewest modular factors.
    let mut best: Option<(Fp, Vec<ModPoly>)> = None;
    let mut tried = 0;
    let mut cand = 3u64;
    while tried < 5 {
        cand += 2;
        if !is_prime(cand) {
            continue;
        }
        let fp = Fp { p: cand };
        let fbar = fp.reduce(&f);
        if fbar.len() != f.len() {
            continue;
        }
        let g = fp.gcd_p(&fbar, &fp.derivative(&fbar));
        if g.len() != 1 {
            continue;
        }
        tried += 1;
        let facs = fp.factor_monic_squarefree(&fp.monic(&fbar), &mut rng);
        if facs.len() == 1 {
            out.push(f);
            return out;
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((fp, facs));
        }
    }
    let (fp, mod_factors) = best.unwrap();

    let lc = f.last().unwrap().abs();
    let norm_bound = BigInt::from(n + 1) * intpoly::max_abs(&f);
    let bound = BigInt::from(2) * &lc * (BigInt::one() << n) * norm_bound;
    let pb = BigInt::from(fp.p);
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
    }
    let mut lifted = hensel_multi(&f, &mod_factors, &fp, &modulus);

    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut found = false;
        for subset in subsets(lifted.len(), s) {
            let a = f.last().unwrap().clone();
            let mut prod: IntPoly = vec![a];
            for &i in &subset {
                prod = mul_mod(&prod, &lifted[i], &modulus);
            }
            let cand: IntPoly = prod.iter().map(|c| symmod(c, &modulus)).collect();
            let cand = intpoly::primitive(&cand);
            if let Some(q) = intpoly::div_exact(&f, &cand) {
                out.push(cand);
                f = intpoly::primitive(&q);
                let keep: Vec<IntPoly> = lifted
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, v)| v.clone())
                    .collect();
                lifted = keep;
                found = true;
                break;
            }
        }
        if !found {
            s += 1;
        }
    }
    if f.len() > 1 {
        out.push(f);
    }
    out
}

/// Irreducible factorization over Q: monic irreducible factors with multiplicities,
/// sorted by degree then coefficients.
pub fn factor(p: &UniPoly) -> Vec<(UniPoly, usize)> {
    let mut out = Vec::new();
    for (part, mult) in p.squarefree_decomposition() {
        let (_, ip) = part.to_primitive_int();
        for q in factor_squarefree_int(&ip) {
            out.push((UniPoly::from_int_poly(&q).monic(), mult));
        }
    }
    out.sort_by(|a, b| a.0.deg().cmp(&b.0.deg()).then_with(|| cmp_coeffs(&a.0, &b.0)));
    out
}

/// Distinct monic irreducible factors.
pub fn irreducible_factors(p: &UniPoly) -> Vec<UniPoly> {
    factor(p).into_iter().map(|(q, _)| q).collect()
}

fn cmp_coeffs(a: &UniPoly, b: &UniPoly) -> std::cmp::Ordering {
    a.coeffs().cmp(b.coeffs())
}
