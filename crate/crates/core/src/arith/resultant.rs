use num_traits::{One, Zero};

use super::upoly::UniPoly;
use super::Rational;

/// Resultant of two univariate polynomials over Q (Euclidean recurrence).
pub fn resultant(a: &UniPoly, b: &UniPoly) -> Rational {
    let (Some(da), Some(db)) = (a.deg(), b.deg()) else {
        return Rational::zero();
    };
    if db == 0 {
        return num_traits::pow(b.lc(), da);
    }
    if da == 0 {
        return num_traits::pow(a.lc(), db);
    }
    let r = a.rem(b);
    let Some(dr) = r.deg() else {
        return Rational::zero();
    };
    let mut s = num_traits::pow(b.lc(), da - dr);
    if (da * db) % 2 == 1 {
        s = -s;
    }
    s * resultant(b, &r)
}

/// Discriminant-free check helper: `Res_t(p(t), q(t, z))` as a polynomial in `z`,
/// where `q` is given by its coefficients in `z` (each a polynomial in `t`).
/// Computed by evaluation at integer points and interpolation.
pub fn resultant_in_t(p: &UniPoly, q_by_z: &[UniPoly]) -> UniPoly {
    let dp = p.deg().unwrap_or(0);
    let dz = q_by_z.len().saturating_sub(1);
    let npts = dp * dz + 1;
    let mut xs = Vec::with_capacity(npts);
    let mut ys = Vec::with_capacity(npts);
    let mut z = 0i64;
    while xs.len() < npts {
        let zq = Rational::from_integer(z.into());
        let mut acc = UniPoly::zero();
        let mut zp = Rational::one();
        for c in q_by_z {
            acc = &acc + &c.scale(&zp);
            zp *= &zq;
        }
        xs.push(zq);
        ys.push(resultant(p, &acc));
        z = if z <= 0 { -z + 1 } else { -z };
    }
    interpolate(&xs, &ys)
}

/// Newton interpolation through the given points.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> UniPoly {
    let n = xs.len();
    let mut dd: Vec<Rational> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = UniPoly::zero();
    for i in (0..n).rev() {
        acc = &(&acc * &UniPoly::from_coeffs(vec![-xs[i].clone(), Rational::one()])) + &UniPoly::constant(dd[i].clone());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_resultants() {
        let r1 = resultant(&UniPoly::from_ints(&[-2, 0, 1]), &UniPoly::from_ints(&[-1, 1]));
        assert_eq!(r1, Rational::from_integer((-1).into()));
        let r2 = resultant(&UniPoly::from_ints(&[0, 0, 1]), &UniPoly::from_ints(&[-3, 1]));
        assert_eq!(r2, Rational::from_integer(9.into()));
    }

    #[test]
    fn norm_of_sqrt2_plus_z() {
        // Res_t(t^2 - 2, z - t) = z^2 - 2
        let p = UniPoly::from_ints(&[-2, 0, 1]);
        let q = vec![UniPoly::from_ints(&[0, -1]), UniPoly::from_ints(&[1])];
        assert_eq!(resultant_in_t(&p, &q), UniPoly::from_ints(&[-2, 0, 1]));
    }
}
