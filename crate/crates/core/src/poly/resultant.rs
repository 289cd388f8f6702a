use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::int::IntPoly;

/// Resultant over Z by the subresultant polynomial remainder sequence.
/// Agrees with the Sylvester determinant; zero if either input is zero.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let (Some(mut da), Some(mut db)) = (f.degree(), g.degree()) else {
        return BigInt::zero();
    };
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut sign = BigInt::one();
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
    }
    if db == 0 {
        return sign * num_traits::pow(b.lc(), da);
    }
    let (ca, cb) = (a.content(), b.content());
    a = IntPoly::new(a.coeffs().iter().map(|c| c / &ca).collect());
    b = IntPoly::new(b.coeffs().iter().map(|c| c / &cb).collect());
    let t = num_traits::pow(ca, db) * num_traits::pow(cb, da);
    let mut g_ = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_divrem(&b).1;
        if r.is_zero() {
            return BigInt::zero();
        }
        a = b;
        let div = &g_ * num_traits::pow(h.clone(), delta);
        b = IntPoly::new(r.coeffs().iter().map(|c| c / &div).collect());
        g_ = a.lc();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 { h } else { num_traits::pow(g_.clone(), delta) / num_traits::pow(h.clone(), delta - 1) };
        if b.degree() == Some(0) {
            let da = a.degree().unwrap();
            let lb = b.lc();
            let hh = if da == 0 { h } else { num_traits::pow(lb, da) / num_traits::pow(h, da - 1) };
            return sign * t * hh;
        }
    }
}

/// disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f); 1 for linear f.
///
/// # Panics
///
/// Panics if f is constant.
pub fn discriminant(f: &IntPoly) -> BigInt {
    let n = f.degree().expect("discriminant of zero polynomial");
    assert!(n >= 1, "discriminant of a constant");
    let r = resultant(f, &f.derivative()) / f.lc();
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}
