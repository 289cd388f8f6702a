//! Factorization over Z: square-free decomposition, Hensel lifting of a
//! modular factorization and exhaustive recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::factor_fq;
use super::field::SmallField;
use super::fq::FqPoly;
use super::int::IntPoly;
use crate::arith::next_prime_u64;

/// content * prod f_i^{k_i}, each f_i primitive, irreducible over Q, with
/// positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntFactorization {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl IntFactorization {
    pub fn product(&self) -> IntPoly {
        let mut acc = IntPoly::constant(self.content.clone());
        for (f, k) in &self.factors {
            acc = &acc * &f.pow(*k);
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Yun's square-free decomposition of a primitive polynomial over Z.
pub fn squarefree_decomposition(f: &IntPoly) -> Vec<(IntPoly, u32)> {
    let f = f.primitive_part();
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let df = f.derivative();
    let g = f.gcd(&df);
    let mut c = f.div_exact(&g).expect("gcd divides f");
    let mut d = &df.div_exact(&g).expect("gcd divides f'") - &c.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while c.degree().unwrap_or(0) > 0 {
        let a = c.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        c = c.div_exact(&a).expect("exact");
        d = &d.div_exact(&a).expect("exact") - &c.derivative();
        i += 1;
    }
    out
}

/// Complete factorization over Z.
///
/// # Panics
///
/// Panics on the zero polynomial.
pub fn factor_over_z(f: &IntPoly) -> IntFactorization {
    assert!(!f.is_zero(), "factor_over_z: zero polynomial");
    let prim = f.primitive_part();
    let content = f.lc() / prim.lc();
    let mut factors = Vec::new();
    for (part, k) in squarefree_decomposition(&prim) {
        for g in factor_squarefree(&part) {
            factors.push((g, k));
        }
    }
    factors.sort_by(|(a, ka), (b, kb)| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())).then(ka.cmp(kb)));
    IntFactorization { content, factors }
}

/// Irreducible factors of a primitive square-free polynomial.
pub fn factor_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let f = f.primitive_part();
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![f];
    }
    if f.coeff(0).is_zero() {
        let mut out = vec![IntPoly::x()];
        out.extend(factor_squarefree(&f.shift_down(1)));
        return out;
    }
    let p = good_prime(&f);
    let field = SmallField::prime(p);
    let fp = FqPoly::from_int_poly(&f, &field);
    let modular = factor_fq::factor(&fp, 0);
    let lifts: Vec<IntPoly> = modular.factors.iter().map(|(g, _)| lift_coeffs(g)).collect();
    if lifts.len() == 1 {
        return vec![f];
    }
    // Coefficient bound B for lc * (any factor); lift until p^k > 2B.
    let a = f.max_abs_coeff();
    let b = f.lc().abs();
    let bound = (BigInt::from(n + 1).sqrt() + 1u32) * (BigInt::one() << n) * &a * &b;
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut steps = 0u32;
    while modulus <= &bound * 2 {
        modulus = &modulus * &modulus;
        steps += 1;
    }
    let lifted = multifactor_lift(&f, &lifts, &pb, steps);
    recombine(&f, lifted, &modulus, &bound)
}

fn good_prime(f: &IntPoly) -> u64 {
    let lc = f.lc();
    let mut p = 3;
    loop {
        if !(&lc % BigInt::from(p)).is_zero() {
            let field = SmallField::prime(p);
            let fp = FqPoly::from_int_poly(f, &field);
            if fp.gcd(&fp.derivative()).is_one() {
                return p;
            }
        }
        p = next_prime_u64(p);
    }
}

fn lift_coeffs(g: &FqPoly<SmallField>) -> IntPoly {
    IntPoly::new(g.coeffs().iter().map(|&c| BigInt::from(c)).collect())
}

fn to_fp(f: &IntPoly, field: &SmallField) -> FqPoly<SmallField> {
    FqPoly::from_int_poly(f, field)
}

fn reduce(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m),
/// h monic, to the same relations modulo m^2.
fn hensel_step(f: &IntPoly, g: &IntPoly, h: &IntPoly, s: &IntPoly, t: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let m2 = m * m;
    let e = reduce(&(f - &(g * h)), &m2);
    let (q, r) = reduce(&(s * &e), &m2).divrem_monic(h);
    let g2 = reduce(&(&(g + &(t * &e)) + &(&q * g)), &m2);
    let h2 = reduce(&(h + &r), &m2);
    let b = reduce(&(&(&(s * &g2) + &(t * &h2)) - &IntPoly::one()), &m2);
    let (c, d) = reduce(&(s * &b), &m2).divrem_monic(&h2);
    let s2 = reduce(&(s - &d), &m2);
    let t2 = reduce(&(&(t - &(t * &b)) - &(&c * &g2)), &m2);
    (g2, h2, s2, t2)
}

/// Lift monic modular factors of f (mod p) to modulus p^(2^steps). The
/// leading coefficient of f is carried by the first factor internally; the
/// returned factors are monic.
fn multifactor_lift(f: &IntPoly, factors: &[IntPoly], p: &BigInt, steps: u32) -> Vec<IntPoly> {
    let r = factors.len();
    let mut modulus = p.clone();
    for _ in 0..steps {
        modulus = &modulus * &modulus;
    }
    if r == 1 {
        let inv = crate::arith::mod_inverse(&f.lc(), &modulus).expect("lc invertible");
        return vec![reduce(&f.scale(&inv), &modulus)];
    }
    let field = SmallField::prime(u64::try_from(p).expect("small prime"));
    let k = r / 2;
    let mut g = IntPoly::constant(f.lc());
    for x in &factors[..k] {
        g = reduce(&(&g * x), p);
    }
    let mut h = IntPoly::one();
    for x in &factors[k..] {
        h = reduce(&(&h * x), p);
    }
    let (one, s, t) = to_fp(&g, &field).ext_gcd(&to_fp(&h, &field));
    debug_assert!(one.is_one());
    let (mut s, mut t) = (lift_coeffs(&s), lift_coeffs(&t));
    let mut m = p.clone();
    for _ in 0..steps {
        let next = hensel_step(f, &g, &h, &s, &t, &m);
        g = next.0;
        h = next.1;
        s = next.2;
        t = next.3;
        m = &m * &m;
    }
    let mut out = multifactor_lift(&g, &factors[..k], p, steps);
    out.extend(multifactor_lift(&h, &factors[k..], p, steps));
    out
}

fn recombine(f: &IntPoly, mut lifted: Vec<IntPoly>, modulus: &BigInt, bound: &BigInt) -> Vec<IntPoly> {
    let mut found = Vec::new();
    let mut rest = f.clone();
    let mut s = 1;
    'outer: while 2 * s <= lifted.len() {
        let lc = rest.lc();
        let mut combo: Vec<usize> = (0..s).collect();
        loop {
            // Cheap filter on constant terms before forming products.
            let mut c0 = lc.clone();
            for &i in &combo {
                c0 = (c0 * lifted[i].coeff(0)).mod_floor(modulus);
            }
            let c0 = crate::arith::symmetric_mod(&c0, modulus);
            let rest0 = &lc * rest.coeff(0);
            if !c0.is_zero() && (&rest0 % &c0).is_zero() {
                let mut g = IntPoly::constant(lc.clone());
                let mut h = IntPoly::constant(lc.clone());
                for (i, x) in lifted.iter().enumerate() {
                    if combo.contains(&i) {
                        g = reduce(&(&g * x), modulus);
                    } else {
                        h = reduce(&(&h * x), modulus);
                    }
                }
                let g = g.symmetric_mod(modulus);
                let h = h.symmetric_mod(modulus);
                if g.one_norm() * h.one_norm() <= *bound {
                    found.push(g.primitive_part());
                    rest = h.primitive_part();
                    let mut i = 0;
                    lifted.retain(|_| {
                        let keep = !combo.contains(&i);
                        i += 1;
                        keep
                    });
                    continue 'outer;
                }
            }
            if !next_combination(&mut combo, lifted.len()) {
                break;
            }
        }
        s += 1;
    }
    found.push(rest.primitive_part());
    found
}

/// Advance to the next s-subset of 0..n in lexicographic order.
pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let s = c.len();
    for i in (0..s).rev() {
        if c[i] < n - s + i {
            c[i] += 1;
            for j in i + 1..s {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
