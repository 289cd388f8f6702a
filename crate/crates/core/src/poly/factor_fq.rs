//! Cantor-Zassenhaus factorization over finite fields.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::FiniteField;
use super::fq::FqPoly;

/// unit * prod f_i^{k_i} with monic irreducible, pairwise distinct f_i,
/// sorted by degree and then coefficients.
#[derive(Clone, Debug)]
pub struct FactorizationModP<F: FiniteField> {
    pub unit: F::Elem,
    pub factors: Vec<(FqPoly<F>, u32)>,
}

impl<F: FiniteField> FactorizationModP<F> {
    /// Degrees of the irreducible factors, repeated by multiplicity, descending.
    pub fn degree_partition(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.factors.iter().flat_map(|(f, k)| std::iter::repeat_n(f.degree().unwrap(), *k as usize)).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, k)| *k == 1)
    }

    pub fn product(&self, field: &F) -> FqPoly<F> {
        let mut acc = FqPoly::constant(field.clone(), self.unit.clone());
        for (f, k) in &self.factors {
            acc = acc.mul(&f.pow(*k));
        }
        acc
    }

    /// Number of distinct roots in the base field.
    pub fn linear_factor_count(&self) -> usize {
        self.factors.iter().filter(|(f, _)| f.degree() == Some(1)).count()
    }
}

/// Square-free decomposition of a monic polynomial: pairs (g, i) with g
/// squarefree, pairwise coprime, and f = prod g^i.
pub fn squarefree_decomposition<F: FiniteField>(f: &FqPoly<F>) -> Vec<(FqPoly<F>, u32)> {
    let mut out = Vec::new();
    sqf_rec(&f.monic(), 1, &mut out);
    out.sort_by_key(|a| a.1);
    out
}

fn sqf_rec<F: FiniteField>(f: &FqPoly<F>, mult: u32, out: &mut Vec<(FqPoly<F>, u32)>) {
    if f.degree().unwrap_or(0) == 0 {
        return;
    }
    let p = f.field().characteristic().to_u32().expect("characteristic fits u32");
    let d = f.derivative();
    if d.is_zero() {
        sqf_rec(&f.pth_root(), mult * p, out);
        return;
    }
    let mut c = f.gcd(&d);
    let mut w = f.divrem(&c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.divrem(&y).0;
        if fac.degree().unwrap_or(0) > 0 {
            push_merge(out, fac.monic(), mult * i);
        }
        i += 1;
        c = c.divrem(&y).0;
        w = y;
    }
    if !c.is_one() {
        sqf_rec(&c.pth_root(), mult * p, out);
    }
}

fn push_merge<F: FiniteField>(out: &mut Vec<(FqPoly<F>, u32)>, g: FqPoly<F>, m: u32) {
    match out.iter_mut().find(|(_, k)| *k == m) {
        Some(entry) => entry.0 = entry.0.mul(&g),
        None => out.push((g, m)),
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial.
///
/// Frobenius h -> h^q is F_q-linear, so after tabulating x^(jq) mod f each
/// step costs one matrix-vector product instead of a modular power.
pub fn distinct_degree<F: FiniteField>(f: &FqPoly<F>) -> Vec<(FqPoly<F>, usize)> {
    let field = f.field().clone();
    let q = field.order();
    let x = FqPoly::x(field.clone());
    let mut rest = f.monic();
    let mut out = Vec::new();
    if rest.degree().unwrap_or(0) < 2 {
        if rest.degree() == Some(1) {
            out.push((rest, 1));
        }
        return out;
    }
    let xq = x.powmod(&q, &rest);
    let n = rest.degree().unwrap();
    let mut table = Vec::with_capacity(n);
    let mut acc = FqPoly::one(field.clone());
    for _ in 0..n {
        table.push(acc.clone());
        acc = acc.mulmod(&xq, &rest);
    }
    let mut h = x.clone();
    let mut i = 0;
    while rest.degree().unwrap_or(0) >= 2 * (i + 1) {
        i += 1;
        h = frobenius(&h, &table, &field);
        let g = h.sub(&x).gcd(&rest);
        if !g.is_one() {
            rest = rest.divrem(&g).0;
            h = h.rem(&rest);
            for t in table.iter_mut() {
                *t = t.rem(&rest);
            }
            out.push((g, i));
        }
    }
    if let Some(d) = rest.degree().filter(|&d| d > 0) {
        out.push((rest, d));
    }
    out
}

/// h^q given the table of x^(jq) modulo the current modulus.
fn frobenius<F: FiniteField>(h: &FqPoly<F>, table: &[FqPoly<F>], field: &F) -> FqPoly<F> {
    let len = table.iter().map(|t| t.coeffs().len()).max().unwrap_or(0);
    let mut c = vec![field.zero(); len];
    for (hj, t) in h.coeffs().iter().zip(table) {
        if field.is_zero(hj) {
            continue;
        }
        for (k, a) in t.coeffs().iter().enumerate() {
            c[k] = field.add(&c[k], &field.mul(hj, a));
        }
    }
    FqPoly::new(field.clone(), c)
}

/// Split a monic squarefree product of irreducibles of degree `d`.
pub fn equal_degree<F: FiniteField>(f: &FqPoly<F>, d: usize, rng: &mut ChaCha8Rng) -> Vec<FqPoly<F>> {
    let n = f.degree().expect("nonzero input");
    if n == d {
        return vec![f.monic()];
    }
    let field = f.field().clone();
    let q = field.order();
    let two = BigUint::from(2u32);
    let even = (&q % &two) == BigUint::ZERO;
    let qd = num_traits::pow(q.clone(), d);
    loop {
        let coeffs: Vec<_> = (0..n).map(|_| field.random(rng)).collect();
        let a = FqPoly::new(field.clone(), coeffs);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if even {
            // Absolute trace to F_2: sum of a^(2^i), i < k*d.
            let k = field.degree() as usize;
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..k * d {
                t = t.mulmod(&t, f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (&qd - BigUint::one()) / &two;
            a.powmod(&e, f).sub(&FqPoly::one(field.clone()))
        };
        let g = b.gcd(f);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let h = f.divrem(&g).0;
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
}

/// Complete factorization; randomness comes from `seed` only.
///
/// # Panics
///
/// Panics on the zero polynomial.
pub fn factor<F: FiniteField>(f: &FqPoly<F>, seed: u64) -> FactorizationModP<F> {
    assert!(!f.is_zero(), "factor: zero polynomial");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let unit = f.lc();
    let mut factors = Vec::new();
    for (g, mult) in squarefree_decomposition(f) {
        for (h, d) in distinct_degree(&g) {
            for irr in equal_degree(&h, d, &mut rng) {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    FactorizationModP { unit, factors }
}

/// Rabin's test: f | x^(q^n) - x and gcd(x^(q^(n/r)) - x, f) = 1 for each
/// prime r dividing n.
pub fn is_irreducible<F: FiniteField>(f: &FqPoly<F>) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = f.monic();
    let field = f.field().clone();
    let q = field.order();
    let x = FqPoly::x(field);
    let mut frob = vec![x.clone()];
    for _ in 0..n {
        let next = frob.last().unwrap().powmod(&q, &f);
        frob.push(next);
    }
    if frob[n] != x.rem(&f) {
        return false;
    }
    let mut m = n;
    let mut r = 2;
    while m > 1 {
        if m % r == 0 {
            if !frob[n / r].sub(&x).gcd(&f).is_one() {
                return false;
            }
            while m % r == 0 {
                m /= r;
            }
        }
        r += 1;
    }
    true
}

/// Distinct roots in the base field, sorted.
pub fn roots<F: FiniteField>(f: &FqPoly<F>, seed: u64) -> Vec<F::Elem> {
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let f = f.monic();
    let field = f.field().clone();
    let x = FqPoly::x(field.clone());
    let g = x.powmod(&field.order(), &f).sub(&x).gcd(&f);
    if g.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<_> = equal_degree(&g, 1, &mut rng).iter().map(|l| field.neg(&l.coeff(0))).collect();
    out.sort();
    out
}
