use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{is_prime_u64, pow_mod_u64};

use super::fq::FqPoly;

/// Arithmetic in a finite field. Elements are plain values; the field
/// object carries whatever tables the representation needs.
pub trait FiniteField: Clone + Debug + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Ord + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// # Panics
    ///
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn characteristic(&self) -> BigUint;
    fn order(&self) -> BigUint;
    /// Degree over the prime field.
    fn degree(&self) -> u32;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn random(&self, rng: &mut ChaCha8Rng) -> Self::Elem;
    /// Inverse of the Frobenius map x -> x^p.
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem;

    fn pow(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut r = self.one();
        for i in (0..e.bits()).rev() {
            r = self.mul(&r, &r);
            if e.bit(i) {
                r = self.mul(&r, a);
            }
        }
        r
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// F_q with q = p^k, p < 2^32. Prime fields use direct modular arithmetic;
/// extensions (q at most 2^20) use log/antilog tables over the
/// deterministic defining polynomial.
#[derive(Clone, Debug)]
pub struct SmallField {
    p: u64,
    k: u32,
    q: u64,
    tables: Option<Arc<ExtTables>>,
}

#[derive(Debug)]
struct ExtTables {
    /// Monic defining polynomial, ascending, length k + 1.
    modulus: Vec<u64>,
    exp: Vec<u64>,
    log: Vec<u32>,
}

/// Largest extension field order handled by table arithmetic.
pub const MAX_EXTENSION_ORDER: u64 = 1 << 20;

impl SmallField {
    /// The prime field F_p.
    ///
    /// # Panics
    ///
    /// Panics unless p is a prime below 2^32.
    pub fn prime(p: u64) -> Self {
        assert!(p < 1 << 32 && is_prime_u64(p), "SmallField::prime: {p} is not a prime below 2^32");
        Self { p, k: 1, q: p, tables: None }
    }

    /// F_{p^k}. Returns `None` unless p is prime and the order is in range.
    pub fn new(p: u64, k: u32) -> Option<Self> {
        if !is_prime_u64(p) || p >= 1 << 32 || k == 0 {
            return None;
        }
        if k == 1 {
            return Some(Self::prime(p));
        }
        let q = p.checked_pow(k).filter(|&q| q <= MAX_EXTENSION_ORDER)?;
        let modulus = defining_polynomial(p, k);
        let tables = ExtTables::build(p, k, q, modulus);
        Some(Self { p, k, q, tables: Some(Arc::new(tables)) })
    }

    /// F_q for a prime power q.
    pub fn of_order(q: u64) -> Option<Self> {
        let (p, k) = prime_power(q)?;
        Self::new(p, k)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Defining polynomial of the extension, ascending; `[0, 1]` for prime fields.
    pub fn modulus(&self) -> Vec<u64> {
        match &self.tables {
            Some(t) => t.modulus.clone(),
            None => vec![0, 1],
        }
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> u64 {
        match &self.tables {
            Some(t) => t.exp[1],
            None => primitive_root(self.p),
        }
    }

    /// Base-p digits of an element, low degree first.
    pub fn digits(&self, a: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.k as usize);
        let mut a = a;
        for _ in 0..self.k {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.q
    }

    fn from_digits(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn pow_u64(&self, a: u64, e: u64) -> u64 {
        match &self.tables {
            None => pow_mod_u64(a, e, self.p),
            Some(t) => {
                if a == 0 {
                    return if e == 0 { 1 } else { 0 };
                }
                let l = t.log[a as usize] as u128 * e as u128 % (self.q - 1) as u128;
                t.exp[l as usize]
            }
        }
    }
}

impl ExtTables {
    fn build(p: u64, k: u32, q: u64, modulus: Vec<u64>) -> Self {
        let k = k as usize;
        let enc = |d: &[u64]| d.iter().rev().fold(0u64, |acc, &c| acc * p + c);
        let dec = |mut a: u64| {
            let mut d = vec![0u64; k];
            for c in d.iter_mut() {
                *c = a % p;
                a /= p;
            }
            d
        };
        let slow_mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
            let mut prod = vec![0u64; 2 * k - 1];
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            for i in (k..prod.len()).rev() {
                let c = prod[i];
                if c != 0 {
                    for (j, &m) in modulus[..k].iter().enumerate() {
                        prod[i - k + j] = (prod[i - k + j] + (p - c) * m) % p;
                    }
                }
                prod[i] = 0;
            }
            prod.truncate(k);
            prod
        };
        let n = q - 1;
        let prime_divisors: Vec<u64> = (2..=n).filter(|d| n % d == 0 && is_prime_u64(*d)).collect();
        let mut gen = None;
        for cand in 2..q {
            let g = dec(cand);
            let order_ok = prime_divisors.iter().all(|&r| {
                let mut acc = dec(1);
                let mut base = g.clone();
                let mut e = n / r;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = slow_mul(&acc, &base);
                    }
                    base = slow_mul(&base, &base);
                    e >>= 1;
                }
                enc(&acc) != 1
            });
            if order_ok {
                gen = Some(g);
                break;
            }
        }
        let g = gen.expect("multiplicative group of a finite field is cyclic");
        let mut exp = vec![0u64; n as usize];
        let mut log = vec![0u32; q as usize];
        let mut cur = dec(1);
        for (i, slot) in exp.iter_mut().enumerate() {
            let e = enc(&cur);
            *slot = e;
            log[e as usize] = i as u32;
            cur = slow_mul(&cur, &g);
        }
        Self { modulus, exp, log }
    }
}

impl FiniteField for SmallField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        if self.k == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let (da, db) = (self.digits(*a), self.digits(*b));
        let d: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.from_digits(&d)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &u64) -> u64 {
        if self.k == 1 {
            return if *a == 0 { 0 } else { self.p - a };
        }
        let d: Vec<u64> = self.digits(*a).iter().map(|x| (self.p - x) % self.p).collect();
        self.from_digits(&d)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        match &self.tables {
            None => a * b % self.p,
            Some(t) => {
                if *a == 0 || *b == 0 {
                    return 0;
                }
                let l = (t.log[*a as usize] as u64 + t.log[*b as usize] as u64) % (self.q - 1);
                t.exp[l as usize]
            }
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        match &self.tables {
            None => pow_mod_u64(*a, self.p - 2, self.p),
            Some(t) => {
                let l = (self.q - 1 - t.log[*a as usize] as u64) % (self.q - 1);
                t.exp[l as usize]
            }
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> BigUint {
        BigUint::from(self.p)
    }
    fn order(&self) -> BigUint {
        BigUint::from(self.q)
    }
    fn degree(&self) -> u32 {
        self.k
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }
    fn random(&self, rng: &mut ChaCha8Rng) -> u64 {
        rng.gen_range(0..self.q)
    }
    fn pth_root(&self, a: &u64) -> u64 {
        if self.k == 1 {
            *a
        } else {
            self.pow_u64(*a, self.q / self.p)
        }
    }
    fn pow(&self, a: &u64, e: &BigUint) -> u64 {
        let m = BigUint::from(self.q - 1);
        if *a == 0 {
            return if e.is_zero() { 1 } else { 0 };
        }
        self.pow_u64(*a, (e % m).to_u64().unwrap())
    }
}

/// F_p for an arbitrary-size prime p.
#[derive(Clone, Debug)]
pub struct BigPrimeField {
    p: Arc<BigUint>,
}

impl BigPrimeField {
    /// The caller asserts primality of `p`.
    pub fn new(p: BigUint) -> Self {
        Self { p: Arc::new(p) }
    }

    pub fn p(&self) -> &BigUint {
        &self.p
    }
}

impl FiniteField for BigPrimeField {
    type Elem = BigUint;

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let s = a + b;
        if s >= *self.p {
            s - &*self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            &*self.p - (b - a)
        }
    }
    fn neg(&self, a: &BigUint) -> BigUint {
        if a.is_zero() {
            BigUint::zero()
        } else {
            &*self.p - a
        }
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b % &*self.p
    }
    fn inv(&self, a: &BigUint) -> BigUint {
        assert!(!a.is_zero(), "inverse of zero");
        let p = BigInt::from((*self.p).clone());
        let e = BigInt::from(a.clone()).extended_gcd(&p);
        e.x.mod_floor(&p).to_biguint().unwrap()
    }
    fn is_zero(&self, a: &BigUint) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> BigUint {
        (*self.p).clone()
    }
    fn order(&self) -> BigUint {
        (*self.p).clone()
    }
    fn degree(&self) -> u32 {
        1
    }
    fn from_int(&self, n: &BigInt) -> BigUint {
        n.mod_floor(&BigInt::from((*self.p).clone())).to_biguint().unwrap()
    }
    fn random(&self, rng: &mut ChaCha8Rng) -> BigUint {
        crate::arith::random_below(rng, self.p.bits() + 64, &self.p)
    }
    fn pth_root(&self, a: &BigUint) -> BigUint {
        a.clone()
    }
    fn pow(&self, a: &BigUint, e: &BigUint) -> BigUint {
        a.modpow(e, &self.p)
    }
}

/// Decompose q = p^k.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut m = q;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// Smallest generator of (Z/p)^*.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let n = p - 1;
    let mut divs = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            divs.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        divs.push(m);
    }
    (2..p).find(|&g| divs.iter().all(|&r| pow_mod_u64(g, n / r, p) != 1)).unwrap()
}

/// The monic irreducible polynomial of degree k over F_p whose coefficient
/// tuple (c_{k-1}, ..., c_0) is lexicographically smallest. Ascending order.
pub fn defining_polynomial(p: u64, k: u32) -> Vec<u64> {
    let fp = SmallField::prime(p);
    let total = p.pow(k);
    for m in 0..total {
        let mut coeffs = Vec::with_capacity(k as usize + 1);
        let mut r = m;
        for _ in 0..k {
            coeffs.push(r % p);
            r /= p;
        }
        coeffs.push(1);
        if coeffs[0] == 0 && k > 1 {
            continue;
        }
        let f = FqPoly::new(fp.clone(), coeffs.clone());
        if super::factor_fq::is_irreducible(&f) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
