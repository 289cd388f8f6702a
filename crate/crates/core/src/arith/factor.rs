use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::prime::{is_prime, random_below, small_primes, TRIAL_BOUND};

/// Effort limits for [`factor_integer`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorBudget {
    /// Pollard-rho iterations allowed per composite.
    pub rho_iterations: u64,
    pub seed: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        Self { rho_iterations: 10_000_000, seed: 0 }
    }
}

impl FactorBudget {
    pub fn with_iterations(rho_iterations: u64) -> Self {
        Self { rho_iterations, ..Self::default() }
    }
}

/// A possibly partial factorization: `sign * prod(p^e) * cofactor`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredInt {
    pub sign: i8,
    #[serde(with = "super::serde_dec::pairs")]
    pub factors: Vec<(BigInt, u32)>,
    #[serde(with = "super::serde_dec")]
    pub cofactor: BigInt,
}

impl FactoredInt {
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_one()
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn reconstruct(&self) -> BigInt {
        let mut n = self.cofactor.clone();
        for (p, e) in &self.factors {
            n *= num_traits::pow(p.clone(), *e as usize);
        }
        if self.sign < 0 {
            -n
        } else {
            n
        }
    }

    fn push(&mut self, p: BigInt, e: u32) {
        match self.factors.iter_mut().find(|(q, _)| *q == p) {
            Some(entry) => entry.1 += e,
            None => self.factors.push((p, e)),
        }
    }
}

/// Factor a nonzero integer by trial division below 10^6 followed by
/// Brent's variant of Pollard rho. Whatever resists the budget ends up in
/// `cofactor`.
///
/// # Panics
///
/// Panics on zero input.
pub fn factor_integer(n: &BigInt, budget: &FactorBudget) -> FactoredInt {
    assert!(!n.is_zero(), "factor_integer: zero input");
    let mut out = FactoredInt { sign: if n.sign() == Sign::Minus { -1 } else { 1 }, factors: Vec::new(), cofactor: BigInt::one() };
    let mut m = n.magnitude().clone();
    for &p in small_primes() {
        if m.is_one() {
            break;
        }
        if let Some(v) = m.to_u64() {
            if p.saturating_mul(p) > v {
                break;
            }
        }
        let mut e = 0;
        loop {
            let (q, r) = m.div_rem(&BigUint::from(p));
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e > 0 {
            out.push(BigInt::from(p), e);
        }
    }
    if !m.is_one() {
        let bound = BigUint::from(TRIAL_BOUND);
        if m < &bound * &bound {
            // No factor below the trial bound: m is prime.
            out.push(BigInt::from(m), 1);
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
            let mut stack = vec![(m, 1u32)];
            while let Some((c, e)) = stack.pop() {
                if is_prime(&BigInt::from(c.clone())) {
                    out.push(BigInt::from(c), e);
                    continue;
                }
                if let Some((root, k)) = perfect_power(&c) {
                    stack.push((root, e * k));
                    continue;
                }
                match split(&c, budget.rho_iterations, &mut rng) {
                    Some(d) => {
                        let other = &c / &d;
                        stack.push((d, e));
                        stack.push((other, e));
                    }
                    None => out.cofactor *= BigInt::from(c).pow(e),
                }
            }
        }
    }
    out.factors.sort();
    out
}

fn perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    let bits = n.bits() as u32;
    // Every prime factor exceeds the trial bound (about 2^20).
    for k in (2..=bits / 20).rev() {
        let r = n.nth_root(k);
        if num_traits::pow(r.clone(), k as usize) == *n {
            return Some((r, k));
        }
    }
    None
}

fn split(n: &BigUint, budget: u64, rng: &mut ChaCha8Rng) -> Option<BigUint> {
    if let Some(v) = n.to_u64() {
        return rho_u64(v, budget).map(BigUint::from);
    }
    let mut spent = 0u64;
    while spent < budget {
        let c = random_below(rng, 64, n) + 1u32;
        let y0 = random_below(rng, n.bits(), n);
        let (found, used) = brent(n, &y0, &c, budget - spent);
        spent += used.max(1);
        if let Some(d) = found {
            if !d.is_one() && d != *n {
                return Some(d);
            }
        }
    }
    None
}

/// One Brent cycle search; returns the factor found and iterations spent.
fn brent(n: &BigUint, y0: &BigUint, c: &BigUint, budget: u64) -> (Option<BigUint>, u64) {
    const BATCH: u64 = 128;
    let f = |x: &BigUint| (x * x + c) % n;
    let mut y = y0.clone();
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut r = 1u64;
    let mut spent = 0u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        spent += r;
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..BATCH.min(r - k) {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = q * diff % n;
            }
            g = q.gcd(n);
            k += BATCH;
            spent += BATCH;
        }
        r *= 2;
        if spent > budget {
            return (None, spent);
        }
    }
    if g == *n {
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (Some(g), spent)
}

fn rho_u64(n: u64, budget: u64) -> Option<u64> {
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let mut spent = 0;
    for c in 1..u64::MAX {
        let f = |x: u64| (mul(x, x) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
            spent += 1;
            if spent > budget {
                return None;
            }
        }
        if d != n {
            return Some(d);
        }
    }
    None
}

/// Exact integer valuation; `None` for zero.
pub fn valuation(n: &BigInt, p: &BigInt) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let p = p.magnitude();
    if p == &BigUint::from(2u32) {
        return n.magnitude().trailing_zeros().map(|t| t as u32);
    }
    let mut m = n.magnitude().clone();
    let mut e = 0;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return Some(e);
        }
        m = q;
        e += 1;
    }
}
