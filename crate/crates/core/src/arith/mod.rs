//! Exact integers, rationals, primality and integer factorization.
//!
//! `BigInt` and `Rational` are the `num` crate types. Everything here is
//! pure; randomized routines take explicit seeds.

mod factor;
mod prime;
pub mod serde_dec;

pub use factor::{factor_integer, valuation, FactorBudget, FactoredInt};
pub use num_bigint::{BigInt, BigUint, Sign};
pub use prime::{is_prime, is_prime_u64, next_prime_u64, primes_up_to, TRIAL_BOUND};

pub(crate) use prime::{pow_mod_u64, random_below};

use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Valuation at a machine-sized prime; `None` for zero.
pub fn valuation_u64(n: &BigInt, p: u64) -> Option<u32> {
    valuation(n, &BigInt::from(p))
}

/// Valuation of a nonzero rational.
pub fn rational_valuation(r: &Rational, p: u64) -> Option<i64> {
    let num = valuation_u64(r.numer(), p)?;
    let den = valuation_u64(r.denom(), p).unwrap_or(0);
    Some(num as i64 - den as i64)
}

/// Inverse of `a` modulo `m` when it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.abs() != BigInt::from(1) {
        return None;
    }
    Some(e.x.mod_floor(m))
}

/// Symmetric residue of `a` modulo `m`, in (-m/2, m/2].
pub fn symmetric_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r + &r > *m {
        r - m
    } else {
        r
    }
}

/// Greatest common divisor of a list; zero for an empty or all-zero list.
pub fn gcd_all<'a, I: IntoIterator<Item = &'a BigInt>>(items: I) -> BigInt {
    let mut g = BigInt::zero();
    for x in items {
        g = g.gcd(x);
        if g == BigInt::from(1) {
            break;
        }
    }
    g
}

/// Parse a decimal integer, allowing a leading sign.
pub fn parse_int(s: &str) -> Option<BigInt> {
    s.trim().parse().ok()
}
