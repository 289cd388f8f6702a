use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Trial division bound used by [`crate::arith::factor_integer`].
pub const TRIAL_BOUND: u64 = 1_000_000;

/// Products of all Miller-Rabin bases below are exact for n below this value.
const DETERMINISTIC_LIMIT: &str = "3317044064679887385961981";

const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Extra random rounds above the deterministic range: error below 4^-64.
const EXTRA_ROUNDS: usize = 64;

/// Primes below `n`, by sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

pub(crate) fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(TRIAL_BOUND))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic primality test for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'base: for &a in &MR_BASES[..12] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime_u64(n: u64) -> u64 {
    let mut m = n + 1;
    while !is_prime_u64(m) {
        m += 1;
    }
    m
}

fn strong_probable_prime(n: &BigUint, a: &BigUint, d: &BigUint, s: u64) -> bool {
    let one = BigUint::one();
    let nm1 = n - &one;
    let mut x = a.modpow(d, n);
    if x == one || x == nm1 {
        return true;
    }
    for _ in 1..s {
        x = &x * &x % n;
        if x == nm1 {
            return true;
        }
        if x == one {
            return false;
        }
    }
    false
}

/// Primality test.
///
/// Exact below 3.3e24 (Miller-Rabin with the first 13 prime bases); above
/// that, 64 additional rounds with bases drawn from a generator seeded by
/// `n` itself, so the answer is reproducible and wrong with probability
/// below 2^-128.
///
/// # Panics
///
/// Panics if `n` is negative.
pub fn is_prime(n: &BigInt) -> bool {
    assert!(n.sign() != Sign::Minus, "is_prime: negative input");
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    let n = n.magnitude();
    for &p in &small_primes()[..200] {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    for &a in &MR_BASES {
        if !strong_probable_prime(n, &BigUint::from(a), &d, s) {
            return false;
        }
    }
    let limit: BigUint = DETERMINISTIC_LIMIT.parse().unwrap();
    if n < &limit {
        return true;
    }
    let seed = n.iter_u64_digits().fold(0x9e37_79b9_7f4a_7c15u64, |h, w| h.rotate_left(17) ^ w.wrapping_mul(0xff51_afd7_ed55_8ccd));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bits = n.bits();
    let two = BigUint::from(2u32);
    for _ in 0..EXTRA_ROUNDS {
        let mut a = random_below(&mut rng, bits, n);
        if a < two {
            a += &two;
        }
        if !strong_probable_prime(n, &a, &d, s) {
            return false;
        }
    }
    true
}

pub(crate) fn random_below<R: Rng>(rng: &mut R, bits: u64, n: &BigUint) -> BigUint {
    let words = bits.div_ceil(32) as usize;
    let digits: Vec<u32> = (0..words).map(|_| rng.gen()).collect();
    BigUint::new(digits) % n
}
