use intersective::arith::{factor_integer, is_prime, primes_up_to, valuation, FactorBudget, Rational};
use intersective::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn big(s: &str) -> BigInt {
    s.parse().unwrap()
}

#[test]
fn small_primality_cases() {
    assert!(is_prime(&BigInt::from(7)));
    assert!(!is_prime(&BigInt::from(14336)));
    assert!(!is_prime(&BigInt::from(10125)));
    assert!(!is_prime(&BigInt::from(0)));
    assert!(!is_prime(&BigInt::from(1)));
    assert!(is_prime(&BigInt::from(2)));
}

#[test]
fn primality_matches_sieve_below_100000() {
    let sieve = primes_up_to(100_000);
    let mut it = sieve.iter().peekable();
    for n in 0u64..100_000 {
        let expect = it.peek() == Some(&&n);
        if expect {
            it.next();
        }
        assert_eq!(is_prime(&BigInt::from(n)), expect, "n = {n}");
    }
}

#[test]
fn large_primes_and_composites() {
    // 2^127 - 1 is prime; 2^128 + 1 = 59649589127497217 * 5704689200685129054721.
    assert!(is_prime(&((BigInt::one() << 127) - 1)));
    assert!(!is_prime(&((BigInt::one() << 128) + 1)));
    assert!(is_prime(&big("4038646073033753219458100811142807636447")));
    // Strong pseudoprime to the first 12 prime bases.
    assert!(!is_prime(&big("318665857834031151167461")));
    // Carmichael number.
    assert!(!is_prime(&BigInt::from(561)));
}

#[test]
fn factor_examples() {
    let b = FactorBudget::default();
    let f = factor_integer(&BigInt::from(14336), &b);
    assert_eq!(f.factors, vec![(BigInt::from(2), 11), (BigInt::from(7), 1)]);
    assert!(f.is_complete());
    let f = factor_integer(&BigInt::from(10125), &b);
    assert_eq!(f.factors, vec![(BigInt::from(3), 4), (BigInt::from(5), 3)]);
    let f = factor_integer(&BigInt::from(1), &b);
    assert!(f.factors.is_empty() && f.cofactor.is_one());
    let f = factor_integer(&BigInt::from(-12), &b);
    assert_eq!(f.sign, -1);
    assert_eq!(f.reconstruct(), BigInt::from(-12));
}

#[test]
fn rho_splits_products_of_large_primes() {
    let p = big("1000000007");
    let q = big("1000000000039");
    let r = big("4038646073033753219458100811142807636447");
    let n = &p * &q * &r * &r;
    let f = factor_integer(&n, &FactorBudget::default());
    assert!(f.is_complete());
    assert_eq!(f.factors, vec![(p, 1), (q, 1), (r, 2)]);
}

#[test]
fn exhausted_budget_leaves_composite_cofactor() {
    let p = big("4038646073033753219458100811142807636447");
    let q = big("170141183460469231731687303715884105727");
    let n = &p * &q * BigInt::from(12);
    let f = factor_integer(&n, &FactorBudget::with_iterations(10));
    assert_eq!(f.cofactor, &p * &q);
    assert_eq!(f.reconstruct(), n);
}

#[test]
fn valuations() {
    assert_eq!(valuation(&BigInt::from(14336), &BigInt::from(2)), Some(11));
    assert_eq!(valuation(&BigInt::from(-10125), &BigInt::from(5)), Some(3));
    assert_eq!(valuation(&BigInt::zero(), &BigInt::from(5)), None);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn factorization_reconstructs(n in 1i64..1_000_000_000_000i64, neg in any::<bool>()) {
        let n = if neg { -BigInt::from(n) } else { BigInt::from(n) };
        let f = factor_integer(&n, &FactorBudget::default());
        prop_assert_eq!(f.reconstruct(), n);
        prop_assert!(f.is_complete());
        for (p, e) in &f.factors {
            prop_assert!(is_prime(p));
            prop_assert!(*e > 0);
        }
    }

    #[test]
    fn gcd_divides(a in any::<i64>(), b in any::<i64>()) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let g = a.gcd(&b);
        if !g.is_zero() {
            prop_assert!((&a % &g).is_zero());
            prop_assert!((&b % &g).is_zero());
        }
        prop_assert_eq!(a.gcd(&BigInt::zero()), num_traits::Signed::abs(&a));
    }

    #[test]
    fn rational_add_sub_roundtrip(p in any::<i32>(), q in 1i32.., r in any::<i32>(), s in 1i32..) {
        let x = Rational::new(p.into(), q.into());
        let y = Rational::new(r.into(), s.into());
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert!(x.denom() > &BigInt::zero());
        prop_assert!(x.numer().gcd(x.denom()).is_one());
    }
}
