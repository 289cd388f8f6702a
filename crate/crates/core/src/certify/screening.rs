//! Frobenius screening: factorization patterns modulo unramified primes must
//! be cycle-type tuples of the claimed group.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::claim::ClaimedGroup;
use crate::arith::primes_up_to;
use crate::poly::sieve::mod_p_partition;
use crate::poly::{IntPoly, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreeningReport {
    pub prime_bound: u64,
    pub primes_checked: usize,
    /// Primes dividing the bound, a leading coefficient, or a discriminant
    /// modulo p.
    pub primes_skipped: usize,
    /// Observed tuples with the number of primes showing each.
    pub observed: Vec<(Vec<Partition>, usize)>,
    /// First prime showing a tuple outside the claimed set, if any.
    pub violations: Vec<(u64, Vec<Partition>)>,
    /// Number of tuples the claimed group realizes; `None` without a claim.
    pub claimed_tuples: Option<usize>,
    /// Unramified primes where no factor has a root modulo p.
    pub rootless_primes: Vec<u64>,
}

impl ScreeningReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Tuple of mod-p degree partitions, skipping primes where any factor
/// drops degree or acquires a repeated factor.
pub fn frobenius_tuple(factors: &[IntPoly], p: u64) -> Option<Vec<Partition>> {
    factors.iter().map(|f| mod_p_partition(f, p)).collect()
}

/// Screen every prime up to `prime_bound` not dividing `bad`. With a claim,
/// each tuple is checked against the claimed set; violations are listed in
/// increasing order of p (at most 16).
pub fn frobenius_consistency(factors: &[IntPoly], claim: Option<&ClaimedGroup>, bad: &BigInt, prime_bound: u64) -> ScreeningReport {
    let allowed = claim.map(|c| c.cycle_type_tuples());
    let primes: Vec<u64> = primes_up_to(prime_bound).into_iter().filter(|&p| !bad.is_multiple_of(&BigInt::from(p))).collect();
    let results: Vec<(u64, Option<Vec<Partition>>)> = primes.par_iter().map(|&p| (p, frobenius_tuple(factors, p))).collect();
    let mut observed: BTreeMap<Vec<Partition>, usize> = BTreeMap::new();
    let mut violations = Vec::new();
    let mut rootless = Vec::new();
    let mut skipped = primes_up_to(prime_bound).len() - primes.len();
    let mut checked = 0;
    for (p, t) in results {
        let Some(t) = t else {
            skipped += 1;
            continue;
        };
        checked += 1;
        if t.iter().all(|part| !part.contains(&1)) {
            rootless.push(p);
        }
        if let Some(a) = allowed {
            if !a.contains(&t) && violations.len() < MAX_VIOLATIONS {
                violations.push((p, t.clone()));
            }
        }
        *observed.entry(t).or_default() += 1;
    }
    ScreeningReport {
        prime_bound,
        primes_checked: checked,
        primes_skipped: skipped,
        observed: observed.into_iter().collect(),
        violations,
        claimed_tuples: allowed.map(|a| a.len()),
        rootless_primes: rootless,
    }
}

const MAX_VIOLATIONS: usize = 16;
