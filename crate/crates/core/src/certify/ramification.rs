//! The integer ∏ disc(f_i) · ∏_{i<j} res(f_i, f_j) and its prime support.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::CertifyError;
use crate::arith::{factor_integer, FactorBudget, FactoredInt};
use crate::poly::{discriminant, resultant, IntPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationData {
    #[serde(with = "crate::arith::serde_dec::vec")]
    pub discriminants: Vec<BigInt>,
    /// Resultants for pairs i < j, in lexicographic pair order.
    #[serde(with = "crate::arith::serde_dec::vec")]
    pub resultants: Vec<BigInt>,
    pub discriminant_factorizations: Vec<FactoredInt>,
    pub resultant_factorizations: Vec<FactoredInt>,
    /// Whether every discriminant was factored completely.
    pub complete: bool,
    /// Primes that receive per-prime evidence, ascending.
    #[serde(with = "crate::arith::serde_dec::vec")]
    pub primes: Vec<BigInt>,
    /// Unfactored parts of resultants, coprime to every discriminant.
    #[serde(with = "crate::arith::serde_dec::vec")]
    pub unramified_cofactors: Vec<BigInt>,
}

impl RamificationData {
    pub fn bound(&self) -> BigInt {
        self.discriminants.iter().chain(&self.resultants).fold(BigInt::one(), |a, b| a * b)
    }

    pub fn disc_primes(&self) -> Vec<BigInt> {
        let mut v: Vec<BigInt> = self.discriminant_factorizations.iter().flat_map(|f| f.primes().cloned()).collect();
        v.sort();
        v.dedup();
        v
    }
}

/// The bound itself and its factorization.
pub fn ramification_bound(factors: &[IntPoly], budget: &FactorBudget) -> Result<(BigInt, FactoredInt), CertifyError> {
    let (discs, ress) = invariants(factors)?;
    let n = discs.iter().chain(&ress).fold(BigInt::one(), |a, b| a * b);
    let fac = factor_integer(&n, budget);
    Ok((n, fac))
}

fn invariants(factors: &[IntPoly]) -> Result<(Vec<BigInt>, Vec<BigInt>), CertifyError> {
    let mut discs = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        if f.degree().unwrap_or(0) == 0 {
            return Err(CertifyError::ConstantFactor(i));
        }
        let d = discriminant(f);
        if d.is_zero() {
            return Err(CertifyError::NotSquarefree(i));
        }
        discs.push(d);
    }
    let mut ress = Vec::new();
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            let r = resultant(&factors[i], &factors[j]);
            if r.is_zero() {
                return Err(CertifyError::SharedFactor(i, j));
            }
            ress.push(r);
        }
    }
    Ok((discs, ress))
}

/// Factor discriminants with the full budget and resultants with the
/// reduced one. Primes dividing a resultant but no discriminant are
/// unramified, so an unfactored resultant part is only recorded.
pub fn ramification_data(
    factors: &[IntPoly],
    budget: &FactorBudget,
    resultant_budget: &FactorBudget,
) -> Result<RamificationData, CertifyError> {
    let (discs, ress) = invariants(factors)?;
    let dfac: Vec<FactoredInt> = discs.iter().map(|d| factor_integer(d, budget)).collect();
    let complete = dfac.iter().all(FactoredInt::is_complete);
    let mut primes: Vec<BigInt> = dfac.iter().flat_map(|f| f.primes().cloned()).collect();
    let mut rfac = Vec::new();
    let mut cofactors = Vec::new();
    for r in &ress {
        // Remove the primes already known from discriminants first.
        let mut rest = r.abs();
        for p in &primes {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        let f = factor_integer(&rest, resultant_budget);
        primes.extend(f.primes().cloned());
        if !f.cofactor.is_one() {
            let mut c = f.cofactor.clone();
            for d in &discs {
                let g = c.gcd(d);
                if !g.is_one() {
                    // A shared part would be ramified; keep it visible.
                    c = g;
                    break;
                }
            }
            cofactors.push(c);
        }
        rfac.push(factor_integer(r, resultant_budget));
    }
    primes.sort();
    primes.dedup();
    Ok(RamificationData {
        discriminants: discs,
        resultants: ress,
        discriminant_factorizations: dfac,
        resultant_factorizations: rfac,
        complete,
        primes,
        unramified_cofactors: cofactors,
    })
}
