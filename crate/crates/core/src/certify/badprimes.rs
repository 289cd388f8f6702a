//! Primes at which a family can degenerate to a prescribed factorization
//! shape: eliminate to an integer, factor it, then keep only primes where
//! the shape really occurs for some parameter value modulo p.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::CertifyError;
use crate::arith::{factor_integer, FactorBudget, FactoredInt};
use crate::poly::{eliminate_to_integers, shape_matches_mod_p, shape_system, EliminationOptions, ParamPoly, ShapeBlock};

/// Parameter tuples scanned per prime; above this a prime is kept unfiltered.
pub const MAX_SCAN: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadPrimeReport {
    pub blocks: Vec<ShapeBlock>,
    #[serde(with = "crate::arith::serde_dec")]
    pub eliminant: BigInt,
    pub factorization: FactoredInt,
    /// Primes kept after filtering, ascending, each with a parameter tuple
    /// realizing the shape (empty when the scan was skipped).
    pub primes: Vec<ShapeWitness>,
    /// Candidates for which no parameter value modulo p gives the shape.
    pub filtered_out: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeWitness {
    pub p: u64,
    pub params: Option<Vec<u64>>,
}

impl BadPrimeReport {
    pub fn prime_set(&self) -> Vec<u64> {
        self.primes.iter().map(|w| w.p).collect()
    }
}

/// Superset of the primes p for which f specializes, for some parameter
/// values in F_p, to lc(f) * prod C_j^{m_j}. Unknown coefficients of the
/// C_j are named a1, a2, ... in `order` (with the parameters of f).
pub fn bad_prime_superset_parametric(
    f: &ParamPoly,
    blocks: &[ShapeBlock],
    order: &[&str],
    opts: &EliminationOptions,
    budget: &FactorBudget,
) -> Result<BadPrimeReport, CertifyError> {
    let system = shape_system(f, blocks);
    let n = eliminate_to_integers(&system, order, opts)?;
    let fac = factor_integer(&n, budget);
    if !fac.is_complete() {
        return Err(CertifyError::IncompleteFactorization(fac.cofactor.to_string()));
    }
    let candidates: Vec<u64> =
        fac.primes().map(|p| p.to_u64().ok_or_else(|| CertifyError::IncompleteFactorization(p.to_string()))).collect::<Result<_, _>>()?;
    let scans: Vec<(u64, Option<Option<Vec<u64>>>)> = candidates.par_iter().map(|&p| (p, scan(f, blocks, p))).collect();
    let mut primes = Vec::new();
    let mut filtered_out = Vec::new();
    for (p, r) in scans {
        match r {
            Some(Some(t)) => primes.push(ShapeWitness { p, params: Some(t) }),
            Some(None) => filtered_out.push(p),
            None => primes.push(ShapeWitness { p, params: None }),
        }
    }
    Ok(BadPrimeReport { blocks: blocks.to_vec(), eliminant: n, factorization: fac, primes, filtered_out })
}

/// `Some(Some(values))` when the shape occurs, `Some(None)` when it occurs
/// for no values, `None` when the scan is too large.
fn scan(f: &ParamPoly, blocks: &[ShapeBlock], p: u64) -> Option<Option<Vec<u64>>> {
    let k = f.params().len() as u32;
    let total = p.checked_pow(k).filter(|&t| t <= MAX_SCAN)?;
    let names: Vec<&str> = f.params().iter().map(String::as_str).collect();
    for idx in 0..total {
        let mut vals = Vec::with_capacity(k as usize);
        let mut r = idx;
        for _ in 0..k {
            vals.push(r % p);
            r /= p;
        }
        let assignment: Vec<(&str, i64)> = names.iter().zip(&vals).map(|(n, &v)| (*n, v as i64)).collect();
        let Ok(g) = f.specialize_int(&assignment) else {
            continue;
        };
        if shape_matches_mod_p(&g, blocks, p) {
            return Some(Some(vals));
        }
    }
    Some(None)
}
