//! Orbit-length bounds for decomposition and inertia groups read off a
//! factorization modulo p.

use serde::{Deserialize, Serialize};

use super::PadicError;
use crate::poly::sieve::{normalize_partition, refines, Partition};
use crate::poly::{FactorizationModP, FiniteField};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitConstraint {
    /// [n_i * k_i] for each irreducible factor of degree n_i and multiplicity k_i.
    pub decomposition_bound: Partition,
    /// k_i repeated n_i times.
    pub inertia_bound: Partition,
}

impl OrbitConstraint {
    pub fn degree(&self) -> usize {
        self.decomposition_bound.iter().sum()
    }

    /// Whether an orbit partition is compatible with the decomposition group bound.
    pub fn admits_decomposition_orbits(&self, orbits: &[usize]) -> Result<bool, PadicError> {
        subpartition_check(orbits, &self.decomposition_bound)
    }
}

pub fn orbit_constraints<F: FiniteField>(fac: &FactorizationModP<F>) -> OrbitConstraint {
    let mut dec = Vec::new();
    let mut ine = Vec::new();
    for (g, k) in &fac.factors {
        let n = g.degree().unwrap_or(0);
        let k = *k as usize;
        dec.push(n * k);
        ine.extend(std::iter::repeat(k).take(n));
    }
    OrbitConstraint { decomposition_bound: normalize_partition(dec), inertia_bound: normalize_partition(ine) }
}

/// True iff every part of `bound` is a disjoint sum of parts of `candidate`.
pub fn subpartition_check(candidate: &[usize], bound: &[usize]) -> Result<bool, PadicError> {
    let a: usize = candidate.iter().sum();
    let b: usize = bound.iter().sum();
    if a != b {
        return Err(PadicError::SumMismatch { candidate: a, bound: b });
    }
    Ok(refines(candidate, bound))
}
