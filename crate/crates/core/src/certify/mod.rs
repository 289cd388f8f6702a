//! Certificates that a product of irreducible integer polynomials has a
//! root in every Q_p.
//!
//! Ramified primes get direct p-adic evidence. Unramified primes are
//! discharged either unconditionally (a linear factor, or quadratic factors
//! whose discriminants multiply to a square) or by a covering of the
//! claimed Galois group, in which case the verdict says so.

mod badprimes;
mod certificate;
mod claim;
mod evidence;
mod ramification;
mod screening;

pub use badprimes::{bad_prime_superset_parametric, BadPrimeReport, ShapeWitness, MAX_SCAN};
pub use certificate::{certify_intersective, verify_certificate, CertifyOptions, IntersectivityCertificate, UnramifiedArgument, Verdict};
pub use claim::{ClaimSummary, ClaimedGroup};
pub use evidence::{certify_prime, linear_edge, monic_transform, verify_evidence, Evidence, ExhaustedFactor, PolygonHint, PrimeEvidence};
pub use ramification::{ramification_bound, ramification_data, RamificationData};
pub use screening::{frobenius_consistency, frobenius_tuple, ScreeningReport};

use thiserror::Error;

use crate::padic::PadicError;
use crate::permgrp::PermError;
use crate::poly::PolyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("factor {0} is not square-free")]
    NotSquarefree(usize),
    #[error("factors {0} and {1} share a root")]
    SharedFactor(usize, usize),
    #[error("factor {0} is constant")]
    ConstantFactor(usize),
    #[error("factor {0} is reducible over Q")]
    IrreducibilityFailure(usize),
    #[error("no factors given")]
    NoFactors,
    #[error("integer factorization left the cofactor {0}")]
    IncompleteFactorization(String),
    #[error("claimed group does not fit the factors: {0}")]
    ClaimMismatch(String),
    #[error(transparent)]
    Group(#[from] PermError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Padic(#[from] PadicError),
}
