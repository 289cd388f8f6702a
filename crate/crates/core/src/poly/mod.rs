//! Polynomials over Z, Q and finite fields; resultants, factorization,
//! parametric families and elimination.

pub mod eliminate;
pub mod factor_fq;
pub mod field;
pub mod fq;
pub mod int;
pub mod mpoly;
pub mod resultant;
pub mod sieve;
pub mod zassenhaus;

pub use eliminate::{eliminate, eliminate_to_integers, shape_matches_mod_p, shape_system, EliminationOptions, ShapeBlock, System};
pub use factor_fq::FactorizationModP;
pub use field::{BigPrimeField, FiniteField, SmallField};
pub use fq::FqPoly;
pub use int::{IntPoly, PolyFile, QPoly};
pub use mpoly::{parse_int_poly, parse_mpoly, parse_rational_poly, MPoly, ParamPoly, ParamPolyFile};
pub use resultant::{discriminant, resultant};
pub use sieve::{degree_partition_sieve, refines, Partition};
pub use zassenhaus::{factor_over_z, IntFactorization};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial vanishes modulo {0}")]
    ZeroModP(u64),
    #[error("{0} is not a supported prime power")]
    BadFieldOrder(u64),
    #[error("leading coefficient vanishes modulo {0}")]
    LeadingCoefficientVanishes(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no value given for parameter {0}")]
    MissingParameter(String),
    #[error("unknown parameter {0}")]
    UnknownParameter(String),
    #[error("specialization has a non-integral coefficient {0}")]
    NonIntegralSpecialization(String),
    #[error("parametric polynomials have different parameter lists")]
    ParameterMismatch,
    #[error("empty system")]
    EmptySystem,
    #[error("every resultant chain vanished identically; try another variable order")]
    DegenerateElimination,
    #[error("elimination blow-up while {step}: {terms} terms")]
    ElimBlowup { step: String, terms: usize },
}

/// Factor an integer polynomial over F_q (q = p^k).
pub fn factor_mod_p(f: &IntPoly, q: u64, seed: u64) -> Result<FactorizationModP<SmallField>, PolyError> {
    let field = SmallField::of_order(q).ok_or(PolyError::BadFieldOrder(q))?;
    let fp = FqPoly::from_int_poly(f, &field);
    if fp.is_zero() {
        return Err(PolyError::ZeroModP(field.p()));
    }
    if fp.degree() != f.degree() {
        return Err(PolyError::LeadingCoefficientVanishes(field.p()));
    }
    Ok(factor_fq::factor(&fp, seed))
}
