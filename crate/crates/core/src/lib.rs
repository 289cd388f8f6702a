//! Exact algebra for certifying that a product of integer polynomials has a
//! root in every p-adic field, together with the permutation-group checks
//! (coverings by conjugates of subgroups) that justify such certificates.

pub mod arith;
pub mod certify;
pub mod families;
pub mod padic;
pub mod permgrp;
pub mod poly;

pub use arith::{BigInt, FactoredInt, Rational};
pub use poly::{FactorizationModP, IntPoly, ParamPoly};
