//! p-adic tools: Newton polygons, root counting in Z_p, orbit bounds.

mod newton;
mod orbits;
mod roots;

pub use newton::{newton_polygon, newton_polygon_rational, newton_polygon_shifted, NewtonPolygon, Segment};
pub use orbits::{orbit_constraints, subpartition_check, OrbitConstraint};
pub use roots::{roots_in_zp, roots_mod_p, squarefree_part, verify_witness, PadicRootReport, RootMethod, RootWitness, MAX_DISC_VALUATION};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PadicError {
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("polynomial is not monic")]
    NonMonicInput,
    #[error("discriminant valuation {disc_valuation} exceeds the search limit")]
    ResourceLimit { disc_valuation: u32 },
    #[error("partitions of {candidate} and {bound} cannot be compared")]
    SumMismatch { candidate: usize, bound: usize },
    #[error("refinement depth exceeded cap {0}")]
    DepthExceeded(u32),
}
