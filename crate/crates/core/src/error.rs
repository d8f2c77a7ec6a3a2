use thiserror::Error;

use crate::geometry::LatticePoint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ray generators must be nonzero")]
    ZeroRay,
    #[error("ray generators are collinear; the cone is not strongly convex and full-dimensional")]
    CollinearRays,
    #[error("input list is empty")]
    EmptyInput,
    #[error("region is unbounded: staircase minima do not match the threshold corner")]
    UnboundedRegion,
    #[error("generator {0} lies outside the cone")]
    GeneratorOutsideCone(LatticePoint),
    #[error("ideal is not saturated (H^0 of the quotient is nonzero)")]
    NotSaturated,
    #[error("no torsion order found up to {0}")]
    NotTorsionWithin(u64),
    #[error("ideal is not primary to the maximal ideal (thresholds are not both zero)")]
    NotMPrimary,
    #[error("doubled normalized Newton area {0} is not an integer")]
    NonIntegralMultiplicity(String),
    #[error("sequence of length {len} is too short for period {period} (need at least {needed})")]
    SequenceTooShort {
        len: usize,
        period: usize,
        needed: usize,
    },
    #[error("residue class {residue} does not stabilize to a quadratic")]
    NoStabilization { residue: usize },
    #[error("leading coefficients differ across residue classes ({0} vs {1})")]
    LeadingCoefficientMismatch(String, String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("Tor table is not symmetric at ({0}, {1})")]
    AsymmetricTable(usize, usize),
    #[error("{0} is not a prime")]
    NotPrime(u64),
}

impl Error {
    /// True for failures of guarantees the library itself is supposed to
    /// uphold, as opposed to rejected input.
    pub fn is_contract_violation(&self) -> bool {
        matches!(
            self,
            Error::UnboundedRegion
                | Error::NonIntegralMultiplicity(_)
                | Error::LeadingCoefficientMismatch(..)
        )
    }
}
