use thiserror::Error;

/// Every failure mode surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the inequality system has no solution")]
    Infeasible,
    #[error("the functional is unbounded above on the polyhedron")]
    UnboundedDirection,
    #[error("the polyhedron contains a line")]
    NotPointed,
    #[error("the polyhedron is unbounded")]
    Unbounded,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("recession cone is not a cone of the fan")]
    ConeNotInFan,
    #[error("coordinate stratum is not a cone of the fan")]
    StratumNotInFan,
    #[error("fan is not compatible with the Newton fan on the requested cone")]
    FanNotCompatible,
    #[error("tail bound does not certify the truncation on this domain")]
    CertificateInsufficient,
    #[error("point is not an isolated point of the intersection")]
    NotIsolated,
    #[error("point multiplicities on boundary strata are not supported")]
    BoundaryStratum,
    #[error("no admissible translation found after {attempts} attempts")]
    GenericityFailure { attempts: usize, log: Vec<String> },
    #[error("stable multiplicity differs between seeds: {0:?}")]
    WellDefinednessViolation(Vec<u64>),
    #[error("valuation cannot be realized: {0}")]
    UnrealizableValuation(String),
    #[error("the system does not have finitely many common zeros")]
    NotFinite,
    #[error("valuation pairing between elimination orders is ambiguous")]
    PairingAmbiguous,
    #[error("the linear system is degenerate")]
    DegenerateSystem,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
