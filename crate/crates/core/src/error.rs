use thiserror::Error;

/// Errors raised by the lattice, cone, fan and derivation routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected rank {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("cone {0} is not strongly convex")]
    NotStronglyConvex(String),

    #[error("not a fan: cones {first} and {second} do not meet along a common face")]
    NotAFan { first: String, second: String },

    #[error("rays span a rank {span} sublattice of a rank {rank} lattice; split off the torus factor first")]
    RaysDoNotSpan { rank: usize, span: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("zero vector cannot generate a ray")]
    ZeroRay,

    #[error("{0} is not an extremal ray of the cone")]
    NotExtremalRay(String),

    #[error("cone has no extremal rays (torus semigroup)")]
    NoExtremalRays,

    #[error("degree {0} is not a root of the chosen ray")]
    NotARoot(String),

    #[error("integrity error: {0}")]
    Integrity(String),

    #[error("nilpotency cap of {cap} iterations exceeded")]
    NilpotencyCapExceeded { cap: usize },

    #[error("the torus has no homogeneous Ga-actions")]
    TorusHasNoGaActions,

    #[error("input fan is not quasi-affine: {0}")]
    NotQuasiAffine(String),

    #[error("no root found within radius {radius}; increase the radius")]
    NoRootFound { radius: i64 },

    #[error("internal error: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid fan document: {0}")]
    InvalidDocument(String),
}

impl Error {
    /// Input problems (malformed documents, invalid fans) as opposed to
    /// mathematical preconditions that a well-formed input failed.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::InvalidDocument(_)
                | Error::NotAFan { .. }
                | Error::NotStronglyConvex(_)
                | Error::DimensionMismatch { .. }
                | Error::ZeroRay
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
