use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The number of blown-up points is outside `1..=8`.
    #[error("unsupported surface: r = {0}, expected 1 <= r <= 8")]
    UnsupportedSurface(i64),

    /// The r = 8 classification has not been validated against a reference list.
    #[error("classification for r = 8 is unvalidated; opt in explicitly to use it")]
    UnvalidatedRange,

    #[error("class has {found} multiplicities but the surface blows up {expected} points")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid class text at token `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("integer overflow in lattice arithmetic")]
    Overflow,

    /// β² + K·β came out odd, which no honest lattice vector can produce.
    #[error("adjunction parity violated for class {0}")]
    Parity(String),

    #[error("{class} is not a root: self-intersection {self_int}, K-degree {k_degree}")]
    InvalidRoot {
        class: String,
        self_int: i64,
        k_degree: i64,
    },

    #[error("class {0} has no smooth rational representative")]
    NotSmoothRational(String),

    #[error("table horizon must be at least 1, got {0}")]
    TableHorizon(i64),

    #[error("orbit exceeded the cap of {cap} elements ({count} found so far)")]
    OrbitCap { cap: usize, count: usize },
}
