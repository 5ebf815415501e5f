use thiserror::Error;

/// Errors raised by the tournament model, the solvers and the constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("empty matrix")]
    Empty,
    #[error("diagonal entry ({0}, {0}) is set")]
    DiagonalSet(usize),
    #[error("pair ({0}, {1}) is not antisymmetric")]
    NotAntisymmetric(usize, usize),
    #[error("{n} vertices exceed the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("pair uses the same vertex {0} twice")]
    SameVertex(usize),
    #[error("operation needs at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("{n} vertices exceed the cap of {cap} for this mode")]
    TooLarge { n: usize, cap: usize },
    #[error("arc ({0}, {1}) is not present in the tournament")]
    ArcAbsent(usize, usize),
    #[error("cannot delete every vertex")]
    DeletesEverything,
    #[error("candidate module size {size} outside 2..={max}")]
    BadSize { size: usize, max: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not congruent to 3 mod 4")]
    WrongResidueClass(u64),
    #[error("tournament is not doubly regular")]
    NotDoublyRegular,
    #[error("tournament is not near-regular")]
    NotNearRegular,
    #[error("order {0} is not congruent to 2 mod 4")]
    WrongOrder(usize),
    #[error("partition does not match the out-degree classes of the tournament")]
    PartitionMismatch,
    #[error("separator conditions (C1)/(C2) are violated")]
    ConditionsViolated,
    #[error("one-vertex extension is not doubly regular: {0}")]
    ExtensionFailed(String),
    #[error("matrix invariant violated: {0}")]
    InvariantViolation(String),
    #[error("matrix is not normalized: {0}")]
    NotNormalized(String),
    #[error("wrong shape for this check: {0}")]
    WrongShape(String),
    #[error("exhaustive enumeration supports n <= {max}, got {n}")]
    TooLargeForExhaustive { n: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
