use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a group generator: generator {index} is not invertible")]
    NotAGroupGenerator { index: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("basis not permuted: generator {generator} sends basis vector {vector} outside the basis")]
    BasisNotPermuted { generator: usize, vector: usize },

    #[error("basis is not a basis of the ambient space")]
    NotABasis,

    #[error("subspace is not stable under the matrix")]
    UnstableSubspace,

    #[error("ambient dimension {0} exceeds the subspace enumeration bound of 8")]
    DimensionBoundExceeded(usize),

    #[error("{p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: usize },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("degree {0} exceeds the component cap of 25")]
    DegreeCapExceeded(u32),

    #[error("group action does not permute monomials")]
    NotMonomialAction,

    #[error("index {0} not invertible in characteristic 2")]
    EvenIndex(usize),

    #[error("polynomial is not invariant under generator {generator}")]
    NotInvariant { generator: usize },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown generator name `{0}`")]
    UnknownGenerator(String),

    #[error("degrees incompatible with free-module structure")]
    IncompatibleDegrees,

    #[error("negative coefficient in numerator")]
    NegativeCoefficient,

    #[error("wrong count: expected {expected} polynomials, found {found}")]
    WrongCount { expected: usize, found: usize },

    #[error("polynomial {index} is not homogeneous")]
    NotHomogeneous { index: usize },

    #[error("element {index} is not invariant under generator {generator}")]
    NonInvariantElement { index: usize, generator: usize },

    #[error("candidates do not generate a zero-dimensional ideal")]
    NotZeroDimensional,

    #[error("no hsop with these degrees among pool")]
    HsopSearchExhausted,

    #[error("no invariants of degree {0} in the pool")]
    EmptyPool(u32),

    #[error("hsop degrees inconsistent")]
    HsopDegreesInconsistent,

    #[error("no linear element in input")]
    NoLinearElement,

    #[error("arithmetic witness fails: {0}")]
    WitnessFails(String),

    #[error("freeness violated")]
    FreenessViolated,

    #[error("not in subring")]
    NotInSubring,

    #[error("secondary profile unsatisfiable in degree {0}")]
    ProfileUnsatisfiable(u32),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    #[error("generator images do not define a homomorphism")]
    NotHomomorphism,

    #[error("representation is not faithful")]
    NotFaithful,

    #[error("not a subgroup of the target group")]
    NotASubgroup,

    #[error("fixture error: {0}")]
    Fixture(String),
}
