use thiserror::Error;

/// Every failure the library reports. Identity failures found by the
/// verifiers are not errors; they come back as report entries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForgeError {
    #[error("space mismatch: expected {expected}, found {found}")]
    SpaceMismatch { expected: String, found: String },
    #[error("order mismatch: expected {expected}, found {found}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("{0} and {1} are not registered as dual spaces")]
    NoDual(String, String),
    #[error("index {index} out of range (bound {bound})")]
    IndexError { index: usize, bound: usize },
    #[error("tensor is not skew-symmetric")]
    NotSkew,
    #[error("ad_x r is not skew for basis vector {0}; the symmetric part is not ad-invariant")]
    NotCoboundarySkew(String),
    #[error("dual map of the cobracket is not a Lie bracket: {0}")]
    NotLieCobracket(String),
    #[error("cocycle condition fails on ({0}, {1})")]
    CocycleFailure(String, String),
    #[error("structure constants fail the Lie algebra axioms: {0}")]
    NotLieAlgebra(String),
    #[error("bilinear form is not a symmetric ad-invariant form: {0}")]
    FormNotInvariant(String),
    #[error("r-matrix is not quasitriangular")]
    NotQuasitriangular,
    #[error("the double has not been built for this algebra")]
    DoubleNotBuilt,
    #[error("tensor is not a twisting element")]
    NotTwist,
    #[error("ambient space is not a registered direct sum")]
    NotDirectSum,
    #[error("internal convention check failed: {0}")]
    ConventionViolation(String),
    #[error("cobracket of the r-matrix differs from the given cobracket")]
    CobracketMismatch,
    #[error("subspace is not closed under the bracket and cobracket: {0}")]
    NotSubBialgebra(String),
    #[error("charts differ: {0} vs {1}")]
    ChartMismatch(String, String),
    #[error("image is not skew and cannot be stored as a multivector field")]
    NotSkewForStorage,
    #[error("symmetric part of r acts nontrivially")]
    SymmetricPartActs,
    #[error("not a Poisson action: {0}")]
    NotPoissonAction(String),
    #[error("not an action: {0}")]
    NotAnAction(String),
    #[error("invariant form on the Cartan subalgebra is degenerate")]
    DegenerateCartanForm,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at {field}: {message}")]
    Parse { field: String, message: String },
    #[error("unknown manifest version {0}")]
    UnknownVersion(u64),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, ForgeError>;
