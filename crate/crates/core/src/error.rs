use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Internal` marks violations of facts that are theorems for valid inputs
/// (e.g. μ-integrality); callers should treat it as a bug or corrupt input,
/// not a user error.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown generator: {0}")]
    UnknownGenerator(String),
    #[error("not a homology cylinder: augmented (A;B) not unimodular")]
    NotUnimodular,
    #[error("marking solve failed: {0}")]
    MarkingSolveFailed(String),
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(usize, usize),
    #[error("not in C[2]: sigma_2 is non-trivial where the canonical kernel pair is required")]
    NotInC2,
    #[error("endomorphism is not 2-connected (abelianization not in GL(n,Z))")]
    Not2Connected,
    #[error("matrix is not square")]
    NotSquare,
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("matrix is singular")]
    Singular,
    #[error("zero polynomial has no canonical form")]
    ZeroPolynomial,
    #[error("zero vector cannot be primitivized")]
    ZeroVector,
    #[error("change of variables requires a unimodular matrix")]
    NotUnimodularChange,
    #[error("entry not in K_psi[t^±]: denominator has positive t-degree")]
    NotInKpsi,
    #[error("gcd out of supported range: {0}")]
    GcdOutOfRange(String),
    #[error("unsupported corank: {0}")]
    UnsupportedCorank(usize),
    #[error("cocharacter is not primitive")]
    ImprimitivePsi,
    #[error("unsupported: non-free abelianization")]
    NonFreeAbelianization,
    #[error("malformed string-link data: {0}")]
    BadStringLink(String),
    #[error("delta bracket preconditions violated: {0}")]
    DeltaPrecondition(String),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
