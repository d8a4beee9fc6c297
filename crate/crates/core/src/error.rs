use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every way an operation can reject its input.
///
/// All variants are domain errors: the caller violated a documented
/// precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    #[error("{a} and {b} are not coprime (gcd = {gcd})")]
    NotCoprime { a: i64, b: i64, gcd: i64 },
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(i64),
    #[error("Jacobi symbol needs an odd positive modulus, got {0}")]
    JacobiModulus(i64),
    #[error("negative continued fraction needs 0 < q < p, got p = {p}, q = {q}")]
    ContFracRange { p: i64, q: i64 },
    #[error("lens space order p must be positive, got {0}")]
    LensOrder(i64),
    #[error("level r must be odd and at least 3, got {0}")]
    Level(i64),
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u64, u64),
    #[error("conductor {from} does not divide {to}")]
    EmbedConductor { from: u64, to: u64 },
    #[error("expected {expected} coefficients for conductor {conductor}, got {got}")]
    CoefficientCount {
        conductor: u64,
        expected: usize,
        got: usize,
    },
    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u64),
    #[error("Gauss sum needs an odd positive modulus, got {0}")]
    GaussModulus(i64),
    #[error(
        "xi_{r}(L({p},{q})) is zero: c = gcd(p, r) = {c} divides neither q* + 1 nor q* - 1"
    )]
    VanishingXi { p: i64, q: i64, r: i64, c: i64 },
    #[error("({p}, {q1}, {q2}) is not a tau-twin pair: {reason}")]
    NotTwinPair {
        p: i64,
        q1: i64,
        q2: i64,
        reason: &'static str,
    },
    #[error("search bound must be at least {min}, got {got}")]
    SearchBound { min: i64, got: i64 },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}
