use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("configuration points are not pairwise distinct")]
    NotDistinct,
    #[error("expected {expected} points, got {got}")]
    WrongPointCount { expected: usize, got: usize },
    #[error("curve is singular (4A^3 + 27B^2 = 0)")]
    SingularCurve,
    #[error("point is not on the curve")]
    OffCurve,
    #[error("the marked point Q is the point at infinity")]
    QAtInfinity,
    #[error("the marked point Q coincides with the origin after normalization")]
    QIsOrigin,
    #[error("differential scale c must be nonzero")]
    ZeroDifferential,
    #[error("closed-form root extraction supports degrees 1..=4, got {0}")]
    UnsupportedDegree(usize),
    #[error("numeric residual {residual:e} exceeds tolerance {tolerance:e}")]
    Tolerance { residual: f64, tolerance: f64 },
    #[error("required roots do not lie in the scalar field (try the float domain)")]
    NotInField,
    #[error("complex AGM did not converge within {0} iterations")]
    AgmNonConvergence(usize),
    #[error("free word has rank {got}, expected {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("letter {letter} out of range for rank/strands {bound}")]
    LetterOutOfRange { letter: i64, bound: usize },
    #[error("conjugation table incomplete: {0}")]
    TableIncomplete(String),
    #[error("abelianization of the automorphism does not match the SL2(Z) image of the B3 braid")]
    Sl2Mismatch,
    #[error("automorphism is not inner")]
    NotInner,
    #[error("lifted braid failed verification: {0}")]
    LiftVerification(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
