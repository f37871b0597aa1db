use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failure modes across the crate.
///
/// Variants are grouped by what a caller can do about them: algebraic
/// preconditions (the input polynomial or interval is unsuitable), domain
/// errors (the parameter point does not support the requested wave), and
/// numerical failures (quadrature did not reach tolerance).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomial is not squarefree on the requested interval")]
    NotSquarefree,
    #[error("interval endpoints do not bracket a sign change")]
    NoSignChange,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} is too low (need at least {required})")]
    DegreeTooLow { degree: usize, required: usize },
    #[error("variable `{0}` does not occur in the polynomial ring")]
    UnknownVariable(String),
    #[error("exact division left a nonzero remainder")]
    InexactDivision,
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("polynomial still depends on `{0}`")]
    NotUnivariate(String),
    #[error("parse error: {0}")]
    Parse(String),

    #[error("parameter point is not admissible: {0}")]
    NotAdmissible(String),
    #[error("parameter point lies on a boundary curve: {0}")]
    OnBoundary(String),
    #[error("wrong parameter region: {0}")]
    WrongRegion(String),
    #[error("critical point is degenerate: {0}")]
    DegenerateCritical(String),
    #[error("no crest on the required side of the singular line")]
    NoCrest,
    #[error("radicand is negative at u = {0}")]
    NegativeRadicand(String),
    #[error("u lies on the singular line and h != F(ubar)")]
    OnSingularLine,
    #[error("level h is outside the range of periodic orbits: {0}")]
    LevelOutOfRange(String),
    #[error("compacton polynomial p has a repeated root")]
    RepeatedRootInP,
    #[error("compacton polynomial p vanishes at the singular line")]
    PNotPositive,
    #[error("T1 - T2 does not change sign along the search path")]
    NoSignChangeOnPath,
    #[error("parameters do not satisfy A = -B^2/2 with B != 0")]
    NotPeakonParams,

    #[error("quadrature failed to converge: {0}")]
    QuadratureFailure(String),

    #[error("identity `{name}` failed at {witness}")]
    IdentityFailed { name: String, witness: String },
}

impl Error {
    /// Domain errors concern the parameter point rather than the numerics.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::NotAdmissible(_)
                | Error::OnBoundary(_)
                | Error::WrongRegion(_)
                | Error::DegenerateCritical(_)
                | Error::NoCrest
                | Error::LevelOutOfRange(_)
                | Error::RepeatedRootInP
                | Error::PNotPositive
                | Error::NoSignChangeOnPath
                | Error::NotPeakonParams
                | Error::NegativeRadicand(_)
                | Error::OnSingularLine
        )
    }

    pub fn is_numeric(&self) -> bool {
        matches!(self, Error::QuadratureFailure(_))
    }
}
