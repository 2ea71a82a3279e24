use thiserror::Error;

/// Which zonal component of a candidate interaction vanished.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroLeg {
    /// `n1 = 0`
    Source,
    /// `x = 0`
    Partner,
    /// `n1 - x = 0`
    Complement,
}

impl std::fmt::Display for ZeroLeg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ZeroLeg::Source => "n1",
            ZeroLeg::Partner => "x",
            ZeroLeg::Complement => "n1 - x",
        })
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dispersion surrogate undefined at the zero wavenumber")]
    ZeroVector,

    #[error("trivial interaction: zonal component {0} is zero")]
    TrivialInteraction(ZeroLeg),

    #[error("zonal component must be nonzero, got {0}")]
    ZeroZonal(String),

    #[error("({n1},{n2}) and ({k1},{k2}) are not resonant")]
    NotResonant {
        n1: String,
        n2: String,
        k1: String,
        k2: String,
    },

    #[error("malformed triad: {0}")]
    MalformedTriad(String),

    #[error("family member m={m}, l={l} failed the exact resonance check")]
    FamilyViolation { m: i64, l: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integer overflow in fixed-width arithmetic")]
    Overflow,

    #[error("invalid fraction literal {0:?}")]
    ParseFraction(String),

    #[error("cache/result file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
