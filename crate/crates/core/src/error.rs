use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A generalized Cartan matrix failed validation.
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("unknown or invalid finite type `{0}`")]
    UnknownType(String),

    #[error("simple index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("{0} requires a Cartan matrix of finite type")]
    NotFiniteType(&'static str),

    #[error("elements belong to Weyl groups of different Cartan matrices")]
    MixedGroups,

    #[error("word `{0}` is not reduced")]
    NotReduced(String),

    #[error("{v} is not below {w} in the Bruhat order")]
    NotBelow { v: String, w: String },

    #[error("Cartan matrix is singular")]
    Singular,

    #[error("{0} is undefined for zero")]
    Zero(&'static str),

    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    /// Something that mathematically cannot happen did; always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    /// Process exit code: 2 for invariant violations, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Invariant(_) => 2,
            _ => 1,
        }
    }
}
