use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A good index or bundle that does not fit the instance's good set.
    #[error("domain error: {0}")]
    Domain(String),

    /// A caller broke an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Exhaustive work requested beyond the configured limit.
    #[error("size limit exceeded: {0}")]
    Size(String),

    #[error("invalid document at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("unknown valuation class `{0}`")]
    UnknownClass(String),

    /// A state the algorithms' correctness arguments rule out.
    #[error("internal invariant broken: {0}")]
    Invariant(String),

    #[error("generator produced an instance outside its class: {0}")]
    GeneratorBug(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
