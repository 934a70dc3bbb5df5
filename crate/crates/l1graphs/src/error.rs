use crate::conditions::FamilyKWitness;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An input value is outside the operation's domain (bad vertex index,
    /// overlapping sets, malformed sequence, ...).
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A stated precondition of the operation does not hold for this input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Input exceeds a configured size cap for an exponential-time operation.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// The graph lies in the exception family and the requested structure
    /// does not exist; the witness certifies membership.
    #[error("graph is in the exception family K (p = {})", witness.p)]
    ExceptionFamily { witness: FamilyKWitness, message: String },

    /// A guaranteed-by-theorem step failed; indicates a bug in a hypothesis
    /// check or in the search itself.
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
