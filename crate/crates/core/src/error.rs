use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration cap of {cap} elements exceeded")]
    CapExceeded { cap: usize },

    #[error("elements do not generate the group: closure has {closure} of {order} elements")]
    NotGenerating { closure: u128, order: u128 },

    #[error("subgroup is not normal: conjugate of {element} by {by} leaves it")]
    NotNormal { element: String, by: String },

    #[error("generator map does not extend to a homomorphism")]
    NotAHomomorphism,

    #[error("generator map extends to a homomorphism that is not bijective")]
    NotBijective,

    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("out of scope: {0}")]
    OutOfScope(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
