use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group order {0}: must be at least 1")]
    InvalidOrder(usize),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not a group action: {0}")]
    NotAnAction(String),
    #[error("poset structure: {0}")]
    Structure(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("order violation: {0}")]
    Order(String),
    #[error("malformed element: {0}")]
    MalformedElement(String),
    #[error("invalid morphism: {0}")]
    Morphism(String),
    #[error("unsupported case: {0}")]
    Unsupported(String),
    #[error("size cap of {cap} exceeded while {context}")]
    Resource { cap: usize, context: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
