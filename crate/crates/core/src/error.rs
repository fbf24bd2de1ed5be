use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("node with {0} children; only binary nodes are allowed here")]
    NonBinary(usize),
    #[error("address {0} does not resolve in this tree")]
    BadAddress(String),
    #[error("inadmissible cut: {0}")]
    InadmissibleCut(String),
    #[error("elementary cut at the root; use quotient instead")]
    RootCut,
    #[error("empty forest")]
    EmptyForest,
    #[error("arity mismatch: expected {expected} parts, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("outside the merge domain: {0}")]
    Domain(String),
    #[error("{0} licensee candidates where exactly one is required")]
    Ambiguous(usize),
    #[error("invalid head function: {0}")]
    HeadFunction(String),
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
    #[error("config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
