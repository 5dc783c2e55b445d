use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring spec error: {0}")]
    RingSpec(String),
    #[error("ring axiom violations: {}", .0.join("; "))]
    RingAxioms(Vec<String>),
    #[error("module validation error: {0}")]
    Module(String),
    #[error("operands live over different rings")]
    RingMismatch,
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("not a submodule: {0}")]
    NotSubmodule(String),
    #[error("submodule is not fully invariant: {0}")]
    NotFullyInvariant(String),
    #[error("{0} is not a two-sided ideal")]
    NotIdeal(String),
    #[error("config error at {path}: {msg}")]
    Config { path: String, msg: String },
    #[error("unknown object: {0}")]
    UnknownObject(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
