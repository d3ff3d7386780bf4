//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("divergent integral: {0}")]
    Divergence(String),
    #[error("inconsistent parameters: {0}")]
    Inconsistent(String),
    #[error("degenerate contact: {0}")]
    DegenerateContact(String),
    #[error("scan failure: {0}")]
    ScanFailure(String),
    #[error("bracket error: {0}")]
    Bracket(String),
    #[error("assembly error: {0}")]
    Assembly(String),
    #[error("solver did not converge: {0}")]
    NonConvergence(String),
    #[error("resolution error: {0}")]
    Resolution(String),
    #[error("window error: {0}")]
    Window(String),
    #[error("construction error: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
