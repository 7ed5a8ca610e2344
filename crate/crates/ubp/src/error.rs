use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
	#[error("invalid argument: {0}")]
	Argument(String),
	#[error("parse error: {0}")]
	Parse(String),
	#[error("{what} needs k = {k}, above the configured limit {limit} (raise it with --max-k or UBP_MAX_K)")]
	Resource { what: &'static str, k: usize, limit: usize },
	#[error("check failed: {0}")]
	Check(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
	Err(Error::Argument(msg.into()))
}

pub(crate) fn parse<T>(msg: impl Into<String>) -> Result<T> {
	Err(Error::Parse(msg.into()))
}
