//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors reported by validation, searches and numeric certification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Structurally invalid input (bad basis, letter out of range,
    /// non-unimodular Seifert pairing, inconsistent tuple, ...).
    Invalid(String),
    /// A bounded search ran out of candidates.
    SearchExhausted(String),
    /// A sign or root could not be certified even after precision
    /// escalation.
    Precision(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
    pub fn exhausted(msg: impl Into<String>) -> Self {
        Error::SearchExhausted(msg.into())
    }
    pub fn precision(msg: impl Into<String>) -> Self {
        Error::Precision(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Invalid(m) => write!(f, "invalid input: {m}"),
            Error::SearchExhausted(m) => write!(f, "search exhausted: {m}"),
            Error::Precision(m) => write!(f, "precision failure: {m}"),
        }
    }
}
