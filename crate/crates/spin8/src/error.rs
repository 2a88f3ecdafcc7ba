//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A Weyl word used a letter that the relative datum does not have.
    #[error("letter {letter} out of range for a relative datum of rank {rank}")]
    LetterOutOfRange { letter: u8, rank: usize },

    /// The character kind cannot be attached to this étale cubic algebra.
    #[error("character `{tag}` is not admissible for algebra `{etype}`")]
    IncompatibleTag { etype: String, tag: String },

    /// A rational literal could not be parsed.
    #[error("malformed rational `{0}` (expected p/q with q != 0)")]
    ParseRational(String),

    /// A name on the command line or in a file was not recognised.
    #[error("unknown {kind} `{value}`")]
    UnknownName { kind: &'static str, value: String },

    /// A multi-parameter product does not split into independent univariate pieces.
    #[error("product does not factor into independent linear forms: {0}")]
    NonFactoring(String),

    /// A factor is singular or identically zero at the evaluation point.
    #[error("degenerate factor at the evaluation point: {0}")]
    Degenerate(String),

    /// The requested configuration lies outside what the engine models.
    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    /// A parabolic letter set was invalid.
    #[error("invalid parabolic: {0}")]
    InvalidParabolic(String),

    /// The two words are not related by a length-additive right factor.
    #[error("{0} is not a length-additive right multiple of {1}")]
    NotLengthAdditive(String, String),

    /// A place profile or dotted set was inadmissible or unreadable.
    #[error("place data: {0}")]
    Places(String),

    /// Reading or parsing an input file failed.
    #[error("input: {0}")]
    Input(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
