//! Error type shared by every module of the crate.

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced while parsing documents, validating presentations, and
/// running the construction pipelines.
///
/// Rule-of-thumb for callers: anything in here is a *module* error (the CLI
/// maps it to exit status 1); command-line usage mistakes are handled by the
/// argument parser and never reach this type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The input document is not syntactically well formed.
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        /// 1-based line of the first offending character.
        line: usize,
        /// 1-based column of the first offending character.
        column: usize,
        /// Parser diagnostic.
        message: String,
    },

    /// A vertex or arrow name was declared more than once.
    #[error("duplicate {kind} name `{name}`")]
    Duplicate {
        /// `"vertex"` or `"arrow"`.
        kind: &'static str,
        /// The repeated name.
        name: String,
    },

    /// A reference to an undeclared vertex, arrow, or unknown.
    #[error("unknown {kind} `{name}` {context}")]
    UnknownReference {
        /// `"vertex"`, `"arrow"`, or `"unknown"`.
        kind: &'static str,
        /// The unresolved name.
        name: String,
        /// Where the reference occurred.
        context: String,
    },

    /// An identifier does not have the required shape.
    #[error(
        "invalid {kind} name `{name}`: names must match [A-Za-z_][A-Za-z0-9_]* \
         (vertex names may also be purely numeric)"
    )]
    BadIdentifier {
        /// `"vertex"` or `"arrow"`.
        kind: &'static str,
        /// The offending name.
        name: String,
    },

    /// The presentation fails the string-algebra conditions.
    #[error("not a string algebra:\n{report}")]
    InvalidPresentation {
        /// One line per violated condition, with witnesses.
        report: String,
    },

    /// Explicitly provided sign maps violate a compatibility condition.
    #[error("sign maps violate condition ({condition}): {detail}")]
    SignCondition {
        /// Which of the three conditions failed (1, 2, or 3).
        condition: u8,
        /// Witness pair and values.
        detail: String,
    },

    /// No sign assignment satisfies the constraints.
    #[error("no valid sign assignment exists; odd constraint cycle: {cycle}")]
    UnsatisfiableSigns {
        /// The conflicting constraint cycle, one constraint per segment.
        cycle: String,
    },

    /// Provided sign maps do not cover the arrow set exactly.
    #[error("sign maps must assign every declared arrow exactly once: {detail}")]
    IncompleteSignMaps {
        /// Missing or extraneous arrow names.
        detail: String,
    },

    /// A syllable word is not a valid string for the algebra.
    #[error("not a string: {detail}")]
    NotAString {
        /// Which condition failed and where.
        detail: String,
    },

    /// Order comparison was requested for strings of different hammocks.
    #[error("strings are not comparable: {detail}")]
    NotComparable {
        /// Source vertices / signs of the two operands.
        detail: String,
    },

    /// A band-valued argument is not a band, or is anchored at the wrong vertex.
    #[error("not a usable band here: {detail}")]
    InvalidBand {
        /// Which band condition failed.
        detail: String,
    },

    /// An internal consistency assertion failed; indicates corrupted input
    /// state rather than a user mistake.
    #[error("internal invariant violated: {detail}")]
    Invariant {
        /// Description of the broken invariant.
        detail: String,
    },

    /// Underlying I/O failure (reading an input document).
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Wraps a `serde_json` error with its source position.
    pub(crate) fn from_json(err: &serde_json::Error) -> Self {
        Error::Syntax { line: err.line(), column: err.column(), message: err.to_string() }
    }
}
