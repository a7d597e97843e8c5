use std::fmt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("generator `{generator}` is not allowed in {context}")]
    Disallowed { generator: String, context: String },

    #[error("semantics {semantics} is not applicable to fragment {fragment}")]
    Inapplicable { semantics: String, fragment: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("no match: {0}")]
    NoMatch(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    /// An internal invariant failed; this indicates a bug, not bad input.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Arity,
    UnknownGenerator,
    Polynomial,
}

/// A parse failure with a 1-based line/column position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn at(kind: ParseErrorKind, src: &str, offset: usize, message: impl Into<String>) -> Self {
        let offset = offset.min(src.len());
        let before = &src[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(offset, |i| offset - i - 1) + 1;
        ParseError { kind, offset, line, column, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::Arity => "arity mismatch",
            ParseErrorKind::UnknownGenerator => "unknown generator",
            ParseErrorKind::Polynomial => "malformed polynomial",
        };
        write!(f, "{kind} at {}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}
