use thiserror::Error;

/// Errors raised while building, compiling, loading, or running networks.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{op} requires a language operand, got a relation{}", at(*.position))]
    NonLanguageOperand { op: &'static str, position: Option<usize> },

    #[error("replacement operand uses the reserved context marker `{symbol}`")]
    ReservedSymbolInOperand { symbol: String },

    #[error("{0}")]
    Unsupported(String),

    #[error("dangling escape at offset {position}")]
    DanglingEscape { position: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("invalid symbol `{text}` at offset {position}")]
    InvalidSymbol { text: String, position: usize },

    #[error("unbalanced bracket at offset {position}")]
    UnbalancedBracket { position: usize },

    #[error("unexpected {found} at offset {position}")]
    MisplacedOperator { found: String, position: usize },

    #[error("context at offset {position} has no `_`")]
    MissingContextUnderscore { position: usize },

    #[error("more than one context at offset {position}")]
    MultipleContexts { position: usize },

    #[error("undefined name `{name}` on line {line}")]
    UndefinedName { name: String, line: usize },

    #[error("`{name}` is already defined (line {line})")]
    Redefinition { name: String, line: usize },

    #[error("line {line}: {message}")]
    Script { line: usize, message: String },

    #[error("malformed network text on line {line}: {message}")]
    Format { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn at(position: Option<usize>) -> String {
    position.map(|p| format!(" at offset {p}")).unwrap_or_default()
}

impl Error {
    /// Short machine-readable category used in `error:<category>:` lines.
    pub fn category(&self) -> &'static str {
        match self {
            Error::NonLanguageOperand { .. }
            | Error::ReservedSymbolInOperand { .. }
            | Error::Unsupported(_) => "compile",
            Error::DanglingEscape { .. } | Error::EmptyInput | Error::InvalidSymbol { .. } => "lex",
            Error::UnbalancedBracket { .. }
            | Error::MisplacedOperator { .. }
            | Error::MissingContextUnderscore { .. }
            | Error::MultipleContexts { .. } => "parse",
            Error::UndefinedName { .. } | Error::Redefinition { .. } => "name",
            Error::Script { .. } => "script",
            Error::Format { .. } => "format",
            Error::Io(_) => "io",
        }
    }

    /// Process exit code: 2 for I/O failures, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 2,
            _ => 1,
        }
    }

    pub(crate) fn with_position(self, pos: usize) -> Error {
        match self {
            Error::NonLanguageOperand { op, position: None } => {
                Error::NonLanguageOperand { op, position: Some(pos) }
            }
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
