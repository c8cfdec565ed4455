use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error in `{field}`: {message}")]
    Schema { field: String, message: String },
    #[error("unknown command: {0}")]
    UnknownCommand(String),
    #[error("unknown fixture {name:?}; known fixtures: {known}")]
    UnknownFixture { name: String, known: String },
    #[error("invalid bicharacter: {0}")]
    InvalidBicharacter(String),
    #[error("space of dimension {dim} exceeds --max-dim {max}")]
    TooLarge { dim: usize, max: usize },
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Math(String),
    #[error("axiom (h) as printed uses the unbound symbol `z`; use --h-form corrected")]
    UnboundSymbol,
}

impl CliError {
    /// Short machine-readable name.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "ParseError",
            CliError::Schema { .. } => "SchemaError",
            CliError::UnknownCommand(_) => "UnknownCommand",
            CliError::UnknownFixture { .. } => "UnknownFixture",
            CliError::InvalidBicharacter(_) => "InvalidBicharacter",
            CliError::TooLarge { .. } => "TooLarge",
            CliError::Usage(_) => "UsageError",
            CliError::Io { .. } => "IoError",
            CliError::Math(_) => "InputError",
            CliError::UnboundSymbol => "UnboundSymbol",
        }
    }
}
