use std::path::PathBuf;

/// Process exit codes. 0 is success.
pub mod exit {
    /// A checked property, inequality or per-row verdict failed.
    pub const PROPERTY_FAILURE: i32 = 1;
    /// Bad flags or parameters.
    pub const USAGE: i32 = 2;
    /// An input file is missing or an output file cannot be written.
    pub const FILE: i32 = 3;
    /// An input file does not parse or fails validation.
    pub const INPUT: i32 = 4;
    /// The engine rejected valid inputs (degenerate, non-orthogonal, ...).
    pub const ENGINE: i32 = 5;
}

#[derive(Debug, thiserror::Error)]
pub enum KitError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{}: file not found", .0.display())]
    FileNotFound(PathBuf),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: parse error: {message}", path.display())]
    Parse { path: PathBuf, message: String },
    #[error("{}: invalid {what}: {source}", path.display())]
    Invalid {
        path: PathBuf,
        what: &'static str,
        #[source]
        source: ur_core::Error,
    },
    #[error(transparent)]
    Engine(#[from] ur_core::Error),
}

impl KitError {
    pub fn exit_code(&self) -> i32 {
        match self {
            KitError::Usage(_) | KitError::Engine(ur_core::Error::InvalidParameters(_)) => exit::USAGE,
            KitError::FileNotFound(_) | KitError::Io { .. } => exit::FILE,
            KitError::Parse { .. } | KitError::Invalid { .. } => exit::INPUT,
            KitError::Engine(_) => exit::ENGINE,
        }
    }
}

pub type Result<T> = std::result::Result<T, KitError>;
