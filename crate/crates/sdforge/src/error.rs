use std::fmt;
use std::io;
use std::path::{Path, PathBuf};

/// Errors from file formats and the command line.
#[derive(Debug)]
pub enum Error {
    Io {
        path: PathBuf,
        source: io::Error,
    },
    /// A malformed record; `line` is 1-based and counts the header.
    Parse {
        path: Option<PathBuf>,
        line: u64,
        message: String,
    },
    Core(sdforge_core::Error),
    Usage(String),
}

impl Error {
    pub fn io(path: &Path, source: io::Error) -> Self {
        Error::Io { path: path.to_path_buf(), source }
    }

    pub(crate) fn parse(line: u64, message: impl Into<String>) -> Self {
        Error::Parse { path: None, line, message: message.into() }
    }

    /// Attaches a path to a parse error that lacks one.
    pub(crate) fn at(self, path: &Path) -> Self {
        match self {
            Error::Parse { path: None, line, message } => {
                Error::Parse { path: Some(path.to_path_buf()), line, message }
            }
            other => other,
        }
    }

    /// Process exit status: 2 for usage errors, 3 for I/O and input files.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Usage(_) | Error::Core(_) => 2,
            Error::Io { .. } | Error::Parse { .. } => 3,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Io { path, source } => write!(f, "{}: {source}", path.display()),
            Error::Parse { path: Some(path), line, message } => {
                write!(f, "{}: line {line}: {message}", path.display())
            }
            Error::Parse { path: None, line, message } => write!(f, "line {line}: {message}"),
            Error::Core(e) => e.fmt(f),
            Error::Usage(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io { source, .. } => Some(source),
            Error::Core(e) => Some(e),
            _ => None,
        }
    }
}

impl From<sdforge_core::Error> for Error {
    fn from(e: sdforge_core::Error) -> Self {
        Error::Core(e)
    }
}
