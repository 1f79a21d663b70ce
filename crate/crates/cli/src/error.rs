use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed scene, line {line}: {message}")]
    MalformedScene { line: usize, message: String },
    #[error("malformed trace, line {line}{}: {message}", seq.map(|s| format!(" (event {s})")).unwrap_or_default())]
    MalformedTrace { line: usize, seq: Option<u64>, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn scene(line: usize, message: impl Into<String>) -> Self {
        Self::MalformedScene { line, message: message.into() }
    }

    pub fn trace(line: usize, seq: Option<u64>, message: impl Into<String>) -> Self {
        Self::MalformedTrace { line, seq, message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
