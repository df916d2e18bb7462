use std::fmt;

use rotaxis::Error;

/// A failure that ends the run, with its process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Input or argument could not be parsed (exit 2).
    Parse(String),
    /// Matrix failed the orthogonality, unitarity or group check (exit 3).
    Invalid(String),
    /// Requested method does not apply, or the input is the identity (exit 4).
    Inapplicable(String),
    /// Cross-validation found a deviation above threshold (exit 1).
    Deviation(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Deviation(_) | CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Invalid(_) => 3,
            CliError::Inapplicable(_) => 4,
        }
    }

    /// Prefixes the message with the document position.
    pub fn at(self, index: usize) -> CliError {
        let tag = |m: String| format!("matrix {index}: {m}");
        match self {
            CliError::Parse(m) => CliError::Parse(tag(m)),
            CliError::Invalid(m) => CliError::Invalid(tag(m)),
            CliError::Inapplicable(m) => CliError::Inapplicable(tag(m)),
            CliError::Deviation(m) => CliError::Deviation(tag(m)),
            io => io,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) | CliError::Invalid(m) | CliError::Inapplicable(m) | CliError::Deviation(m) => {
                f.write_str(m)
            }
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Io(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let msg = e.to_string();
        match e {
            Error::NotOrthogonal { .. }
            | Error::NotSpecialUnitary { .. }
            | Error::NotSpecialOrthogonalFp(_)
            | Error::WrongDeterminant => CliError::Invalid(msg),
            Error::InvalidArgument(_)
            | Error::IndexOutOfRange(_)
            | Error::NotPrime(_)
            | Error::ModulusTooLarge(_)
            | Error::ModulusMismatch(..)
            | Error::NotOnCircle { .. }
            | Error::InfeasibleParameters(_) => CliError::Parse(msg),
            _ => CliError::Inapplicable(msg),
        }
    }
}
