//! Input errors: anything that makes a file or a flag unusable (exit status 2).

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    /// 1-based; 0 when the error is not tied to a line.
    pub line: usize,
    pub column: usize,
    pub message: String,
    /// The file breaks the declared index symmetry.
    pub symmetry: bool,
}

impl InputError {
    pub fn at(line: usize, column: usize, message: String) -> Self {
        InputError { line, column, message, symmetry: false }
    }

    pub fn symmetry(line: usize, message: String) -> Self {
        InputError { line, column: 1, message, symmetry: true }
    }

    pub fn plain(message: String) -> Self {
        InputError { line: 0, column: 0, message, symmetry: false }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
        }
    }
}

impl std::error::Error for InputError {}
