//! Command-line front-end for `nary-core`: text formats, identity suites, catalog
//! generation, cohomology reports and Poisson-tensor checks.
//!
//! Every command is available as a library function so tests can run it in-process;
//! the `nary` binary only parses flags, reads files and prints.

pub mod commands;
pub mod error;
pub mod format;
pub mod rep_file;
pub mod report;
pub mod tensor_file;

pub use commands::{cmd_check, cmd_cohomology, cmd_generate, cmd_poisson, GenerateSpec, PoissonCheck, Suite};
pub use error::InputError;
pub use format::{AlgebraFile, Structure};
pub use report::{RunReport, Verdict};
