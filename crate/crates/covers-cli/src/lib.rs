//! Library half of the `covers` command-line tool: the instance file format
//! and the command dispatcher, both testable without spawning a process.

pub mod app;
pub mod format;

pub use app::{exit_code, run};
