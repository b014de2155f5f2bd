//! File formats, batch evaluation and the `tvcount` command line on top of
//! [`tvcount_core`].

pub mod cli;
pub mod formats;
pub mod selftest;
pub mod table;

pub use cli::{run, ExitStatus};
