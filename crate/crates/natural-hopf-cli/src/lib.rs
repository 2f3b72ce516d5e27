//! Front end for `natural-hopf`: signature files, text and JSON output,
//! the `nhopf` command line and the acceptance suite.

pub mod acceptance;
pub mod cli;
pub mod format;
pub mod sigfile;

pub use cli::run;
