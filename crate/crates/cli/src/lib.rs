//! Text syntax for terms and substitutions, and the batch command-line
//! interface over the unification library.

pub mod commands;
pub mod syntax;

pub use commands::{run, EXIT_NO_UNIFIER, EXIT_OK, EXIT_USAGE};
pub use syntax::{parse_subst, parse_term, print_subst, print_term, ParseError};
