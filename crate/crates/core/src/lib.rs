//! Weight-constraint programs and programs with nested expressions.
//!
//! Both languages get a brute-force answer-set semantics. Weight programs
//! are translated into nested programs in three ways, strong equivalence is
//! decided in the logic of here-and-there, and nonnested programs can be
//! exported through their completion as DIMACS CNF.

pub mod cli;
pub mod completion;
pub mod error;
pub mod generate;
pub mod ht;
pub mod nsem;
pub mod parser;
pub mod syntax;
pub mod translate;
mod universe;
pub mod verify;
pub mod wsem;

pub use error::{Error, Result};
pub use syntax::*;
pub use universe::DEFAULT_CAP;
