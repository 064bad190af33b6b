pub mod arith;
pub mod bounds;
pub mod centralizer;
pub mod charsphere;
pub mod cli;
pub mod error;
pub mod funcfield;
pub mod lattice;
pub mod numfield;
pub mod numfield_example;

pub use error::{Error, Result};
