pub mod cli;
pub mod commutator;
pub mod error;
pub mod group;
mod literal;
pub mod morse;
pub mod verify;
pub mod wreath;

pub use error::{Error, Result};
