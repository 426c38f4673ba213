//! Finite lattices, formal contexts, implication bases and Birkhoff
//! completions.

pub mod birkhoff;
pub mod catalog;
pub mod error;
pub mod fca;
pub mod implications;
pub mod io;
pub mod order;
pub mod sets;

pub use error::{Error, Result};
