//! Input loading, bundled datasets and DOT rendering.

pub mod datasets;
pub mod dot;
mod input;

pub use input::{load_input, parse_input, Format, Input};
