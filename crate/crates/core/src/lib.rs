pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod covers;
pub mod error;
pub mod knot;
pub mod numerics;
pub mod obstruct;

pub use error::{Error, Result};
