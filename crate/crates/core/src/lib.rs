//! Exact equivariant localization of CSM and Segre-MacPherson classes in type A.
//!
//! Values are rational functions in `x_1..x_k`, `y_1..y_n` with denominators
//! that factor into linear forms, see [`symra`].

pub mod chernaffine;
pub mod chernfinite;
mod error;
pub mod limits;
pub mod positroid;
pub mod symra;
pub mod verify;
pub mod weylperm;

pub use error::{CsmError, Result};
pub use limits::Limits;
