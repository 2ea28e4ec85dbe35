//! Exact construction and verification of Jordan algebras, J-ternary
//! algebras, structurable algebras and the Lie algebras they coordinatize.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod jordan;
pub mod jternary;
pub mod lieforge;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod sweep;

pub use error::{Error, Result};
pub use scalar::{parse_scalar, Field, Scalar};
