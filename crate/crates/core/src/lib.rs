//! Exact computations in the representation ring of the symmetric group.
//!
//! The pipeline runs bottom-up: [`sym`] builds integer character tables,
//! [`tensor`] turns them into Kronecker coefficients and power formulas,
//! [`ring`] studies the resulting commutative ring and [`harrison`] attaches
//! the Harrison center of its cubic form. [`linalg`] supplies the exact
//! matrix kernels underneath all of it.

pub mod error;
pub mod harrison;
pub mod linalg;
pub mod render;
pub mod ring;
pub mod serde_util;
pub mod strategy;
pub mod sym;
pub mod tensor;

pub use error::{Error, Result};
