//! Exact computations with tensor-space representations of quantum affine
//! `gl_n` and the affine Hecke algebra.

pub mod combinat;
pub mod drinfeld;
pub mod error;
pub mod hecke;
pub mod ring;
pub mod tensor;
pub mod verify;
mod sign;

pub use error::{Error, Result};
pub use sign::Sign;
