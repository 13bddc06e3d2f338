pub mod affine;
pub mod cli;
pub mod error;
pub mod hitchin;
pub mod laurent;
pub mod linalg;
pub mod mpoly;
pub mod opers;
pub mod poly;
pub mod rootdata;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Scalar, Q};
