pub mod catalog;
pub mod cli;
pub mod error;
pub mod numerics;
pub mod transform;
pub mod zeta_kernel;

pub use error::{Error, Result};
pub use numerics::{ComplexScalar, EvalResult, Flags, Method, Tolerance};
