pub mod bialgebra;
pub mod centralizer;
pub mod error;
pub mod linalg;
pub mod periplectic;
pub mod qbrauer;
pub mod report;
pub mod scalar;
pub mod smatrix;
pub mod suite;
pub mod superspace;
pub mod uqpn;

pub use error::{Error, Result};
