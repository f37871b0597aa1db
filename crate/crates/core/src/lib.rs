pub mod error;
pub mod ratpoly;

pub use error::{Error, Result};
pub mod classifier;
pub mod orbits;
pub mod wavemodel;
pub mod quadrature;
pub mod profiles;
pub mod camassaholm;
