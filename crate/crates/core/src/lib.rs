//! Computations with Verma modules, BGG resolutions and Jordan–Hölder series
//! of locally analytic representations.

pub mod bgg;
pub mod cache;
pub mod cli;
pub mod drinfeld;
pub mod error;
pub mod labels;
pub mod linalg;
pub mod relations;
pub mod roots;
pub mod verma;
pub mod weyl;

pub use error::{Error, Result};

/// Version tag written into every JSON document.
pub const SCHEMA_VERSION: u32 = 1;
