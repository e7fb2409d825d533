//! Exact computations with enriched monoidal categories over braided fusion categories.

pub mod basecat;
pub mod canonical;
pub mod center;
pub mod enriched;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod linalg;
pub mod metricgroup;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
