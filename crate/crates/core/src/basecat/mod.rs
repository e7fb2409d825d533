//! Skeletal braided fusion categories given by F- and R-symbols.

mod fusion;
mod morphism;

pub use fusion::{FusionData, FusionTables, ValidationFailure, ValidationReport};
pub use morphism::{BlockMorphism, MultObject, TensorLayout};
