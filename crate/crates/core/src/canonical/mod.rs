//! Enrichment of a fusion category over a braided one through a central functor.

mod compare;
mod enrich;
mod functor;
mod ordinary;
pub mod plain;
mod theorem;

pub use compare::{compare_with_self_enrichment, theta};
pub use enrich::{canonical_enrich, internal_hom, CanonicalEnriched, InternalHom};
pub use functor::{full_subcategory, CentralFunctor};
pub use ordinary::{
    centralizer, ordinary_center, simple_half_braidings, CenterObject, OrdinaryCenter, OrdinaryOptions,
};
pub use theorem::{verify_generalized_center, GeneralizedCenterReport};
