//! Sum-product pairs `(|A+A|, |AA|)` of finite sets of positive integers.

pub mod bounds;
pub mod error;
pub mod exact;
pub mod generators;
pub mod normalize;
pub mod par;
pub mod prototypes;
pub mod realsearch;
pub mod scan;
pub mod sets;
pub mod store;

pub use error::{Error, Result};
pub use par::Exec;
pub use sets::{spp_of, PosIntSet, SppTriple};
pub use store::Dataset;
