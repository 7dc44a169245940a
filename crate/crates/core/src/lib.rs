//! Finite binary multirelations: relations between elements and sets of
//! elements, with Peleg's and Parikh's sequential compositions, parallel
//! composition, domain and projections, fixpoint iterations, and a checker
//! for algebraic laws over them.

mod error;
mod family;
pub mod fixpoint;
pub mod laws;
mod relation;
pub mod space;
pub mod structure;
mod universe;

pub use error::RelError;
pub use relation::{Constant, MultiRelation, RelationJson};
pub use universe::{StateSet, Universe, MAX_UNIVERSE};
