//! Exact integer model of Morse functions up to fold cobordism.
//!
//! A Morse function on a closed manifold is reduced to a [`MorseDescriptor`]:
//! a formal manifold class plus the vector of critical-point counts by index.
//! On this data the crate provides the operations of the classification:
//! the phi-invariants, disjoint unions, diagonal products (where counts
//! convolve because indices of paired critical points add), the closed
//! product formula for phi, handle stabilization, and the complete
//! [`CobordismInvariant`].
//!
//! All operations are pure functions on immutable values and are safe to
//! call concurrently.

mod counts;
mod descriptor;
mod error;
mod file;
mod invariant;
mod manifold;
mod ops;
mod token;

pub use counts::IndexCountVector;
pub use descriptor::MorseDescriptor;
pub use error::{Error, Result};
pub use file::{descriptor_from_json, descriptor_to_json};
pub use invariant::{phi_range_start, CobordismInvariant};
pub use manifold::ManifoldClass;
pub use ops::ExtraMiddlePair;
pub use token::{Token, PRODUCT_SEPARATOR};
