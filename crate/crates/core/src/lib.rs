//! Exact analysis of hidden subgroups of the symmetric group under the weak
//! standard method of quantum Fourier sampling.
//!
//! Everything that feeds an asserted inequality is computed in exact
//! arithmetic: big integers for orders, class sizes and character values,
//! exact rationals for probabilities and total-variation distances, and
//! rational-bounded square roots for the irrational sides of the bounds.

pub mod chartable;
pub mod codes;
pub mod constructions;
pub mod distinguish;
pub mod error;
pub mod exact;
pub mod group;
pub mod partition;
pub mod perm;
pub mod verify;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
