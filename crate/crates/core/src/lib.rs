//! Rigidification of finite simplicial sets into simplicial categories.
//!
//! The mapping space `𝔠(S)(a, b)` is computed from necklaces: chains of
//! simplices glued end to start. Its `n`-simplices are triples of a necklace
//! `T`, a map `T -> S` from `a` to `b`, and a flag of vertex subsets of `T`,
//! taken in a unique canonical form (flanked flag, totally nondegenerate
//! map). For ordered simplicial sets the canonical maps are injective and the
//! whole mapping space is finite and can be enumerated.
//!
//! Modules:
//! - [`complex`]: finite simplicial sets, normal forms, order predicates.
//! - [`necklace`]: necklaces, necklace maps and their enumeration.
//! - [`rigid`]: mapping simplices, composition, mapping spaces, categories.
//! - [`homotopy`]: components, integral homology, horn filling, comonad counts.
//! - [`oracle`]: brute-force reference computations used by [`verify`].
//! - [`verify`]: named verification checks behind a common trait.
//! - [`report`]: JSON input/output shapes.

pub mod complex;
pub mod error;
pub mod homotopy;
pub mod necklace;
pub mod oracle;
pub mod report;
pub mod rigid;
pub mod verify;

pub use error::{Error, Result};
