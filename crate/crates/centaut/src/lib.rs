//! Central automorphism groups of finite groups, computed through the
//! adjoint group of the ring Hom(G, Z(G)), with independent brute-force
//! oracles for every construction.
//!
//! The pipeline: a group is an explicit Cayley table ([`group`]); its
//! center and abelianization are decomposed into cyclic factors
//! ([`abelian`]); Hom(G, Z(G)) becomes a finite matrix ring ([`homring`],
//! [`ring`]); the quasi-invertible elements under x∘y = x + y + xy form
//! the adjoint group ([`adjoint`]); and the map h ↦ (x ↦ x·h(x)) carries
//! that group isomorphically onto Aut_c(G) ([`autc`]). The [`oracle`]
//! module recomputes everything naively, and [`verify`] runs the whole
//! statement-by-statement check matrix over a corpus of groups.

pub mod abelian;
pub mod adjoint;
pub mod autc;
pub mod corpus;
pub mod error;
pub mod group;
pub mod grouptable;
pub mod homring;
pub mod oracle;
pub mod report;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};
