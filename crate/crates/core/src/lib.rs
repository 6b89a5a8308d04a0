//! Regular dessins as coset geometries.
//!
//! A regular dessin is encoded by a finite group `G` with an ordered
//! generating pair `(b, w)`: black vertices are the cosets of `⟨b⟩`, white
//! vertices the cosets of `⟨w⟩`, edges the elements of `G`, and faces the
//! translates of the boundary cycle spun out by `bw`. On top of this the
//! crate computes quotients by normal subgroups, classifies the resulting
//! coverings, and reproduces the enumerative results for unicellular
//! dessins, the face-quasiprimitive families, and the `SL(2,q)` analysis.

pub mod acceptance;
pub mod constructions;
pub mod covering;
pub mod dessin;
pub mod error;
pub mod field;
pub mod group;
pub mod numthy;
pub mod poly;
pub mod sl2lab;
pub mod unicellular;

pub use error::{Error, Result};
