//! Finite Ehresmann semigroups: classification, the associated category and
//! the Möbius isomorphism between their algebras, and explicit simple and
//! projective modules with Cartan matrices.
//!
//! All arithmetic is exact over the rationals. Products follow the
//! right-to-left convention, so `table[a][b]` is `a·b` = "first `b`, then `a`"
//! for maps.

pub mod acceptance;
pub mod algebra;
pub mod ehresmann;
pub mod json;
pub mod linalg;
mod par;
pub mod rep;
pub mod report;
pub mod semigroup;
pub mod young;
pub mod zoo;

pub use ehresmann::{BiUnaryStructure, Ehresmann, EhresmannError};
pub use json::{Family, SemigroupFile};
pub use linalg::{Matrix, Rational};
pub use rep::{RepContext, RepError};
pub use semigroup::{FiniteSemigroup, GreenData, SemigroupError};
pub use young::Partition;
