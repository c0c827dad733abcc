//! Exact combinatorics of untwisted affine root systems and Weyl groups,
//! truncated characters with BGG-type Euler characteristic checks, and
//! finite models of Clifford algebras and semiregular modules.

#![allow(clippy::needless_range_loop)]

pub mod cartan;
pub mod charlib;
pub mod clifford;
pub mod error;
pub mod linalg;
pub mod resolutions;
pub mod semiregular;
pub mod weyl;

pub use cartan::{AffineCartan, AffineRoot, AffineWeight, RootLatticeVector, Q};
pub use charlib::Character;
pub use error::{Error, Result};
pub use weyl::{WeylElt, WeylGroup};
