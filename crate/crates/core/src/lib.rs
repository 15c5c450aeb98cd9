//! S-Dowling posets `D_n(G, S)`, their invariant subposets, and the
//! arrangements of orbit configuration spaces they describe.
//!
//! The crate builds the posets explicitly, computes Möbius functions and
//! characteristic polynomials by brute force, and checks them against the
//! closed-form products. A finite G-set stands in for `X(F_q)` to count
//! points of orbit configuration spaces.

pub mod dowling;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod invariants;
pub mod layers;
pub mod poly;
pub mod poset;
pub mod registry;
pub mod verify;
pub mod wreath;

pub use dowling::{DowlingContext, DowlingElement};
pub use error::{Error, Result};
pub use group::{FiniteGroup, GSetAction, OrbitData};
pub use poly::{BiPolynomial, IntPolynomial};
pub use poset::{MobiusTable, RankedPoset};
