//! Finite rings, their unit groups, and dihedral recognition.
//!
//! Rings are enumerated: every element is an index in `0..order`, and the
//! arithmetic lives behind [`FiniteRing`]. Groups are Cayley tables
//! ([`GroupTable`]). The two infinite objects, split quaternions over the
//! integers and the rings `Gamma_k`, use arbitrary precision integers.

pub mod dsl;
pub mod error;
pub mod gamma;
pub mod group;
pub mod numtheory;
pub mod quaternion;
pub mod report;
pub mod ring;
pub mod units;
pub mod verify;

pub use error::{Error, Result};
pub use gamma::{Gamma, GammaElement};
pub use group::{AbelianInvariants, GroupTable};
pub use ring::{Budget, FiniteRing};
pub use units::Structure;

/// Split quaternions with integer coefficients.
pub type Quaternion = quaternion::SplitQuaternion<num_bigint::BigInt>;
