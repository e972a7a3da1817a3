//! Rowmotion on the weight poset `Δ(1)` of the extra-special grading of a
//! simple Lie algebra.
//!
//! The crate builds every finite irreducible root system from its Dynkin
//! data, extracts `Δ(1) = { α ∈ Δ⁺ | (α, θ^∨) = 1 }` as a finite poset, and
//! studies the reverse operator (rowmotion) on its lower ideals:
//!
//! * [`rootsys`] constructs root systems, the Coxeter number `h`, the dual
//!   Coxeter number `h*`, the long simple roots and `Δ(1)`.
//! * [`poset`] holds the finite-poset machinery: chains, products, ordinal
//!   sums, the posets `K_{n-1}`, lower ideals, antichains, both reverse
//!   operators, ideal enumeration and isomorphism testing.
//! * [`dynamics`] decomposes `J(P)` into rowmotion orbits and provides the
//!   closed-form rowmotion rules on `[m] × P` and `[m] × K_{n-1}`.
//! * [`verify`] checks, type by type, that the number of orbits equals the
//!   number of long simple roots, that each orbit has `h - 1` elements, and
//!   (for even `h`) that each orbit has exactly one ideal of size `h* - 2`.
//!
//! ```
//! use rowmotion::rootsys::{RootSystem, SimpleType};
//! use rowmotion::dynamics::orbit_decomposition;
//! use rowmotion::poset::DEFAULT_ENUMERATION_CAP;
//!
//! let e6 = RootSystem::new(SimpleType::parse("E6").unwrap()).unwrap();
//! let orbits = orbit_decomposition(&e6.delta_one(), DEFAULT_ENUMERATION_CAP).unwrap();
//! assert_eq!(orbits.len(), 6);
//! assert!(orbits.iter().all(|o| o.size() == 11));
//! ```

pub mod bits;
pub mod cli;
pub mod dynamics;
mod error;
pub mod poset;
pub mod rootsys;
pub mod verify;

pub use error::{Error, Result};
