//! Exact arithmetic in the Higman–Thompson groups `V_n`, `V_n'` and the
//! Brin–Thompson groups `mV`, together with the construction of generating
//! partners and checkable certificates that a pair generates the group.
//!
//! Elements act on the right: `x(fg) = (xf)g`, and `x^y = y⁻¹xy`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod element;
pub mod error;
mod index;
pub mod permgroup;
pub mod perms;
pub mod point;
pub mod primes;
pub mod random;
pub mod text;
pub mod witness;
pub mod words;

pub use element::Element;
pub use error::{Error, Result};
pub use perms::CycleDecomposition;
pub use point::PeriodicPoint;
pub use words::{Basis, Family, Signature, Word};
