//! Combinatorics of the complex reflection groups `G(m, p, n)`.
//!
//! The groups of the infinite family are modeled combinatorially: an element
//! is a permutation of `{1..n}` together with a weight vector over `Z/m`, and
//! membership in `G(m, p, n)` means the total weight is `0 (mod p)`. Nothing
//! here touches complex linear algebra; the monomial action on `C^n` fixes
//! the conventions, but every computation is exact integer arithmetic.
//!
//! The crate provides
//!
//! * element arithmetic, enumeration, reflections, and a text notation
//!   ([`element`], [`enumerate`], [`notation`]);
//! * null cycle partitions and the optimization behind reflection length
//!   ([`partitions`]);
//! * the two subadditive statistics — reflection length and fixed-space
//!   codimension — plus an independent Cayley-graph oracle ([`lengths`]);
//! * the characterization of the elements whose lower intervals under the
//!   two statistics coincide, with constructive witnesses when they do not
//!   ([`characterize`]);
//! * generic finite posets induced by subadditive statistics ([`posets`]);
//! * distinguished families: regular and parabolic quasi-Coxeter elements
//!   ([`special`]);
//! * excedance statistics on the symmetric and hyperoctahedral groups
//!   ([`symstats`]).
//!
//! The crate is `no_std` (it requires `alloc`); all IO, serialization, and
//! the command-line surface live in the companion `gmpn-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod characterize;
pub mod element;
pub mod enumerate;
mod error;
pub mod lengths;
pub mod notation;
pub mod partitions;
pub mod posets;
pub mod special;
pub mod symstats;

pub use element::{Cycle, CycleData, GroupParams, WreathElement};
pub use error::Error;
