//! Permutation and multi-permutation codes correcting a burst of stable
//! deletions, with the VT/SVT building blocks they rest on, a single-deletion
//! systematic codec, and a brute-force verification harness.
//!
//! Words are 1-based: a permutation of length `n` holds `1..=n`. Signatures
//! and other binary words are `u8` slices of 0/1.

pub mod channel;
pub mod codes;
mod error;
pub mod harness;
pub mod locality;
pub mod par;
pub mod perm;
pub mod single;
pub mod text;
pub mod vt;

pub use error::{Error, Result};
pub use perm::{ArrayShape, MultiPermutation, MultiplicityVector, Permutation};
