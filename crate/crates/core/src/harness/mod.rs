//! Brute-force verification, enumeration, class sweeps and counting
//! statistics over desk-scale universes.

mod enumerate;
mod stats;
mod sweep;
mod verify;

pub use enumerate::{enumerate_code, structural_ok, Universe};
pub use stats::{fraction, StatKind, StatsReport};
pub use sweep::{sweep_classes, sweep_code, sweep_single, SweepTable};
pub use verify::{sample_words, verify_code, verify_single, VerifyMode, VerifyOptions, VerifyReport};
