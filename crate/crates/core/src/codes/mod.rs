//! Membership and decoding for the fixed-length burst codes (`cs1`, `cs2`),
//! the first-row SVT codes (`psvt`, `mpsvt`) and the variable-length burst
//! codes (`cs3`, `cs4`).

pub mod decimal;
mod fixed;
mod params;
mod pipeline;
mod psvt;
mod variable;

pub use fixed::{cs1_decode, cs1_member, cs2_decode, cs2_member};
pub use params::{
    CodeParams, Cs1Params, Cs2Params, Cs3Params, Cs4Params, PsvtParams, SyndromeTuple,
};
pub use psvt::{mpsvt_decode, mpsvt_member, psvt_decode, psvt_member, FirstRow};
pub use variable::{cs3_decode, cs3_member, cs4_decode, cs4_member};
