//! Localization machinery: good permutations and block covering, missing
//! symbol retrieval, column-pair recovery, and the dense-pattern burst
//! locator used for variable-length bursts.

mod dense;
mod good;
mod recover;
mod retrieve;

pub use dense::{
    alpha_p, default_delta, is_dense, locate_burst, locate_member, locate_syndromes, n_p,
    p_indicator, DenseParams, LocatedBurst,
};
pub(crate) use dense::{locate_candidates, windows};
pub use good::{covering_block_pair, is_good, longest_run};
pub use recover::{pair_rank, recover_column_pair, recover_syndromes, RecoverParams};
pub use retrieve::{
    pair_first_row_sum, retrieve_by_enumeration, retrieve_missing_symbol, retrieve_syndromes,
    RetrieveParams,
};

/// Columns `c` of the `g`-row view of the original word, read from a received
/// word in which `deleted` consecutive entries went missing strictly inside
/// columns `lo..=hi` (1-based, inclusive).
pub(crate) fn intact_column(received: &[u32], g: usize, c: usize, lo: usize, hi: usize, deleted: usize) -> &[u32] {
    debug_assert!(c < lo || c > hi);
    if c < lo {
        &received[(c - 1) * g..c * g]
    } else {
        &received[(c - 1) * g - deleted..c * g - deleted]
    }
}
