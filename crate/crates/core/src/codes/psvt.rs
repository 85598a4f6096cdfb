use super::params::{check_word, first_row, psvt_syndromes, PsvtParams};
use crate::error::{Error, Result};
use crate::locality::retrieve_missing_symbol;
use crate::vt::{place_symbol_svt_candidates, Placement};

/// Restored first array row and the 1-based first-row positions at which the
/// deletion may have happened (a single position for permutations; a run of
/// equal symbols for multi-permutations).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstRow {
    pub row: Vec<u32>,
    pub first: usize,
    pub last: usize,
}

/// Candidate first rows for a burst of length `s` whose first-row deletion
/// lies in `interval`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn first_row_candidates(
    received: &[u32],
    full: &[u32],
    s: usize,
    p: usize,
    b: [u64; 2],
    c: [u64; 2],
    interval: (usize, usize),
) -> Result<Vec<Placement<u32>>> {
    let symbol = retrieve_missing_symbol(received, full, s, p, interval, c[0], c[1])?;
    let row = first_row(received, s);
    Ok(place_symbol_svt_candidates(&row, symbol, p as u64, b[0], b[1], interval))
}

fn decode_first_row(received: &[u32], params: &PsvtParams, interval: (usize, usize)) -> Result<FirstRow> {
    params.validate()?;
    if received.len() + params.s != params.n {
        return Err(Error::invalid("received length must be n - s"));
    }
    let (lo, hi) = interval;
    let t = params.n / params.s;
    if lo == 0 || lo > hi || hi > t || hi - lo + 1 > params.p {
        return Err(Error::invalid(format!(
            "interval [{}, {}] must lie in [1, {}] and hold at most P = {} positions",
            lo, hi, t, params.p
        )));
    }
    let full = params.multiset()?;
    let mut c = first_row_candidates(received, &full, params.s, params.p, params.b, params.c, interval)?;
    match c.len() {
        1 => {
            let pl = c.pop().expect("one candidate");
            Ok(FirstRow { row: pl.word, first: pl.first, last: pl.last })
        }
        0 => Err(Error::decode("no first row matches the SVT syndromes")),
        k => Err(Error::decode(format!("{} first rows match the SVT syndromes", k))),
    }
}

fn member(word: &[u32], params: &PsvtParams) -> Result<bool> {
    params.validate()?;
    check_word(word, &params.multiset()?)?;
    Ok(psvt_syndromes(word, params.s, params.p)? == (params.b, params.c))
}

/// First-row signature in `SVT_{b1,b2}` and retrieve syndromes `(c1, c2)`.
pub fn psvt_member(sigma: &[u32], params: &PsvtParams) -> Result<bool> {
    if params.multiplicity.is_some() {
        return Err(Error::invalid("psvt is over permutations; use mpsvt"));
    }
    member(sigma, params)
}

/// Restores the first array row after a burst of length `s` whose first-row
/// deletion lies in `interval` (at most `P` positions), and pins the deleted
/// coordinate.
pub fn psvt_decode(received: &[u32], params: &PsvtParams, interval: (usize, usize)) -> Result<FirstRow> {
    if params.multiplicity.is_some() {
        return Err(Error::invalid("psvt is over permutations; use mpsvt"));
    }
    decode_first_row(received, params, interval)
}

pub fn mpsvt_member(word: &[u32], params: &PsvtParams) -> Result<bool> {
    if params.multiplicity.is_none() {
        return Err(Error::invalid("mpsvt needs a multiplicity vector"));
    }
    member(word, params)
}

/// Multi-permutation analogue of [`psvt_decode`]; the deleted coordinate is
/// resolved up to a run of equal symbols.
pub fn mpsvt_decode(received: &[u32], params: &PsvtParams, interval: (usize, usize)) -> Result<FirstRow> {
    if params.multiplicity.is_none() {
        return Err(Error::invalid("mpsvt needs a multiplicity vector"));
    }
    decode_first_row(received, params, interval)
}
