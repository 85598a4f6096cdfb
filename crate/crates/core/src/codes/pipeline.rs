//! Shared decoding stages: column-pair restoration once the first-row
//! deletion is pinned, and candidate bookkeeping.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::locality::recover_column_pair;

/// Distinct fully verified decodings, plus the first error seen along the way.
#[derive(Default)]
pub(crate) struct Candidates {
    found: Vec<Vec<u32>>,
    first_err: Option<Error>,
}

impl Candidates {
    pub fn offer(&mut self, word: Vec<u32>) {
        if !self.found.contains(&word) {
            self.found.push(word);
        }
    }

    pub fn fail(&mut self, e: Error) {
        self.first_err.get_or_insert(e);
    }

    pub fn finish(mut self) -> Result<Vec<u32>> {
        match self.found.len() {
            1 => Ok(self.found.pop().expect("one candidate")),
            0 => Err(self
                .first_err
                .unwrap_or_else(|| Error::decode("no candidate matches the code's syndromes"))),
            k => Err(Error::decode(format!(
                "{} distinct codewords are consistent with the received word",
                k
            ))),
        }
    }
}

/// True if deleting some `n - received.len()` consecutive entries of `word`
/// gives `received`.
pub(crate) fn burst_consistent(word: &[u32], received: &[u32]) -> bool {
    if received.len() > word.len() {
        return false;
    }
    let len = word.len() - received.len();
    if len == 0 {
        return word == received;
    }
    (1..=word.len() - len + 1)
        .any(|i| word[..i - 1] == received[..i - 1] && word[i - 1 + len..] == received[i - 1..])
}

/// Column pair `j` (columns `j`, `j + 1` of the `g`-row view) covering the
/// coordinates `lo..=hi`; never the wrap-around pair.
pub(crate) fn pair_covering(lo: usize, hi: usize, g: usize, n: usize) -> Result<usize> {
    let cols = n / g;
    let cl = (lo - 1) / g + 1;
    let ch = (hi - 1) / g + 1;
    if cl == ch {
        Ok(if cl < cols { cl } else { cl - 1 })
    } else if ch == cl + 1 {
        Ok(cl)
    } else {
        Err(Error::decode(format!(
            "coordinates [{}, {}] span more than two columns of height {}",
            lo, hi, g
        )))
    }
}

/// For each span `(first, last)` of possible first-row deletion columns in
/// the `stride`-row view, restores the covering column pair of the `g`-row
/// view and offers the result if it explains `received` and passes `accept`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn restore_from_row(
    out: &mut Candidates,
    received: &[u32],
    n: usize,
    stride: usize,
    spans: &[(usize, usize)],
    g: usize,
    d: &[BigUint; 2],
    full: &[u32],
    accept: &dyn Fn(&[u32]) -> bool,
) {
    let deleted = n - received.len();
    for &(first, last) in spans {
        // a burst hitting row 1 in column j lies inside [(j-2)s+2, js]
        let lo = ((first as i64 - 2) * stride as i64 + 2).max(1) as usize;
        let hi = (last * stride).min(n);
        let j = match pair_covering(lo, hi, g, n) {
            Ok(j) => j,
            Err(e) => {
                out.fail(e);
                continue;
            }
        };
        match recover_column_pair(received, n, g, j, &d[0], &d[1], full) {
            Ok(pair) => {
                let mut word = Vec::with_capacity(n);
                word.extend_from_slice(&received[..(j - 1) * g]);
                word.extend_from_slice(&pair);
                word.extend_from_slice(&received[(j + 1) * g - deleted..]);
                if burst_consistent(&word, received) && accept(&word) {
                    out.offer(word);
                }
            }
            Err(e) => out.fail(e),
        }
    }
}
