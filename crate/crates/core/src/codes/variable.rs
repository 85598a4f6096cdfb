use num_bigint::BigUint;

use super::params::{check_word, Cs3Params, Cs4Params, SyndromeTuple, VarShape};
use super::pipeline::{restore_from_row, Candidates};
use super::psvt::first_row_candidates;
use crate::channel::parity_vector;
use crate::error::{Error, Result};
use crate::locality::{is_dense, locate_candidates, windows, DenseParams};
use crate::perm::{multiset_minus, MultiPermutation, MultiplicityVector, Permutation};
use crate::vt::place_symbol_svt_candidates;

struct VarCode<'a> {
    shape: VarShape,
    a: [u64; 2],
    b: &'a [u64],
    c: &'a [u64],
    d: &'a [BigUint; 2],
    full: Vec<u32>,
}

impl VarCode<'_> {
    fn targets(&self) -> SyndromeTuple {
        SyndromeTuple {
            a: self.a.to_vec(),
            b: self.b.to_vec(),
            c: self.c.to_vec(),
            d: self.d.to_vec(),
        }
    }

    fn member(&self, word: &[u32]) -> Result<bool> {
        check_word(word, &self.full)?;
        Ok(is_dense(&parity_vector(word), self.shape.s, self.shape.delta)
            && self.shape.syndromes_of(word)? == self.targets())
    }

    /// Locate the burst from the parity vector, restore the first row of the
    /// `s'`-row view (or the whole word when `s' = 1`), then recover the
    /// covering column pair.
    fn decode(&self, received: &[u32]) -> Result<Vec<u32>> {
        let sh = &self.shape;
        if received.len() > sh.n || sh.n - received.len() > sh.s {
            return Err(Error::invalid(format!(
                "received length {} is not n - s' for 0 <= s' <= {}",
                received.len(),
                sh.s
            )));
        }
        let targets = self.targets();
        let accept = |w: &[u32]| sh.syndromes_of(w).is_ok_and(|t| t == targets);
        let len = sh.n - received.len();
        if len == 0 {
            return if accept(received) {
                Ok(received.to_vec())
            } else {
                Err(Error::decode("undamaged word does not match the syndromes"))
            };
        }
        let missing = multiset_minus(&self.full, received)
            .ok_or_else(|| Error::decode("received word is not drawn from the code's multiset"))?;
        let dense = DenseParams {
            s: sh.s,
            delta: sh.delta,
            a1: self.a[0],
            a2: self.a[1],
        };
        let starts = locate_candidates(&parity_vector(received), sh.n, &dense);
        if starts.is_empty() {
            return Err(Error::decode("no burst position is consistent with the locate code"));
        }
        let mut out = Candidates::default();
        for (lo, hi) in windows(&starts, len, sh.delta) {
            if len == 1 {
                for pl in place_symbol_svt_candidates(
                    received,
                    missing[0],
                    sh.p[0] as u64,
                    self.b[0],
                    self.b[1],
                    (lo, hi),
                ) {
                    if accept(&pl.word) {
                        out.offer(pl.word);
                    }
                }
                continue;
            }
            let p = sh.p[len - 1];
            // first-row columns of the len-row view whose entry lies in [lo, hi]
            let jlo = (lo - 1).div_ceil(len) + 1;
            let jhi = (hi - 1) / len + 1;
            if jlo > jhi {
                continue;
            }
            let b = [self.b[2 * len - 2], self.b[2 * len - 1]];
            let c = [self.c[2 * len - 4], self.c[2 * len - 3]];
            match first_row_candidates(received, &self.full, len, p, b, c, (jlo, jhi)) {
                Ok(rows) => {
                    let spans: Vec<(usize, usize)> = rows.iter().map(|pl| (pl.first, pl.last)).collect();
                    restore_from_row(&mut out, received, sh.n, len, &spans, sh.g, self.d, &self.full, &accept);
                }
                Err(e) => out.fail(e),
            }
        }
        out.finish()
    }
}

fn cs3_code(params: &Cs3Params) -> Result<VarCode<'_>> {
    let shape = params.shape()?;
    shape.check_targets(&params.a, &params.b, &params.c, &params.d)?;
    Ok(VarCode {
        shape,
        a: params.a,
        b: &params.b,
        c: &params.c,
        d: &params.d,
        full: (1..=params.n as u32).collect(),
    })
}

fn cs4_code(params: &Cs4Params) -> Result<(VarCode<'_>, MultiplicityVector)> {
    let m = params.multiplicity_vector()?;
    let shape = params.shape()?;
    shape.check_targets(&params.a, &params.b, &params.c, &params.d)?;
    Ok((
        VarCode {
            shape,
            a: params.a,
            b: &params.b,
            c: &params.c,
            d: &params.d,
            full: m.multiset(),
        },
        m,
    ))
}

/// Membership: dense parity vector in the locate code, whole-signature SVT,
/// first-row SVT and retrieve syndromes for every burst length from 2 to `s`,
/// and column-pair ranks at height `2s`.
pub fn cs3_member(sigma: &[u32], params: &Cs3Params) -> Result<bool> {
    cs3_code(params)?.member(sigma)
}

/// Corrects one burst of `s'` stable deletions for any `1 <= s' <= s`; `s'`
/// is read off the received length.
pub fn cs3_decode(received: &[u32], params: &Cs3Params) -> Result<Permutation> {
    Permutation::new(cs3_code(params)?.decode(received)?)
}

pub fn cs4_member(word: &[u32], params: &Cs4Params) -> Result<bool> {
    cs4_code(params)?.0.member(word)
}

/// Multi-permutation analogue of [`cs3_decode`], recovering on columns of
/// height `s(r + 1)`.
pub fn cs4_decode(received: &[u32], params: &Cs4Params) -> Result<MultiPermutation> {
    let (code, m) = cs4_code(params)?;
    MultiPermutation::new(code.decode(received)?, m)
}
