use num_bigint::BigUint;

use super::params::{check_word, first_row, Cs1Params, Cs2Params};
use super::pipeline::{restore_from_row, Candidates};
use crate::error::{Error, Result};
use crate::locality::{is_good, retrieve_missing_symbol};
use crate::perm::{sig, MultiPermutation, Permutation};
use crate::vt::{binary_vt_decode, place, vt_syndrome};

struct FixedShape<'a> {
    n: usize,
    s: usize,
    p: usize,
    a: u64,
    c: [u64; 2],
    g: usize,
    d: &'a [BigUint; 2],
    full: &'a [u32],
}

/// First-row VT localization, symbol retrieval, exact placement of the
/// retrieved symbol, then column-pair recovery.
fn fixed_decode(received: &[u32], sh: &FixedShape, accept: &dyn Fn(&[u32]) -> bool) -> Result<Vec<u32>> {
    if received.len() + sh.s != sh.n {
        return Err(Error::invalid(format!(
            "received length {} is not n - s = {}",
            received.len(),
            sh.n - sh.s
        )));
    }
    let t = sh.n / sh.s;
    let row = first_row(received, sh.s);
    let dec = binary_vt_decode(&sig(&row), t - 1, sh.a)?;
    let (lo, hi) = (dec.run.0, dec.run.1 + 1);
    let symbol = retrieve_missing_symbol(received, sh.full, sh.s, sh.p, (lo, hi), sh.c[0], sh.c[1])?;
    let modulus = t as u64;
    let spans: Vec<(usize, usize)> = place(&row, symbol, lo, hi, |x| {
        vt_syndrome(&sig(x)) % modulus == sh.a
    })
    .into_iter()
    .map(|pl| (pl.first, pl.last))
    .collect();
    let mut out = Candidates::default();
    restore_from_row(&mut out, received, sh.n, sh.s, &spans, sh.g, sh.d, sh.full, accept);
    out.finish()
}

/// Membership: first-row VT residue, goodness, retrieve and recover syndromes.
pub fn cs1_member(sigma: &[u32], params: &Cs1Params) -> Result<bool> {
    params.validate()?;
    if sigma.len() != params.n {
        return Err(Error::invalid("word length differs from n"));
    }
    Permutation::new(sigma.to_vec())?;
    Ok(is_good(sigma, params.s, params.p)?
        && Cs1Params::for_word(sigma, params.s, params.p)? == *params)
}

/// Corrects one burst of exactly `s` stable deletions.
///
/// The output is checked against every syndrome target (goodness is not
/// required), so any returned word belongs to the syndrome class.
pub fn cs1_decode(received: &[u32], params: &Cs1Params) -> Result<Permutation> {
    params.validate()?;
    let full = params.multiset();
    let accept = |w: &[u32]| {
        Cs1Params::for_word(w, params.s, params.p).is_ok_and(|q| q == *params)
    };
    let shape = FixedShape {
        n: params.n,
        s: params.s,
        p: params.p,
        a: params.a,
        c: params.c,
        g: params.s,
        d: &params.d,
        full: &full,
    };
    Permutation::new(fixed_decode(received, &shape, &accept)?)
}

pub fn cs2_member(word: &[u32], params: &Cs2Params) -> Result<bool> {
    params.validate()?;
    let m = params.multiplicity_vector()?;
    check_word(word, &m.multiset())?;
    Ok(is_good(word, params.s, params.p)? && cs2_matches(word, params))
}

fn cs2_matches(word: &[u32], params: &Cs2Params) -> bool {
    Cs2Params::for_word(word, params.s, params.p, params.r, params.multiplicity.clone())
        .is_ok_and(|q| q == *params)
}

/// Multi-permutation analogue of [`cs1_decode`]. The first-row deletion is
/// only known up to a run of equal symbols, so recovery works on columns of
/// height `s(r + 1)`.
pub fn cs2_decode(received: &[u32], params: &Cs2Params) -> Result<MultiPermutation> {
    params.validate()?;
    let m = params.multiplicity_vector()?;
    let full = m.multiset();
    let accept = |w: &[u32]| cs2_matches(w, params);
    let shape = FixedShape {
        n: params.n,
        s: params.s,
        p: params.p,
        a: params.a,
        c: params.c,
        g: params.group(),
        d: &params.d,
        full: &full,
    };
    MultiPermutation::new(fixed_decode(received, &shape, &accept)?, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::cut;

    const SIGMA: [u32; 16] = [7, 8, 2, 5, 4, 9, 1, 12, 3, 15, 16, 13, 14, 6, 11, 10];

    fn example_params() -> Cs1Params {
        Cs1Params {
            n: 16,
            s: 2,
            p: 2,
            a: 3,
            c: [6, 2],
            d: [BigUint::from(2u32), BigUint::from(3u32)],
        }
    }

    #[test]
    fn decodes_example() {
        let tau = [7, 8, 2, 5, 4, 9, 1, 15, 16, 13, 14, 6, 11, 10];
        assert_eq!(cs1_decode(&tau, &example_params()).unwrap().as_slice(), &SIGMA);
    }

    #[test]
    fn every_burst_of_example() {
        let p = example_params();
        for i in 1..=15 {
            let tau = cut(&SIGMA, i, 2);
            assert_eq!(cs1_decode(&tau, &p).unwrap().as_slice(), &SIGMA, "burst at {}", i);
        }
    }

    #[test]
    fn membership_depends_on_goodness() {
        let p = example_params();
        assert!(!cs1_member(&SIGMA, &p).unwrap());
        let p5 = Cs1Params::for_word(&SIGMA, 2, 4).unwrap();
        assert!(cs1_member(&SIGMA, &p5).unwrap());
    }

    #[test]
    fn multi_round_trip() {
        let word = [3, 1, 2, 6, 5, 4, 4, 1, 6, 2, 3, 5];
        let p = Cs2Params::for_word(&word, 2, 3, 2, None).unwrap();
        for i in 1..=11 {
            let tau = cut(&word, i, 2);
            assert_eq!(cs2_decode(&tau, &p).unwrap().as_slice(), &word, "burst at {}", i);
        }
    }
}
