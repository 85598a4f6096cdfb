//! Single stable deletion permutation code `C_a(n)`: the set of `sigma` in
//! `S_n` whose signature has VT syndrome `a` mod `n`, with a linear-time
//! systematic encoder from `S_{n-1}`.

use crate::error::{Error, Result};
use crate::perm::{sig, Permutation};
use crate::vt::{place_symbol_vt, vt_syndrome};

/// `VT(signature(sigma)) = a (mod n)`.
pub fn lev_member(sigma: &Permutation, a: u64) -> bool {
    let n = sigma.len() as u64;
    vt_syndrome(&sig(sigma.as_slice())) % n == a
}

/// Inserts `n` into `pi` (a permutation of `1..n`) so that the result lies in
/// `C_a(n)`.
pub fn encode_single(pi: &Permutation, a: u64) -> Result<Permutation> {
    Ok(encode_single_counted(pi, a)?.0)
}

/// [`encode_single`] together with the number of elementary steps taken
/// (signature bits scanned plus entries copied).
pub fn encode_single_counted(pi: &Permutation, a: u64) -> Result<(Permutation, usize)> {
    let m = pi.len();
    let n = m + 1;
    if a >= n as u64 {
        return Err(Error::invalid(format!("a = {} outside Z_{}", a, n)));
    }
    let x = pi.as_slice();
    let mut steps = 0usize;
    // one pass for the syndrome and weight of the signature
    let mut vt = 0u64;
    let mut omega = 0u64;
    for i in 1..m {
        steps += 1;
        if x[i] >= x[i - 1] {
            vt += i as u64;
            omega += 1;
        }
    }
    let n64 = n as u64;
    let delta = (a + n64 - vt % n64) % n64;
    // insert after the j-th entry (j = 0 prepends)
    let j = if delta < omega {
        nth_coordinate(x, 1, omega - delta, &mut steps)
    } else if delta == omega {
        0
    } else if delta < n64 - 1 {
        nth_coordinate(x, 0, delta - omega, &mut steps)
    } else {
        m
    };
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&x[..j]);
    out.push(n as u32);
    out.extend_from_slice(&x[j..]);
    steps += n;
    Ok((Permutation::new(out)?, steps))
}

/// Signature coordinate (1-based) of the `k`-th occurrence of `bit`.
fn nth_coordinate(x: &[u32], bit: u8, k: u64, steps: &mut usize) -> usize {
    let mut seen = 0;
    for i in 1..x.len() {
        *steps += 1;
        if u8::from(x[i] >= x[i - 1]) == bit {
            seen += 1;
            if seen == k {
                return i;
            }
        }
    }
    unreachable!("the signature holds at least {} entries equal to {}", k, bit)
}

/// Restores the codeword of `C_a(n)` from which one entry was deleted.
pub fn decode_single(received: &[u32], a: u64) -> Result<Permutation> {
    let n = received.len() + 1;
    if a >= n as u64 {
        return Err(Error::invalid(format!("a = {} outside Z_{}", a, n)));
    }
    let mut seen = vec![false; n + 1];
    for &v in received {
        let v = v as usize;
        if v == 0 || v > n || seen[v] {
            return Err(Error::invalid("received word has repeated or out-of-range entries"));
        }
        seen[v] = true;
    }
    let missing = (1..=n).find(|&v| !seen[v]).expect("one value is absent") as u32;
    Permutation::new(place_symbol_vt(received, missing, a)?.word)
}

/// [`decode_single`] followed by removal of the symbol `n`.
pub fn decode_message(received: &[u32], a: u64) -> Result<Permutation> {
    let sigma = decode_single(received, a)?;
    let n = sigma.len() as u32;
    Permutation::new(sigma.into_vec().into_iter().filter(|&v| v != n).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[u32]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn encoder_cases() {
        let cases: [(&[u32], &[u32]); 4] = [
            (&[2, 1, 4, 3, 6, 5, 8, 7, 9], &[2, 1, 4, 3, 6, 5, 8, 7, 10, 9]),
            (&[1, 2, 4, 3, 9, 8, 7, 6, 5], &[10, 1, 2, 4, 3, 9, 8, 7, 6, 5]),
            (&[3, 1, 2, 9, 8, 7, 6, 5, 4], &[3, 1, 2, 9, 8, 10, 7, 6, 5, 4]),
            (&[1, 9, 8, 7, 6, 5, 4, 3, 2], &[1, 9, 8, 7, 6, 5, 4, 3, 2, 10]),
        ];
        for (pi, sigma) in cases {
            let got = encode_single(&perm(pi), 0).unwrap();
            assert_eq!(got.as_slice(), sigma);
            assert!(lev_member(&got, 0));
        }
    }

    #[test]
    fn decode_example_deletions() {
        let sigma = [2, 1, 4, 3, 6, 5, 8, 7, 10, 9];
        for i in 0..10 {
            let mut y = sigma.to_vec();
            y.remove(i);
            assert_eq!(decode_single(&y, 0).unwrap().as_slice(), &sigma);
            assert_eq!(decode_message(&y, 0).unwrap().as_slice(), &[2, 1, 4, 3, 6, 5, 8, 7, 9]);
        }
    }

    #[test]
    fn smallest_length() {
        for a in 0..2 {
            let sigma = encode_single(&perm(&[1]), a).unwrap();
            assert!(lev_member(&sigma, a));
            for i in 0..2 {
                let mut y = sigma.as_slice().to_vec();
                y.remove(i);
                assert_eq!(decode_single(&y, a).unwrap(), sigma);
            }
        }
    }
}
