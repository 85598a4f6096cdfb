//! Binary and q-ary VT / SVT syndromes and their single-deletion decoders.

use crate::error::{Error, Result};
use crate::perm::sig;

/// `sum(i * x_i)` with 1-based `i`, unreduced.
pub fn vt_syndrome(x: &[u8]) -> u64 {
    x.iter()
        .enumerate()
        .map(|(i, &b)| (i as u64 + 1) * b as u64)
        .sum()
}

pub(crate) fn weight(x: &[u8]) -> u64 {
    x.iter().map(|&b| b as u64).sum()
}

/// Sum of the entries of a q-ary word.
pub fn symbol_sum(x: &[u32]) -> u64 {
    x.iter().map(|&v| v as u64).sum()
}

/// `x` is in `VT_a(n)` (modulus `n + 1`).
pub fn vt_member(x: &[u8], a: u64) -> bool {
    vt_syndrome(x) % (x.len() as u64 + 1) == a
}

/// `x` is in `SVT_{a,b}(n, P)`: VT syndrome `a` mod `P`, weight parity `b`.
pub fn svt_member(x: &[u8], p: u64, a: u64, b: u64) -> bool {
    vt_syndrome(x) % p == a && weight(x) % 2 == b
}

/// `x` is in `VT_{a,b}(n, q)`: signature in `VT_a(n - 1)` and symbol sum `b` mod `q`.
pub fn qary_vt_member(x: &[u32], q: u64, a: u64, b: u64) -> bool {
    x.len() >= 2 && vt_member(&sig(x), a) && symbol_sum(x) % q == b
}

/// `x` is in `SVT_{a,b,c}(n, P, q)`.
pub fn qary_svt_member(x: &[u32], q: u64, p: u64, a: u64, b: u64, c: u64) -> bool {
    x.len() >= 2 && svt_member(&sig(x), p, a, b) && symbol_sum(x) % q == c
}

/// Result of a binary VT decode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VtDecoded {
    pub word: Vec<u8>,
    /// Maximal run of the decoded word (1-based, inclusive) in which every
    /// deletion yields the received word.
    pub run: (usize, usize),
}

/// One distinct word obtained by inserting a symbol, with the range of
/// insertion positions (1-based, inclusive) that produce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement<T> {
    pub word: Vec<T>,
    pub first: usize,
    pub last: usize,
}

/// Inserts `symbol` at each position `lo..=hi` of `received` (clamped to the
/// valid range) and keeps the distinct results accepted by `accept`.
pub(crate) fn place<T, F>(received: &[T], symbol: T, lo: usize, hi: usize, accept: F) -> Vec<Placement<T>>
where
    T: Copy + PartialEq,
    F: Fn(&[T]) -> bool,
{
    let lo = lo.max(1);
    let hi = hi.min(received.len() + 1);
    let mut out: Vec<Placement<T>> = Vec::new();
    let mut word = Vec::with_capacity(received.len() + 1);
    for pos in lo..=hi {
        word.clear();
        word.extend_from_slice(&received[..pos - 1]);
        word.push(symbol);
        word.extend_from_slice(&received[pos - 1..]);
        if !accept(&word) {
            continue;
        }
        match out.iter_mut().find(|p| p.word == word) {
            Some(p) => p.last = pos,
            None => out.push(Placement {
                word: word.clone(),
                first: pos,
                last: pos,
            }),
        }
    }
    out
}

/// Maximal run of equal entries of `x` around the 1-based position `pos`.
pub(crate) fn run_around<T: PartialEq>(x: &[T], pos: usize) -> (usize, usize) {
    let i = pos - 1;
    let mut lo = i;
    while lo > 0 && x[lo - 1] == x[i] {
        lo -= 1;
    }
    let mut hi = i;
    while hi + 1 < x.len() && x[hi + 1] == x[i] {
        hi += 1;
    }
    (lo + 1, hi + 1)
}

fn check_bits(x: &[u8]) -> Result<()> {
    if x.iter().any(|&b| b > 1) {
        return Err(Error::invalid("binary word has entries other than 0 and 1"));
    }
    Ok(())
}

/// Levenshtein's decoder for `VT_a(n)`: restores the unique codeword of
/// length `n` containing `received` (length `n - 1`).
pub fn binary_vt_decode(received: &[u8], n: usize, a: u64) -> Result<VtDecoded> {
    check_bits(received)?;
    if n == 0 || received.len() + 1 != n {
        return Err(Error::invalid(format!(
            "received length {} does not match n - 1 = {}",
            received.len(),
            n as i64 - 1
        )));
    }
    let m = n as u64 + 1;
    if a >= m {
        return Err(Error::invalid(format!("residue {} outside Z_{}", a, m)));
    }
    let w = weight(received);
    let delta = (a + m - vt_syndrome(received) % m) % m;
    let mut word = Vec::with_capacity(n);
    let pos;
    if delta <= w {
        // a 0 with `delta` ones to its right
        let mut ones_right = w;
        let mut i = 0;
        while ones_right > delta {
            ones_right -= received[i] as u64;
            i += 1;
        }
        pos = i;
        word.extend_from_slice(&received[..i]);
        word.push(0);
        word.extend_from_slice(&received[i..]);
    } else {
        // a 1 with `delta - w - 1` zeros to its left
        let target = delta - w - 1;
        let mut zeros = 0;
        let mut i = 0;
        while zeros < target {
            zeros += u64::from(received[i] == 0);
            i += 1;
        }
        pos = i;
        word.extend_from_slice(&received[..i]);
        word.push(1);
        word.extend_from_slice(&received[i..]);
    }
    if vt_syndrome(&word) % m != a {
        return Err(Error::decode("no VT codeword contains the received word"));
    }
    let run = run_around(&word, pos + 1);
    Ok(VtDecoded { word, run })
}

/// All distinct words of `SVT_{a,b}(n, P)` obtained by one insertion at a
/// position in `lo..=hi`.
pub(crate) fn svt_candidates(
    received: &[u8],
    p: u64,
    a: u64,
    b: u64,
    lo: usize,
    hi: usize,
) -> Vec<Placement<u8>> {
    let bit = ((b + 2 - weight(received) % 2) % 2) as u8;
    place(received, bit, lo, hi, |x| vt_syndrome(x) % p == a)
}

fn check_hint(hint: (usize, usize), n: usize, p: u64) -> Result<()> {
    let (lo, hi) = hint;
    if lo == 0 || lo > hi || hi > n {
        return Err(Error::invalid(format!(
            "hint [{}, {}] is not an interval inside [1, {}]",
            lo, hi, n
        )));
    }
    if (hi - lo + 1) as u64 > p + 1 {
        return Err(Error::invalid(format!(
            "hint [{}, {}] is longer than P + 1 = {}",
            lo,
            hi,
            p + 1
        )));
    }
    Ok(())
}

fn unique<T>(mut c: Vec<Placement<T>>, what: &str) -> Result<Placement<T>> {
    match c.len() {
        1 => Ok(c.pop().expect("one candidate")),
        0 => Err(Error::decode(format!("no {} codeword is consistent with the received word", what))),
        k => Err(Error::decode(format!("{} distinct {} codewords are consistent with the received word", k, what))),
    }
}

/// Decoder for `SVT_{a,b}(n, P)` given that the deleted position lies in
/// `hint` (1-based, inclusive, at most `P + 1` positions).
pub fn svt_decode(
    received: &[u8],
    n: usize,
    p: u64,
    a: u64,
    b: u64,
    hint: (usize, usize),
) -> Result<Vec<u8>> {
    check_bits(received)?;
    if received.len() + 1 != n {
        return Err(Error::invalid("received length must be n - 1"));
    }
    if p == 0 || a >= p || b > 1 {
        return Err(Error::invalid("SVT parameters need 0 <= a < P and b in {0, 1}"));
    }
    check_hint(hint, n, p)?;
    let c = svt_candidates(received, p, a, b, hint.0, hint.1);
    Ok(unique(c, "SVT")?.word)
}

/// Places a known missing symbol into `received` so that the signature of the
/// result is in `VT_a(len)` (modulus `len + 1`, where `len = received.len()`
/// is the signature length of the result).
///
/// The deleted position is confined to the run returned by decoding the
/// received signature; the known symbol then pins the position inside that
/// monotone stretch. Returns the distinct words (at most one).
pub fn place_symbol_vt(received: &[u32], symbol: u32, a: u64) -> Result<Placement<u32>> {
    let c = place_symbol_vt_candidates(received, symbol, a)?;
    unique(c, "VT")
}

pub(crate) fn place_symbol_vt_candidates(
    received: &[u32],
    symbol: u32,
    a: u64,
) -> Result<Vec<Placement<u32>>> {
    let n = received.len() + 1;
    let m = n as u64;
    if a >= m {
        return Err(Error::invalid(format!("residue {} outside Z_{}", a, m)));
    }
    let (lo, hi) = if n >= 2 {
        let dec = binary_vt_decode(&sig(received), n - 1, a)?;
        (dec.run.0, dec.run.1 + 1)
    } else {
        (1, 1)
    };
    Ok(place(received, symbol, lo, hi, |x| vt_syndrome(&sig(x)) % m == a))
}

/// Decoder for the q-ary code `VT_{a,b}(n, q)` over the alphabet `0..q`.
///
/// The missing value is `b - Sum(received) mod q`; the signature residue
/// then fixes its position.
pub fn qary_vt_decode(received: &[u32], n: usize, q: u64, a: u64, b: u64) -> Result<Vec<u32>> {
    if received.len() + 1 != n || n < 2 {
        return Err(Error::invalid("received length must be n - 1 with n >= 2"));
    }
    if q < 2 || b >= q || a >= n as u64 {
        return Err(Error::invalid("q-ary VT parameters need q >= 2, 0 <= b < q, 0 <= a < n"));
    }
    if received.iter().any(|&v| v as u64 >= q) {
        return Err(Error::invalid(format!("symbol outside alphabet 0..{}", q)));
    }
    let missing = ((b + q - symbol_sum(received) % q) % q) as u32;
    Ok(place_symbol_vt(received, missing, a)?.word)
}

/// Inserts `symbol` within `hint` so that the signature lands in
/// `SVT_{a,b}(len, P)`; returns the distinct consistent words.
pub(crate) fn place_symbol_svt_candidates(
    received: &[u32],
    symbol: u32,
    p: u64,
    a: u64,
    b: u64,
    hint: (usize, usize),
) -> Vec<Placement<u32>> {
    place(received, symbol, hint.0, hint.1, |x| {
        let s = sig(x);
        vt_syndrome(&s) % p == a && weight(&s) % 2 == b
    })
}

/// Decoder for the q-ary code `SVT_{a,b,c}(n, P, q)` over the alphabet
/// `0..q`, given the deleted position within `hint`.
#[allow(clippy::too_many_arguments)]
pub fn qary_svt_decode(
    received: &[u32],
    n: usize,
    q: u64,
    p: u64,
    a: u64,
    b: u64,
    c: u64,
    hint: (usize, usize),
) -> Result<Vec<u32>> {
    if received.len() + 1 != n || n < 2 {
        return Err(Error::invalid("received length must be n - 1 with n >= 2"));
    }
    if q < 2 || c >= q || p == 0 || a >= p || b > 1 {
        return Err(Error::invalid(
            "q-ary SVT parameters need q >= 2, 0 <= c < q, 0 <= a < P, b in {0, 1}",
        ));
    }
    if received.iter().any(|&v| v as u64 >= q) {
        return Err(Error::invalid(format!("symbol outside alphabet 0..{}", q)));
    }
    check_hint(hint, n, p)?;
    let missing = ((c + q - symbol_sum(received) % q) % q) as u32;
    let cands = place_symbol_svt_candidates(received, missing, p, a, b, hint);
    Ok(unique(cands, "q-ary SVT")?.word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vt_syndrome_examples() {
        assert_eq!(vt_syndrome(&[0, 1, 0, 1, 1, 0, 0]), 11);
        assert_eq!(vt_syndrome(&[0, 0, 0]), 0);
        assert_eq!(vt_syndrome(&[1; 6]), 21);
    }

    #[test]
    fn binary_decode_example_row() {
        let d = binary_vt_decode(&[0, 1, 0, 1, 0, 0], 7, 3).unwrap();
        assert_eq!(d.word, vec![0, 1, 0, 1, 1, 0, 0]);
        assert_eq!(d.run, (4, 5));
        let d = binary_vt_decode(&[0, 0], 3, 0).unwrap();
        assert_eq!(d.word, vec![0, 0, 0]);
        assert!(binary_vt_decode(&[0, 2], 3, 0).is_err());
        assert!(binary_vt_decode(&[0, 0], 3, 4).is_err());
    }

    #[test]
    fn svt_decode_example() {
        let x = [1u8, 0, 1, 1, 0, 0, 1, 0];
        let p = 4;
        let a = vt_syndrome(&x) % p;
        let b = weight(&x) % 2;
        let mut y = x.to_vec();
        y.remove(4);
        assert_eq!(svt_decode(&y, 8, p, a, b, (3, 7)).unwrap(), x.to_vec());
        assert_eq!(svt_decode(&y, 8, p, a, b, (5, 5)).unwrap(), x.to_vec());
        assert!(matches!(
            svt_decode(&y, 8, p, a, b, (1, 8)),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn known_symbol_placement_first_row() {
        let row = [7, 2, 4, 1, 16, 14, 11];
        let p = place_symbol_vt(&row, 3, 3).unwrap();
        assert_eq!(p.word, vec![7, 2, 4, 1, 3, 16, 14, 11]);
        assert_eq!((p.first, p.last), (5, 5));
    }

    #[test]
    fn qary_binary_alphabet() {
        let x = [0u32, 1, 1, 0, 1];
        let a = vt_syndrome(&sig(&x)) % 5;
        let b = symbol_sum(&x) % 2;
        for i in 0..5 {
            let mut y = x.to_vec();
            y.remove(i);
            assert_eq!(qary_vt_decode(&y, 5, 2, a, b).unwrap(), x.to_vec());
        }
    }

    #[test]
    fn qary_svt_length_one_hint() {
        let x = [3u32, 0, 2, 2, 1, 3];
        let (q, p) = (4, 3);
        let s = sig(&x);
        let (a, b, c) = (vt_syndrome(&s) % p, weight(&s) % 2, symbol_sum(&x) % q);
        let mut y = x.to_vec();
        y.remove(2);
        assert_eq!(qary_svt_decode(&y, 6, q, p, a, b, c, (3, 3)).unwrap(), x.to_vec());
    }

    #[test]
    fn run_around_bounds() {
        assert_eq!(run_around(&[1, 1, 0, 0, 0], 4), (3, 5));
        assert_eq!(run_around(&[1, 1, 0], 1), (1, 2));
    }
}
