//! Brute-force oracles shared by the integration tests. Each one is written
//! from the definitions alone and shares no code with the library routines it
//! checks.
#![allow(dead_code)]

/// All permutations of `1..=k` in lexicographic order, built recursively by
/// always trying the smallest unused value first.
pub fn lex_permutations(k: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Vec<u32>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u32 + 1);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Every word over `0..q` of length `n`.
pub fn all_words(n: usize, q: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..q).map(move |v| {
                    let mut w = w.clone();
                    w.push(v);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn bits(x: &[u32]) -> Vec<u8> {
    x.iter().map(|&v| v as u8).collect()
}

/// Distinct words obtained by inserting one symbol from `alphabet` at a
/// 1-based position in `lo..=hi` of `y` and accepted by `keep`.
pub fn insertions<T: Copy + Ord>(
    y: &[T],
    alphabet: &[T],
    lo: usize,
    hi: usize,
    keep: impl Fn(&[T]) -> bool,
) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = Vec::new();
    for pos in lo..=hi {
        for &v in alphabet {
            let mut w = y.to_vec();
            w.insert(pos - 1, v);
            if keep(&w) && !out.contains(&w) {
                out.push(w);
            }
        }
    }
    out.sort();
    out
}

/// `1` where `x[i+1] >= x[i]`, from the definition.
pub fn signature_of(x: &[u32]) -> Vec<u8> {
    (1..x.len()).map(|i| u8::from(x[i] >= x[i - 1])).collect()
}

pub fn weighted_sum(x: &[u8]) -> u64 {
    x.iter().enumerate().map(|(i, &b)| (i as u64 + 1) * b as u64).sum()
}

/// Goodness from the definition: no `P` equal consecutive signature bits in
/// the first array row.
pub fn good_by_scan(x: &[u32], s: usize, p: usize) -> bool {
    let row: Vec<u32> = x.iter().step_by(s).copied().collect();
    let sig = signature_of(&row);
    !sig.windows(p).any(|w| w.iter().all(|&b| b == w[0]))
}

/// Removes `len` entries starting at 1-based `start`.
pub fn remove_burst<T: Copy>(x: &[T], start: usize, len: usize) -> Vec<T> {
    let mut y = x[..start - 1].to_vec();
    y.extend_from_slice(&x[start - 1 + len..]);
    y
}
