use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Pattern `0^s 1^s`, density window `delta` and locate targets
/// `a1 = n_p mod 4`, `a2 = VT(alpha_p) mod 2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseParams {
    pub s: usize,
    pub delta: usize,
    pub a1: u64,
    pub a2: u64,
}

/// `s * 2^(2s+1) * ceil(log2 n)`.
pub fn default_delta(n: usize, s: usize) -> usize {
    let log = (usize::BITS - n.saturating_sub(1).leading_zeros()) as usize;
    s * (1usize << (2 * s + 1)) * log.max(1)
}

fn matches_at(x: &[u8], i: usize, s: usize) -> bool {
    x[i..i + s].iter().all(|&b| b == 0) && x[i + s..i + 2 * s].iter().all(|&b| b == 1)
}

/// Bit `i` is 1 iff the pattern `0^s 1^s` starts at position `i`.
pub fn p_indicator(x: &[u8], s: usize) -> Vec<u8> {
    let n = x.len();
    let mut out = vec![0u8; n];
    if s > 0 && 2 * s <= n {
        for (i, bit) in out.iter_mut().enumerate().take(n - 2 * s + 1) {
            *bit = u8::from(matches_at(x, i, s));
        }
    }
    out
}

/// Number of occurrences of `0^s 1^s`.
pub fn n_p(x: &[u8], s: usize) -> usize {
    p_indicator(x, s).iter().filter(|&&b| b == 1).count()
}

/// Gaps between consecutive ones of `(1, p_indicator(x), 1)`; length `n_p + 1`.
pub fn alpha_p(x: &[u8], s: usize) -> Vec<u64> {
    let ind = p_indicator(x, s);
    let mut gaps = Vec::new();
    let mut last = 0u64;
    for (i, &b) in ind.iter().enumerate() {
        if b == 1 {
            gaps.push(i as u64 + 1 - last);
            last = i as u64 + 1;
        }
    }
    gaps.push(x.len() as u64 + 1 - last);
    gaps
}

/// Every window of `delta` consecutive bits contains `0^s 1^s`.
pub fn is_dense(x: &[u8], s: usize, delta: usize) -> bool {
    let n = x.len();
    if n < delta {
        return true;
    }
    if delta < 2 * s {
        return false;
    }
    let ind = p_indicator(x, s);
    // a window [i, i + delta) needs a pattern start in [i, i + delta - 2s]
    let span = delta - 2 * s + 1;
    let mut last: Option<usize> = None;
    for (j, &b) in ind.iter().enumerate().take(n - 2 * s + 1) {
        if b == 1 {
            if let Some(l) = last {
                if j - l > span {
                    return false;
                }
            } else if j >= span {
                return false;
            }
            last = Some(j);
        }
    }
    // no window may start after the last occurrence
    matches!(last, Some(l) if l >= n - delta)
}

/// `(n_p mod 4, VT(alpha_p) mod 2n)`.
pub fn locate_syndromes(x: &[u8], s: usize) -> (u64, u64) {
    let alpha = alpha_p(x, s);
    let vt: u64 = alpha
        .iter()
        .enumerate()
        .map(|(i, &v)| (i as u64 + 1) * v)
        .sum();
    let a1 = (alpha.len() as u64 - 1) % 4;
    (a1, vt % (2 * x.len() as u64).max(1))
}

/// Membership in the locate code: dense, with matching syndromes.
pub fn locate_member(x: &[u8], params: &DenseParams) -> bool {
    is_dense(x, params.s, params.delta) && locate_syndromes(x, params.s) == (params.a1, params.a2)
}

/// Outcome of burst localization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocatedBurst {
    /// Burst length, `n - received.len()`.
    pub len: usize,
    /// Disjoint 1-based inclusive windows, ascending, each at most
    /// `delta + len - 1` long; one of them holds every deleted coordinate.
    /// Empty when nothing was deleted.
    pub windows: Vec<(usize, usize)>,
}

impl LocatedBurst {
    /// The window, when the locate syndromes single one out.
    pub fn interval(&self) -> Option<(usize, usize)> {
        match self.windows.as_slice() {
            [w] => Some(*w),
            _ => None,
        }
    }

    /// Smallest interval containing every window.
    pub fn hull(&self) -> Option<(usize, usize)> {
        Some((self.windows.first()?.0, self.windows.last()?.1))
    }
}

/// Burst starts (1-based, ascending) for which some reinsertion of `n -
/// received.len()` bits yields a member of the locate code.
pub(crate) fn locate_candidates(received: &[u8], n: usize, params: &DenseParams) -> Vec<usize> {
    let len = n - received.len();
    let mut starts = Vec::new();
    let mut x = Vec::with_capacity(n);
    for start in 1..=received.len() + 1 {
        for bits in 0u32..(1u32 << len) {
            x.clear();
            x.extend_from_slice(&received[..start - 1]);
            x.extend((0..len).map(|b| ((bits >> (len - 1 - b)) & 1) as u8));
            x.extend_from_slice(&received[start - 1..]);
            if locate_member(&x, params) {
                starts.push(start);
                break;
            }
        }
    }
    starts
}

/// Groups ascending burst starts greedily into runs spanning fewer than
/// `delta` starts; returns the deletion hull of each run.
pub(crate) fn windows(starts: &[usize], len: usize, delta: usize) -> Vec<(usize, usize)> {
    let Some((&head, rest)) = starts.split_first() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let (mut first, mut last) = (head, head);
    for &st in rest {
        if st - first >= delta {
            out.push((first, last + len - 1));
            first = st;
        }
        last = st;
    }
    out.push((first, last + len - 1));
    out
}

/// Localizes a burst of `s' = n - received.len() <= s_max` deletions in the
/// parity vector of a locate-code member.
///
/// Every reinsertion of `s'` bits at every position is tested against the
/// locate code and the consistent burst positions are grouped into windows of
/// at most `delta + s' - 1` coordinates. The syndromes do not always single
/// out one window: distinct locate-code members can share a received word,
/// so several windows may be returned, and the true one is among them.
pub fn locate_burst(received: &[u8], s_max: usize, n: usize, params: &DenseParams) -> Result<LocatedBurst> {
    if received.len() > n || n - received.len() > s_max {
        return Err(Error::invalid(format!(
            "received length {} is not n - s' for 0 <= s' <= {}",
            received.len(),
            s_max
        )));
    }
    if received.iter().any(|&b| b > 1) {
        return Err(Error::invalid("binary word has entries other than 0 and 1"));
    }
    let len = n - received.len();
    if len == 0 {
        return Ok(LocatedBurst { len, windows: Vec::new() });
    }
    let starts = locate_candidates(received, n, params);
    if starts.is_empty() {
        return Err(Error::decode("no burst position is consistent with the locate code"));
    }
    Ok(LocatedBurst {
        len,
        windows: windows(&starts, len, params.delta),
    })
}
