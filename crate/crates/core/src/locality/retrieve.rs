use serde::{Deserialize, Serialize};

use super::covering_block_pair;
use crate::error::{Error, Result};
use crate::perm::{multiset_minus, next_permutation, project};

/// Shape and targets of the block-pair retrieval constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RetrieveParams {
    pub n: usize,
    pub s: usize,
    #[serde(rename = "P")]
    pub p: usize,
    pub c1: u64,
    pub c2: u64,
}

impl RetrieveParams {
    pub fn new(n: usize, s: usize, p: usize, c1: u64, c2: u64) -> Result<Self> {
        check_shape(n, s, p)?;
        let m = (2 * p * s) as u64;
        if c1 >= m || c2 >= m {
            return Err(Error::invalid(format!("retrieve residues must lie in Z_{}", m)));
        }
        Ok(RetrieveParams { n, s, p, c1, c2 })
    }

    pub fn modulus(&self) -> u64 {
        (2 * self.p * self.s) as u64
    }
}

fn check_shape(n: usize, s: usize, p: usize) -> Result<()> {
    if s == 0 || p == 0 || n == 0 || !n.is_multiple_of(2 * p * s) {
        return Err(Error::shape(format!(
            "2Ps = {} must divide n = {}",
            2 * p * s,
            n
        )));
    }
    Ok(())
}

/// Sum of the first array row (`s` rows) of the projection of `pair`.
pub fn pair_first_row_sum(pair: &[u32], s: usize) -> u64 {
    project(pair).iter().step_by(s).map(|&v| v as u64).sum()
}

fn block_pair(x: &[u32], w: usize, k: usize) -> Vec<u32> {
    let blocks = x.len() / w;
    let next = if k == blocks { 1 } else { k + 1 };
    let mut out = Vec::with_capacity(2 * w);
    out.extend_from_slice(&x[(k - 1) * w..k * w]);
    out.extend_from_slice(&x[(next - 1) * w..next * w]);
    out
}

/// `(c1, c2)`: projected first-row sums over the block pairs `(2i-1, 2i)` and
/// `(2i, 2i+1)` (last block wrapping to the first), reduced mod `2Ps`.
pub fn retrieve_syndromes(sigma: &[u32], s: usize, p: usize) -> Result<(u64, u64)> {
    check_shape(sigma.len(), s, p)?;
    let w = p * s;
    let blocks = sigma.len() / w;
    let m = (2 * w) as u64;
    let mut c = [0u64; 2];
    for k in 1..=blocks {
        c[(k + 1) % 2] += pair_first_row_sum(&block_pair(sigma, w, k), s);
    }
    Ok((c[0] % m, c[1] % m))
}

struct PairContext {
    k: usize,
    /// Target first-row sum of the erroneous pair, mod 2Ps.
    c: u64,
    /// Received entries inside the pair.
    v: Vec<u32>,
    /// Entries deleted from the pair.
    deleted: Vec<u32>,
    /// Full content of the pair, ascending.
    sorted_pair: Vec<u32>,
}

fn pair_context(
    received: &[u32],
    full: &[u32],
    s: usize,
    p: usize,
    row_interval: (usize, usize),
    c1: u64,
    c2: u64,
) -> Result<PairContext> {
    let n = received.len() + s;
    if full.len() != n {
        return Err(Error::invalid(format!(
            "multiset has {} entries, expected {}",
            full.len(),
            n
        )));
    }
    check_shape(n, s, p)?;
    let w = p * s;
    let m = (2 * w) as u64;
    if c1 >= m || c2 >= m {
        return Err(Error::invalid(format!("retrieve residues must lie in Z_{}", m)));
    }
    let (lo, hi) = row_interval;
    let k = covering_block_pair(n, s, p, (lo.saturating_sub(1).max(1), hi))?;
    let blocks = n / w;
    let block = |b: usize| -> &[u32] {
        if b < k {
            &received[(b - 1) * w..b * w]
        } else {
            &received[(b - 1) * w - s..b * w - s]
        }
    };
    let mut others = 0u64;
    let mut b = if k % 2 == 1 { 1 } else { 2 };
    while b <= blocks {
        if b != k {
            let next = if b == blocks { 1 } else { b + 1 };
            let mut pair = block(b).to_vec();
            pair.extend_from_slice(block(next));
            others += pair_first_row_sum(&pair, s);
        }
        b += 2;
    }
    let target = if k % 2 == 1 { c1 } else { c2 };
    let c = (target + m - others % m) % m;
    let v = received[(k - 1) * w..(k + 1) * w - s].to_vec();
    let mut outside = received[..(k - 1) * w].to_vec();
    outside.extend_from_slice(&received[(k + 1) * w - s..]);
    let sorted_pair = multiset_minus(full, &outside)
        .ok_or_else(|| Error::decode("received word is not drawn from the multiset"))?;
    let deleted = multiset_minus(&sorted_pair, &v)
        .ok_or_else(|| Error::decode("received word is not drawn from the multiset"))?;
    Ok(PairContext {
        k,
        c,
        v,
        deleted,
        sorted_pair,
    })
}

/// Value deleted from the first array row by a burst of length `s`.
///
/// `row_interval` (1-based, inclusive, first-row coordinates of the original
/// word) must contain the first-row deletion; `full` is the multiset of all
/// entries of the original word. With distinct entries the value follows
/// directly from the pair's first-row sum; with repeated entries every burst
/// placement and ordering of the deleted entries inside the pair is tried.
pub fn retrieve_missing_symbol(
    received: &[u32],
    full: &[u32],
    s: usize,
    p: usize,
    row_interval: (usize, usize),
    c1: u64,
    c2: u64,
) -> Result<u32> {
    let ctx = pair_context(received, full, s, p, row_interval, c1, c2)?;
    if ctx.sorted_pair.windows(2).any(|w| w[0] == w[1]) {
        return enumerate(&ctx, s, p, row_interval);
    }
    let m = (2 * p * s) as u64;
    let rank = |e: u32| ctx.sorted_pair.binary_search(&e).expect("entry of the pair") as u64 + 1;
    let known: u64 = ctx.v.iter().step_by(s).map(|&e| rank(e)).sum();
    let mut t = (ctx.c + m - known % m) % m;
    if t == 0 {
        t = m;
    }
    let value = ctx.sorted_pair[t as usize - 1];
    if !ctx.deleted.contains(&value) {
        return Err(Error::decode(format!(
            "retrieved value {} is not among the deleted entries",
            value
        )));
    }
    Ok(value)
}

/// Exhaustive variant of [`retrieve_missing_symbol`]: tries every burst
/// placement consistent with `row_interval` and every ordering of the deleted
/// entries, and returns the unique first-row value matching the pair sum.
pub fn retrieve_by_enumeration(
    received: &[u32],
    full: &[u32],
    s: usize,
    p: usize,
    row_interval: (usize, usize),
    c1: u64,
    c2: u64,
) -> Result<u32> {
    let ctx = pair_context(received, full, s, p, row_interval, c1, c2)?;
    enumerate(&ctx, s, p, row_interval)
}

fn enumerate(ctx: &PairContext, s: usize, p: usize, row_interval: (usize, usize)) -> Result<u32> {
    let m = (2 * p * s) as u64;
    let w = 2 * p * s;
    let first_col = (ctx.k - 1) * p;
    let mut order = ctx.deleted.clone();
    order.sort_unstable();
    let mut found: Vec<u32> = Vec::new();
    let mut pair = Vec::with_capacity(w);
    loop {
        for off in 0..=w - s {
            let q = off.div_ceil(s) * s;
            let col = first_col + q / s + 1;
            if col < row_interval.0 || col > row_interval.1 {
                continue;
            }
            pair.clear();
            pair.extend_from_slice(&ctx.v[..off]);
            pair.extend_from_slice(&order);
            pair.extend_from_slice(&ctx.v[off..]);
            if pair_first_row_sum(&pair, s) % m == ctx.c && !found.contains(&pair[q]) {
                found.push(pair[q]);
            }
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    match found.len() {
        1 => Ok(found[0]),
        0 => Err(Error::decode("no burst placement matches the retrieve syndrome")),
        _ => Err(Error::decode(format!(
            "retrieve syndrome is consistent with first-row values {:?}",
            found
        ))),
    }
}
