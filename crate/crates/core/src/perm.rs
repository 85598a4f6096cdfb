//! Permutation and multi-permutation fundamentals.
//!
//! Words are slices of `u32` with 1-based symbol values. Positions exposed
//! through the public API are 1-based as well; internally everything is
//! indexed from zero.
//!
//! The array view writes a word of length `n = s * t` column by column into
//! an `s x t` array, so the entry at row `i`, column `j` is `x[(j - 1) * s + i]`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Binary word (entries are 0 or 1).
pub type BinaryWord = Vec<u8>;

/// An arrangement of `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::invalid("permutation must be nonempty"));
        }
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::invalid(format!(
                    "{:?} is not a permutation of 1..={}",
                    entries, n
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(entries))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl AsRef<[u32]> for Permutation {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_word(&self.0))
    }
}

/// Per-symbol repetition counts `r = (r_1, ..., r_w)` of a multiset `M(n, r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct MultiplicityVector(Vec<usize>);

impl MultiplicityVector {
    pub fn new(r: Vec<usize>) -> Result<Self> {
        if r.is_empty() || r.contains(&0) {
            return Err(Error::invalid(
                "multiplicity vector needs at least one entry and every entry >= 1",
            ));
        }
        Ok(MultiplicityVector(r))
    }

    /// `w` symbols, each repeated `r` times.
    pub fn regular(r: usize, w: usize) -> Result<Self> {
        Self::new(vec![r; w])
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// Number of distinct symbols.
    pub fn w(&self) -> usize {
        self.0.len()
    }

    /// Total length `n = r_1 + ... + r_w`.
    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_regular(&self) -> bool {
        self.0.iter().all(|&r| r == self.0[0])
    }

    pub fn max(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// The multiset `M(n, r)` in ascending order.
    pub fn multiset(&self) -> Vec<u32> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| std::iter::repeat_n(i as u32 + 1, r))
            .collect()
    }

    /// Number of distinct arrangements, `n! / prod(r_i!)`.
    pub fn arrangements(&self) -> BigUint {
        let mut total = factorial(self.n());
        for &r in &self.0 {
            total /= factorial(r);
        }
        total
    }
}

impl TryFrom<Vec<usize>> for MultiplicityVector {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        MultiplicityVector::new(v)
    }
}

impl From<MultiplicityVector> for Vec<usize> {
    fn from(m: MultiplicityVector) -> Self {
        m.0
    }
}

/// An arrangement of the multiset `M(n, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPermutation {
    entries: Vec<u32>,
    multiplicity: MultiplicityVector,
}

impl MultiPermutation {
    pub fn new(entries: Vec<u32>, multiplicity: MultiplicityVector) -> Result<Self> {
        let mut counts = vec![0usize; multiplicity.w() + 1];
        for &v in &entries {
            let v = v as usize;
            if v == 0 || v > multiplicity.w() {
                return Err(Error::invalid(format!(
                    "symbol {} outside 1..={}",
                    v,
                    multiplicity.w()
                )));
            }
            counts[v] += 1;
        }
        if counts[1..] != *multiplicity.counts() {
            return Err(Error::invalid(format!(
                "{:?} does not match multiplicities {:?}",
                entries,
                multiplicity.counts()
            )));
        }
        Ok(MultiPermutation {
            entries,
            multiplicity,
        })
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.entries
    }

    pub fn multiplicity(&self) -> &MultiplicityVector {
        &self.multiplicity
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.entries
    }
}

/// Shape of the column-major `s x t` array view of a word of length `s * t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArrayShape {
    pub s: usize,
    pub t: usize,
}

impl ArrayShape {
    pub fn new(n: usize, s: usize) -> Result<Self> {
        if s == 0 || !n.is_multiple_of(s) {
            return Err(Error::shape(format!("{} rows do not divide length {}", s, n)));
        }
        Ok(ArrayShape { s, t: n / s })
    }

    pub fn n(&self) -> usize {
        self.s * self.t
    }
}

/// Signature: bit `i` is 1 iff `x[i + 1] >= x[i]`.
pub fn signature(x: &[u32]) -> Result<BinaryWord> {
    if x.len() < 2 {
        return Err(Error::invalid("signature needs a word of length >= 2"));
    }
    Ok(sig(x))
}

/// Signature without the length precondition; words shorter than 2 map to
/// the empty word.
pub(crate) fn sig(x: &[u32]) -> BinaryWord {
    x.windows(2).map(|w| u8::from(w[1] >= w[0])).collect()
}

/// Permutation projection: ranks the entries, ties broken by order of
/// appearance.
pub fn projection(u: &[u32]) -> Result<Permutation> {
    if u.is_empty() {
        return Err(Error::invalid("projection of the empty word"));
    }
    Ok(Permutation(project(u)))
}

pub(crate) fn project(u: &[u32]) -> Vec<u32> {
    let mut idx: Vec<usize> = (0..u.len()).collect();
    idx.sort_by_key(|&i| (u[i], i));
    let mut out = vec![0u32; u.len()];
    for (order, &i) in idx.iter().enumerate() {
        out[i] = order as u32 + 1;
    }
    out
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

// 34! < 2^128 < 35!
const U128_FACTORIAL_LIMIT: usize = 34;

fn factorial_u128(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Lehmer digits: `digits[i]` counts later entries smaller than `p[i]`.
fn lehmer_digits(p: &[u32]) -> Vec<usize> {
    (0..p.len())
        .map(|i| p[i + 1..].iter().filter(|&&x| x < p[i]).count())
        .collect()
}

pub(crate) fn rank_of(p: &[u32]) -> BigUint {
    let n = p.len();
    let digits = lehmer_digits(p);
    if n <= U128_FACTORIAL_LIMIT {
        let mut rank: u128 = 0;
        for (i, &d) in digits.iter().enumerate() {
            rank += d as u128 * factorial_u128(n - 1 - i);
        }
        BigUint::from(rank + 1)
    } else {
        let mut rank = BigUint::zero();
        for (i, &d) in digits.iter().enumerate() {
            rank += factorial(n - 1 - i) * d;
        }
        rank + 1u32
    }
}

/// Position of `sigma` in the lexicographic order of `S_n`, counted from 1.
pub fn lex_rank(sigma: &Permutation) -> BigUint {
    rank_of(&sigma.0)
}

/// Inverse of [`lex_rank`].
pub fn lex_unrank(rank: &BigUint, n: usize) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::invalid("length must be >= 1"));
    }
    if rank.is_zero() || *rank > factorial(n) {
        return Err(Error::invalid(format!("rank {} outside [1, {}!]", rank, n)));
    }
    let mut rest: BigUint = rank - 1u32;
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial(i);
        let d = (&rest / &f).to_usize().expect("digit fits");
        rest %= &f;
        out.push(pool.remove(d));
    }
    Ok(Permutation(out))
}

/// `u64` unranking from a 0-based index; used by the enumeration loops.
pub(crate) fn perm_from_index(mut index: u64, n: usize) -> Vec<u32> {
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f: u64 = (1..=i as u64).product();
        let d = (index / f) as usize;
        index %= f;
        out.push(pool.remove(d));
    }
    out
}

/// Permutation rank `mu(u) = lex_rank(projection(u))`.
pub fn perm_rank(u: &[u32]) -> Result<BigUint> {
    if u.is_empty() {
        return Err(Error::invalid("rank of the empty word"));
    }
    Ok(rank_of(&project(u)))
}

/// Rebuilds the word with the given permutation rank over the given multiset
/// of entries.
///
/// With repeated entries only ranks whose projection keeps equal entries in
/// appearance order are realizable; any other rank yields
/// [`Error::NoPreimage`].
pub fn reconstruct_from_rank(rank: &BigUint, multiset: &[u32]) -> Result<Vec<u32>> {
    let beta = lex_unrank(rank, multiset.len())?;
    let mut sorted = multiset.to_vec();
    sorted.sort_unstable();
    let word: Vec<u32> = beta.0.iter().map(|&b| sorted[b as usize - 1]).collect();
    if project(&word) != beta.0 {
        return Err(Error::NoPreimage {
            rank: rank.to_string(),
        });
    }
    Ok(word)
}

fn check_rows(n: usize, s: usize) -> Result<ArrayShape> {
    ArrayShape::new(n, s)
}

/// Row `i` (1-based) of the `s`-row array view.
pub fn array_row(x: &[u32], s: usize, i: usize) -> Result<Vec<u32>> {
    let shape = check_rows(x.len(), s)?;
    if i == 0 || i > shape.s {
        return Err(Error::shape(format!("row {} outside 1..={}", i, shape.s)));
    }
    Ok(x.iter().skip(i - 1).step_by(s).copied().collect())
}

/// Column `j` (1-based) of the `s`-row array view.
pub fn array_col(x: &[u32], s: usize, j: usize) -> Result<Vec<u32>> {
    let shape = check_rows(x.len(), s)?;
    if j == 0 || j > shape.t {
        return Err(Error::shape(format!("column {} outside 1..={}", j, shape.t)));
    }
    Ok(x[(j - 1) * s..j * s].to_vec())
}

/// Block `k` (1-based): columns `(k - 1) P + 1 ..= k P`, concatenated.
///
/// Index `n / (P s) + 1` aliases block 1.
pub fn array_block(x: &[u32], s: usize, p: usize, k: usize) -> Result<Vec<u32>> {
    let n = x.len();
    if s == 0 || p == 0 || !n.is_multiple_of(p * s) {
        return Err(Error::shape(format!(
            "blocks of {} columns with {} rows do not tile length {}",
            p, s, n
        )));
    }
    let blocks = n / (p * s);
    let k = if k == blocks + 1 { 1 } else { k };
    if k == 0 || k > blocks {
        return Err(Error::shape(format!("block {} outside 1..={}", k, blocks)));
    }
    let w = p * s;
    Ok(x[(k - 1) * w..k * w].to_vec())
}

/// Rearranges `x` into the next lexicographically larger arrangement of the
/// same multiset. Returns `false` (leaving `x` sorted ascending) after the
/// last one.
pub fn next_permutation(x: &mut [u32]) -> bool {
    if x.len() < 2 {
        return false;
    }
    let mut i = x.len() - 1;
    while i > 0 && x[i - 1] >= x[i] {
        i -= 1;
    }
    if i == 0 {
        x.reverse();
        return false;
    }
    let mut j = x.len() - 1;
    while x[j] <= x[i - 1] {
        j -= 1;
    }
    x.swap(i - 1, j);
    x[i..].reverse();
    true
}

/// Multiset difference `full - remove`, both given as arbitrary-order words.
/// Fails when `remove` is not contained in `full`.
pub(crate) fn multiset_minus(full: &[u32], remove: &[u32]) -> Option<Vec<u32>> {
    let max = full.iter().chain(remove).copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0i64; max + 1];
    for &v in full {
        counts[v as usize] += 1;
    }
    for &v in remove {
        counts[v as usize] -= 1;
        if counts[v as usize] < 0 {
            return None;
        }
    }
    let mut out = Vec::with_capacity(full.len().saturating_sub(remove.len()));
    for (v, &c) in counts.iter().enumerate() {
        for _ in 0..c {
            out.push(v as u32);
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_examples() {
        assert_eq!(
            signature(&[7, 2, 4, 1, 3, 16, 14, 11]).unwrap(),
            vec![0, 1, 0, 1, 1, 0, 0]
        );
        assert_eq!(signature(&[1, 2, 3]).unwrap(), vec![1, 1]);
        assert_eq!(signature(&[1, 1, 2]).unwrap(), vec![1, 1]);
        assert!(signature(&[4]).is_err());
    }

    #[test]
    fn projection_examples() {
        assert_eq!(
            projection(&[6, 2, 5, 1, 8, 4]).unwrap().as_slice(),
            &[5, 2, 4, 1, 6, 3]
        );
        assert_eq!(
            projection(&[1, 1, 2, 2, 1, 2]).unwrap().as_slice(),
            &[1, 2, 4, 5, 3, 6]
        );
        assert!(projection(&[]).is_err());
    }

    #[test]
    fn rank_examples() {
        let r = |v: Vec<u32>| lex_rank(&Permutation::new(v).unwrap());
        assert_eq!(r(vec![1, 2, 3, 4]), BigUint::from(1u32));
        assert_eq!(r(vec![1, 2, 4, 3]), BigUint::from(2u32));
        assert_eq!(r(vec![1, 3, 2, 4]), BigUint::from(3u32));
        assert_eq!(perm_rank(&[1, 3, 6, 5]).unwrap(), BigUint::from(2u32));
        assert_eq!(perm_rank(&[1, 12, 3, 15]).unwrap(), BigUint::from(3u32));
        assert_eq!(perm_rank(&[11, 10, 7, 8]).unwrap(), BigUint::from(23u32));
    }

    #[test]
    fn unrank_examples_and_range() {
        let u = |r: u32| lex_unrank(&BigUint::from(r), 4).map(Permutation::into_vec);
        assert_eq!(u(1).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(u(2).unwrap(), vec![1, 2, 4, 3]);
        assert_eq!(u(24).unwrap(), vec![4, 3, 2, 1]);
        assert!(u(0).is_err());
        assert!(u(25).is_err());
    }

    #[test]
    fn reconstruct_examples() {
        let two = BigUint::from(2u32);
        assert_eq!(
            reconstruct_from_rank(&two, &[1, 3, 5, 6]).unwrap(),
            vec![1, 3, 6, 5]
        );
        assert_eq!(
            reconstruct_from_rank(&BigUint::from(3u32), &[1, 3, 12, 15]).unwrap(),
            vec![1, 12, 3, 15]
        );
        assert_eq!(
            reconstruct_from_rank(&BigUint::one(), &[5, 2, 2]).unwrap(),
            vec![2, 2, 5]
        );
        // (2,1,3) would put the second 2 before the first
        assert!(matches!(
            reconstruct_from_rank(&BigUint::from(3u32), &[2, 2, 5]),
            Err(Error::NoPreimage { .. })
        ));
    }

    #[test]
    fn large_rank_uses_bigint_path() {
        let n = 40;
        let rev: Vec<u32> = (1..=n as u32).rev().collect();
        let p = Permutation::new(rev.clone()).unwrap();
        assert_eq!(lex_rank(&p), factorial(n));
        assert_eq!(lex_unrank(&factorial(n), n).unwrap().into_vec(), rev);
    }

    #[test]
    fn array_views() {
        let sigma = [7, 8, 2, 5, 4, 9, 1, 12, 3, 15, 16, 13, 14, 6, 11, 10];
        assert_eq!(array_col(&sigma, 2, 1).unwrap(), vec![7, 8]);
        assert_eq!(array_col(&sigma, 2, 6).unwrap(), vec![16, 13]);
        assert_eq!(
            array_row(&sigma, 2, 1).unwrap(),
            vec![7, 2, 4, 1, 3, 16, 14, 11]
        );
        assert_eq!(array_row(&sigma, 1, 1).unwrap(), sigma.to_vec());
        assert_eq!(array_block(&sigma, 2, 2, 2).unwrap(), vec![4, 9, 1, 12]);
        assert_eq!(
            array_block(&sigma, 2, 2, 5).unwrap(),
            array_block(&sigma, 2, 2, 1).unwrap()
        );
        assert!(array_row(&sigma, 3, 1).is_err());
        assert!(array_col(&sigma, 2, 9).is_err());
        assert!(array_block(&sigma, 2, 3, 1).is_err());
    }

    #[test]
    fn multiplicity_and_multipermutation() {
        let r = MultiplicityVector::new(vec![3, 3, 3]).unwrap();
        assert!(r.is_regular());
        assert_eq!(r.n(), 9);
        assert_eq!(r.arrangements(), BigUint::from(1680u32));
        assert!(MultiPermutation::new(vec![3, 1, 3, 2, 2, 1, 2, 1, 3], r.clone()).is_ok());
        assert!(MultiPermutation::new(vec![3, 1, 3, 2, 2, 1, 2, 1, 1], r).is_err());
        assert!(MultiplicityVector::new(vec![2, 0]).is_err());
        assert!(!MultiplicityVector::new(vec![1, 2]).unwrap().is_regular());
    }

    #[test]
    fn next_permutation_walks_multiset() {
        let mut x = vec![1, 1, 2, 2];
        let mut count = 1;
        while next_permutation(&mut x) {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(x, vec![1, 1, 2, 2]);
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![]).is_err());
        assert_eq!(perm_from_index(0, 3), vec![1, 2, 3]);
        assert_eq!(perm_from_index(5, 3), vec![3, 2, 1]);
    }
}
