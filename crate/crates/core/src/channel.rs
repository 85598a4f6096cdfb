//! Stable deletion channels and their error balls.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A burst of `len` consecutive deletions starting at the 1-based `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurstSpec {
    pub start: usize,
    pub len: usize,
}

impl BurstSpec {
    pub fn new(start: usize, len: usize, n: usize) -> Result<Self> {
        if start == 0 || len == 0 || start + len - 1 > n {
            return Err(Error::invalid(format!(
                "burst [{}, {}] does not fit in a word of length {}",
                start,
                start as i64 + len as i64 - 1,
                n
            )));
        }
        Ok(BurstSpec { start, len })
    }

    /// Last deleted position, inclusive.
    pub fn end(&self) -> usize {
        self.start + self.len - 1
    }
}

/// Deletes the 1-based coordinates in `positions`; survivors keep their
/// values and relative order.
pub fn delete_stable<T: Copy>(x: &[T], positions: &[usize]) -> Result<Vec<T>> {
    let mut drop = vec![false; x.len()];
    for &p in positions {
        if p == 0 || p > x.len() {
            return Err(Error::invalid(format!(
                "coordinate {} outside [1, {}]",
                p,
                x.len()
            )));
        }
        if drop[p - 1] {
            return Err(Error::invalid(format!("coordinate {} listed twice", p)));
        }
        drop[p - 1] = true;
    }
    Ok(x.iter()
        .zip(&drop)
        .filter(|(_, &d)| !d)
        .map(|(&v, _)| v)
        .collect())
}

pub fn burst_delete<T: Copy>(x: &[T], spec: BurstSpec) -> Result<Vec<T>> {
    let spec = BurstSpec::new(spec.start, spec.len, x.len())?;
    Ok(cut(x, spec.start, spec.len))
}

/// Unchecked burst deletion for hot loops; `start` is 1-based.
pub(crate) fn cut<T: Copy>(x: &[T], start: usize, len: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(x.len() - len);
    out.extend_from_slice(&x[..start - 1]);
    out.extend_from_slice(&x[start - 1 + len..]);
    out
}

fn check_radius(n: usize, s: usize) -> Result<()> {
    if s == 0 || s >= n {
        return Err(Error::invalid(format!(
            "ball radius {} must satisfy 1 <= s < n = {}",
            s, n
        )));
    }
    Ok(())
}

/// All words reachable by one burst of exactly `s` deletions.
pub fn burst_ball<T: Copy + Ord>(x: &[T], s: usize) -> Result<BTreeSet<Vec<T>>> {
    check_radius(x.len(), s)?;
    Ok((1..=x.len() - s + 1).map(|i| cut(x, i, s)).collect())
}

/// All words reachable by one burst of length at most `s`.
pub fn var_burst_ball<T: Copy + Ord>(x: &[T], s: usize) -> Result<BTreeSet<Vec<T>>> {
    check_radius(x.len(), s)?;
    let mut out = BTreeSet::new();
    for len in 1..=s {
        out.extend((1..=x.len() - len + 1).map(|i| cut(x, i, len)));
    }
    Ok(out)
}

/// All words reachable by deleting any `s` coordinates.
pub fn deletion_ball<T: Copy + Ord>(x: &[T], s: usize) -> Result<BTreeSet<Vec<T>>> {
    check_radius(x.len(), s)?;
    let n = x.len();
    let mut out = BTreeSet::new();
    let mut idx: Vec<usize> = (1..=s).collect();
    loop {
        out.insert(delete_stable(x, &idx).expect("indices in range"));
        // next combination in lexicographic order
        let mut i = s;
        while i > 0 && idx[i - 1] == n - s + i {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..s {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Ok(out)
}

/// Bit `i` is 1 iff `x[i]` is odd.
pub fn parity_vector(x: &[u32]) -> Vec<u8> {
    x.iter().map(|&v| (v & 1) as u8).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_deletion_examples() {
        assert_eq!(delete_stable(&[2, 4, 5, 1, 6, 3], &[2, 4]).unwrap(), vec![2, 5, 6, 3]);
        let x = [3, 1, 3, 2, 2, 1, 2, 1, 3];
        assert_eq!(
            burst_delete(&x, BurstSpec { start: 2, len: 3 }).unwrap(),
            vec![3, 2, 1, 2, 1, 3]
        );
        assert_eq!(delete_stable(&x, &[]).unwrap(), x.to_vec());
        assert!(delete_stable(&x, &[10]).is_err());
    }

    #[test]
    fn burst_examples() {
        let sigma = [7, 8, 2, 5, 4, 9, 1, 12, 3, 15, 16, 13, 14, 6, 11, 10];
        let tau = burst_delete(&sigma, BurstSpec { start: 8, len: 2 }).unwrap();
        assert_eq!(tau, vec![7, 8, 2, 5, 4, 9, 1, 15, 16, 13, 14, 6, 11, 10]);
        assert!(burst_ball(&sigma, 2).unwrap().contains(&tau));
        let v = [4, 9, 1, 12, 3, 15, 16, 13];
        assert_eq!(
            burst_delete(&v, BurstSpec { start: 4, len: 2 }).unwrap(),
            vec![4, 9, 1, 15, 16, 13]
        );
        assert!(burst_delete(&[1, 2], BurstSpec { start: 1, len: 2 }).unwrap().is_empty());
        assert!(burst_delete(&[1, 2], BurstSpec { start: 2, len: 2 }).is_err());
    }

    #[test]
    fn balls() {
        let d = deletion_ball(&[1, 2], 1).unwrap();
        assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![vec![1], vec![2]]);
        assert_eq!(deletion_ball(&[1, 2, 3, 4, 5], 2).unwrap().len(), 10);
        assert_eq!(burst_ball(&[1, 2, 3, 4, 5], 2).unwrap().len(), 4);
        assert_eq!(var_burst_ball(&[1, 2, 3, 4], 2).unwrap().len(), 4 + 3);
        assert!(burst_ball(&[1, 2], 2).is_err());
    }

    #[test]
    fn parity() {
        assert_eq!(parity_vector(&[2, 4, 5, 1, 6, 3]), vec![0, 0, 1, 1, 0, 1]);
        assert_eq!(parity_vector(&[2, 4]), vec![0, 0]);
    }
}
