use crate::error::{Error, Result};
use crate::perm::{sig, ArrayShape};

/// Length of the longest run of equal symbols (0 for the empty word).
pub fn longest_run<T: PartialEq>(x: &[T]) -> usize {
    let mut best = 0;
    let mut cur = 0;
    for i in 0..x.len() {
        if i > 0 && x[i] == x[i - 1] {
            cur += 1;
        } else {
            cur = 1;
        }
        best = best.max(cur);
    }
    best
}

/// Every run in the signature of the first array row has length at most `P - 1`.
pub fn is_good(sigma: &[u32], s: usize, p: usize) -> Result<bool> {
    let shape = ArrayShape::new(sigma.len(), s)?;
    let row: Vec<u32> = sigma.iter().step_by(shape.s).copied().collect();
    Ok(longest_run(&sig(&row)) < p)
}

/// Chooses the block pair `k` (columns `(k-1)P+1 ..= (k+1)P`) covering the
/// column interval `cols`.
///
/// An interval inside a single block `m` gets `k = m`, or `k = m - 1` for the
/// last block, so the wrap-around pair is never used.
pub fn covering_block_pair(n: usize, s: usize, p: usize, cols: (usize, usize)) -> Result<usize> {
    if s == 0 || p == 0 || !n.is_multiple_of(2 * p * s) {
        return Err(Error::shape(format!("2Ps = {} does not divide n = {}", 2 * p * s, n)));
    }
    let blocks = n / (p * s);
    let t = n / s;
    let (lo, hi) = cols;
    if lo == 0 || lo > hi || hi > t {
        return Err(Error::invalid(format!(
            "column interval [{}, {}] outside [1, {}]",
            lo, hi, t
        )));
    }
    let bl = (lo - 1) / p + 1;
    let bh = (hi - 1) / p + 1;
    if bl == bh {
        Ok(if bl < blocks { bl } else { bl - 1 })
    } else if bh == bl + 1 {
        Ok(bl)
    } else {
        Err(Error::decode(format!(
            "columns [{}, {}] span more than two blocks of {} columns",
            lo, hi, p
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SIGMA: [u32; 16] = [7, 8, 2, 5, 4, 9, 1, 12, 3, 15, 16, 13, 14, 6, 11, 10];

    #[test]
    fn goodness_of_example_word() {
        assert!(is_good(&SIGMA, 2, 5).unwrap());
        assert!(!is_good(&SIGMA, 2, 2).unwrap());
        assert!(is_good(&SIGMA, 2, 3).unwrap());
        assert!(is_good(&[1, 3, 2, 5, 4, 6], 1, 2).unwrap());
        assert!(is_good(&SIGMA, 3, 2).is_err());
    }

    #[test]
    fn covering_pairs() {
        assert_eq!(covering_block_pair(16, 2, 2, (3, 5)).unwrap(), 2);
        assert_eq!(covering_block_pair(16, 2, 2, (3, 6)).unwrap(), 2);
        assert_eq!(covering_block_pair(16, 2, 2, (1, 2)).unwrap(), 1);
        assert_eq!(covering_block_pair(16, 2, 2, (5, 6)).unwrap(), 3);
        assert_eq!(covering_block_pair(16, 2, 2, (7, 8)).unwrap(), 3);
        assert!(covering_block_pair(16, 2, 2, (2, 6)).is_err());
    }

    #[test]
    fn runs() {
        assert_eq!(longest_run::<u8>(&[]), 0);
        assert_eq!(longest_run(&[0, 1, 0, 1, 1, 0, 0]), 2);
    }
}
