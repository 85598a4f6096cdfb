use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::intact_column;
use crate::error::{Error, Result};
use crate::perm::{factorial, multiset_minus, rank_of, project, reconstruct_from_rank};

/// Column-group width and targets of the column-pair rank constraint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecoverParams {
    pub n: usize,
    pub g: usize,
    #[serde(with = "crate::codes::decimal")]
    pub d1: BigUint,
    #[serde(with = "crate::codes::decimal")]
    pub d2: BigUint,
}

impl RecoverParams {
    pub fn new(n: usize, g: usize, d1: BigUint, d2: BigUint) -> Result<Self> {
        check_shape(n, g)?;
        let m = factorial(2 * g);
        if d1 >= m || d2 >= m {
            return Err(Error::invalid(format!("recover residues must lie in Z_({}!)", 2 * g)));
        }
        Ok(RecoverParams { n, g, d1, d2 })
    }
}

fn check_shape(n: usize, g: usize) -> Result<()> {
    if g == 0 || !n.is_multiple_of(g) || !(n / g).is_multiple_of(2) {
        return Err(Error::shape(format!(
            "n = {} must be an even multiple of the column height {}",
            n, g
        )));
    }
    Ok(())
}

/// Permutation rank of the concatenation of two columns.
pub fn pair_rank(a: &[u32], b: &[u32]) -> BigUint {
    let mut pair = a.to_vec();
    pair.extend_from_slice(b);
    rank_of(&project(&pair))
}

/// `(d1, d2)`: sums of column-pair ranks over pairs `(2i-1, 2i)` and
/// `(2i, 2i+1)` (last column wrapping to the first) in the `g`-row view,
/// reduced mod `(2g)!`.
pub fn recover_syndromes(sigma: &[u32], g: usize) -> Result<(BigUint, BigUint)> {
    check_shape(sigma.len(), g)?;
    let cols = sigma.len() / g;
    let col = |c: usize| &sigma[(c - 1) * g..c * g];
    let mut d = [BigUint::zero(), BigUint::zero()];
    for j in 1..=cols {
        let next = if j == cols { 1 } else { j + 1 };
        d[(j + 1) % 2] += pair_rank(col(j), col(next));
    }
    let m = factorial(2 * g);
    let [d1, d2] = d;
    Ok((d1 % &m, d2 % &m))
}

/// Restores columns `j` and `j + 1` of the `g`-row view of a word of length
/// `n`, given that every deleted coordinate of `received` lay in those two
/// columns and `full` is the multiset of all entries of the original word.
///
/// Returns the `2g` restored entries.
pub fn recover_column_pair(
    received: &[u32],
    n: usize,
    g: usize,
    j: usize,
    d1: &BigUint,
    d2: &BigUint,
    full: &[u32],
) -> Result<Vec<u32>> {
    check_shape(n, g)?;
    let cols = n / g;
    if j == 0 || j >= cols {
        return Err(Error::invalid(format!("column pair {} outside [1, {}]", j, cols - 1)));
    }
    if received.len() > n || n - received.len() > 2 * g || full.len() != n {
        return Err(Error::invalid("received length inconsistent with the pair width"));
    }
    let deleted = n - received.len();
    let mut others = BigUint::zero();
    let mut c = if j % 2 == 1 { 1 } else { 2 };
    while c <= cols {
        if c != j {
            let next = if c == cols { 1 } else { c + 1 };
            others += pair_rank(
                intact_column(received, g, c, j, j + 1, deleted),
                intact_column(received, g, next, j, j + 1, deleted),
            );
        }
        c += 2;
    }
    let m = factorial(2 * g);
    let d = if j % 2 == 1 { d1 } else { d2 };
    let mut rank = (d + &m - others % &m) % &m;
    if rank.is_zero() {
        rank = m;
    }
    let mut outside = received[..(j - 1) * g].to_vec();
    outside.extend_from_slice(&received[(j + 1) * g - deleted..]);
    let pair = multiset_minus(full, &outside)
        .ok_or_else(|| Error::decode("received word is not drawn from the multiset"))?;
    reconstruct_from_rank(&rank, &pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SIGMA: [u32; 16] = [7, 8, 2, 5, 4, 9, 1, 12, 3, 15, 16, 13, 14, 6, 11, 10];

    #[test]
    fn example_syndromes() {
        let (d1, d2) = recover_syndromes(&SIGMA, 2).unwrap();
        assert_eq!(d1, BigUint::from(2u32));
        assert_eq!(d2, BigUint::from(3u32));
        assert_eq!(pair_rank(&[1, 12], &[3, 15]), BigUint::from(3u32));
    }

    #[test]
    fn example_pair() {
        let tau = [7, 8, 2, 5, 4, 9, 1, 15, 16, 13, 14, 6, 11, 10];
        let full: Vec<u32> = (1..=16).collect();
        let pair = recover_column_pair(
            &tau,
            16,
            2,
            4,
            &BigUint::from(2u32),
            &BigUint::from(3u32),
            &full,
        )
        .unwrap();
        assert_eq!(pair, vec![1, 12, 3, 15]);
    }

    #[test]
    fn single_pair_word() {
        let x = [3u32, 1, 4, 2];
        let (d1, _) = recover_syndromes(&x, 2).unwrap();
        assert_eq!(d1, rank_of(&x) % factorial(4));
        assert_eq!(recover_column_pair(&x, 4, 2, 1, &d1, &d1, &[1, 2, 3, 4]).unwrap(), x.to_vec());
    }
}
