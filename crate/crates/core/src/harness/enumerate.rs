use crate::codes::CodeParams;
use crate::error::{Error, Result};
use crate::locality::is_good;
use crate::channel::parity_vector;
use crate::locality::is_dense;
use crate::par::fold_range;
use crate::perm::perm_from_index;

/// Number of distinct arrangements of a multiset given by per-symbol counts,
/// or `None` on overflow.
pub(crate) fn arrangements(counts: &[usize]) -> Option<u128> {
    let mut total: u128 = 1;
    let mut placed: u128 = 0;
    for &c in counts {
        // multiply by C(placed + c, c) one factor at a time
        for k in 1..=c as u128 {
            placed += 1;
            total = total.checked_mul(placed)? / k;
        }
    }
    Some(total)
}

/// Counts of each symbol in an ascending multiset.
pub(crate) fn counts_of(multiset: &[u32]) -> Vec<usize> {
    let max = multiset.iter().copied().max().unwrap_or(0) as usize;
    let mut c = vec![0usize; max + 1];
    for &v in multiset {
        c[v as usize] += 1;
    }
    c
}

/// The `index`-th (0-based) arrangement in lexicographic order of the
/// multiset with per-symbol `counts` (index 0 is symbol 0's count, normally 0).
pub(crate) fn arrangement_at(mut index: u128, counts: &[usize]) -> Vec<u32> {
    let mut counts = counts.to_vec();
    let n: usize = counts.iter().sum();
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        for v in 0..counts.len() {
            if counts[v] == 0 {
                continue;
            }
            counts[v] -= 1;
            let block = arrangements(&counts).expect("fits when the total fits");
            if index < block {
                out.push(v as u32);
                break;
            }
            index -= block;
            counts[v] += 1;
        }
    }
    out
}

/// A finite universe of words: all arrangements of a multiset.
#[derive(Debug, Clone)]
pub struct Universe {
    counts: Vec<usize>,
    size: u128,
}

impl Universe {
    pub fn new(multiset: &[u32]) -> Result<Self> {
        let counts = counts_of(multiset);
        let size = arrangements(&counts)
            .ok_or_else(|| Error::invalid("universe size overflows 128 bits"))?;
        Ok(Universe { counts, size })
    }

    pub fn permutations(n: usize) -> Self {
        Universe::new(&(1..=n as u32).collect::<Vec<_>>()).expect("n! fits for tested n")
    }

    pub fn size(&self) -> u128 {
        self.size
    }

    pub fn word(&self, index: u128) -> Vec<u32> {
        if self.counts.iter().all(|&c| c <= 1) && self.counts.len() <= 21 && self.counts[0] == 0 {
            return perm_from_index(index as u64, self.counts.len() - 1);
        }
        arrangement_at(index, &self.counts)
    }

    /// Refuses when `size * per_word` exceeds `budget`.
    pub fn check_budget(&self, per_word: u128, budget: u128) -> Result<()> {
        let estimate = self.size.saturating_mul(per_word.max(1));
        if estimate > budget {
            return Err(Error::BudgetExceeded { estimate, budget });
        }
        Ok(())
    }
}

/// Structural precondition of a code beyond its syndromes: goodness for the
/// fixed-burst codes, a dense parity vector for the variable-burst codes.
pub fn structural_ok(params: &CodeParams, word: &[u32]) -> bool {
    match params {
        CodeParams::Cs1(p) => is_good(word, p.s, p.p).unwrap_or(false),
        CodeParams::Cs2(p) => is_good(word, p.s, p.p).unwrap_or(false),
        CodeParams::Psvt(_) | CodeParams::Mpsvt(_) => true,
        CodeParams::Cs3(p) => p
            .shape()
            .is_ok_and(|sh| is_dense(&parity_vector(word), sh.s, sh.delta)),
        CodeParams::Cs4(p) => p
            .shape()
            .is_ok_and(|sh| is_dense(&parity_vector(word), sh.s, sh.delta)),
    }
}

/// All members of the code in lexicographic order.
///
/// Refused with [`Error::BudgetExceeded`] when the universe is larger than
/// `budget` words.
pub fn enumerate_code(params: &CodeParams, budget: u128, jobs: usize) -> Result<Vec<Vec<u32>>> {
    params.validate()?;
    let universe = Universe::new(&params.multiset()?)?;
    universe.check_budget(1, budget)?;
    let size = universe.size() as u64;
    let mut found: Vec<(u64, Vec<u32>)> = fold_range(
        size,
        jobs,
        Vec::new,
        |mut acc, i| {
            let w = universe.word(i as u128);
            if params.member(&w).unwrap_or(false) {
                acc.push((i, w));
            }
            acc
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    );
    found.sort_unstable_by_key(|(i, _)| *i);
    Ok(found.into_iter().map(|(_, w)| w).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrangement_counts() {
        assert_eq!(arrangements(&[0, 1, 1, 1, 1]), Some(24));
        assert_eq!(arrangements(&[0, 2, 2, 2]), Some(90));
    }

    #[test]
    fn unranking_walks_lexicographic_order() {
        let u = Universe::new(&[1, 1, 2, 2]).unwrap();
        let words: Vec<_> = (0..u.size()).map(|i| u.word(i)).collect();
        assert_eq!(words.len(), 6);
        assert_eq!(words[0], vec![1, 1, 2, 2]);
        assert_eq!(words[5], vec![2, 2, 1, 1]);
        assert!(words.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn budget_refusal() {
        let u = Universe::permutations(10);
        assert!(matches!(
            u.check_budget(1, 1000),
            Err(Error::BudgetExceeded { estimate: 3628800, budget: 1000 })
        ));
    }
}
