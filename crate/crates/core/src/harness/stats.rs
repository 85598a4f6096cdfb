use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::enumerate::Universe;
use crate::channel::parity_vector;
use crate::error::{Error, Result};
use crate::locality::{is_dense, is_good};
use crate::par::fold_range;
use crate::perm::ArrayShape;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StatKind {
    /// Permutations whose first array row has no signature run of length `P`.
    GoodFraction { p: usize },
    /// Permutations whose parity vector is `(0^s 1^s, delta)`-dense.
    DenseFraction { delta: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub kind: StatKind,
    pub n: usize,
    pub s: usize,
    pub exact: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub hits: u64,
    pub trials: u64,
    pub fraction: f64,
    /// Binomial standard error of `fraction` (0 for exact counts).
    pub sigma: f64,
    /// `fraction` plus or minus three standard errors, clamped to `[0, 1]`.
    pub interval: (f64, f64),
}

impl StatsReport {
    /// True when `target` is not ruled out from below: the upper end of the
    /// interval reaches it.
    pub fn at_least(&self, target: f64) -> bool {
        self.interval.1 >= target
    }
}

fn predicate(kind: StatKind, s: usize) -> impl Fn(&[u32]) -> bool {
    move |w: &[u32]| match kind {
        StatKind::GoodFraction { p } => is_good(w, s, p).unwrap_or(false),
        StatKind::DenseFraction { delta } => is_dense(&parity_vector(w), s, delta),
    }
}

/// Fraction of `S_n` satisfying `kind`. Counted exactly when `n!` is within
/// `budget`, otherwise estimated from `samples` uniform permutations drawn
/// from `seed`.
pub fn fraction(kind: StatKind, n: usize, s: usize, samples: u64, seed: u64, budget: u128, jobs: usize) -> Result<StatsReport> {
    ArrayShape::new(n, s)?;
    match kind {
        StatKind::GoodFraction { p } if p < 2 => return Err(Error::invalid("P must be at least 2")),
        StatKind::DenseFraction { delta } if delta <= 2 * s => {
            return Err(Error::invalid("delta must exceed 2s"))
        }
        _ => {}
    }
    let test = predicate(kind, s);
    let universe = Universe::permutations(n);
    let (exact, hits, trials) = if universe.size() <= budget {
        let hits = fold_range(
            universe.size() as u64,
            jobs,
            || 0u64,
            |acc, i| acc + u64::from(test(&universe.word(i as u128))),
            |a, b| a + b,
        );
        (true, hits, universe.size() as u64)
    } else {
        if samples == 0 {
            return Err(Error::invalid("sampling needs at least one sample"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut w: Vec<u32> = (1..=n as u32).collect();
        let mut hits = 0u64;
        for _ in 0..samples {
            w.shuffle(&mut rng);
            hits += u64::from(test(&w));
        }
        (false, hits, samples)
    };
    let f = hits as f64 / trials as f64;
    let sigma = if exact { 0.0 } else { (f * (1.0 - f) / trials as f64).sqrt() };
    Ok(StatsReport {
        kind,
        n,
        s,
        exact,
        seed: (!exact).then_some(seed),
        hits,
        trials,
        fraction: f,
        sigma,
        interval: ((f - 3.0 * sigma).max(0.0), (f + 3.0 * sigma).min(1.0)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_rows_are_always_good() {
        let r = fraction(StatKind::GoodFraction { p: 4 }, 8, 2, 0, 0, u128::MAX, 1).unwrap();
        assert!(r.exact);
        assert_eq!(r.hits, 40320);
        assert_eq!(r.fraction, 1.0);
    }

    #[test]
    fn sampled_is_reproducible() {
        let run = || fraction(StatKind::GoodFraction { p: 3 }, 12, 2, 2000, 7, 1000, 1).unwrap();
        let a = run();
        assert!(!a.exact);
        assert_eq!(a, run());
    }
}
