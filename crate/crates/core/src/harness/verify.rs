use std::collections::BTreeSet;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::enumerate::{structural_ok, Universe};
use crate::channel::cut;
use crate::codes::CodeParams;
use crate::error::{Error, Result};
use crate::par::fold_range;
use crate::perm::Permutation;
use crate::single::{decode_single, encode_single, lev_member};

/// Exhaustive over the universe, or a fixed number of seeded samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum VerifyMode {
    Exhaustive,
    Sampled { seed: u64, samples: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub mode: VerifyMode,
    /// Test every word against its own syndrome class instead of only the
    /// members of the given class.
    pub per_word: bool,
    /// Also intersect the error balls of members pairwise (fixed-class mode).
    pub check_disjoint: bool,
    pub jobs: usize,
    /// Upper bound on the number of decode calls.
    pub budget: u128,
    /// Decode with a perturbed syndrome target (see
    /// [`CodeParams::perturbed`]); a sound harness must then report failures.
    pub inject_fault: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            mode: VerifyMode::Exhaustive,
            per_word: true,
            check_disjoint: false,
            jobs: 0,
            budget: 100_000_000,
            inject_fault: false,
        }
    }
}

/// Outcome of a verification run. The run passes when no decode returned a
/// wrong word and no member failed to decode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub code: String,
    pub params: serde_json::Value,
    pub words_tested: u64,
    pub bursts_tested: u64,
    /// Decode failures on words satisfying every constraint of their class.
    pub decode_failures: u64,
    /// Decodes that returned a word other than the transmitted one.
    pub mismatches: u64,
    /// Tested words lacking the structural precondition (goodness or density).
    pub non_members: u64,
    pub non_member_failures: u64,
    /// Pairs of members with intersecting balls, when checked.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ball_collisions: Option<u64>,
    pub wall_time_ms: u64,
    pub mode: VerifyMode,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.decode_failures == 0 && self.ball_collisions.unwrap_or(0) == 0
    }

    /// The report without its timing, for reproducibility comparisons.
    pub fn without_timing(&self) -> VerifyReport {
        VerifyReport {
            wall_time_ms: 0,
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Tally {
    words: u64,
    bursts: u64,
    failures: u64,
    mismatches: u64,
    non_members: u64,
    non_member_failures: u64,
}

impl Tally {
    fn merge(self, o: Tally) -> Tally {
        Tally {
            words: self.words + o.words,
            bursts: self.bursts + o.bursts,
            failures: self.failures + o.failures,
            mismatches: self.mismatches + o.mismatches,
            non_members: self.non_members + o.non_members,
            non_member_failures: self.non_member_failures + o.non_member_failures,
        }
    }
}

fn burst_lengths(params: &CodeParams) -> Vec<usize> {
    if params.variable_length() {
        (1..=params.s()).collect()
    } else {
        vec![params.s()]
    }
}

/// Draws `samples` words uniformly from the arrangements of `multiset`,
/// keeping only those accepted by `keep`. Generation is sequential so the
/// sample set depends only on the seed.
pub fn sample_words(
    multiset: &[u32],
    seed: u64,
    samples: u64,
    keep: impl Fn(&[u32]) -> bool,
    max_draws: u64,
) -> Result<Vec<Vec<u32>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples as usize);
    let mut draws = 0u64;
    let mut w = multiset.to_vec();
    while (out.len() as u64) < samples {
        if draws >= max_draws {
            return Err(Error::BudgetExceeded {
                estimate: draws as u128 * samples as u128 / (out.len() as u128).max(1),
                budget: max_draws as u128,
            });
        }
        draws += 1;
        w.shuffle(&mut rng);
        if keep(&w) {
            out.push(w.clone());
        }
    }
    Ok(out)
}

fn check_word(class: &CodeParams, word: &[u32], member: bool, lengths: &[usize]) -> Tally {
    let mut t = Tally {
        words: 1,
        non_members: u64::from(!member),
        ..Tally::default()
    };
    let n = word.len();
    for &len in lengths {
        for start in 1..=n - len + 1 {
            t.bursts += 1;
            match class.decode(&cut(word, start, len)) {
                Ok(w) if w == word => {}
                Ok(_) => t.mismatches += 1,
                Err(_) if member => t.failures += 1,
                Err(_) => t.non_member_failures += 1,
            }
        }
    }
    t
}

/// Decodes every burst of every tested word and compares with the original.
///
/// In per-word mode each word is decoded with its own syndrome targets, which
/// covers every syndrome class at once. Otherwise only members of `params`'
/// class are tested. Sampled mode draws words uniformly, restricted to words
/// with the code's structural precondition for the variable-burst codes.
pub fn verify_code(params: &CodeParams, opts: &VerifyOptions) -> Result<VerifyReport> {
    params.validate()?;
    if matches!(params, CodeParams::Psvt(_) | CodeParams::Mpsvt(_)) {
        return Err(Error::invalid("first-row SVT codes are verified through the variable-burst codes"));
    }
    let clock = Instant::now();
    let multiset = params.multiset()?;
    let n = multiset.len();
    let lengths = burst_lengths(params);
    let per_word_cost: u128 = lengths.iter().map(|&l| (n - l + 1) as u128).sum();
    let samples: Option<Vec<Vec<u32>>> = match opts.mode {
        VerifyMode::Exhaustive => None,
        VerifyMode::Sampled { seed, samples } => {
            let estimate = samples as u128 * per_word_cost;
            if estimate > opts.budget {
                return Err(Error::BudgetExceeded { estimate, budget: opts.budget });
            }
            let keep = |w: &[u32]| !params.variable_length() || structural_ok(params, w);
            Some(sample_words(&multiset, seed, samples, keep, opts.budget as u64)?)
        }
    };
    // sampled runs never enumerate, so the universe may exceed 128 bits
    let universe = match samples {
        Some(_) => None,
        None => {
            let u = Universe::new(&multiset)?;
            u.check_budget(per_word_cost, opts.budget)?;
            Some(u)
        }
    };
    let count = match (&samples, &universe) {
        (Some(s), _) => s.len() as u64,
        (None, Some(u)) => u.size() as u64,
        (None, None) => unreachable!("exhaustive runs build the universe"),
    };
    let word_at = |i: u64| -> Vec<u32> {
        match (&samples, &universe) {
            (Some(s), _) => s[i as usize].clone(),
            (None, Some(u)) => u.word(i as u128),
            (None, None) => unreachable!(),
        }
    };
    let decoder = if opts.inject_fault { params.perturbed() } else { params.clone() };
    let tally = fold_range(
        count,
        opts.jobs,
        Tally::default,
        |acc, i| {
            let w = word_at(i);
            let t = if opts.per_word {
                match params.with_syndromes_of(&w) {
                    Ok(class) => {
                        let class = if opts.inject_fault { class.perturbed() } else { class };
                        check_word(&class, &w, structural_ok(params, &w), &lengths)
                    }
                    Err(_) => Tally { words: 1, failures: 1, ..Tally::default() },
                }
            } else if params.member(&w).unwrap_or(false) {
                check_word(&decoder, &w, true, &lengths)
            } else {
                Tally::default()
            };
            acc.merge(t)
        },
        Tally::merge,
    );
    let ball_collisions = if opts.check_disjoint && !opts.per_word {
        Some(count_collisions(params, universe.as_ref(), samples.as_deref(), &lengths, opts)?)
    } else {
        None
    };
    Ok(VerifyReport {
        code: params.id().to_string(),
        params: serde_json::to_value(params).map_err(|e| Error::Internal(e.to_string()))?,
        words_tested: tally.words,
        bursts_tested: tally.bursts,
        decode_failures: tally.failures,
        mismatches: tally.mismatches,
        non_members: tally.non_members,
        non_member_failures: tally.non_member_failures,
        ball_collisions,
        wall_time_ms: clock.elapsed().as_millis() as u64,
        mode: opts.mode,
    })
}

/// Number of member pairs whose error balls intersect.
fn count_collisions(
    params: &CodeParams,
    universe: Option<&Universe>,
    samples: Option<&[Vec<u32>]>,
    lengths: &[usize],
    opts: &VerifyOptions,
) -> Result<u64> {
    let words: Box<dyn Iterator<Item = Vec<u32>>> = match (samples, universe) {
        (Some(s), _) => Box::new(s.iter().cloned()),
        (None, Some(u)) => Box::new((0..u.size()).map(|i| u.word(i))),
        (None, None) => return Ok(0),
    };
    let members: Vec<Vec<u32>> = words.filter(|w| params.member(w).unwrap_or(false)).collect();
    let balls: Vec<BTreeSet<Vec<u32>>> = members
        .iter()
        .map(|w| {
            let mut b = BTreeSet::new();
            for &len in lengths {
                for start in 1..=w.len() - len + 1 {
                    b.insert(cut(w, start, len));
                }
            }
            b
        })
        .collect();
    let pairs = balls.len() as u64;
    Ok(fold_range(
        pairs,
        opts.jobs,
        || 0u64,
        |acc, i| {
            let i = i as usize;
            acc + balls[i + 1..]
                .iter()
                .filter(|other| !balls[i].is_disjoint(other))
                .count() as u64
        },
        |a, b| a + b,
    ))
}

/// Exhaustive check of the single-deletion codec at length `n`: every
/// message, every residue, every deletion.
pub fn verify_single(n: usize, opts: &VerifyOptions) -> Result<VerifyReport> {
    if n < 2 {
        return Err(Error::invalid("single-deletion codec needs n >= 2"));
    }
    let clock = Instant::now();
    let universe = Universe::permutations(n - 1);
    let messages = universe.size() as u64;
    let total = messages * n as u64;
    let estimate = total as u128 * n as u128;
    if estimate > opts.budget {
        return Err(Error::BudgetExceeded { estimate, budget: opts.budget });
    }
    let tally = fold_range(
        total,
        opts.jobs,
        Tally::default,
        |acc, idx| {
            let a = idx % n as u64;
            let pi = Permutation::new(universe.word((idx / n as u64) as u128)).expect("permutation");
            let mut t = Tally { words: 1, ..Tally::default() };
            let sigma = match encode_single(&pi, a) {
                Ok(s) if lev_member(&s, a) => s,
                _ => {
                    t.mismatches += 1;
                    return acc.merge(t);
                }
            };
            let stripped: Vec<u32> = sigma.as_slice().iter().copied().filter(|&v| v != n as u32).collect();
            if stripped != pi.as_slice() {
                t.mismatches += 1;
            }
            for i in 1..=n {
                t.bursts += 1;
                match decode_single(&cut(sigma.as_slice(), i, 1), a) {
                    Ok(w) if w == sigma => {}
                    Ok(_) => t.mismatches += 1,
                    Err(_) => t.failures += 1,
                }
            }
            acc.merge(t)
        },
        Tally::merge,
    );
    Ok(VerifyReport {
        code: "single".to_string(),
        params: serde_json::json!({ "n": n }),
        words_tested: tally.words,
        bursts_tested: tally.bursts,
        decode_failures: tally.failures,
        mismatches: tally.mismatches,
        non_members: 0,
        non_member_failures: 0,
        ball_collisions: None,
        wall_time_ms: clock.elapsed().as_millis() as u64,
        mode: VerifyMode::Exhaustive,
    })
}
