use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::enumerate::{structural_ok, Universe};
use crate::codes::{CodeParams, SyndromeTuple};
use crate::error::{Error, Result};
use crate::par::fold_range;
use crate::perm::sig;
use crate::vt::vt_syndrome;

/// Partition of a universe of words into syndrome classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepTable {
    #[serde(with = "rows")]
    pub rows: BTreeMap<SyndromeTuple, u64>,
    pub total: u64,
    pub classes: u64,
    pub max_class: u64,
    /// `total / classes`, rounded up: some class is at least this large.
    pub lower_bound: u64,
}

mod rows {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Row {
        syndromes: SyndromeTuple,
        size: u64,
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<SyndromeTuple, u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<Row> = m
            .iter()
            .map(|(k, &size)| Row { syndromes: k.clone(), size })
            .collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<SyndromeTuple, u64>, D::Error> {
        let v = Vec::<Row>::deserialize(d)?;
        Ok(v.into_iter().map(|r| (r.syndromes, r.size)).collect())
    }
}

impl SweepTable {
    fn from_rows(rows: BTreeMap<SyndromeTuple, u64>) -> Self {
        let total: u64 = rows.values().sum();
        let classes = rows.len() as u64;
        let max_class = rows.values().copied().max().unwrap_or(0);
        let lower_bound = if classes == 0 { 0 } else { total.div_ceil(classes) };
        SweepTable { rows, total, classes, max_class, lower_bound }
    }

    /// The counting bound: the largest class is at least the average.
    pub fn pigeonhole_holds(&self) -> bool {
        self.max_class >= self.lower_bound
    }
}

fn merge(mut a: BTreeMap<SyndromeTuple, u64>, b: BTreeMap<SyndromeTuple, u64>) -> BTreeMap<SyndromeTuple, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// Partitions the words of `universe` accepted by `filter` by `extract`.
pub fn sweep_classes<F, E>(universe: &Universe, filter: F, extract: E, budget: u128, jobs: usize) -> Result<SweepTable>
where
    F: Fn(&[u32]) -> bool + Sync + Send,
    E: Fn(&[u32]) -> Result<SyndromeTuple> + Sync + Send,
{
    universe.check_budget(1, budget)?;
    let rows = fold_range(
        universe.size() as u64,
        jobs,
        BTreeMap::new,
        |mut acc, i| {
            let w = universe.word(i as u128);
            if filter(&w) {
                // extraction only fails on malformed shapes, checked up front
                if let Ok(k) = extract(&w) {
                    *acc.entry(k).or_insert(0) += 1;
                }
            }
            acc
        },
        merge,
    );
    Ok(SweepTable::from_rows(rows))
}

/// Classes of a code's structurally admissible words (good or dense) by
/// their full syndrome tuple.
pub fn sweep_code(params: &CodeParams, budget: u128, jobs: usize) -> Result<SweepTable> {
    params.validate()?;
    let multiset = params.multiset()?;
    let universe = Universe::new(&multiset)?;
    params.syndromes_of(&multiset)?;
    sweep_classes(
        &universe,
        |w| structural_ok(params, w),
        |w| params.syndromes_of(w),
        budget,
        jobs,
    )
}

/// Permutations of length `n` by the residue of their signature's VT
/// syndrome modulo `modulus` (`n` for the single-deletion codes).
pub fn sweep_single(n: usize, modulus: u64, budget: u128, jobs: usize) -> Result<SweepTable> {
    if n < 2 || modulus == 0 {
        return Err(Error::invalid("single-deletion sweep needs n >= 2 and a positive modulus"));
    }
    let universe = Universe::permutations(n);
    sweep_classes(
        &universe,
        |_| true,
        |w| {
            Ok(SyndromeTuple {
                a: vec![vt_syndrome(&sig(w)) % modulus],
                ..Default::default()
            })
        },
        budget,
        jobs,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_classes_partition_s5() {
        let t = sweep_single(5, 5, u128::MAX, 1).unwrap();
        assert_eq!(t.total, 120);
        assert_eq!(t.classes, 5);
        assert!(t.pigeonhole_holds());
    }

    #[test]
    fn modulus_one_is_one_class() {
        let t = sweep_single(4, 1, u128::MAX, 1).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.max_class, 24);
    }

    #[test]
    fn json_rows() {
        let t = sweep_single(3, 3, u128::MAX, 1).unwrap();
        let back: SweepTable = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        assert_eq!(back, t);
    }
}
