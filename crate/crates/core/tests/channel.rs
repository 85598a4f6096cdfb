mod common;

use std::collections::BTreeSet;

use burstperm::channel::{burst_ball, burst_delete, deletion_ball, delete_stable, var_burst_ball, BurstSpec};
use common::remove_burst;
use proptest::prelude::*;

fn subsequences(x: &[u32], keep: usize) -> BTreeSet<Vec<u32>> {
    (0u32..1 << x.len())
        .filter(|m| m.count_ones() as usize == keep)
        .map(|m| (0..x.len()).filter(|i| m >> i & 1 == 1).map(|i| x[i]).collect())
        .collect()
}

#[test]
fn deletion_ball_is_all_subsequences() {
    let x = [3u32, 1, 4, 1, 5, 9, 2, 6];
    for s in 1..=4 {
        assert_eq!(deletion_ball(&x, s).unwrap(), subsequences(&x, x.len() - s));
    }
}

#[test]
fn burst_balls_match_definition() {
    let x = [1u32, 2, 2, 3, 1, 1, 4];
    for s in 1..=3 {
        let fixed: BTreeSet<_> = (1..=x.len() - s + 1).map(|i| remove_burst(&x, i, s)).collect();
        assert_eq!(burst_ball(&x, s).unwrap(), fixed);
        let var: BTreeSet<_> = (1..=s)
            .flat_map(|l| (1..=x.len() - l + 1).map(move |i| remove_burst(&x, i, l)))
            .collect();
        assert_eq!(var_burst_ball(&x, s).unwrap(), var);
    }
}

#[test]
fn invalid_deletions_are_rejected() {
    let x = [1u32, 2, 3];
    assert!(BurstSpec::new(3, 2, 3).is_err());
    assert!(BurstSpec::new(0, 1, 3).is_err());
    assert!(delete_stable(&x, &[2, 2]).is_err());
    assert!(burst_ball(&x, 4).is_err());
}

proptest! {
    #[test]
    fn burst_delete_is_contiguous_removal(
        x in prop::collection::vec(0u32..9, 2..30),
        start in 1usize..30,
        len in 1usize..5,
    ) {
        prop_assume!(start + len - 1 <= x.len());
        let spec = BurstSpec::new(start, len, x.len()).unwrap();
        let y = burst_delete(&x, spec).unwrap();
        prop_assert_eq!(&y, &remove_burst(&x, start, len));
        let positions: Vec<usize> = (start..start + len).collect();
        prop_assert_eq!(delete_stable(&x, &positions).unwrap(), y);
    }
}
