mod common;

use burstperm::channel::parity_vector;
use burstperm::locality::{
    is_dense, is_good, locate_burst, locate_syndromes, longest_run, recover_column_pair, recover_syndromes,
    retrieve_by_enumeration, retrieve_missing_symbol, retrieve_syndromes, DenseParams,
};
use common::{good_by_scan, remove_burst};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// First-row column hit by a burst of exactly `s` deletions starting at `i`.
fn first_row_column(i: usize, s: usize) -> usize {
    (i + s - 2) / s + 1
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn goodness_matches_scan(x in shuffled(12), s in 1usize..4, p in 2usize..4) {
        prop_assume!(12 % s == 0);
        prop_assert_eq!(is_good(&x, s, p).unwrap(), good_by_scan(&x, s, p));
    }

    #[test]
    fn longest_run_bounds(x in prop::collection::vec(0u8..2, 1..40)) {
        let r = longest_run(&x);
        prop_assert!(r >= 1);
        prop_assert!(x.windows(r).any(|w| w.iter().all(|&b| b == w[0])));
        prop_assert!(!x.windows(r + 1).any(|w| w.iter().all(|&b| b == w[0])));
    }
}

#[test]
fn retrieve_formula_agrees_with_enumeration_and_truth() {
    let (n, s, p) = (24usize, 2usize, 3usize);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut x: Vec<u32> = (1..=n as u32).collect();
    let mut checked = 0;
    while checked < 200 {
        x.shuffle(&mut rng);
        if !good_by_scan(&x, s, p) {
            continue;
        }
        let (c1, c2) = retrieve_syndromes(&x, s, p).unwrap();
        for i in 1..=n - s + 1 {
            let y = remove_burst(&x, i, s);
            let col = first_row_column(i, s);
            let truth = x[(col - 1) * s];
            let fast = retrieve_missing_symbol(&y, &x, s, p, (col, col), c1, c2).unwrap();
            let slow = retrieve_by_enumeration(&y, &x, s, p, (col, col), c1, c2).unwrap();
            assert_eq!((fast, slow), (truth, truth), "{:?} burst at {}", x, i);
        }
        checked += 1;
    }
}

#[test]
fn retrieve_with_repeated_entries() {
    let (s, p) = (2usize, 3usize);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut x: Vec<u32> = (1..=12).flat_map(|v| [v, v]).collect();
    let n = x.len();
    let mut checked = 0;
    while checked < 100 {
        x.shuffle(&mut rng);
        if !good_by_scan(&x, s, p) {
            continue;
        }
        let (c1, c2) = retrieve_syndromes(&x, s, p).unwrap();
        for i in 1..=n - s + 1 {
            let col = first_row_column(i, s);
            let got = retrieve_by_enumeration(&remove_burst(&x, i, s), &x, s, p, (col, col), c1, c2).unwrap();
            assert_eq!(got, x[(col - 1) * s]);
        }
        checked += 1;
    }
}

#[test]
fn column_pair_recovery_restores_the_original() {
    let (n, g) = (24usize, 4usize);
    let cols = n / g;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut x: Vec<u32> = (1..=12).flat_map(|v| [v, v]).collect();
    for _ in 0..100 {
        x.shuffle(&mut rng);
        let (d1, d2) = recover_syndromes(&x, g).unwrap();
        for len in 1..=g {
            for i in 1..=n - len + 1 {
                let j = ((i - 1) / g + 1).min(cols - 1);
                let got = recover_column_pair(&remove_burst(&x, i, len), n, g, j, &d1, &d2, &x).unwrap();
                assert_eq!(got, x[(j - 1) * g..(j + 1) * g].to_vec(), "burst {} of length {}", i, len);
            }
        }
    }
}

#[test]
fn locate_windows_cover_every_burst() {
    let (n, s, delta) = (32usize, 2usize, 12usize);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut x: Vec<u32> = (1..=n as u32).collect();
    let mut checked = 0;
    while checked < 300 {
        x.shuffle(&mut rng);
        let bits = parity_vector(&x);
        if !is_dense(&bits, s, delta) {
            continue;
        }
        let (a1, a2) = locate_syndromes(&bits, s);
        let params = DenseParams { s, delta, a1, a2 };
        for len in 1..=s {
            for i in 1..=n - len + 1 {
                let got = locate_burst(&remove_burst(&bits, i, len), s, n, &params).unwrap();
                assert_eq!(got.len, len);
                assert!(got.windows.iter().any(|&(lo, hi)| lo <= i && i + len - 1 <= hi));
                assert!(got.windows.iter().all(|&(lo, hi)| hi - lo < delta + len - 1));
            }
        }
        checked += 1;
    }
}
