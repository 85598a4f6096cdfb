mod common;

use burstperm::perm::{
    array_col, array_row, factorial, lex_rank, lex_unrank, perm_rank, projection, reconstruct_from_rank, signature,
};
use burstperm::Permutation;
use common::{lex_permutations, signature_of};
use num_bigint::BigUint;
use proptest::prelude::*;

fn shuffled(n: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle()
}

#[test]
fn rank_matches_lex_position() {
    for k in 1..=6 {
        for (i, p) in lex_permutations(k).into_iter().enumerate() {
            let sigma = Permutation::new(p.clone()).unwrap();
            assert_eq!(lex_rank(&sigma), BigUint::from(i + 1), "{:?}", p);
            assert_eq!(lex_unrank(&BigUint::from(i + 1), k).unwrap().as_slice(), &p[..]);
        }
    }
}

#[test]
fn unrank_rejects_out_of_range() {
    assert!(lex_unrank(&BigUint::from(0u32), 4).is_err());
    assert!(lex_unrank(&(factorial(4) + 1u32), 4).is_err());
    assert!(lex_unrank(&factorial(4), 4).is_ok());
}

#[test]
fn repeated_entries_reconstruct_only_stable_ranks() {
    let multiset = [1u32, 1, 2, 2, 3];
    let mut seen = 0;
    for r in 1..=120u32 {
        match reconstruct_from_rank(&BigUint::from(r), &multiset) {
            Ok(w) => {
                assert_eq!(perm_rank(&w).unwrap(), BigUint::from(r));
                seen += 1;
            }
            Err(e) => assert!(!e.is_decode_failure() || e.to_string().contains(&r.to_string())),
        }
    }
    // 5! / (2! 2!) arrangements
    assert_eq!(seen, 30);
}

proptest! {
    #[test]
    fn rank_unrank_round_trip(x in (1usize..=20).prop_flat_map(shuffled)) {
        let sigma = Permutation::new(x.clone()).unwrap();
        let r = lex_rank(&sigma);
        prop_assert!(r >= BigUint::from(1u32) && r <= factorial(x.len()));
        prop_assert_eq!(lex_unrank(&r, x.len()).unwrap(), sigma);
    }

    #[test]
    fn rank_of_word_is_rank_of_projection(x in prop::collection::vec(0u32..5, 1..12)) {
        let beta = projection(&x).unwrap();
        prop_assert_eq!(perm_rank(&x).unwrap(), lex_rank(&beta));
        let mut sorted = x.clone();
        sorted.sort_unstable();
        prop_assert_eq!(reconstruct_from_rank(&lex_rank(&beta), &sorted).unwrap(), x);
    }

    #[test]
    fn projection_preserves_order(x in prop::collection::vec(0u32..6, 1..14)) {
        let beta = projection(&x).unwrap();
        let b = beta.as_slice();
        for i in 0..x.len() {
            for j in i + 1..x.len() {
                prop_assert_eq!(x[i] <= x[j], b[i] < b[j]);
            }
        }
    }

    #[test]
    fn signature_matches_definition(x in prop::collection::vec(0u32..4, 2..20)) {
        prop_assert_eq!(signature(&x).unwrap(), signature_of(&x));
    }

    #[test]
    fn array_views_partition_the_word(t in 1usize..6, s in 1usize..5) {
        let x: Vec<u32> = (1..=(s * t) as u32).collect();
        let mut from_rows = Vec::new();
        for i in 1..=s {
            let row = array_row(&x, s, i).unwrap();
            prop_assert_eq!(row.len(), t);
            from_rows.extend(row);
        }
        from_rows.sort_unstable();
        prop_assert_eq!(&from_rows, &x);
        let cols: Vec<u32> = (1..=t).flat_map(|j| array_col(&x, s, j).unwrap()).collect();
        prop_assert_eq!(cols, x);
    }
}
