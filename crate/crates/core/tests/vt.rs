mod common;

use burstperm::vt::{binary_vt_decode, qary_vt_decode, qary_vt_member, svt_decode, vt_member, vt_syndrome};
use common::{all_words, bits, insertions, remove_burst, weighted_sum};

#[test]
fn syndrome_is_weighted_sum() {
    for w in all_words(7, 2) {
        let x = bits(&w);
        assert_eq!(vt_syndrome(&x), weighted_sum(&x));
    }
}

#[test]
fn binary_vt_corrects_every_deletion() {
    for n in 1..=10 {
        for w in all_words(n, 2) {
            let x = bits(&w);
            let a = vt_syndrome(&x) % (n as u64 + 1);
            for i in 1..=n {
                let y = remove_burst(&x, i, 1);
                let got = binary_vt_decode(&y, n, a).unwrap();
                assert_eq!(got.word, x);
                assert!(got.run.0 <= i && i <= got.run.1);
                // the run is exactly the positions producing y
                for j in 1..=n {
                    let inside = got.run.0 <= j && j <= got.run.1;
                    assert_eq!(remove_burst(&x, j, 1) == y, inside, "{:?} at {}", x, j);
                }
            }
        }
    }
}

#[test]
fn binary_vt_agrees_with_insertion_search() {
    let n = 8;
    for w in all_words(n - 1, 2) {
        let y = bits(&w);
        for a in 0..=n as u64 {
            let cands = insertions(&y, &[0u8, 1], 1, n, |x| vt_member(x, a));
            assert_eq!(cands.len(), 1, "VT codes are single-deletion correcting");
            assert_eq!(binary_vt_decode(&y, n, a).unwrap().word, cands[0]);
        }
    }
}

#[test]
fn svt_with_hint_matches_oracle() {
    let (n, p) = (9usize, 3u64);
    for w in all_words(n, 2) {
        let x = bits(&w);
        let a = vt_syndrome(&x) % p;
        let b = x.iter().map(|&v| v as u64).sum::<u64>() % 2;
        for i in 1..=n {
            let y = remove_burst(&x, i, 1);
            // every window of P positions around the deletion pins the word
            for lo in i.saturating_sub(p as usize - 1).max(1)..=i.min(n + 1 - p as usize) {
                let hint = (lo, lo + p as usize - 1);
                assert_eq!(svt_decode(&y, n, p, a, b, hint).unwrap(), x);
            }
            // a window of P + 1 never yields a wrong word
            if i + p as usize <= n {
                match svt_decode(&y, n, p, a, b, (i, i + p as usize)) {
                    Ok(w) => assert_eq!(w, x),
                    Err(e) => assert!(e.is_decode_failure()),
                }
            }
        }
    }
}

#[test]
fn qary_vt_corrects_every_deletion() {
    let (n, q) = (6usize, 4u64);
    for x in all_words(n, q as u32) {
        let sigma: Vec<u8> = (1..n).map(|i| u8::from(x[i] >= x[i - 1])).collect();
        let a = vt_syndrome(&sigma) % n as u64;
        let b = x.iter().map(|&v| v as u64).sum::<u64>() % q;
        assert!(qary_vt_member(&x, q, a, b));
        for i in 1..=n {
            assert_eq!(qary_vt_decode(&remove_burst(&x, i, 1), n, q, a, b).unwrap(), x);
        }
    }
}
