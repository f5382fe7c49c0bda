//! Lyndon words and basic commutators.
//!
//! Lyndon words of length `q` over `m` letters index a basis of the
//! degree-`q` part of the free Lie algebra on `m` generators; the
//! standard (right) factorization turns each one into a basic commutator
//! in the free group, whose images span `F_q/F_{q+1}`.

use alloc::vec::Vec;

use crate::word::Word;

/// All Lyndon words of length exactly `q` over the alphabet `0..m`, in
/// lexicographic order (Duval's algorithm).
pub fn lyndon_words(q: usize, m: usize) -> Vec<Vec<u8>> {
    debug_assert!(m >= 1 && m <= 256 && q >= 1);
    let mut out = Vec::new();
    let mut w: Vec<u8> = alloc::vec![0];
    loop {
        if w.len() == q {
            out.push(w.clone());
        }
        // Extend periodically up to length q...
        let len = w.len();
        while w.len() < q {
            let c = w[w.len() - len];
            w.push(c);
        }
        // ...then increment the last incrementable position.
        while let Some(&last) = w.last() {
            if last as usize == m - 1 {
                w.pop();
            } else {
                *w.last_mut().unwrap() = last + 1;
                break;
            }
        }
        if w.is_empty() {
            return out;
        }
    }
}

/// Standard factorization `w = uv` of a Lyndon word of length `>= 2`:
/// `v` is the lexicographically smallest proper suffix (which is the
/// longest proper Lyndon suffix), and both parts are Lyndon.
pub fn standard_factorization(w: &[u8]) -> (Vec<u8>, Vec<u8>) {
    debug_assert!(w.len() >= 2);
    let mut best = 1;
    for i in 2..w.len() {
        if w[i..] < w[best..] {
            best = i;
        }
    }
    (w[..best].to_vec(), w[best..].to_vec())
}

/// Basic commutator associated with a Lyndon word over `0..m`, as a free
/// group word (letters are the 0-based alphabet symbols shifted to
/// 1-based generators).
pub fn basic_commutator(w: &[u8]) -> Word {
    debug_assert!(!w.is_empty());
    if w.len() == 1 {
        return Word::generator(w[0] as i32 + 1);
    }
    let (u, v) = standard_factorization(w);
    Word::commutator(&basic_commutator(&u), &basic_commutator(&v))
}

/// All basic commutators of weight `q` on `m` generators, ordered by the
/// underlying Lyndon words.
pub fn basic_commutators(q: usize, m: usize) -> Vec<Word> {
    lyndon_words(q, m)
        .iter()
        .map(|w| basic_commutator(w))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{lcs_weight, LcsWeight};

    #[test]
    fn counts_match_necklace_formula() {
        for m in 1..=3u64 {
            for q in 1..=6usize {
                let n = lyndon_words(q, m as usize).len();
                let formula = crate::ranks::necklace_count(q as u64, m).unwrap();
                assert_eq!(num_bigint::BigInt::from(n), formula, "q={q} m={m}");
            }
        }
    }

    #[test]
    fn factorization_parts_are_lyndon() {
        for w in lyndon_words(5, 2) {
            let (u, v) = standard_factorization(&w);
            let mut cat = u.clone();
            cat.extend_from_slice(&v);
            assert_eq!(cat, w);
            assert!(u < v);
        }
    }

    #[test]
    fn basic_commutators_have_exact_weight() {
        for q in 1..=5usize {
            for c in basic_commutators(q, 2) {
                assert_eq!(lcs_weight(&c, 2, 7), LcsWeight::Exact(q), "q={q}");
            }
        }
    }
}
