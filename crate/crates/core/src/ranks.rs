//! Rank counts for free Lie algebras and related graded pieces.
//!
//! `necklace_count(q, m)` is the rank of the degree-`q` part of the free
//! Lie algebra on `m` generators (equivalently the number of Lyndon words
//! of length `q` over an `m`-letter alphabet), given by the necklace
//! formula `(1/q) * sum_{d|q} mu(d) m^{q/d}` with `mu` the Möbius
//! function.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::Error;

/// Möbius function of `n >= 1` by trial factorization.
pub fn moebius(n: u64) -> i64 {
    debug_assert!(n >= 1);
    let mut n = n;
    let mut mu = 1i64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Number of Lyndon words of length `q` over `m` letters.
pub fn necklace_count(q: u64, m: u64) -> Result<BigInt, Error> {
    if q == 0 {
        return Err(Error::invalid("necklace count needs q >= 1"));
    }
    let mut sum = BigInt::zero();
    for d in 1..=q {
        if q % d != 0 {
            continue;
        }
        let mu = moebius(d);
        if mu == 0 {
            continue;
        }
        let term = BigInt::from(m).pow((q / d) as u32);
        sum += BigInt::from(mu) * term;
    }
    let (quot, rem) = sum.div_rem(&BigInt::from(q));
    debug_assert!(rem.is_zero());
    Ok(quot)
}

/// Rank `m * N_{q-1}(m) - N_q(m)` of the degree-`q` relation space cut
/// out by the bracketing map `(F_{q-1}/F_q)^? -> F_q/F_{q+1}`; this needs
/// `q >= 2`.
pub fn relation_rank(q: u64, m: u64) -> Result<BigInt, Error> {
    if q < 2 {
        return Err(Error::invalid("relation rank needs q >= 2"));
    }
    let prev = necklace_count(q - 1, m)?;
    let cur = necklace_count(q, m)?;
    Ok(BigInt::from(m) * prev - cur)
}

/// Row of rank data for one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankRow {
    pub q: u64,
    pub necklaces: BigInt,
    /// `None` for `q = 1`, where the relation rank is not defined.
    pub relations: Option<BigInt>,
}

/// Table of `necklace_count` and `relation_rank` over `1 <= q <= q_max`.
pub fn rank_window(q_max: u64, m: u64) -> Result<Vec<RankRow>, Error> {
    if q_max == 0 {
        return Err(Error::invalid("rank window needs q_max >= 1"));
    }
    let mut rows = Vec::new();
    for q in 1..=q_max {
        rows.push(RankRow {
            q,
            necklaces: necklace_count(q, m)?,
            relations: if q >= 2 { Some(relation_rank(q, m)?) } else { None },
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moebius_small() {
        let vals: Vec<i64> = (1..=12).map(moebius).collect();
        assert_eq!(vals, [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn necklace_small_values() {
        // Ranks of the free Lie algebra on 2 generators by degree.
        let expect = [2u64, 1, 2, 3, 6, 9, 18, 30];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(necklace_count(i as u64 + 1, 2).unwrap(), BigInt::from(e));
        }
        assert_eq!(necklace_count(3, 3).unwrap(), BigInt::from(8));
    }

    #[test]
    fn relation_rank_values() {
        // m*N_{q-1} - N_q
        assert_eq!(relation_rank(2, 2).unwrap(), BigInt::from(3));
        assert_eq!(relation_rank(3, 2).unwrap(), BigInt::from(0));
        // N_3(3) = 8, N_4(3) = 18, so 3*8 - 18 = 6.
        assert_eq!(relation_rank(4, 3).unwrap(), BigInt::from(6));
    }

    #[test]
    fn window_is_consistent() {
        let rows = rank_window(6, 3).unwrap();
        assert_eq!(rows.len(), 6);
        for row in &rows[1..] {
            let expect = relation_rank(row.q, 3).unwrap();
            assert_eq!(row.relations.as_ref().unwrap(), &expect);
        }
    }
}
