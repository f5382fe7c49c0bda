//! Truncated Magnus expansions.
//!
//! The Magnus embedding sends the `k`-th free generator to `1 + X_k` in
//! the ring of noncommutative integer power series, and its inverse to
//! the truncated geometric series `1 - X_k + X_k^2 - ...`.  Truncating at
//! total degree `D` gives a ring whose units detect the lower central
//! series: a word maps to `1` modulo degree `> D` exactly when it lies in
//! the `(D+1)`-st lower central subgroup.  All computations here are over
//! arbitrary-precision integers, so there is no overflow and no rounding.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::word::Word;

/// A noncommutative polynomial of bounded total degree in `vars`
/// variables, with `BigInt` coefficients.  Monomials are stored as
/// strings of 0-based variable indices in a sorted map, which keeps
/// iteration order (and hence serialized output) deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    vars: usize,
    deg: usize,
    terms: BTreeMap<Vec<u8>, BigInt>,
}

impl TruncatedSeries {
    /// The constant series `1`.
    pub fn one(vars: usize, deg: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), BigInt::one());
        TruncatedSeries { vars, deg, terms }
    }

    /// The constant series `0`.
    pub fn zero(vars: usize, deg: usize) -> Self {
        TruncatedSeries {
            vars,
            deg,
            terms: BTreeMap::new(),
        }
    }

    /// Image `1 + X_k` of the `k`-th generator (1-based).
    pub fn generator(vars: usize, deg: usize, k: usize) -> Self {
        debug_assert!(k >= 1 && k <= vars);
        let mut s = Self::one(vars, deg);
        if deg >= 1 {
            s.terms.insert(alloc::vec![(k - 1) as u8], BigInt::one());
        }
        s
    }

    /// Image `1 - X_k + X_k^2 - ...` of the inverse of the `k`-th
    /// generator, truncated at the ambient degree.
    pub fn generator_inverse(vars: usize, deg: usize, k: usize) -> Self {
        debug_assert!(k >= 1 && k <= vars);
        let mut s = Self::zero(vars, deg);
        for d in 0..=deg {
            let coeff = if d % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            s.terms.insert(alloc::vec![(k - 1) as u8; d], coeff);
        }
        s
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn degree_bound(&self) -> usize {
        self.deg
    }

    /// Coefficient of a monomial (0-based variable indices).
    pub fn coeff(&self, mono: &[u8]) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterate over nonzero terms in lexicographic monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &BigInt)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get([].as_slice())
                .is_some_and(|c| c.is_one())
    }

    /// Smallest degree of a nonconstant term, if any.
    pub fn min_positive_degree(&self) -> Option<usize> {
        self.terms
            .iter()
            .filter(|(m, _)| !m.is_empty())
            .map(|(m, _)| m.len())
            .min()
    }

    /// All terms of one fixed degree, as (monomial, coefficient) pairs.
    pub fn homogeneous_part(&self, d: usize) -> Vec<(Vec<u8>, BigInt)> {
        self.terms
            .iter()
            .filter(|(m, _)| m.len() == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }

    /// Truncated product; degrees beyond the bound are dropped.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.vars, other.vars);
        debug_assert_eq!(self.deg, other.deg);
        let mut terms: BTreeMap<Vec<u8>, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.len() + mb.len() > self.deg {
                    continue;
                }
                let mut m = ma.clone();
                m.extend_from_slice(mb);
                let c = ca * cb;
                let entry = terms.entry(m).or_insert_with(BigInt::zero);
                *entry += c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        TruncatedSeries {
            vars: self.vars,
            deg: self.deg,
            terms,
        }
    }
}

/// Magnus expansion of a word, truncated at total degree `deg`.
pub fn expand(word: &Word, vars: usize, deg: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(vars, deg);
    for &c in word.letters() {
        let k = c.unsigned_abs() as usize;
        debug_assert!(k <= vars);
        let factor = if c > 0 {
            TruncatedSeries::generator(vars, deg, k)
        } else {
            TruncatedSeries::generator_inverse(vars, deg, k)
        };
        acc = acc.mul(&factor);
    }
    acc
}

/// Lower-central-series weight of a word, decided up to a cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcsWeight {
    /// The word lies in the `q`-th lower central subgroup but not the
    /// `(q+1)`-st.
    Exact(usize),
    /// The word lies in the `q`-th lower central subgroup; deeper levels
    /// were not inspected.
    AtLeast(usize),
}

impl LcsWeight {
    pub fn at_least(&self, q: usize) -> bool {
        match *self {
            LcsWeight::Exact(w) => w >= q,
            LcsWeight::AtLeast(w) => w >= q,
        }
    }
}

/// Weight of `w` in the lower central series, probing degrees below
/// `cutoff`: returns `Exact(q)` if `w` lies in `F_q \ F_{q+1}` with
/// `q < cutoff`, and `AtLeast(cutoff)` when the truncated expansion at
/// degree `cutoff - 1` is `1` (i.e. `w` lies in `F_cutoff`).
///
/// The empty word reports `AtLeast(cutoff)`.
pub fn lcs_weight(w: &Word, vars: usize, cutoff: usize) -> LcsWeight {
    debug_assert!(cutoff >= 1);
    if w.is_empty() {
        return LcsWeight::AtLeast(cutoff);
    }
    let s = expand(w, vars, cutoff.saturating_sub(1));
    match s.min_positive_degree() {
        Some(d) => LcsWeight::Exact(d),
        None => LcsWeight::AtLeast(cutoff),
    }
}

/// Equality of two words in the free nilpotent quotient `F/F_q`.
pub fn nil_eq(u: &Word, v: &Word, vars: usize, q: usize) -> bool {
    lcs_weight(&u.mul(&v.inverse()), vars, q).at_least(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    #[test]
    fn generator_times_inverse_is_one() {
        for deg in 1..6 {
            let g = TruncatedSeries::generator(2, deg, 1);
            let gi = TruncatedSeries::generator_inverse(2, deg, 1);
            assert!(g.mul(&gi).is_one());
            assert!(gi.mul(&g).is_one());
        }
    }

    #[test]
    fn commutator_expansion_lowest_term() {
        // [x, y] = 1 + XY - YX + higher order.
        let w = Word::commutator(&Word::generator(1), &Word::generator(2));
        let s = expand(&w, 2, 2);
        assert_eq!(s.coeff(&[0, 1]), BigInt::from(1));
        assert_eq!(s.coeff(&[1, 0]), BigInt::from(-1));
        assert_eq!(s.min_positive_degree(), Some(2));
    }

    #[test]
    fn weights() {
        let x = Word::generator(1);
        let y = Word::generator(2);
        let c = Word::commutator(&x, &y);
        let cc = Word::commutator(&c, &y);
        assert_eq!(lcs_weight(&x, 2, 5), LcsWeight::Exact(1));
        assert_eq!(lcs_weight(&c, 2, 5), LcsWeight::Exact(2));
        assert_eq!(lcs_weight(&cc, 2, 5), LcsWeight::Exact(3));
        assert_eq!(lcs_weight(&Word::identity(), 2, 5), LcsWeight::AtLeast(5));
    }

    #[test]
    fn nil_eq_detects_central_terms() {
        let x = Word::generator(1);
        let y = Word::generator(2);
        let xy = x.mul(&y);
        let yx = y.mul(&x);
        assert!(nil_eq(&xy, &yx, 2, 2)); // abelianization agrees
        assert!(!nil_eq(&xy, &yx, 2, 3)); // differ by [x,y]
    }
}
