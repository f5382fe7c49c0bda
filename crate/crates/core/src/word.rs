//! Reduced words in the free fundamental group of a marked surface.
//!
//! A surface of genus `g` with `n >= 1` boundary components has free
//! fundamental group of rank `b = 2g + n - 1`.  Generators are ordered
//! `x_1, ..., x_{n-1}, m_1, ..., m_g, l_1, ..., l_g`: one loop around each
//! boundary component except the one carrying the basepoint, then the
//! meridian/longitude pairs of the handles.  The boundary component with
//! the basepoint is represented by the boundary word
//! `x_1 ... x_{n-1} [m_1,l_1] ... [m_g,l_g]`.
//!
//! Letters are nonzero signed integers: `k` is the `k`-th generator
//! (1-based), `-k` its inverse.  Words are kept freely reduced.

use alloc::format;
use alloc::vec::Vec;

use crate::error::Error;

/// A compact surface with `genus` handles and `boundary >= 1` boundary
/// circles, fixing the free generating set of its fundamental group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SurfaceBasis {
    genus: u32,
    boundary: u32,
}

impl SurfaceBasis {
    pub fn new(genus: u32, boundary: u32) -> Result<Self, Error> {
        if boundary == 0 {
            return Err(Error::invalid("surface needs at least one boundary circle"));
        }
        let b = 2 * genus as u64 + boundary as u64 - 1;
        if b == 0 {
            return Err(Error::invalid(
                "disk has trivial fundamental group; need rank >= 1",
            ));
        }
        if b > i32::MAX as u64 {
            return Err(Error::invalid("surface rank out of range"));
        }
        Ok(SurfaceBasis { genus, boundary })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn boundary(&self) -> u32 {
        self.boundary
    }

    /// Rank `2g + n - 1` of the free fundamental group.
    pub fn rank(&self) -> usize {
        (2 * self.genus + self.boundary - 1) as usize
    }

    /// 1-based letter for the boundary loop `x_i`, `1 <= i <= n-1`.
    pub fn x(&self, i: u32) -> i32 {
        debug_assert!(i >= 1 && i < self.boundary);
        i as i32
    }

    /// 1-based letter for the meridian `m_j`, `1 <= j <= g`.
    pub fn m(&self, j: u32) -> i32 {
        debug_assert!(j >= 1 && j <= self.genus);
        (self.boundary - 1 + j) as i32
    }

    /// 1-based letter for the longitude `l_j`, `1 <= j <= g`.
    pub fn l(&self, j: u32) -> i32 {
        debug_assert!(j >= 1 && j <= self.genus);
        (self.boundary - 1 + self.genus + j) as i32
    }

    /// The word `x_1 ... x_{n-1} [m_1,l_1] ... [m_g,l_g]` around the
    /// basepoint boundary circle.
    pub fn boundary_word(&self) -> Word {
        let mut letters = Vec::new();
        for i in 1..self.boundary {
            letters.push(self.x(i));
        }
        for j in 1..=self.genus {
            let (m, l) = (self.m(j), self.l(j));
            letters.extend_from_slice(&[m, l, -m, -l]);
        }
        Word { letters }
    }

    /// Human-readable generator name for a 1-based index.
    pub fn gen_label(&self, k: usize) -> alloc::string::String {
        let n1 = (self.boundary - 1) as usize;
        let g = self.genus as usize;
        if k >= 1 && k <= n1 {
            format!("x{k}")
        } else if k <= n1 + g {
            format!("m{}", k - n1)
        } else {
            format!("l{}", k - n1 - g)
        }
    }
}

/// A freely reduced word over a fixed number of generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<i32>,
}

impl Word {
    /// The empty word.
    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    /// Single generator `k` (1-based) or its inverse (`k < 0`).
    pub fn generator(k: i32) -> Self {
        debug_assert!(k != 0);
        Word { letters: alloc::vec![k] }
    }

    /// Reduce a letter string, checking letters against the rank of
    /// `basis`.
    pub fn reduce(letters: &[i32], basis: &SurfaceBasis) -> Result<Self, Error> {
        Self::reduce_ranked(letters, basis.rank())
    }

    /// Reduce a letter string over `rank` generators.
    pub fn reduce_ranked(letters: &[i32], rank: usize) -> Result<Self, Error> {
        for &c in letters {
            if c == 0 || c.unsigned_abs() as usize > rank {
                return Err(Error::invalid(format!(
                    "letter {c} out of range for rank {rank}"
                )));
            }
        }
        let mut out: Vec<i32> = Vec::with_capacity(letters.len());
        for &c in letters {
            if out.last().is_some_and(|&p| p == -c) {
                out.pop();
            } else {
                out.push(c);
            }
        }
        Ok(Word { letters: out })
    }

    /// Build from letters assumed in range (debug-checked only); still
    /// performs free reduction.
    pub fn from_letters(letters: &[i32]) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(letters.len());
        for &c in letters {
            debug_assert!(c != 0);
            if out.last().is_some_and(|&p| p == -c) {
                out.pop();
            } else {
                out.push(c);
            }
        }
        Word { letters: out }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index appearing (0 for the empty word).
    pub fn max_letter(&self) -> usize {
        self.letters
            .iter()
            .map(|c| c.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.letters.clone();
        for &c in &other.letters {
            if out.last().is_some_and(|&p| p == -c) {
                out.pop();
            } else {
                out.push(c);
            }
        }
        Word { letters: out }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&c| -c).collect(),
        }
    }

    /// `self^e` for any integer exponent.
    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `u^-1 v u` — conjugate of `v` by `u` acting on the right.
    pub fn conjugate(v: &Word, u: &Word) -> Word {
        u.inverse().mul(v).mul(u)
    }

    /// `[u, v] = u^-1 v^-1 u v`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.inverse().mul(&v.inverse()).mul(u).mul(v)
    }

    /// Exponent-sum vector (abelianization) over `rank` generators.
    pub fn abelianization(&self, rank: usize) -> Vec<i64> {
        let mut v = alloc::vec![0i64; rank];
        for &c in &self.letters {
            let k = c.unsigned_abs() as usize - 1;
            v[k] += c.signum() as i64;
        }
        v
    }

    /// Substitute `images[k-1]` for generator `k` (and its inverse for
    /// `-k`), then reduce.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Word::identity();
        for &c in &self.letters {
            let k = c.unsigned_abs() as usize - 1;
            debug_assert!(k < images.len());
            if c > 0 {
                out = out.mul(&images[k]);
            } else {
                out = out.mul(&images[k].inverse());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_word_shape() {
        let b = SurfaceBasis::new(1, 2).unwrap();
        assert_eq!(b.rank(), 3);
        // x1 m1 l1 m1^-1 l1^-1
        assert_eq!(b.boundary_word().letters(), &[1, 2, 3, -2, -3]);
        let s = SurfaceBasis::new(0, 4).unwrap();
        assert_eq!(s.boundary_word().letters(), &[1, 2, 3]);
    }

    #[test]
    fn reduction_and_ops() {
        let b = SurfaceBasis::new(0, 3).unwrap();
        let w = Word::reduce(&[1, 2, -2, -1, 2], &b).unwrap();
        assert_eq!(w.letters(), &[2]);
        let u = Word::reduce(&[1, 2], &b).unwrap();
        assert!(u.mul(&u.inverse()).is_empty());
        assert_eq!(Word::commutator(&u, &u), Word::identity());
        assert_eq!(u.pow(-2), u.inverse().mul(&u.inverse()));
    }

    #[test]
    fn rejects_out_of_range() {
        let b = SurfaceBasis::new(0, 2).unwrap();
        assert!(Word::reduce(&[2], &b).is_err());
        assert!(Word::reduce(&[0], &b).is_err());
    }

    #[test]
    fn substitution_is_a_homomorphism() {
        let imgs = [Word::from_letters(&[1, 2]), Word::from_letters(&[-1])];
        let u = Word::from_letters(&[1, -2]);
        let v = Word::from_letters(&[2, 2, 1]);
        assert_eq!(
            u.mul(&v).substitute(&imgs),
            u.substitute(&imgs).mul(&v.substitute(&imgs))
        );
    }
}
