//! Generation of admissible cylinder classes for tests and self-checks.
//!
//! A longitude tuple with entries of weight `q-1` is admissible exactly
//! when it lies in the kernel of the bracketing map
//! `(F_{q-1}/F_q)^b -> F_q/F_{q+1}` sending the tuple to the rearranged
//! boundary relation.  Both sides are finitely generated free abelian
//! groups — the domain has a basic-commutator basis, the codomain embeds
//! into degree-`q` Magnus coefficients — so the kernel is computed by
//! exact integer linear algebra, and random admissible classes are
//! random small combinations of kernel basis vectors.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::cylinder::CylinderClass;
use crate::error::Error;
use crate::intmat;
use crate::lyndon;
use crate::rng::Rng;
use crate::series;
use crate::word::{SurfaceBasis, Word};

/// The rearranged boundary relation of a longitude tuple:
/// `prod_i [x_i, a_i] prod_j [l_j, b_j][b_j, c_j][c_j, m_j]`.
pub fn bracket_relation_word(basis: &SurfaceBasis, tuple: &[Word]) -> Word {
    debug_assert_eq!(tuple.len(), basis.rank());
    let mut w = Word::identity();
    for i in 1..basis.boundary() {
        let x = Word::generator(basis.x(i));
        w = w.mul(&Word::commutator(&x, &tuple[basis.x(i) as usize - 1]));
    }
    for j in 1..=basis.genus() {
        let m = Word::generator(basis.m(j));
        let l = Word::generator(basis.l(j));
        let b = &tuple[basis.m(j) as usize - 1];
        let c = &tuple[basis.l(j) as usize - 1];
        w = w
            .mul(&Word::commutator(&l, b))
            .mul(&Word::commutator(b, c))
            .mul(&Word::commutator(c, &m));
    }
    w
}

/// A basis of the kernel of the bracketing map at level `q >= 2`: each
/// element is a `b`-tuple of words with entries in `F_{q-1}`, whose
/// relation word lies in `F_{q+1}`.
///
/// Entries are integer exponent vectors over `(coordinate, basic
/// commutator of weight q-1)` pairs, realized as word tuples.
pub struct BracketKernel {
    basis: SurfaceBasis,
    q: usize,
    /// Each variable assigns one basic commutator to a set of
    /// coordinates simultaneously.
    vars: Vec<(Vec<usize>, Word)>,
    kernel: Vec<Vec<BigInt>>,
}

impl BracketKernel {
    /// Compute a kernel basis at level `q`.
    ///
    /// For `q >= 3` every `(coordinate, basic commutator)` pair is an
    /// independent variable and the relation word is linear in them
    /// modulo `F_{q+1}` (all cross terms have weight `2(q-1) > q`).  At
    /// `q = 2` the handle cross term `[b_j, c_j]` is itself of weight 2,
    /// so the map is not linear; we restrict to the subspace with tied
    /// handle coordinates `b_j = c_j`, where the cross term vanishes on
    /// the nose and linearity is restored.
    pub fn compute(basis: SurfaceBasis, q: usize) -> Result<Self, Error> {
        if q < 2 {
            return Err(Error::invalid("bracket kernel needs q >= 2"));
        }
        let b = basis.rank();
        let commutators = lyndon::basic_commutators(q - 1, b);
        let mut vars: Vec<(Vec<usize>, Word)> = Vec::new();
        if q == 2 {
            for i in 1..basis.boundary() {
                for c in &commutators {
                    vars.push((alloc::vec![basis.x(i) as usize - 1], c.clone()));
                }
            }
            for j in 1..=basis.genus() {
                let slots = alloc::vec![basis.m(j) as usize - 1, basis.l(j) as usize - 1];
                for c in &commutators {
                    vars.push((slots.clone(), c.clone()));
                }
            }
        } else {
            for k in 0..b {
                for c in &commutators {
                    vars.push((alloc::vec![k], c.clone()));
                }
            }
        }
        let ncols = vars.len();
        // Monomial coordinates of the degree-q Magnus part.
        let nmono = b.pow(q as u32);
        let mono_index = |m: &[u8]| -> usize {
            m.iter().fold(0usize, |acc, &v| acc * b + v as usize)
        };
        let mut matrix = alloc::vec![alloc::vec![BigInt::from(0); ncols]; nmono];
        for (vi, (slots, c)) in vars.iter().enumerate() {
            let mut tuple = alloc::vec![Word::identity(); b];
            for &k in slots {
                tuple[k] = c.clone();
            }
            let rel = bracket_relation_word(&basis, &tuple);
            let s = series::expand(&rel, b, q);
            for (mono, coeff) in s.homogeneous_part(q) {
                matrix[mono_index(&mono)][vi] = coeff;
            }
        }
        let kernel = intmat::integer_kernel(&matrix, ncols);
        Ok(BracketKernel {
            basis,
            q,
            vars,
            kernel,
        })
    }

    pub fn rank(&self) -> usize {
        self.kernel.len()
    }

    pub fn level(&self) -> usize {
        self.q
    }

    /// Realize an integer combination of kernel basis vectors as a word
    /// tuple with entries in `F_{q-1}`.
    pub fn tuple_from_coeffs(&self, coeffs: &[i64]) -> Vec<Word> {
        debug_assert_eq!(coeffs.len(), self.kernel.len());
        let mut exps = alloc::vec![0i64; self.vars.len()];
        for (v, &c) in self.kernel.iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            for (slot, e) in exps.iter_mut().zip(v) {
                *slot += c * i64::try_from(e).expect("small kernel entry");
            }
        }
        let mut tuple = alloc::vec![Word::identity(); self.basis.rank()];
        for ((slots, c), &e) in self.vars.iter().zip(&exps) {
            if e != 0 {
                let p = c.pow(e);
                for &k in slots {
                    tuple[k] = tuple[k].mul(&p);
                }
            }
        }
        tuple
    }

    /// Random admissible tuple with entries in `F_{q-1}` and
    /// coefficients bounded by `amplitude`.
    pub fn sample_tuple(&self, rng: &mut Rng, amplitude: i64) -> Vec<Word> {
        let coeffs: Vec<i64> = (0..self.kernel.len())
            .map(|_| rng.range_i64(-amplitude, amplitude))
            .collect();
        self.tuple_from_coeffs(&coeffs)
    }

    /// Random admissible class with tuple entries in `F_{q-1}`,
    /// validated to `depth`.
    pub fn sample_class(&self, rng: &mut Rng, amplitude: i64, depth: usize) -> Result<CylinderClass, Error> {
        CylinderClass::from_milnor(self.basis, self.sample_tuple(rng, amplitude), depth)
    }
}

/// A random admissible class mixing kernel samples from several levels
/// (a product of classes with tuple entries of weights `1..=max_q-1`),
/// plus boundary-power coordinates at weight 1.  The result is returned
/// as the composed class; its tuple is generally nontrivial already in
/// the abelianization.
pub fn random_class(basis: SurfaceBasis, max_q: usize, rng: &mut Rng, depth: usize) -> Result<CylinderClass, Error> {
    let mut acc = CylinderClass::trivial(basis);
    // Weight-1 part: powers of each boundary generator on its own
    // coordinate fix the boundary word exactly.
    let mut tuple = alloc::vec![Word::identity(); basis.rank()];
    for i in 1..basis.boundary() {
        let e = rng.range_i64(-2, 2);
        tuple[basis.x(i) as usize - 1] = Word::generator(basis.x(i)).pow(e);
    }
    acc = acc.compose(&CylinderClass::from_milnor(basis, tuple, depth)?)?;
    for q in 2..=max_q {
        let ker = BracketKernel::compute(basis, q)?;
        if ker.rank() == 0 {
            continue;
        }
        acc = acc.compose(&ker.sample_class(rng, 1, depth)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ranks;
    use crate::series::lcs_weight;

    #[test]
    fn kernel_rank_matches_formula() {
        // The bracketing map is onto with kernel of rank
        // b*N_{q-1}(b) - N_q(b).
        // Only genus-0 surfaces at q = 2: the tied-handle restriction
        // there changes the kernel dimension by design.
        for (g, n, q) in [(0u32, 3u32, 2usize), (0, 3, 3), (1, 1, 3), (1, 2, 3)] {
            let basis = SurfaceBasis::new(g, n).unwrap();
            let b = basis.rank() as u64;
            let ker = BracketKernel::compute(basis, q).unwrap();
            let expect = ranks::relation_rank(q as u64, b).unwrap();
            assert_eq!(
                num_bigint::BigInt::from(ker.rank()),
                expect,
                "g={g} n={n} q={q}"
            );
        }
    }

    #[test]
    fn sampled_tuples_are_admissible() {
        let basis = SurfaceBasis::new(0, 3).unwrap();
        let mut rng = Rng::new(42);
        for q in 2..=4 {
            let ker = BracketKernel::compute(basis, q).unwrap();
            for _ in 0..5 {
                let t = ker.sample_tuple(&mut rng, 2);
                let rel = bracket_relation_word(&basis, &t);
                assert!(
                    lcs_weight(&rel, basis.rank(), q + 1).at_least(q + 1),
                    "q={q}"
                );
            }
        }
    }

    #[test]
    fn random_classes_validate() {
        let basis = SurfaceBasis::new(1, 1).unwrap();
        let mut rng = Rng::new(7);
        for _ in 0..3 {
            let c = random_class(basis, 4, &mut rng, 4).unwrap();
            assert!(CylinderClass::validate(&basis, c.milnor(), c.aut(), 4)
                .unwrap()
                .consistency_failures
                .is_empty());
        }
    }
}
