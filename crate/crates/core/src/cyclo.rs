//! Exact arithmetic in the cyclotomic field Q(ζ_d).
//!
//! Elements are represented in the power basis `1, ζ, …, ζ^{φ(d)−1}`
//! with rational coefficients, reduced modulo the `d`-th cyclotomic
//! polynomial.  The field context caches the modulus; elements are bare
//! coefficient vectors and all operations go through the context.
//!
//! Complex conjugation is the field automorphism `ζ ↦ ζ^{d−1}`.  The
//! real embeddings relevant to signatures send `ζ ↦ exp(2πis/d)` for
//! `s` prime to `d`; a conjugation-invariant element then takes the real
//! value `Σ_k a_k cos(2πks/d)`, whose sign is certified by rational
//! interval arithmetic at adaptively doubled precision.  A nonzero
//! field element is nonzero under every embedding, so the refinement
//! terminates.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::interval::cosine_combination;
use crate::poly::{cyclotomic, totient, RatPoly};

/// An element of Q(ζ_d): coefficients in the power basis, length φ(d).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyc {
    coeffs: Vec<BigRational>,
}

impl Cyc {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// The field Q(ζ_d), carrying the cached modulus polynomial.
#[derive(Clone, Debug)]
pub struct CycloField {
    d: u64,
    degree: usize,
    modulus: RatPoly,
}

impl CycloField {
    pub fn new(d: u64) -> CycloField {
        assert!(d >= 1);
        let modulus = cyclotomic(d);
        CycloField { d, degree: totient(d) as usize, modulus }
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// The degree φ(d) of the field over the rationals.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn zero(&self) -> Cyc {
        Cyc { coeffs: vec![BigRational::zero(); self.degree] }
    }

    pub fn one(&self) -> Cyc {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(&self, q: BigRational) -> Cyc {
        let mut coeffs = vec![BigRational::zero(); self.degree];
        coeffs[0] = q;
        Cyc { coeffs }
    }

    pub fn from_integer(&self, n: i64) -> Cyc {
        self.from_rational(BigRational::from(BigInt::from(n)))
    }

    fn reduce(&self, p: &RatPoly) -> Cyc {
        let rem = p.divmod(&self.modulus).1;
        let mut coeffs = vec![BigRational::zero(); self.degree];
        for (i, c) in rem.coeffs().iter().enumerate() {
            coeffs[i] = c.clone();
        }
        Cyc { coeffs }
    }

    fn to_poly(a: &Cyc) -> RatPoly {
        RatPoly::new(a.coeffs.clone())
    }

    /// The root of unity ζ^k.
    pub fn root_power(&self, k: i64) -> Cyc {
        let k = k.rem_euclid(self.d as i64) as usize;
        self.reduce(&RatPoly::monomial(BigRational::one(), k))
    }

    pub fn add(&self, a: &Cyc, b: &Cyc) -> Cyc {
        Cyc {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, a: &Cyc, b: &Cyc) -> Cyc {
        Cyc {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    pub fn neg(&self, a: &Cyc) -> Cyc {
        Cyc { coeffs: a.coeffs.iter().map(|x| -x.clone()).collect() }
    }

    pub fn mul(&self, a: &Cyc, b: &Cyc) -> Cyc {
        self.reduce(&Self::to_poly(a).mul(&Self::to_poly(b)))
    }

    pub fn scale(&self, a: &Cyc, c: &BigRational) -> Cyc {
        Cyc { coeffs: a.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm
    /// against the (irreducible) modulus.
    pub fn inv(&self, a: &Cyc) -> Result<Cyc, Error> {
        if a.is_zero() {
            return Err(Error::invalid("inverse of zero in a cyclotomic field"));
        }
        let mut r0 = self.modulus.clone();
        let mut r1 = Self::to_poly(a);
        let mut u0 = RatPoly::zero();
        let mut u1 = RatPoly::one();
        while r1.degree() > 0 {
            let (q, r) = r0.divmod(&r1);
            let u = u0.sub(&q.mul(&u1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            if r1.is_zero() {
                break;
            }
        }
        // r1 is a nonzero constant: the gcd of a unit and the modulus.
        let g = r1.coeff(0);
        if g.is_zero() {
            return Err(Error::invalid("element shares a factor with the modulus"));
        }
        Ok(self.reduce(&u1.scale(&(BigRational::one() / g))))
    }

    /// Complex conjugation ζ ↦ ζ^{d−1}.
    pub fn conj(&self, a: &Cyc) -> Cyc {
        let mut acc = self.zero();
        for (k, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = self.root_power(-(k as i64));
            acc = self.add(&acc, &self.scale(&power, c));
        }
        acc
    }

    /// Whether the element is fixed by conjugation (lies in the maximal
    /// real subfield).
    pub fn is_real(&self, a: &Cyc) -> bool {
        self.conj(a) == *a
    }

    /// The sign of a conjugation-invariant element at the embedding
    /// `ζ ↦ exp(2πis/d)`, certified by interval evaluation of
    /// `Σ_k a_k cos(2πks/d)` with doubling precision starting at
    /// `start_bits`.
    pub fn embedding_sign(&self, a: &Cyc, s: u64, start_bits: u32) -> i8 {
        debug_assert!(self.is_real(a));
        if a.is_zero() {
            return 0;
        }
        // A rational element needs no interval evaluation.
        if a.coeffs[1..].iter().all(|c| c.is_zero()) {
            return if a.coeffs[0].is_positive() { 1 } else { -1 };
        }
        let mut bits = start_bits.max(16);
        loop {
            let enclosure = cosine_combination(&a.coeffs, s as i64, self.d as i64, bits);
            if let Some(sign) = enclosure.sign() {
                return sign;
            }
            bits *= 2;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn root_relations() {
        let f = CycloField::new(5);
        assert_eq!(f.degree(), 4);
        // ζ^5 = 1 and 1 + ζ + ζ² + ζ³ + ζ⁴ = 0.
        assert_eq!(f.root_power(5), f.one());
        let mut sum = f.zero();
        for k in 0..5 {
            sum = f.add(&sum, &f.root_power(k));
        }
        assert!(sum.is_zero());
    }

    #[test]
    fn inverse_and_conjugation() {
        let f = CycloField::new(12);
        let a = f.add(&f.root_power(1), &f.from_integer(3));
        let inv = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &inv), f.one());
        // Conjugation is an involution and fixes ζ + ζ^{-1}.
        assert_eq!(f.conj(&f.conj(&a)), a);
        let real = f.add(&f.root_power(1), &f.root_power(-1));
        assert!(f.is_real(&real));
        assert!(!f.is_real(&f.root_power(1)));
    }

    #[test]
    fn embedding_signs() {
        // ζ + ζ^{-1} = 2cos(2πs/d): positive at s = 1 for d = 12
        // (cos 30°), negative at s = 5 (cos 150°).
        let f = CycloField::new(12);
        let real = f.add(&f.root_power(1), &f.root_power(-1));
        assert_eq!(f.embedding_sign(&real, 1, 32), 1);
        assert_eq!(f.embedding_sign(&real, 5, 32), -1);
        // 2 + ζ + ζ^{-1} at s = 5 is 2 − √3 > 0: needs the sum, not a
        // term-by-term guess.
        let shifted = f.add(&real, &f.from_integer(2));
        assert_eq!(f.embedding_sign(&shifted, 5, 32), 1);
        assert_eq!(f.embedding_sign(&f.zero(), 1, 32), 0);
    }
}
