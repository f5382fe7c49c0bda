//! Seifert-matrix calculus: Levine–Tristram signatures, cyclotomic
//! hermitian block forms, signature integrals over the circle, and the
//! Arf invariant.
//!
//! A Seifert matrix is an integer matrix `A` of even size `2m` with
//! `det(A − Aᵀ) = 1`.  The hermitian form
//!
//! ```text
//! λ_1(A, ω) = (1 − ω)A + (1 − ω^{-1})Aᵀ
//! ```
//!
//! at a root of unity `ω = ζ_d^k` has entries in Q(ζ_d); its signature
//! at the embedding `ζ_d ↦ exp(2πis/d)` is the Levine–Tristram
//! signature `σ(ω^s)`.  The block forms `λ_r(A, ω)` for `r ≥ 2` place
//! `A + Aᵀ` on the diagonal, `−A` on the superdiagonal, `−Aᵀ` on the
//! subdiagonal, and the corner blocks `−ω^{-1}Aᵀ` (top right) and
//! `−ωA` (bottom left); `r = 2` folds the corner and off-diagonal
//! blocks together.
//!
//! Signatures are computed exactly: congruence diagonalization over the
//! cyclotomic field produces conjugation-invariant pivots whose real
//! signs at each embedding are certified by interval arithmetic.  The
//! circle integral of the signature step function is obtained by
//! isolating the unit-circle zeros of the Alexander polynomial
//! `Δ(t) = det(A − tAᵀ)` in the variable `u = t + t^{-1}`, evaluating
//! the (constant) signature on each complementary arc at a point of the
//! circle with rational coordinates, and recognizing each jump angle as
//! a rational multiple of π through cyclotomic factors — when a jump
//! angle is not such a multiple, the integral is irrational and an
//! error is reported instead of an approximation.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclo::{Cyc, CycloField};
use crate::error::Error;
use crate::intmat;
use crate::poly::{
    cos_polynomial, isolate_roots, refine_root, totient, IsolatedRoot, RatPoly,
    SturmChain,
};

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// An integer Seifert matrix of a knot: even size and
/// `det(A − Aᵀ) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<SeifertMatrix, Error> {
        let n = entries.len();
        if n % 2 != 0 {
            return Err(Error::invalid("Seifert matrix must have even size"));
        }
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::invalid("Seifert matrix must be square"));
        }
        let skew: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(entries[i][j] - entries[j][i])).collect())
            .collect();
        if intmat::det(&skew) != BigInt::one() {
            return Err(Error::invalid("matrix fails the Seifert condition det(A − Aᵀ) = 1"));
        }
        Ok(SeifertMatrix { entries })
    }

    /// The empty matrix (the unknot).
    pub fn empty() -> SeifertMatrix {
        SeifertMatrix { entries: vec![] }
    }

    /// The standard genus-`(q−1)/2` Seifert matrix of the (2, q) torus
    /// knot, for odd `q ≥ 3`: `−1` on the diagonal and `+1` on the
    /// superdiagonal.
    pub fn torus_two_strand(q: u64) -> Result<SeifertMatrix, Error> {
        if q < 3 || q % 2 == 0 {
            return Err(Error::invalid("two-strand torus knots need odd q ≥ 3"));
        }
        let n = (q - 1) as usize;
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            -1
                        } else if j == i + 1 {
                            1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        SeifertMatrix::new(entries)
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// The mirror knot's matrix `−A`: all signatures change sign.
    pub fn mirror(&self) -> SeifertMatrix {
        SeifertMatrix {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|&x| -x).collect())
                .collect(),
        }
    }

    /// Connected sum: the block sum of the two matrices.
    pub fn block_sum(&self, other: &SeifertMatrix) -> SeifertMatrix {
        let n = self.size();
        let m = other.size();
        let entries = (0..n + m)
            .map(|i| {
                (0..n + m)
                    .map(|j| {
                        if i < n && j < n {
                            self.entries[i][j]
                        } else if i >= n && j >= n {
                            other.entries[i - n][j - n]
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        SeifertMatrix { entries }
    }
}

/// A hermitian matrix over a cyclotomic field.
#[derive(Clone, Debug)]
pub struct CyclotomicHermitian {
    field: CycloField,
    entries: Vec<Vec<Cyc>>,
}

impl CyclotomicHermitian {
    pub fn new(field: CycloField, entries: Vec<Vec<Cyc>>) -> Result<CyclotomicHermitian, Error> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::invalid("hermitian matrix must be square"));
        }
        for i in 0..n {
            for j in 0..n {
                if entries[j][i] != field.conj(&entries[i][j]) {
                    return Err(Error::invalid("matrix is not hermitian"));
                }
            }
        }
        Ok(CyclotomicHermitian { field, entries })
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Cyc>] {
        &self.entries
    }

    pub fn neg(&self) -> CyclotomicHermitian {
        CyclotomicHermitian {
            field: self.field.clone(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|e| self.field.neg(e)).collect())
                .collect(),
        }
    }

    pub fn block_sum(&self, other: &CyclotomicHermitian) -> CyclotomicHermitian {
        debug_assert_eq!(self.field.d(), other.field.d());
        let n = self.size();
        let m = other.size();
        let entries = (0..n + m)
            .map(|i| {
                (0..n + m)
                    .map(|j| {
                        if i < n && j < n {
                            self.entries[i][j].clone()
                        } else if i >= n && j >= n {
                            other.entries[i - n][j - n].clone()
                        } else {
                            self.field.zero()
                        }
                    })
                    .collect()
            })
            .collect();
        CyclotomicHermitian { field: self.field.clone(), entries }
    }
}

/// `λ_1(A, ζ_d^k) = (1 − ω)A + (1 − ω^{-1})Aᵀ` over Q(ζ_d).
pub fn lt_matrix(a: &SeifertMatrix, field: &CycloField, k: i64) -> CyclotomicHermitian {
    let omega = field.root_power(k);
    let one = field.one();
    let c = field.sub(&one, &omega);
    let cbar = field.sub(&one, &field.root_power(-k));
    let n = a.size();
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    field.add(
                        &field.scale(&c, &rat(a.entry(i, j))),
                        &field.scale(&cbar, &rat(a.entry(j, i))),
                    )
                })
                .collect()
        })
        .collect();
    CyclotomicHermitian { field: field.clone(), entries }
}

/// The `r × r` block form `λ_r(A, ζ_d^k)`.
pub fn lambda_r(
    a: &SeifertMatrix,
    field: &CycloField,
    k: i64,
    r: usize,
) -> Result<CyclotomicHermitian, Error> {
    if r == 0 {
        return Err(Error::invalid("block form needs r ≥ 1"));
    }
    if r == 1 {
        return Ok(lt_matrix(a, field, k));
    }
    let n = a.size();
    let omega = field.root_power(k);
    let omega_inv = field.root_power(-k);
    let zero = field.zero();
    // Block (s, t) entry at position (i, j).
    let block = |s: usize, t: usize, i: usize, j: usize| -> Cyc {
        let mut e = zero.clone();
        let aij = rat(a.entry(i, j));
        let aji = rat(a.entry(j, i));
        if s == t {
            e = field.from_rational(&aij + &aji);
        }
        // Superdiagonal −A and, in the top-right corner, −ω^{-1}Aᵀ;
        // for r = 2 the two contributions land on the same block.
        if t == s + 1 || (r == 2 && s == 0 && t == 1) {
            e = field.sub(&e, &field.from_rational(aij.clone()));
        }
        if s == 0 && t == r - 1 {
            e = field.sub(&e, &field.scale(&omega_inv, &aji));
        }
        if s == t + 1 || (r == 2 && s == 1 && t == 0) {
            e = field.sub(&e, &field.from_rational(aji.clone()));
        }
        if t == 0 && s == r - 1 {
            e = field.sub(&e, &field.scale(&omega, &aij));
        }
        e
    };
    let entries = (0..r * n)
        .map(|row| {
            (0..r * n)
                .map(|col| block(row / n, col / n, row % n, col % n))
                .collect()
        })
        .collect();
    CyclotomicHermitian::new(field.clone(), entries)
}

/// Signatures of a hermitian cyclotomic form at every real embedding
/// class, plus the rank of its nonsingular part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittSignatureVector {
    d: u64,
    rank: usize,
    sigs: BTreeMap<u64, i64>,
}

impl WittSignatureVector {
    pub fn zero(d: u64) -> WittSignatureVector {
        WittSignatureVector {
            d,
            rank: 0,
            sigs: embedding_reps(d).into_iter().map(|s| (s, 0)).collect(),
        }
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Signature at the embedding class of `s`; classes are indexed by
    /// `min(s mod d, d − s mod d)` since conjugate embeddings agree.
    pub fn signature_at(&self, s: u64) -> i64 {
        let s = s % self.d.max(1);
        let rep = s.min((self.d - s) % self.d);
        let rep = if rep == 0 { s.max(self.d.min(1)) } else { rep };
        self.sigs.get(&rep).copied().unwrap_or(0)
    }

    /// Signature at the defining embedding `ζ_d ↦ exp(2πi/d)`.
    pub fn defining_signature(&self) -> i64 {
        self.signature_at(1)
    }

    pub fn signatures(&self) -> &BTreeMap<u64, i64> {
        &self.sigs
    }

    pub fn add(&self, other: &WittSignatureVector) -> WittSignatureVector {
        debug_assert_eq!(self.d, other.d);
        let mut sigs = self.sigs.clone();
        for (s, v) in &other.sigs {
            *sigs.entry(*s).or_insert(0) += v;
        }
        WittSignatureVector { d: self.d, rank: self.rank + other.rank, sigs }
    }

    pub fn neg(&self) -> WittSignatureVector {
        WittSignatureVector {
            d: self.d,
            rank: self.rank,
            sigs: self.sigs.iter().map(|(s, v)| (*s, -v)).collect(),
        }
    }

    pub fn is_signature_zero(&self) -> bool {
        self.sigs.values().all(|&v| v == 0)
    }
}

/// Representatives of the real-embedding classes of Q(ζ_d):
/// `s` prime to `d` with `1 ≤ s ≤ d/2` (and `s = 1` for `d ≤ 2`).
pub fn embedding_reps(d: u64) -> Vec<u64> {
    if d <= 2 {
        return vec![1];
    }
    (1..=d / 2).filter(|s| s.gcd(&d) == 1).collect()
}

/// Splits the index set into connected components of the support graph
/// (edges where the matrix entry is nonzero); the form is the
/// orthogonal sum of its restrictions to components.
fn support_components(h: &CyclotomicHermitian) -> Vec<Vec<usize>> {
    let n = h.size();
    let mut comp = vec![usize::MAX; n];
    let mut components = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        comp[start] = id;
        while let Some(i) = stack.pop() {
            members.push(i);
            for j in 0..n {
                if comp[j] == usize::MAX && !h.entries[i][j].is_zero() {
                    comp[j] = id;
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

/// Congruence-diagonalizes a hermitian matrix in place, returning the
/// nonzero (conjugation-invariant) pivots.
fn diagonal_pivots(field: &CycloField, mut h: Vec<Vec<Cyc>>) -> Vec<Cyc> {
    let n = h.len();
    let mut pivots = Vec::new();
    for i in 0..n {
        if h[i][i].is_zero() {
            // Prefer a nonzero later diagonal entry.
            if let Some(j) = (i + 1..n).find(|&j| !h[j][j].is_zero()) {
                h.swap(i, j);
                for row in h.iter_mut() {
                    row.swap(i, j);
                }
            } else {
                // All remaining diagonal entries vanish; borrow an
                // off-diagonal entry.  The change e_i ↦ e_i + c·e_k with
                // c the inverse of h[i][k] makes the new diagonal entry
                // conj(c)·h[k][i] + c·h[i][k] = 2.
                let found = (i..n)
                    .flat_map(|j| (j + 1..n).map(move |k| (j, k)))
                    .find(|&(j, k)| !h[j][k].is_zero());
                let (j, k) = match found {
                    Some(pair) => pair,
                    None => break,
                };
                if j != i {
                    h.swap(i, j);
                    for row in h.iter_mut() {
                        row.swap(i, j);
                    }
                }
                let c = field.inv(&h[i][k]).expect("nonzero entry");
                let cbar = field.conj(&c);
                for col in 0..n {
                    let add = field.mul(&cbar, &h[k][col]);
                    h[i][col] = field.add(&h[i][col], &add);
                }
                for row in 0..n {
                    let add = field.mul(&c, &h[row][k]);
                    h[row][i] = field.add(&h[row][i], &add);
                }
            }
        }
        let p = h[i][i].clone();
        if p.is_zero() {
            continue;
        }
        let p_inv = field.inv(&p).expect("pivot is nonzero");
        for j in i + 1..n {
            let t = field.mul(&h[i][j], &p_inv);
            if t.is_zero() {
                continue;
            }
            let tbar = field.conj(&t);
            for col in 0..n {
                let sub = field.mul(&tbar, &h[i][col]);
                h[j][col] = field.sub(&h[j][col], &sub);
            }
            for row in 0..n {
                let sub = field.mul(&t, &h[row][i]);
                h[row][j] = field.sub(&h[row][j], &sub);
            }
        }
        pivots.push(p);
    }
    pivots
}

/// Starting precision for pivot-sign certification, in bits.
pub const SIGN_BITS: u32 = 128;

/// Extracts the nonsingular part of a hermitian cyclotomic form and
/// computes its signature at every real embedding class.
///
/// The matrix is first split along connected components of its support
/// graph (the form is their orthogonal sum), each component is
/// congruence-diagonalized by exact field arithmetic, and each pivot's
/// sign at each embedding is certified by interval evaluation with
/// doubling precision — pivots are exactly nonzero, so this terminates.
pub fn witt_signatures(h: &CyclotomicHermitian) -> WittSignatureVector {
    let field = h.field();
    let d = field.d();
    let mut pivots = Vec::new();
    for component in support_components(h) {
        if component.len() == 1 && h.entries[component[0]][component[0]].is_zero() {
            continue;
        }
        let sub: Vec<Vec<Cyc>> = component
            .iter()
            .map(|&i| component.iter().map(|&j| h.entries[i][j].clone()).collect())
            .collect();
        pivots.extend(diagonal_pivots(field, sub));
    }
    let mut sigs = BTreeMap::new();
    for s in embedding_reps(d) {
        let mut total = 0i64;
        for p in &pivots {
            total += field.embedding_sign(p, s, SIGN_BITS) as i64;
        }
        sigs.insert(s, total);
    }
    WittSignatureVector { d, rank: pivots.len(), sigs }
}

/// The Levine–Tristram signature `σ_A(ζ_d^k)` at the defining
/// embedding.
pub fn lt_signature(a: &SeifertMatrix, d: u64, k: i64) -> i64 {
    let field = CycloField::new(d);
    witt_signatures(&lt_matrix(a, &field, k)).defining_signature()
}

/// The Alexander polynomial `Δ(t) = det(A − tAᵀ)`, computed by
/// interpolating integer determinant samples.
pub fn alexander(a: &SeifertMatrix) -> RatPoly {
    let n = a.size();
    if n == 0 {
        return RatPoly::one();
    }
    let points: Vec<(BigRational, BigRational)> = (0..=n as i64)
        .map(|t| {
            let m: Vec<Vec<BigInt>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| BigInt::from(a.entry(i, j) - t * a.entry(j, i)))
                        .collect()
                })
                .collect();
            (rat(t), BigRational::from(intmat::det(&m)))
        })
        .collect();
    crate::poly::interpolate(&points)
}

/// The Arf invariant, through the determinant criterion: it vanishes
/// exactly when `Δ(−1) ≡ ±1 (mod 8)`.
pub fn arf(a: &SeifertMatrix) -> u8 {
    let delta = alexander(a).eval(&rat(-1));
    debug_assert!(delta.is_integer());
    let r = delta.to_integer().mod_floor(&BigInt::from(8));
    if r == BigInt::one() || r == BigInt::from(7) {
        0
    } else {
        1
    }
}

/// A point `ω = ((1 − s²) + 2si)/(1 + s²)` of the unit circle with
/// rational coordinates, encoded in Q(ζ_4) = Q(i).
fn rational_circle_point(field4: &CycloField, s: &BigRational) -> Cyc {
    let denom = BigRational::one() + s * s;
    let re = (BigRational::one() - s * s) / &denom;
    let im = (rat(2) * s) / &denom;
    field4.add(
        &field4.from_rational(re),
        &field4.scale(&field4.root_power(1), &im),
    )
}

/// The Levine–Tristram signature at an arbitrary rational point of the
/// unit circle, parametrized by `s = tan(θ/2)`.
fn signature_at_circle_point(a: &SeifertMatrix, s: &BigRational) -> i64 {
    let field = CycloField::new(4);
    let omega = rational_circle_point(&field, s);
    let omega_bar = field.conj(&omega);
    let one = field.one();
    let c = field.sub(&one, &omega);
    let cbar = field.sub(&one, &omega_bar);
    let n = a.size();
    let entries: Vec<Vec<Cyc>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    field.add(
                        &field.scale(&c, &rat(a.entry(i, j))),
                        &field.scale(&cbar, &rat(a.entry(j, i))),
                    )
                })
                .collect()
        })
        .collect();
    let h = CyclotomicHermitian { field, entries };
    witt_signatures(&h).defining_signature()
}

/// Finds a rational `s = tan(θ/2) ≥ 0` whose cosine
/// `(1 − s²)/(1 + s²)` lies strictly inside `(c_lo, c_hi)`, by
/// bisection along the monotone parametrization.
fn tan_half_in(c_lo: &BigRational, c_hi: &BigRational) -> BigRational {
    let cos_of = |s: &BigRational| -> BigRational {
        (BigRational::one() - s * s) / (BigRational::one() + s * s)
    };
    let mut a = BigRational::zero();
    let mut b = BigRational::one();
    while &cos_of(&b) >= c_hi {
        b = &b * rat(2);
    }
    loop {
        if &cos_of(&b) > c_lo {
            return b;
        }
        let mid = (&a + &b) / rat(2);
        if &cos_of(&mid) >= c_hi {
            a = mid;
        } else {
            b = mid;
        }
    }
}

/// Converts the Alexander polynomial (palindromic about its middle
/// coefficient) into the polynomial `P` with `Δ(t)/t^m = P(t + t^{-1})`.
fn alexander_u_poly(a: &SeifertMatrix) -> RatPoly {
    let delta = alexander(a);
    let n = a.size();
    let m = n / 2;
    for j in 0..=n {
        debug_assert_eq!(delta.coeff(j), delta.coeff(n - j));
    }
    let u = RatPoly::monomial(BigRational::one(), 1);
    let mut b_prev = RatPoly::constant(rat(2));
    let mut b_cur = u.clone();
    let mut result = RatPoly::constant(delta.coeff(m));
    for j in 1..=m {
        if j > 1 {
            let b_next = u.mul(&b_cur).sub(&b_prev);
            b_prev = b_cur;
            b_cur = b_next;
        }
        result = result.add(&b_cur.scale(&delta.coeff(m + j)));
    }
    result
}

/// Identifies an isolated root of `sf` in `(-2, 2)` as `2cos(πf)` with
/// `f` rational, by matching against the cyclotomic polynomials in the
/// `u` variable; errors when the angle is not a rational multiple of π.
fn angle_fraction(
    sf: &RatPoly,
    root: &IsolatedRoot,
    max_degree: usize,
) -> Result<BigRational, Error> {
    if let IsolatedRoot::Exact(r) = root {
        // A rational 2cos(πf) with f rational lies in {0, ±1, ±2}.
        let table = [
            (rat(2), rat(0)),
            (rat(1), BigRational::new(BigInt::one(), BigInt::from(3))),
            (rat(0), BigRational::new(BigInt::one(), BigInt::from(2))),
            (rat(-1), BigRational::new(BigInt::from(2), BigInt::from(3))),
            (rat(-2), rat(1)),
        ];
        for (u, f) in table {
            if *r == u {
                return Ok(f);
            }
        }
        return Err(Error::precision(
            "signature jump at an angle that is not a rational multiple of π",
        ));
    }
    let (lo, hi) = root.bounds();
    let limit = 2 * max_degree.max(1) as u64;
    for n in 1..=2 * limit * limit + 8 {
        if totient(n) as usize > max_degree {
            continue;
        }
        let g = sf.gcd(&cos_polynomial(n));
        if g.degree() == 0 {
            continue;
        }
        if SturmChain::new(&g).count_roots(&lo, &hi) == 0 {
            continue;
        }
        // The root is 2cos(2πk/n) for some k prime to n below n/2;
        // refine enclosures until a single candidate remains.
        let candidates: Vec<u64> = (1..n.max(2))
            .filter(|k| 2 * k < n || n <= 2)
            .filter(|k| k.gcd(&n) == 1)
            .collect();
        let mut root_box = root.clone();
        let mut bits = 32;
        loop {
            let (rlo, rhi) = root_box.bounds();
            let alive: Vec<u64> = candidates
                .iter()
                .copied()
                .filter(|&k| {
                    let e = crate::interval::cos_two_pi_ratio(k as i64, n as i64, bits)
                        .scale(&rat(2));
                    !(e.hi() < &rlo || e.lo() > &rhi)
                })
                .collect();
            if alive.len() == 1 {
                let k = alive[0];
                return Ok(BigRational::new(BigInt::from(2 * k), BigInt::from(n)));
            }
            if alive.is_empty() {
                break;
            }
            bits *= 2;
            let eps = crate::interval::tolerance(bits / 4);
            root_box = refine_root(sf, &root_box, &eps);
        }
    }
    Err(Error::precision(
        "signature jump at an angle that is not a rational multiple of π",
    ))
}

/// The normalized integral of the Levine–Tristram signature function
/// over the unit circle (total measure 1), as an exact rational.
///
/// Unit-circle zeros of `Δ` are isolated in the variable `u = 2cos θ`;
/// the signature is constant on the complementary arcs and evaluated
/// at rational circle points.  Every angle where the signature actually
/// jumps must be a rational multiple of π (a cyclotomic zero of `Δ`) —
/// otherwise the integral is irrational and an error is returned.
pub fn lt_integral(a: &SeifertMatrix) -> Result<BigRational, Error> {
    if a.size() == 0 {
        return Ok(BigRational::zero());
    }
    let p = alexander_u_poly(a);
    let sf = p.squarefree_part();
    let mut roots = isolate_roots(&p, &rat(-2), &rat(2));
    // Shrink enclosures until they are pairwise disjoint and interior.
    let mut eps = BigRational::new(BigInt::one(), BigInt::from(64));
    loop {
        let mut ok = true;
        for r in &roots {
            let (lo, hi) = r.bounds();
            if lo <= rat(-2) || hi >= rat(2) {
                ok = false;
            }
        }
        for w in roots.windows(2) {
            if w[0].bounds().1 >= w[1].bounds().0 {
                ok = false;
            }
        }
        if ok {
            break;
        }
        roots = roots.iter().map(|r| refine_root(&sf, r, &eps)).collect();
        eps = eps / rat(64);
    }
    // Sort by decreasing u, i.e. increasing angle θ.
    roots.reverse();
    // Evaluate the signature on each arc between consecutive roots.
    let k = roots.len();
    let mut arc_sigs = Vec::with_capacity(k + 1);
    for arc in 0..=k {
        let c_hi = if arc == 0 {
            BigRational::one()
        } else {
            roots[arc - 1].bounds().0 / rat(2)
        };
        let c_lo = if arc == k {
            -BigRational::one()
        } else {
            roots[arc].bounds().1 / rat(2)
        };
        let s = tan_half_in(&c_lo, &c_hi);
        arc_sigs.push(signature_at_circle_point(a, &s));
    }
    // Integral = σ_K + Σ_jumps f_j (σ_{j-1} − σ_j), with f_j = θ_j/π.
    let mut total = rat(arc_sigs[k]);
    for j in 0..k {
        let before = arc_sigs[j];
        let after = arc_sigs[j + 1];
        if before == after {
            continue;
        }
        let f = angle_fraction(&sf, &roots[j], a.size())?;
        total += f * rat(before - after);
    }
    Ok(total)
}

/// One member of a verified knot family: the matrix, its distinguished
/// root order `d`, and the multiset of two-strand torus-knot summands
/// (negative multiplicity meaning mirrors).
#[derive(Clone, Debug)]
pub struct KnotFamilyMember {
    pub matrix: SeifertMatrix,
    pub d: u64,
    pub summands: Vec<(u64, i64)>,
    /// `σ(ζ_d)` of the member — strictly positive.
    pub signature: i64,
}

/// Searches block sums of two-strand torus knots `T(2,q)` and their
/// mirrors for a family `K_1, …, K_count` with `d_i = p^i` such that
/// each member has `σ_{K_i}(ζ_{d_i}) > 0`, vanishing signature at every
/// nontrivial `d_j`-th root of unity for `j < i`, vanishing signature
/// integral, and vanishing Arf invariant.
///
/// The constraints are linear in the atom multiplicities, so solutions
/// are found by enumerating small integer vectors in the kernel of the
/// equality constraints; positivity and the Arf parity are then checked
/// on each candidate.
pub fn knot_family_search(p: u64, count: usize) -> Result<Vec<KnotFamilyMember>, Error> {
    if count == 0 {
        return Err(Error::invalid("family search needs count ≥ 1"));
    }
    let qs: Vec<u64> = (1..).map(|i| 2 * i + 1).take_while(|&q| q <= 2 * p.pow(count as u32) + 3).collect();
    let atoms: Vec<SeifertMatrix> = qs
        .iter()
        .map(|&q| SeifertMatrix::torus_two_strand(q).expect("odd q"))
        .collect();
    // Exact atom data: signatures at all relevant roots, integral, Arf.
    let d_seq: Vec<u64> = (1..=count as u32).map(|i| p.pow(i)).collect();
    let mut sig_table: Vec<Vec<i64>> = Vec::new();
    for atom in &atoms {
        let mut row = Vec::new();
        for &d in &d_seq {
            for s in 1..d {
                row.push(lt_signature(atom, d, s as i64));
            }
        }
        sig_table.push(row);
    }
    let integrals: Vec<BigRational> = atoms
        .iter()
        .map(lt_integral)
        .collect::<Result<_, _>>()?;
    let arfs: Vec<u8> = atoms.iter().map(arf).collect();
    // Column offsets of the signature table per d index.
    let offsets: Vec<usize> = {
        let mut acc = 0;
        d_seq
            .iter()
            .map(|&d| {
                let o = acc;
                acc += (d - 1) as usize;
                o
            })
            .collect()
    };
    let mut members = Vec::new();
    for (i, &d) in d_seq.iter().enumerate() {
        // Equality constraints: signatures vanish at all nontrivial
        // d_j-th roots for j < i, and the integral vanishes.
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for j in 0..i {
            for s in 0..(d_seq[j] - 1) as usize {
                rows.push(
                    sig_table
                        .iter()
                        .map(|atom_row| BigInt::from(atom_row[offsets[j] + s]))
                        .collect(),
                );
            }
        }
        // Clear denominators of the integral row.
        let denom_lcm = integrals
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        rows.push(
            integrals
                .iter()
                .map(|q| (q * BigRational::from(denom_lcm.clone())).to_integer())
                .collect(),
        );
        let kernel = intmat::integer_kernel(&rows, atoms.len());
        // The objective column: σ(ζ_d) at s = 1 of each atom.
        let target: Vec<i64> = sig_table
            .iter()
            .map(|atom_row| atom_row[offsets[i]])
            .collect();
        let solution = search_kernel_combination(&kernel, &target, &arfs, &atoms);
        let (mult, signature) = solution.ok_or_else(|| {
            Error::exhausted("no torus-knot combination satisfies the family conditions")
        })?;
        let mut matrix = SeifertMatrix::empty();
        let mut summands = Vec::new();
        for (a_idx, &n) in mult.iter().enumerate() {
            if n == 0 {
                continue;
            }
            summands.push((qs[a_idx], n));
            let piece = if n > 0 { atoms[a_idx].clone() } else { atoms[a_idx].mirror() };
            for _ in 0..n.unsigned_abs() {
                matrix = matrix.block_sum(&piece);
            }
        }
        members.push(KnotFamilyMember { matrix, d, summands, signature });
    }
    Ok(members)
}

/// Enumerates small integer combinations of kernel basis vectors,
/// returning the first (smallest by search order) with positive target
/// signature and even Arf sum.
fn search_kernel_combination(
    kernel: &[Vec<BigInt>],
    target: &[i64],
    arfs: &[u8],
    atoms: &[SeifertMatrix],
) -> Option<(Vec<i64>, i64)> {
    let dim = kernel.len();
    if dim == 0 {
        return None;
    }
    let nat = atoms.len();
    let basis: Vec<Vec<i64>> = kernel
        .iter()
        .map(|v| {
            v.iter()
                .map(|x| num_traits::ToPrimitive::to_i64(x).unwrap_or(i64::MAX))
                .collect()
        })
        .collect();
    // Breadth-first over coefficient radius, keeping the enumeration
    // below a few million candidates.
    let mut max_radius = 1i64;
    while (2 * max_radius + 3).pow(dim.min(12) as u32) <= 4_000_000 {
        max_radius += 1;
    }
    let mut best: Option<(Vec<i64>, i64, i64)> = None;
    for radius in 1..=max_radius {
        let mut coeffs = vec![-radius; dim];
        loop {
            if coeffs.iter().any(|c| c.abs() == radius) {
                let mult: Vec<i64> = (0..nat)
                    .map(|a| {
                        (0..dim).map(|b| coeffs[b] * basis[b][a]).sum()
                    })
                    .collect();
                let sig: i64 = mult.iter().zip(target).map(|(n, t)| n * t).sum();
                if sig > 0 {
                    let arf_sum: i64 = mult
                        .iter()
                        .zip(arfs)
                        .map(|(n, &a)| n.abs() * a as i64)
                        .sum();
                    if arf_sum % 2 == 0 {
                        let size: i64 = mult
                            .iter()
                            .zip(atoms)
                            .map(|(n, a)| n.abs() * a.size() as i64)
                            .sum();
                        if best.as_ref().map_or(true, |(_, _, bs)| size < *bs) {
                            best = Some((mult, sig, size));
                        }
                    }
                }
            }
            // Advance the odometer.
            let mut i = 0;
            loop {
                if i == dim {
                    break;
                }
                coeffs[i] += 1;
                if coeffs[i] <= radius {
                    break;
                }
                coeffs[i] = -radius;
                i += 1;
            }
            if i == dim {
                break;
            }
        }
        if best.is_some() {
            break;
        }
    }
    best.map(|(m, s, _)| (m, s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap()
    }

    fn figure_eight() -> SeifertMatrix {
        SeifertMatrix::new(vec![vec![1, 1], vec![0, -1]]).unwrap()
    }

    #[test]
    fn seifert_condition() {
        assert!(trefoil().size() == 2);
        assert!(SeifertMatrix::new(vec![vec![1, 0], vec![0, 1]]).is_err());
        assert!(SeifertMatrix::new(vec![vec![1]]).is_err());
        assert_eq!(SeifertMatrix::empty().size(), 0);
        assert_eq!(SeifertMatrix::torus_two_strand(5).unwrap().size(), 4);
    }

    #[test]
    fn lt_matrix_values() {
        let field = CycloField::new(2);
        // ω = −1: the form is 2(A + Aᵀ).
        let h = lt_matrix(&trefoil(), &field, 1);
        let expect = [[-4i64, 2], [2, -4]];
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(h.entries()[i][j], field.from_integer(expect[i][j]));
            }
        }
        // ω = 1: the zero matrix.
        let h = lt_matrix(&trefoil(), &field, 0);
        assert!(h.entries().iter().all(|r| r.iter().all(|e| e.is_zero())));
    }

    #[test]
    fn trefoil_signatures() {
        assert_eq!(lt_signature(&trefoil(), 2, 1), -2);
        assert_eq!(lt_signature(&trefoil(), 2, 0), 0);
        // The mirror negates the signature.
        assert_eq!(lt_signature(&trefoil().mirror(), 2, 1), 2);
        // σ(ζ_6) sits at the jump? Just next to it, σ(ζ_4) = −2.
        assert_eq!(lt_signature(&trefoil(), 4, 1), -2);
        // The figure-eight knot has vanishing signature everywhere.
        assert_eq!(lt_signature(&figure_eight(), 2, 1), 0);
        assert_eq!(lt_signature(&figure_eight(), 8, 1), 0);
    }

    #[test]
    fn witt_vector_arithmetic() {
        let field = CycloField::new(2);
        let h = lt_matrix(&trefoil(), &field, 1);
        let v = witt_signatures(&h);
        assert_eq!(v.rank(), 2);
        assert_eq!(v.defining_signature(), -2);
        // H ⊕ (−H) is Witt-trivial.
        let sum = witt_signatures(&h.block_sum(&h.neg()));
        assert!(sum.is_signature_zero());
        assert_eq!(sum.rank(), 4);
        // Additivity of the vector.
        assert_eq!(v.add(&v.neg()).signatures().values().sum::<i64>(), 0);
    }

    #[test]
    fn alexander_and_arf() {
        let delta = alexander(&trefoil());
        assert_eq!(delta, RatPoly::from_int_coeffs(&[1, -1, 1]));
        assert_eq!(arf(&trefoil()), 1);
        assert_eq!(arf(&SeifertMatrix::empty()), 0);
        // Twist knot with Δ(−1) = −9 ≡ −1 (mod 8).
        let twist = SeifertMatrix::new(vec![vec![-1, 1], vec![0, 2]]).unwrap();
        assert_eq!(arf(&twist), 0);
        // Arf is additive: trefoil # trefoil has Arf 0.
        assert_eq!(arf(&trefoil().block_sum(&trefoil())), 0);
    }

    #[test]
    fn signature_integrals() {
        assert_eq!(lt_integral(&SeifertMatrix::empty()).unwrap(), rat(0));
        // Trefoil: σ = −2 on two thirds of the circle.
        assert_eq!(
            lt_integral(&trefoil()).unwrap(),
            BigRational::new(BigInt::from(-4), BigInt::from(3))
        );
        // Figure-eight: identically zero.
        assert_eq!(lt_integral(&figure_eight()).unwrap(), rat(0));
        // A knot plus its mirror cancels pointwise.
        let sum = trefoil().block_sum(&trefoil().mirror());
        assert_eq!(lt_integral(&sum).unwrap(), rat(0));
        // T(2,5): jumps at π/5 and 3π/5 give −(2/5)·2 − (2/5)·... = −12/5.
        let t25 = SeifertMatrix::torus_two_strand(5).unwrap();
        assert_eq!(
            lt_integral(&t25).unwrap(),
            BigRational::new(BigInt::from(-12), BigInt::from(5))
        );
    }

    #[test]
    fn lambda_blocks_are_hermitian() {
        let field = CycloField::new(8);
        for r in 1..=4 {
            let h = lambda_r(&trefoil(), &field, 1, r).unwrap();
            assert_eq!(h.size(), 2 * r);
            // Constructor re-validated hermitian symmetry on r ≥ 2;
            // check r = 1 likewise.
            for i in 0..h.size() {
                for j in 0..h.size() {
                    assert_eq!(h.entries()[j][i], field.conj(&h.entries()[i][j]));
                }
            }
        }
        // r = 1 agrees with lt_matrix.
        let a = lambda_r(&trefoil(), &field, 3, 1).unwrap();
        let b = lt_matrix(&trefoil(), &field, 3);
        assert_eq!(a.entries(), b.entries());
    }
}
