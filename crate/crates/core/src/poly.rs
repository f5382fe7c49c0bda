//! Univariate polynomials with exact rational coefficients.
//!
//! This module supplies the certified real-root machinery behind the
//! signature computations: Sturm chains and root isolation on an
//! interval, cyclotomic polynomials, Lagrange interpolation (used to
//! recover determinants of polynomial matrices from integer samples),
//! and the reduction of a reciprocal polynomial `p(t)` of even degree to
//! a polynomial in `u = t + t^{-1}` of half the degree.  The latter
//! turns questions about roots of `p` on the unit circle `t = e^{iθ}`
//! into questions about real roots of the reduced polynomial in the
//! interval `(-2, 2)`, where `u = 2 cos θ`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A polynomial over the rationals, stored by ascending coefficients
/// with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> RatPoly {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> RatPoly {
        RatPoly { coeffs: vec![] }
    }

    pub fn one() -> RatPoly {
        RatPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> RatPoly {
        RatPoly::new(vec![c])
    }

    /// The monomial `c·t^n`.
    pub fn monomial(c: BigRational, n: usize) -> RatPoly {
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = c;
        RatPoly::new(coeffs)
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> RatPoly {
        RatPoly::new(
            coeffs.iter().map(|&c| BigRational::from(BigInt::from(c))).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> BigRational {
        self.coeffs.get(n).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::new(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder of Euclidean division.
    pub fn divmod(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let dlen = divisor.coeffs.len();
        if rem.len() < dlen {
            return (RatPoly::zero(), RatPoly::new(rem));
        }
        let mut quo = vec![BigRational::zero(); rem.len() - dlen + 1];
        let lead = divisor.leading();
        for k in (0..quo.len()).rev() {
            let c = &rem[k + dlen - 1] / &lead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    let prod = &c * d;
                    rem[k + i] -= prod;
                }
            }
            quo[k] = c;
        }
        (RatPoly::new(quo), RatPoly::new(rem))
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &RatPoly) -> Result<RatPoly, Error> {
        let (q, r) = self.divmod(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::invalid("polynomial division is not exact"))
        }
    }

    /// Whether `divisor` divides this polynomial exactly.
    pub fn divisible_by(&self, divisor: &RatPoly) -> bool {
        self.divmod(divisor).1.is_zero()
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divmod(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lead = a.leading();
            a.scale(&(BigRational::one() / lead))
        }
    }

    /// The squarefree part `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> RatPoly {
        if self.degree() == 0 {
            return RatPoly::one();
        }
        let g = self.gcd(&self.derivative());
        let q = self.div_exact(&g).expect("gcd divides");
        let lead = q.leading();
        q.scale(&(BigRational::one() / lead))
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// The `n`-th cyclotomic polynomial, by dividing `t^n − 1` by the
/// cyclotomic polynomials of the proper divisors of `n`.
pub fn cyclotomic(n: u64) -> RatPoly {
    assert!(n >= 1);
    let mut num = RatPoly::monomial(BigRational::one(), n as usize)
        .sub(&RatPoly::one());
    for d in 1..n {
        if n % d == 0 {
            num = num.div_exact(&cyclotomic(d)).expect("cyclotomic division");
        }
    }
    num
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Rewrites a reciprocal polynomial `p` of even degree `2m` (one with
/// `p(t) = t^{2m} p(1/t)`) as a degree-`m` polynomial `q` with
/// `p(t)/t^m = q(t + t^{-1})`, using the recurrence
/// `B_{j+1} = u·B_j − B_{j−1}` for `B_j(u) = t^j + t^{-j}`.
pub fn reciprocal_to_u(p: &RatPoly) -> Result<RatPoly, Error> {
    if p.is_zero() {
        return Ok(RatPoly::zero());
    }
    let deg = p.degree();
    if deg % 2 != 0 {
        return Err(Error::invalid("reciprocal reduction needs even degree"));
    }
    let m = deg / 2;
    for i in 0..=deg {
        if p.coeff(i) != p.coeff(deg - i) {
            return Err(Error::invalid("polynomial is not reciprocal"));
        }
    }
    let u = RatPoly::monomial(BigRational::one(), 1);
    let mut b_prev = RatPoly::constant(rat(2));
    let mut b_cur = u.clone();
    let mut result = RatPoly::constant(p.coeff(m));
    for j in 1..=m {
        if j > 1 {
            let b_next = u.mul(&b_cur).sub(&b_prev);
            b_prev = b_cur;
            b_cur = b_next;
        }
        result = result.add(&b_cur.scale(&p.coeff(m + j)));
    }
    Ok(result)
}

/// Minimal-polynomial-style companion of the cyclotomic polynomial in
/// the variable `u = t + t^{-1}`: its roots are `2 cos(2πk/n)` over the
/// residues `k` prime to `n`.  (For `n ≤ 2` the cyclotomic polynomial
/// has odd degree; the linear factors `u ∓ 2` are returned directly.)
pub fn cos_polynomial(n: u64) -> RatPoly {
    match n {
        1 => RatPoly::from_int_coeffs(&[-2, 1]),
        2 => RatPoly::from_int_coeffs(&[2, 1]),
        _ => reciprocal_to_u(&cyclotomic(n)).expect("cyclotomic polynomials are reciprocal"),
    }
}

/// Lagrange interpolation through distinct sample points.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> RatPoly {
    let mut result = RatPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut term = RatPoly::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = xi - xj;
            term = term.mul(&RatPoly::new(vec![-xj / &denom, BigRational::one() / denom]));
        }
        result = result.add(&term);
    }
    result
}

/// A Sturm chain of a squarefree polynomial, for counting real roots in
/// an interval by sign variations.
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    /// Builds the chain of the squarefree part of `p`.
    pub fn new(p: &RatPoly) -> SturmChain {
        let p0 = p.squarefree_part();
        let mut chain = vec![p0.clone()];
        if p0.degree() >= 1 {
            chain.push(p0.derivative());
            loop {
                let n = chain.len();
                let r = chain[n - 2].divmod(&chain[n - 1]).1;
                if r.is_zero() {
                    break;
                }
                chain.push(r.neg());
            }
        }
        SturmChain { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let v = p.eval(x);
            let s = if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the open interval `(a, b)`;
    /// the endpoints must not be roots.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        debug_assert!(!self.chain[0].eval(a).is_zero());
        debug_assert!(!self.chain[0].eval(b).is_zero());
        self.variations(a) - self.variations(b)
    }
}

/// An isolated real root: either an exact rational root or an open
/// interval containing exactly one root of the polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsolatedRoot {
    Exact(BigRational),
    Interval(BigRational, BigRational),
}

impl IsolatedRoot {
    /// Endpoints of an enclosing interval (degenerate when exact).
    pub fn bounds(&self) -> (BigRational, BigRational) {
        match self {
            IsolatedRoot::Exact(r) => (r.clone(), r.clone()),
            IsolatedRoot::Interval(a, b) => (a.clone(), b.clone()),
        }
    }
}

/// Isolates the distinct real roots of `p` inside the open interval
/// `(a, b)`, returned in increasing order.  The endpoints must not be
/// roots of `p`.
pub fn isolate_roots(p: &RatPoly, a: &BigRational, b: &BigRational) -> Vec<IsolatedRoot> {
    let sf = p.squarefree_part();
    if sf.degree() == 0 {
        return vec![];
    }
    let chain = SturmChain::new(&sf);
    let mut out = Vec::new();
    isolate_rec(&sf, &chain, a, b, &mut out);
    out
}

fn isolate_rec(
    p: &RatPoly,
    chain: &SturmChain,
    a: &BigRational,
    b: &BigRational,
    out: &mut Vec<IsolatedRoot>,
) {
    let count = chain.count_roots(a, b);
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(IsolatedRoot::Interval(a.clone(), b.clone()));
        return;
    }
    let mut mid = (a + b) / rat(2);
    if p.eval(&mid).is_zero() {
        // Nudge the cut off the root, keeping the root interior to one
        // half, then report it exactly.
        let exact = mid.clone();
        let step = (b - a) / rat(4096);
        mid = &exact - &step;
        while p.eval(&mid).is_zero() {
            mid = (&mid + a) / rat(2);
        }
        let mut hi = &exact + &step;
        while p.eval(&hi).is_zero() {
            hi = (&hi + b) / rat(2);
        }
        isolate_rec(p, chain, a, &mid, out);
        out.push(IsolatedRoot::Exact(exact));
        if chain.count_roots(&mid, &hi) > 1 {
            // More roots crowd the nudge window; shrink it.
            let tight = SturmChain::new(p);
            isolate_rec(p, &tight, &mid, &hi, out);
        }
        isolate_rec(p, chain, &hi, b, out);
        return;
    }
    isolate_rec(p, chain, a, &mid, out);
    isolate_rec(p, chain, &mid, b, out);
}

/// Refines an isolating interval of a squarefree `p` by bisection until
/// its width is at most `eps`.
pub fn refine_root(
    p: &RatPoly,
    root: &IsolatedRoot,
    eps: &BigRational,
) -> IsolatedRoot {
    let (mut a, mut b) = match root {
        IsolatedRoot::Exact(_) => return root.clone(),
        IsolatedRoot::Interval(a, b) => (a.clone(), b.clone()),
    };
    let sa = p.eval(&a).is_positive();
    while &b - &a > *eps {
        let mid = (&a + &b) / rat(2);
        let v = p.eval(&mid);
        if v.is_zero() {
            return IsolatedRoot::Exact(mid);
        }
        if v.is_positive() == sa {
            a = mid;
        } else {
            b = mid;
        }
    }
    IsolatedRoot::Interval(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_small_cases() {
        assert_eq!(cyclotomic(1), RatPoly::from_int_coeffs(&[-1, 1]));
        assert_eq!(cyclotomic(2), RatPoly::from_int_coeffs(&[1, 1]));
        assert_eq!(cyclotomic(6), RatPoly::from_int_coeffs(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), RatPoly::from_int_coeffs(&[1, 0, -1, 0, 1]));
        for n in 1..=24u64 {
            assert_eq!(cyclotomic(n).degree() as u64, totient(n));
        }
    }

    #[test]
    fn reciprocal_reduction() {
        // t² − t + 1 over t gives u − 1.
        let p = RatPoly::from_int_coeffs(&[1, -1, 1]);
        assert_eq!(reciprocal_to_u(&p).unwrap(), RatPoly::from_int_coeffs(&[-1, 1]));
        // The roots 2cos(2π/5), 2cos(4π/5) of the reduced fifth
        // cyclotomic polynomial satisfy u² + u − 1.
        assert_eq!(cos_polynomial(5), RatPoly::from_int_coeffs(&[-1, 1, 1]));
        assert!(reciprocal_to_u(&RatPoly::from_int_coeffs(&[1, 2, 1, 1])).is_err());
    }

    #[test]
    fn sturm_isolation() {
        // (u² − 2)(u − 1/2): three roots in (−2, 2).
        let p = RatPoly::from_int_coeffs(&[-2, 0, 1])
            .mul(&RatPoly::new(vec![-rat(1) / rat(2), rat(1)]));
        let roots = isolate_roots(&p, &rat(-2), &rat(2));
        assert_eq!(roots.len(), 3);
        // Open isolating intervals may touch at a non-root endpoint but
        // never overlap.
        let bounds: Vec<_> = roots.iter().map(|r| r.bounds()).collect();
        for w in bounds.windows(2) {
            assert!(w[0].1 <= w[1].0);
        }
        // Refinement shrinks an interval below any tolerance.
        let eps = rat(1) / rat(1_000_000);
        for r in &roots {
            let (a, b) = refine_root(&p.squarefree_part(), r, &eps).bounds();
            assert!(&b - &a <= eps);
        }
    }

    #[test]
    fn interpolation_recovers_determinant_samples() {
        let p = RatPoly::from_int_coeffs(&[3, 0, -2, 5]);
        let pts: Vec<_> = (0..4).map(|k| (rat(k), p.eval(&rat(k)))).collect();
        assert_eq!(interpolate(&pts), p);
    }
}
