//! Rational interval arithmetic with certified enclosures of π and of
//! cosines at rational multiples of 2π.
//!
//! Signature computations need the sign of real numbers of the form
//! `Σ_k a_k cos(2πks/d)` with rational `a_k` — the image of a nonzero
//! cyclotomic field element under a real embedding.  Such a number is
//! never zero, so evaluating it in interval arithmetic at increasing
//! precision certifies its sign after finitely many refinements.  All
//! endpoints are exact rationals; no floating point is involved.
//!
//! π is enclosed through Machin's formula
//! `π/4 = 4 arctan(1/5) − arctan(1/239)`, with the alternating arctan
//! series bracketing the limit between consecutive partial sums.  The
//! cosine uses the Taylor polynomial at an interval midpoint with the
//! Lagrange remainder bound `|x|^n / n!` and the Lipschitz bound
//! `|cos a − cos b| ≤ |a − b|` for the interval width.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A closed interval with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Interval {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: BigRational) -> Interval {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn zero() -> Interval {
        Interval::point(BigRational::zero())
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if *p < lo {
                lo = p.clone();
            }
            if *p > hi {
                hi = p.clone();
            }
        }
        Interval::new(lo, hi)
    }

    pub fn scale(&self, c: &BigRational) -> Interval {
        if c.is_negative() {
            Interval::new(&self.hi * c, &self.lo * c)
        } else {
            Interval::new(&self.lo * c, &self.hi * c)
        }
    }

    /// The sign, when the interval certifies one: `Some(1)` if strictly
    /// positive, `Some(-1)` if strictly negative, `Some(0)` if the
    /// interval is the single point zero, `None` when zero is interior.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }
}

/// `1 / 2^bits`, the target half-width of an enclosure.
pub fn tolerance(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// Rounds toward zero to a dyadic rational with denominator `2^bits`;
/// the error is below `2^-bits`.  Keeping every running sum dyadic
/// prevents the denominator blow-up of exact series summation.
fn dyadic(x: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = (x * BigRational::from(scale.clone())).trunc();
    BigRational::new(scaled.to_integer(), scale)
}

/// Encloses `arctan(1/x)` for integer `x ≥ 2` by the alternating
/// series, with each partial sum rounded to `prec` dyadic bits and the
/// rounding budget added to the enclosure width.
fn arctan_recip(x: i64, prec: u32) -> Interval {
    let eps = tolerance(prec + 2);
    let tol = tolerance(prec + 16);
    let x2 = rat(x * x);
    let mut term = rat(1) / rat(x);
    let mut sum = BigRational::zero();
    let mut err = BigRational::zero();
    let mut k = 0u32;
    loop {
        let contribution = &term / rat(2 * k as i64 + 1);
        // Alternating series: the limit lies between consecutive
        // partial sums, so the first omitted contribution bounds the
        // truncation error.
        if contribution < eps {
            let spread = contribution + err;
            return Interval::new(&sum - &spread, &sum + &spread);
        }
        let signed = if k % 2 == 0 { contribution } else { -contribution };
        sum = dyadic(&(&sum + &signed), prec + 16);
        err += &tol;
        // term/x² is exact but its denominator grows; round it and
        // absorb the error (shrinking by x² ≥ 4 each step, no growth).
        term = dyadic(&(term / &x2), prec + 16);
        err += &tol;
        k += 1;
    }
}

/// A certified enclosure of π with width at most `2^-bits`, from
/// Machin's formula.
pub fn pi(bits: u32) -> Interval {
    let a = arctan_recip(5, bits + 8).scale(&rat(16));
    let b = arctan_recip(239, bits + 8).scale(&rat(4));
    a.sub(&b)
}

/// A certified enclosure of `cos(x)` for an enclosed argument with
/// `|x| ≤ 8`.
pub fn cos(x: &Interval, bits: u32) -> Interval {
    let prec = bits + 32;
    let tol = tolerance(prec);
    let eps = tolerance(bits + 2);
    // A dyadic point near the midpoint; |x − x0| ≤ width/2 + tol and
    // cos is 1-Lipschitz.
    let x0 = dyadic(&x.midpoint(), prec);
    let x0sq = &x0 * &x0;
    let x0sq_bound = x0sq.abs() + &tol;
    // Taylor series at 0 evaluated at x0 with terms rounded to dyadic
    // precision.  `term_err` propagates the rounding error through the
    // recurrence term_{k+1} = −term_k·x0²/((2k+1)(2k+2)); `sum_err`
    // collects it at each addition.  The magnitude of the next true
    // term is the Lagrange bound for the truncation, since every
    // derivative of cos is bounded by 1.
    let mut term = BigRational::one();
    let mut term_err = BigRational::zero();
    let mut sum = BigRational::zero();
    let mut sum_err = BigRational::zero();
    let mut k = 0i64;
    let remainder = loop {
        sum = dyadic(&(&sum + &term), prec);
        sum_err += &term_err + &tol;
        let denom = rat((2 * k + 1) * (2 * k + 2));
        term = dyadic(&(-(&term * &x0sq) / &denom), prec);
        term_err = term_err * &x0sq_bound / &denom + &tol;
        k += 1;
        let bound = term.abs() + &term_err;
        if bound < eps {
            break bound;
        }
    };
    let spread = x.width() / rat(2) + remainder + sum_err + &tol;
    Interval::new(&sum - &spread, &sum + &spread)
}

/// A certified enclosure of `cos(2π·num/den)` with adaptive precision
/// `bits`.
pub fn cos_two_pi_ratio(num: i64, den: i64, bits: u32) -> Interval {
    debug_assert!(den > 0);
    let angle = pi(bits + 8)
        .scale(&(rat(2) * BigRational::new(BigInt::from(num), BigInt::from(den))));
    cos(&angle, bits)
}

/// The sum `Σ_k coeffs[k]·cos(2πk·num/den)` enclosed at the given
/// precision, for `coeffs[0..]` indexed from `k = 0`.
pub fn cosine_combination(
    coeffs: &[BigRational],
    num: i64,
    den: i64,
    bits: u32,
) -> Interval {
    let mut acc = Interval::zero();
    let enclosures: Vec<Interval> = (0..coeffs.len())
        .map(|k| cos_two_pi_ratio(num * k as i64, den, bits))
        .collect();
    for (c, e) in coeffs.iter().zip(&enclosures) {
        if !c.is_zero() {
            acc = acc.add(&e.scale(c));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(i: &Interval) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let f = |r: &BigRational| {
            r.numer().to_f64().unwrap() / r.denom().to_f64().unwrap()
        };
        (f(i.lo()), f(i.hi()))
    }

    #[test]
    fn pi_enclosure_is_tight() {
        let p = pi(64);
        assert!(p.width() <= tolerance(60));
        let (lo, hi) = approx(&p);
        assert!(lo <= core::f64::consts::PI && core::f64::consts::PI <= hi);
    }

    #[test]
    fn cosine_at_rational_angles() {
        // cos(2π/3) = −1/2 and cos(π) = −1, certified to 40 bits.
        let c = cos_two_pi_ratio(1, 3, 40);
        let half = -rat(1) / rat(2);
        assert!(c.lo() <= &half && &half <= c.hi());
        assert!(c.width() <= tolerance(36));
        let c = cos_two_pi_ratio(1, 2, 40);
        assert!(c.lo() <= &rat(-1) && &rat(-1) <= c.hi());
    }

    #[test]
    fn sign_certification() {
        // cos(2π/5) + cos(4π/5) = −1/2: certify negativity.
        let coeffs = [rat(0), rat(1), rat(1)];
        let enclosure = cosine_combination(&coeffs, 1, 5, 64);
        assert_eq!(enclosure.sign(), Some(-1));
        let exact = -rat(1) / rat(2);
        assert!(enclosure.lo() <= &exact && &exact <= enclosure.hi());
    }
}
