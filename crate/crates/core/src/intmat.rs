//! Exact integer/rational matrix helpers: determinants, inverses of
//! unimodular matrices, and integer kernel bases.  Sizes here are tiny
//! (ranks of surface groups, graded pieces of free Lie algebras), so
//! straightforward fraction-free and rational elimination is plenty.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Determinant of a square `BigInt` matrix by Bareiss elimination.
pub fn det(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Inverse of an integer matrix with determinant `±1`.  Errors when the
/// matrix is not unimodular.
pub fn unimodular_inverse(a: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>, Error> {
    let n = a.len();
    let d = det(a);
    if !d.abs().is_one() {
        return Err(Error::invalid("matrix is not unimodular over Z"));
    }
    // Rational Gauss-Jordan on [A | I]; the result is integral because
    // det = ±1.
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        BigRational::from_integer(a[i][j].clone())
                    } else if j - n == i {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        let p = (k..n)
            .find(|&r| !m[r][k].is_zero())
            .expect("unimodular matrix has full rank");
        m.swap(k, p);
        let piv = m[k][k].clone();
        for j in 0..2 * n {
            m[k][j] = &m[k][j] / &piv;
        }
        for i in 0..n {
            if i != k && !m[i][k].is_zero() {
                let f = m[i][k].clone();
                for j in 0..2 * n {
                    let sub = &f * &m[k][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
    }
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let r = &m[i][n + j];
                    debug_assert!(r.is_integer());
                    r.to_integer()
                })
                .collect()
        })
        .collect())
}

/// Basis of the rational kernel of an integer matrix (rows x cols),
/// scaled to primitive integer vectors.  The kernel is of the column
/// space: vectors `v` with `A v = 0`.
pub fn integer_kernel(a: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let rows = a.len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| BigRational::from_integer(a[i][j].clone()))
                .collect()
        })
        .collect();
    // Reduced row echelon form, tracking pivot columns.
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let piv = m[row][col].clone();
        for j in 0..cols {
            m[row][j] = &m[row][j] / &piv;
        }
        for i in 0..rows {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..cols {
                    let sub = &f * &m[row][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = alloc::vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        // Clear denominators and divide by the content.
        let mut denom = BigInt::one();
        for x in &v {
            denom = num_integer::lcm(denom, x.denom().clone());
        }
        let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(denom.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for x in &ints {
            g = num_integer::gcd(g, x.clone());
        }
        if g.is_zero() {
            g = BigInt::one();
        }
        basis.push(ints.iter().map(|x| x / &g).collect());
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn det_small() {
        assert_eq!(det(&m(&[&[2, 1], &[1, 1]])), BigInt::from(1));
        assert_eq!(det(&m(&[&[1, 2], &[2, 4]])), BigInt::from(0));
        assert_eq!(
            det(&m(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])),
            BigInt::from(-2)
        );
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = unimodular_inverse(&a).unwrap();
        assert_eq!(inv, m(&[&[1, -1], &[-1, 2]]));
        assert!(unimodular_inverse(&m(&[&[2, 0], &[0, 1]])).is_err());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ker = integer_kernel(&a, 3);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for row in &a {
                let dot: BigInt = row.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
    }
}
