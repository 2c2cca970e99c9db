use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IntMatrix, RatMatrix, Rational};
use crate::error::{Error, Result};

/// Exact determinant of a square integer matrix (Bareiss elimination).
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    det_bareiss(m)
}

/// Fraction-free Bareiss elimination. Every intermediate division is exact,
/// so entries stay integral and are bounded by minors of `m`.
pub fn det_bareiss(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_rows();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            // first nonzero below the diagonal
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign < 0 { -d } else { d })
}

/// Determinant by rational Gaussian elimination.
#[allow(clippy::needless_range_loop)]
pub fn det_rational(m: &RatMatrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut a = m.to_rows();
    let mut acc = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != k {
            a.swap(p, k);
            acc = -acc;
        }
        let pivot = a[k][k].clone();
        acc *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    Ok(acc)
}
