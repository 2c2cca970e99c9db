use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Coefficients of `det(λI - m)`, highest degree first (so `[1, c1, ..., cn]`).
pub fn charpoly(m: &IntMatrix) -> Result<Vec<BigInt>> {
    faddeev_leverrier(m)
}

fn require_square(m: &IntMatrix) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "characteristic polynomial of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    Ok(m.rows())
}

/// Faddeev–LeVerrier recursion. The division by `k` is exact over the integers.
pub fn faddeev_leverrier(m: &IntMatrix) -> Result<Vec<BigInt>> {
    let n = require_square(m)?;
    let mut coeffs = vec![BigInt::one()];
    let mut aux = IntMatrix::zeros(n, n);
    let identity = IntMatrix::identity(n);
    for k in 1..=n {
        let prev = coeffs.last().unwrap().clone();
        aux = m.try_mul(&aux)?.try_add(&identity.scale(&prev))?;
        let tr = m.try_mul(&aux)?.trace();
        let (c, rem) = (-tr).div_rem(&BigInt::from(k));
        debug_assert!(rem.is_zero());
        coeffs.push(c);
    }
    Ok(coeffs)
}

/// Berkowitz's division-free algorithm; same output convention as [`charpoly`].
pub fn berkowitz(m: &IntMatrix) -> Result<Vec<BigInt>> {
    let n = require_square(m)?;
    let mut poly = vec![BigInt::one()];
    for r in 0..n {
        // leading r x r block, column above and row left of the new diagonal entry
        let col: Vec<BigInt> = (0..r).map(|i| m[(i, r)].clone()).collect();
        let row: Vec<BigInt> = (0..r).map(|j| m[(r, j)].clone()).collect();
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(BigInt::one());
        toeplitz.push(-m[(r, r)].clone());
        let mut power = col;
        for _ in 0..r {
            let dot: BigInt = row.iter().zip(&power).map(|(a, b)| a * b).sum();
            toeplitz.push(-dot);
            power = (0..r).map(|i| (0..r).map(|j| &m[(i, j)] * &power[j]).sum()).collect();
        }
        poly = (0..r + 2)
            .map(|i| {
                (0..=i.min(r))
                    .filter(|&j| i - j < toeplitz.len())
                    .map(|j| &toeplitz[i - j] * &poly[j])
                    .sum()
            })
            .collect();
    }
    Ok(poly)
}

/// Expands `Π (λ - r)`, highest degree first.
pub fn poly_from_roots(roots: &[BigInt]) -> Vec<BigInt> {
    let mut poly = vec![BigInt::one()];
    for r in roots {
        let mut next = poly.clone();
        next.push(BigInt::zero());
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] -= r * c;
        }
        poly = next;
    }
    poly
}

/// Evaluates a polynomial (highest degree first) at a square matrix by Horner's rule.
pub fn eval_poly_at_matrix(poly: &[BigInt], m: &IntMatrix) -> Result<IntMatrix> {
    let n = require_square(m)?;
    let identity = IntMatrix::identity(n);
    let mut acc = IntMatrix::zeros(n, n);
    for c in poly {
        acc = acc.try_mul(m)?.try_add(&identity.scale(c))?;
    }
    Ok(acc)
}

/// Integer roots with multiplicity if the polynomial (monic, highest degree
/// first) splits completely over the integers; `None` otherwise.
pub fn integer_roots(poly: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut p = poly.to_vec();
    let mut roots = Vec::new();
    while p.len() > 1 {
        if p.last().unwrap().is_zero() {
            roots.push(BigInt::zero());
            p.pop();
            continue;
        }
        let constant = p.last().unwrap().abs().to_u64()?;
        let root = divisors(constant)
            .into_iter()
            .flat_map(|d| [BigInt::from(d), -BigInt::from(d)])
            .find(|r| eval(&p, r).is_zero())?;
        p = deflate(&p, &root);
        roots.push(root);
    }
    roots.sort();
    Some(roots)
}

fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc * x + c)
}

// synthetic division by (λ - root); the remainder is zero by construction
fn deflate(p: &[BigInt], root: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(p.len() - 1);
    let mut carry = BigInt::zero();
    for c in &p[..p.len() - 1] {
        carry = carry * root + c;
        out.push(carry.clone());
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
