//! Cubic forms of structure tensors and their Harrison centers
//! `Z(f) = {X : H_f X = Xᵀ H_f}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Echelon, IntMatrix, RatMatrix, Rational};
use crate::ring::multiplication_matrix;
use crate::serde_util;
use crate::tensor::StructureTensor;

/// Number of distinct orderings of a sorted triple.
fn orderings(i: usize, j: usize, k: usize) -> u64 {
    match (i == j, j == k) {
        (true, true) => 1,
        (false, false) => 6,
        _ => 3,
    }
}

/// Homogeneous cubic in `s` variables, keyed by sorted monomial `(i, j, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicForm {
    s: usize,
    coeffs: BTreeMap<(usize, usize, usize), BigInt>,
}

impl CubicForm {
    pub fn new(s: usize, terms: impl IntoIterator<Item = ((usize, usize, usize), BigInt)>) -> Result<Self> {
        let mut coeffs: BTreeMap<(usize, usize, usize), BigInt> = BTreeMap::new();
        for ((a, b, c), v) in terms {
            let mut idx = [a, b, c];
            idx.sort_unstable();
            if idx[2] >= s {
                return Err(Error::IndexOutOfRange { index: idx[2], size: s });
            }
            *coeffs.entry((idx[0], idx[1], idx[2])).or_insert_with(BigInt::zero) += v;
        }
        coeffs.retain(|_, v| !v.is_zero());
        Ok(CubicForm { s, coeffs })
    }

    /// `Σ x_i³`.
    pub fn diagonal(s: usize) -> Self {
        CubicForm {
            s,
            coeffs: (0..s).map(|i| ((i, i, i), BigInt::one())).collect(),
        }
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> BigInt {
        let mut idx = [i, j, k];
        idx.sort_unstable();
        self.coeffs
            .get(&(idx[0], idx[1], idx[2]))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize, usize), &BigInt)> {
        self.coeffs.iter()
    }

    pub fn evaluate(&self, p: &[BigInt]) -> BigInt {
        self.coeffs
            .iter()
            .map(|(&(i, j, k), c)| c * &p[i] * &p[j] * &p[k])
            .sum()
    }
}

/// `f = Σ_{ordered (i,j,k)} g_ijk x_i x_j x_k`.
pub fn cubic_form(t: &StructureTensor) -> CubicForm {
    let s = t.s();
    let mut coeffs = BTreeMap::new();
    for i in 0..s {
        for j in i..s {
            for k in j..s {
                let g = t.get(i, j, k);
                if g != 0 {
                    coeffs.insert((i, j, k), BigInt::from(g * orderings(i, j, k)));
                }
            }
        }
    }
    CubicForm { s, coeffs }
}

/// `s × s` matrix of integer linear forms; entry `(a, b)` is the coefficient
/// vector over `x_0..x_{s-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearFormMatrix {
    pub s: usize,
    #[serde(with = "serde_util::bigint_vec")]
    coeffs: Vec<BigInt>,
}

impl LinearFormMatrix {
    pub fn entry(&self, a: usize, b: usize) -> &[BigInt] {
        let s = self.s;
        &self.coeffs[(a * s + b) * s..(a * s + b + 1) * s]
    }

    pub fn coeff(&self, a: usize, b: usize, k: usize) -> &BigInt {
        &self.coeffs[(a * self.s + b) * self.s + k]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.s).all(|a| (a..self.s).all(|b| self.entry(a, b) == self.entry(b, a)))
    }

    /// The numeric matrix `H(p)`.
    pub fn evaluate(&self, p: &[BigInt]) -> IntMatrix {
        IntMatrix::from_fn(self.s, self.s, |a, b| {
            self.entry(a, b).iter().zip(p).map(|(c, x)| c * x).sum()
        })
    }
}

/// Hessian `(∂²f/∂x_a∂x_b)`. For a monomial with sorted indices `T` and
/// coefficient `c`, every `(a, b, k)` ordering of `T` receives `6c/|orbit(T)|`.
pub fn hessian(f: &CubicForm) -> LinearFormMatrix {
    let s = f.s;
    let mut coeffs = vec![BigInt::zero(); s * s * s];
    for (&(i, j, k), c) in &f.coeffs {
        let v = c * BigInt::from(6 / orderings(i, j, k));
        let mut seen = Vec::with_capacity(6);
        for (a, b, m) in [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
            if !seen.contains(&(a, b, m)) {
                seen.push((a, b, m));
                coeffs[(a * s + b) * s + m] = v.clone();
            }
        }
    }
    LinearFormMatrix { s, coeffs }
}

/// Coefficient-of-`x_k` equations of `H X − Xᵀ H = 0`, one per `a < b` and
/// `k`, over the unknowns `X_cb` flattened row-major (`c*s + b`). The
/// `(a, a)` equations vanish and `(b, a)` is the negative of `(a, b)`.
pub fn center_equations(h: &LinearFormMatrix) -> Vec<Vec<(usize, Rational)>> {
    let s = h.s;
    let mut eqs = Vec::new();
    for a in 0..s {
        for b in a + 1..s {
            for k in 0..s {
                let mut row: BTreeMap<usize, BigInt> = BTreeMap::new();
                for c in 0..s {
                    let l = h.coeff(a, c, k);
                    if !l.is_zero() {
                        *row.entry(c * s + b).or_insert_with(BigInt::zero) += l;
                    }
                    let r = h.coeff(c, b, k);
                    if !r.is_zero() {
                        *row.entry(c * s + a).or_insert_with(BigInt::zero) -= r;
                    }
                }
                let sparse: Vec<(usize, Rational)> = row
                    .into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c, Rational::from_integer(v)))
                    .collect();
                if !sparse.is_empty() {
                    eqs.push(sparse);
                }
            }
        }
    }
    eqs
}

/// True iff `H X = Xᵀ H` holds identically in `x`.
pub fn in_center(h: &LinearFormMatrix, x: &RatMatrix) -> bool {
    let s = h.s;
    if x.rows() != s || x.cols() != s {
        return false;
    }
    center_equations(h).iter().all(|eq| {
        eq.iter()
            .map(|(idx, c)| c * &x[(idx / s, idx % s)])
            .sum::<Rational>()
            .is_zero()
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterBasis {
    pub s: usize,
    /// Integer basis matrices: kernel vectors with coprime entries and a
    /// positive leading entry, ordered by free unknown.
    pub matrices: Vec<IntMatrix>,
}

impl CenterBasis {
    pub fn dimension(&self) -> usize {
        self.matrices.len()
    }

    /// Basis `C_1..C_d` dual to a set of pivot positions: `C_i` is `1` at
    /// position `i` and `0` at the other positions. The generic element of
    /// `Z(f)` is then `Σ p_i C_i` with `p_i` the entry at position `i`.
    pub fn parametrization(&self) -> (Vec<(usize, usize)>, Vec<RatMatrix>) {
        let s = self.s;
        let mut ech = Echelon::new(s * s);
        for m in &self.matrices {
            ech.push_dense(&m.to_rational().into_entries());
        }
        let positions = ech.pivots().into_iter().map(|p| (p / s, p % s)).collect();
        let mats = ech
            .reduced_rows()
            .into_iter()
            .map(|row| RatMatrix::new(s, s, row).expect("square"))
            .collect();
        (positions, mats)
    }
}

/// Exact kernel of the center equations.
pub fn harrison_center(f: &CubicForm) -> CenterBasis {
    let s = f.s;
    let h = hessian(f);
    let mut ech = Echelon::new(s * s);
    for eq in center_equations(&h) {
        ech.push_sparse(eq);
    }
    let matrices = ech
        .nullspace()
        .into_iter()
        .map(|v| IntMatrix::new(s, s, v).expect("square"))
        .collect();
    CenterBasis { s, matrices }
}

/// Sub-checks certifying `R(S_n) ⊗ Q ≅ Z(f)` via `x_i ↦ X_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsomorphismReport {
    pub s: usize,
    pub center_dimension: usize,
    /// `dim Z(f) = s`.
    pub dimension_matches: bool,
    /// Every multiplication matrix satisfies the center equations.
    pub matrices_in_center: bool,
    /// The multiplication matrices are linearly independent.
    pub matrices_independent: bool,
    /// `X_i X_j = Σ_k g_ijk X_k` and the unit maps to the identity.
    pub multiplicative: bool,
}

impl IsomorphismReport {
    pub fn is_isomorphism(&self) -> bool {
        self.dimension_matches && self.matrices_in_center && self.matrices_independent && self.multiplicative
    }
}

pub fn center_isomorphism_check(t: &StructureTensor, basis: &CenterBasis) -> Result<IsomorphismReport> {
    let s = t.s();
    let h = hessian(&cubic_form(t));
    let mats = (0..s)
        .map(|i| multiplication_matrix(i, t))
        .collect::<Result<Vec<_>>>()?;
    let matrices_in_center = mats.iter().all(|m| in_center(&h, &m.to_rational()));
    let mut ech = Echelon::new(s * s);
    for m in &mats {
        ech.push_dense(&m.to_rational().into_entries());
    }
    let matrices_independent = ech.rank() == s;
    let mut multiplicative = mats[t.unit()] == IntMatrix::identity(s);
    'outer: for i in 0..s {
        for j in i..s {
            let lhs = mats[i].try_mul(&mats[j])?;
            let mut rhs = IntMatrix::zeros(s, s);
            for (k, m) in mats.iter().enumerate() {
                let g = t.get(i, j, k);
                if g != 0 {
                    rhs = rhs.try_add(&m.scale(&BigInt::from(g)))?;
                }
            }
            if lhs != rhs {
                multiplicative = false;
                break 'outer;
            }
        }
    }
    Ok(IsomorphismReport {
        s,
        center_dimension: basis.dimension(),
        dimension_matches: basis.dimension() == s,
        matrices_in_center,
        matrices_independent,
        multiplicative,
    })
}
