//! `R(S_n)` as a presented commutative ring.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{det, inverse, IntMatrix, Rational};
use crate::serde_util;
use crate::sym::CharacterTable;
use crate::tensor::{RepElement, StructureTensor};

/// Largest `s` accepted by [`unit_group`].
pub const MAX_UNIT_SEARCH: usize = 22;

/// `x_i x_j = Σ_k rhs_k x_k`, with `x_0 = 1` (the trivial irrep).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub i: usize,
    pub j: usize,
    pub rhs: RepElement,
}

impl Relation {
    /// Coefficients of the relation polynomial as `(generator, coeff)` with
    /// the monomial `x_i x_j` excluded, highest generator first.
    pub fn terms(&self) -> Vec<(usize, BigInt)> {
        self.rhs
            .mults
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, -c))
            .collect()
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, coeff: &BigInt, var: Option<usize>) -> fmt::Result {
    let sign = if coeff.is_negative() {
        "-"
    } else if first {
        ""
    } else {
        "+"
    };
    let mag = coeff.abs();
    if first {
        f.write_str(sign)?;
    } else {
        write!(f, " {sign} ")?;
    }
    match var {
        None => write!(f, "{mag}"),
        Some(v) if mag.is_one() => write!(f, "x{v}"),
        Some(v) => write!(f, "{mag}x{v}"),
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i == self.j {
            write!(f, "x{}^2", self.i)?;
        } else {
            write!(f, "x{}x{}", self.j, self.i)?;
        }
        for (k, c) in self.terms() {
            write_term(f, false, &c, (k != 0).then_some(k))?;
        }
        Ok(())
    }
}

fn check_unit_first(t: &StructureTensor) -> Result<()> {
    if t.unit() != 0 {
        return Err(Error::Consistency("trivial irrep must come first".into()));
    }
    Ok(())
}

/// One relation per pair `1 <= i <= j <= s-1`, ascending lexicographic.
pub fn relations(t: &StructureTensor) -> Result<Vec<Relation>> {
    check_unit_first(t)?;
    let s = t.s();
    let mut out = Vec::with_capacity(s * (s.saturating_sub(1)) / 2);
    for i in 1..s {
        for j in i..s {
            out.push(Relation {
                i,
                j,
                rhs: t.product(i, j),
            });
        }
    }
    Ok(out)
}

/// Matrix of multiplication by `[V_i]`: column `j` holds the multiplicities of
/// `V_i ⊗ V_j`, so entry `(k, j)` is `g_ijk`.
pub fn multiplication_matrix(i: usize, t: &StructureTensor) -> Result<IntMatrix> {
    if i >= t.s() {
        return Err(Error::IndexOutOfRange { index: i, size: t.s() });
    }
    Ok(IntMatrix::from_fn(t.s(), t.s(), |k, j| BigInt::from(t.get(i, j, k))))
}

/// Product of rational combinations of irreducibles.
pub fn multiply_rational(a: &[Rational], b: &[Rational], t: &StructureTensor) -> Result<Vec<Rational>> {
    let s = t.s();
    if a.len() != s || b.len() != s {
        return Err(Error::Dimension(format!(
            "vectors of length {} and {} for s = {s}",
            a.len(),
            b.len()
        )));
    }
    let mut out = vec![Rational::zero(); s];
    for i in (0..s).filter(|&i| !a[i].is_zero()) {
        for j in (0..s).filter(|&j| !b[j].is_zero()) {
            let ab = &a[i] * &b[j];
            for (k, slot) in out.iter_mut().enumerate() {
                let g = t.get(i, j, k);
                if g != 0 {
                    *slot += &ab * Rational::from_integer(BigInt::from(g));
                }
            }
        }
    }
    Ok(out)
}

/// Central primitive idempotents, one per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentSet {
    #[serde(with = "serde_util::rational_matrix")]
    pub vectors: Vec<Vec<Rational>>,
    /// `n!/|C_t|`.
    #[serde(with = "serde_util::bigint_vec")]
    pub denominators: Vec<BigInt>,
}

impl IdempotentSet {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Integer numerators `α_t` of `e_t = α_t / (n!/|C_t|)`.
    pub fn numerators(&self, t: usize) -> Vec<BigInt> {
        let d = Rational::from_integer(self.denominators[t].clone());
        self.vectors[t].iter().map(|c| (c * &d).to_integer()).collect()
    }

    /// Checks `e_t e_u = δ_tu e_t` and `Σ e_t = 1`.
    pub fn verify(&self, t: &StructureTensor) -> Result<bool> {
        let s = t.s();
        for a in 0..self.len() {
            for b in a..self.len() {
                let p = multiply_rational(&self.vectors[a], &self.vectors[b], t)?;
                let want = if a == b {
                    self.vectors[a].clone()
                } else {
                    vec![Rational::zero(); s]
                };
                if p != want {
                    return Ok(false);
                }
            }
        }
        let mut sum = vec![Rational::zero(); s];
        for v in &self.vectors {
            for (acc, x) in sum.iter_mut().zip(v) {
                *acc += x;
            }
        }
        Ok((0..s).all(|k| sum[k] == Rational::from_integer(BigInt::from(u8::from(k == t.unit())))))
    }
}

/// `e_t = (|C_t|/n!) Σ_j χ_j(g_t) [V_j]`.
pub fn idempotents(table: &CharacterTable) -> IdempotentSet {
    let order = table.group_order();
    let s = table.s();
    let vectors = (0..s)
        .map(|t| {
            let w = Rational::new(table.classes()[t].size.clone(), order.clone());
            (0..s)
                .map(|j| &w * Rational::from_integer(table.value(j, t).clone()))
                .collect()
        })
        .collect();
    let denominators = table.classes().iter().map(|c| &order / &c.size).collect();
    IdempotentSet { vectors, denominators }
}

/// Structure of a finite abelian group given as `Z/d_1 × ... × Z/d_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTag {
    pub order: usize,
    pub exponent: usize,
    pub invariants: Vec<usize>,
}

impl GroupTag {
    pub fn name(&self) -> String {
        match (self.order, self.exponent) {
            (1, _) => "trivial group".into(),
            (4, 2) => "Klein four-group".into(),
            (2, 2) => "cyclic group of order 2".into(),
            _ => {
                let parts: Vec<String> = self.invariants.iter().map(|d| format!("Z/{d}")).collect();
                parts.join(" x ")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitGroupReport {
    pub n: usize,
    pub units: Vec<RepElement>,
    pub group: GroupTag,
}

/// All units of `R(S_n)`.
///
/// Under the character map `R(S_n) → Z^s` a unit goes to a vector of units of
/// `Z`, so the candidates are `a = (χᵀ)^{-1} σ` for `σ ∈ {±1}^s`; integral
/// solutions are the units. Sign vectors are visited in Gray-code order so
/// each step updates the scaled solution in `O(s)`.
pub fn unit_group(table: &CharacterTable, t: &StructureTensor) -> Result<UnitGroupReport> {
    let s = table.s();
    if s > MAX_UNIT_SEARCH {
        return Err(Error::OutOfRange {
            what: "class count for unit search",
            value: s,
            min: 1,
            max: MAX_UNIT_SEARCH,
        });
    }
    let order = table.group_order().to_i128().expect("group order fits in i128");
    // n! · a_j = Σ_t |C_t| χ_j(g_t) σ_t
    let weights: Vec<Vec<i128>> = (0..s)
        .map(|j| {
            (0..s)
                .map(|c| {
                    let w = &table.classes()[c].size * table.value(j, c);
                    w.to_i128().expect("class weight fits in i128")
                })
                .collect()
        })
        .collect();
    let mut scaled: Vec<i128> = (0..s).map(|j| weights[j].iter().sum()).collect();
    let mut signs = vec![1i8; s];
    let mut found: Vec<(Vec<i8>, Vec<i128>)> = Vec::new();
    let total: u64 = 1 << s;
    for step in 0..total {
        if step > 0 {
            let flip = step.trailing_zeros() as usize;
            signs[flip] = -signs[flip];
            for j in 0..s {
                scaled[j] += 2 * i128::from(signs[flip]) * weights[j][flip];
            }
        }
        if scaled.iter().all(|v| v % order == 0) {
            found.push((signs.clone(), scaled.iter().map(|v| v / order).collect()));
        }
    }
    found.sort();
    found.reverse();
    let units: Vec<RepElement> = found
        .into_iter()
        .map(|(_, a)| RepElement::new(table.n(), a.into_iter().map(BigInt::from).collect()))
        .collect();
    let one = t.identity_element();
    for u in &units {
        if crate::tensor::multiply(u, u, t)? != one {
            return Err(Error::Consistency(format!("unit {:?} is not an involution", u.mults)));
        }
    }
    let r = units.len().trailing_zeros() as usize;
    if units.len() != 1 << r {
        return Err(Error::Consistency(format!(
            "{} units is not a power of two",
            units.len()
        )));
    }
    let group = GroupTag {
        order: units.len(),
        exponent: if units.len() > 1 { 2 } else { 1 },
        invariants: vec![2; r],
    };
    Ok(UnitGroupReport {
        n: table.n(),
        units,
        group,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CasimirReport {
    #[serde(with = "serde_util::bigint_matrix")]
    pub gram: Vec<Vec<BigInt>>,
    #[serde(with = "serde_util::bigint")]
    pub det: BigInt,
    #[serde(with = "serde_util::bigint")]
    pub casimir: BigInt,
    #[serde(with = "serde_util::rational_matrix")]
    pub gram_inverse: Vec<Vec<Rational>>,
}

/// `Σ_i X_i²`.
pub fn gram_matrix(t: &StructureTensor) -> Result<IntMatrix> {
    let s = t.s();
    let mut gram = IntMatrix::zeros(s, s);
    for i in 0..s {
        let x = multiplication_matrix(i, t)?;
        gram = gram.try_add(&x.try_mul(&x)?)?;
    }
    Ok(gram)
}

/// Gram matrix, its determinant and the least `m > 0` with `m·gram^{-1}`
/// integral.
pub fn casimir_gram(t: &StructureTensor) -> Result<CasimirReport> {
    let gram = gram_matrix(t)?;
    let d = det(&gram)?;
    if d.is_zero() {
        return Err(Error::DegenerateRing);
    }
    let inv = inverse(&gram.to_rational())?;
    let casimir = inv.entries().iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    Ok(CasimirReport {
        gram: gram.to_rows(),
        det: d,
        casimir,
        gram_inverse: inv.to_rows(),
    })
}

/// Nonzero Gram determinant and Casimir number plus a complete set of
/// orthogonal idempotents summing to one.
pub fn semisimplicity_check(t: &StructureTensor, table: &CharacterTable) -> Result<bool> {
    let report = match casimir_gram(t) {
        Ok(r) => r,
        Err(Error::DegenerateRing) => return Ok(false),
        Err(e) => return Err(e),
    };
    if report.det.is_zero() || report.casimir.is_zero() {
        return Ok(false);
    }
    let e = idempotents(table);
    Ok(e.len() == t.s() && e.verify(t)?)
}
