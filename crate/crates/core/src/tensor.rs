//! Kronecker coefficients, products in the representation ring, character
//! decomposition and power formulas.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{charpoly, poly_from_roots, Rational};
use crate::ring::multiplication_matrix;
use crate::serde_util;
use crate::sym::{CharacterTable, Partition, TableOrder};

/// An element of `R(S_n)`: integer multiplicities over the irreducible basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepElement {
    pub n: usize,
    #[serde(with = "serde_util::bigint_vec")]
    pub mults: Vec<BigInt>,
}

impl RepElement {
    pub fn new(n: usize, mults: Vec<BigInt>) -> Self {
        RepElement { n, mults }
    }

    pub fn from_i64(n: usize, mults: &[i64]) -> Self {
        RepElement::new(n, mults.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(n: usize, s: usize) -> Self {
        RepElement::new(n, vec![BigInt::zero(); s])
    }

    /// The class `[V_i]` of a single irreducible.
    pub fn basis(n: usize, s: usize, i: usize) -> Self {
        let mut e = RepElement::zero(n, s);
        e.mults[i] = BigInt::one();
        e
    }

    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.iter().all(Zero::is_zero)
    }

    fn check_compatible(&self, other: &RepElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.len() != other.len() {
            return Err(Error::Dimension(format!("{} vs {} irreps", self.len(), other.len())));
        }
        Ok(())
    }

    pub fn add(&self, other: &RepElement) -> Result<RepElement> {
        self.check_compatible(other)?;
        Ok(RepElement::new(
            self.n,
            self.mults.iter().zip(&other.mults).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &RepElement) -> Result<RepElement> {
        self.check_compatible(other)?;
        Ok(RepElement::new(
            self.n,
            self.mults.iter().zip(&other.mults).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn scale(&self, k: &BigInt) -> RepElement {
        RepElement::new(self.n, self.mults.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> RepElement {
        self.scale(&BigInt::from(-1))
    }

    /// `Σ mults_i · dim V_i`.
    pub fn dimension(&self, table: &CharacterTable) -> BigInt {
        self.mults.iter().enumerate().map(|(i, m)| m * table.dimension(i)).sum()
    }

    /// Virtual character `Σ mults_i χ_i` as a class function.
    pub fn character(&self, table: &CharacterTable) -> Vec<BigInt> {
        (0..table.s())
            .map(|t| self.mults.iter().enumerate().map(|(i, m)| m * table.value(i, t)).sum())
            .collect()
    }
}

/// The Kronecker coefficients `g_ijk` of `S_n`, in the row order of the table
/// they were built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    n: usize,
    s: usize,
    unit: usize,
    order: TableOrder,
    irreps: Vec<Partition>,
    g: Vec<u64>,
}

impl StructureTensor {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Index of the trivial representation (the ring's identity).
    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn order(&self) -> TableOrder {
        self.order
    }

    pub fn irreps(&self) -> &[Partition] {
        &self.irreps
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.g[(i * self.s + j) * self.s + k]
    }

    /// `[V_i] · [V_j]`.
    pub fn product(&self, i: usize, j: usize) -> RepElement {
        RepElement::new(self.n, (0..self.s).map(|k| BigInt::from(self.get(i, j, k))).collect())
    }

    pub fn identity_element(&self) -> RepElement {
        RepElement::basis(self.n, self.s, self.unit)
    }

    pub fn basis(&self, i: usize) -> RepElement {
        RepElement::basis(self.n, self.s, i)
    }

    /// Nonzero entries as `(i, j, k, g)`.
    pub fn triples(&self) -> Vec<(usize, usize, usize, u64)> {
        let s = self.s;
        let mut out = Vec::new();
        for i in 0..s {
            for j in 0..s {
                for k in 0..s {
                    let g = self.get(i, j, k);
                    if g != 0 {
                        out.push((i, j, k, g));
                    }
                }
            }
        }
        out
    }

    pub fn is_fully_symmetric(&self) -> bool {
        let s = self.s;
        (0..s).all(|i| {
            (0..s).all(|j| {
                (0..s).all(|k| {
                    let g = self.get(i, j, k);
                    g == self.get(i, k, j)
                        && g == self.get(j, i, k)
                        && g == self.get(j, k, i)
                        && g == self.get(k, i, j)
                        && g == self.get(k, j, i)
                })
            })
        })
    }

    fn check_unit(&self) -> bool {
        (0..self.s).all(|j| (0..self.s).all(|k| self.get(self.unit, j, k) == u64::from(j == k)))
    }

    /// Builds a tensor from raw coefficients (indexed `(i*s + j)*s + k`),
    /// checking symmetry and the unit law.
    pub fn from_parts(n: usize, unit: usize, order: TableOrder, irreps: Vec<Partition>, g: Vec<u64>) -> Result<Self> {
        let s = irreps.len();
        if g.len() != s * s * s || unit >= s.max(1) {
            return Err(Error::Dimension(format!("{} coefficients for s = {s}", g.len())));
        }
        let t = StructureTensor {
            n,
            s,
            unit,
            order,
            irreps,
            g,
        };
        if !t.is_fully_symmetric() {
            return Err(Error::Consistency("structure tensor is not symmetric".into()));
        }
        if !t.check_unit() {
            return Err(Error::Consistency("trivial irrep is not the identity".into()));
        }
        Ok(t)
    }
}

fn check_index(table: &CharacterTable, i: usize) -> Result<()> {
    if i >= table.s() {
        return Err(Error::IndexOutOfRange {
            index: i,
            size: table.s(),
        });
    }
    Ok(())
}

/// `g_ijk = (1/n!) Σ_t |C_t| χ_i(t) χ_j(t) χ_k(t)`.
pub fn kronecker(table: &CharacterTable, i: usize, j: usize, k: usize) -> Result<u64> {
    for idx in [i, j, k] {
        check_index(table, idx)?;
    }
    let sum: BigInt = table
        .classes()
        .iter()
        .enumerate()
        .map(|(t, c)| &c.size * table.value(i, t) * table.value(j, t) * table.value(k, t))
        .sum();
    let (q, r) = sum.div_rem(&table.group_order());
    if !r.is_zero() || q.is_negative() {
        return Err(Error::Consistency(format!(
            "Kronecker sum for ({i}, {j}, {k}) is {sum}/{} (not a nonnegative integer)",
            table.group_order()
        )));
    }
    q.to_u64()
        .ok_or_else(|| Error::Consistency(format!("Kronecker coefficient {q} overflows")))
}

/// All Kronecker coefficients; only `i <= j <= k` are evaluated.
pub fn structure_tensor(table: &CharacterTable) -> Result<StructureTensor> {
    let s = table.s();
    let mut g = vec![0u64; s * s * s];
    for i in 0..s {
        for j in i..s {
            for k in j..s {
                let v = kronecker(table, i, j, k)?;
                for (a, b, c) in [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
                    g[(a * s + b) * s + c] = v;
                }
            }
        }
    }
    StructureTensor::from_parts(
        table.n(),
        table.trivial_index(),
        table.order(),
        table.irreps().to_vec(),
        g,
    )
}

fn check_element(x: &RepElement, t: &StructureTensor) -> Result<()> {
    if x.n != t.n() {
        return Err(Error::DegreeMismatch {
            left: x.n,
            right: t.n(),
        });
    }
    if x.len() != t.s() {
        return Err(Error::Dimension(format!(
            "element of length {} for s = {}",
            x.len(),
            t.s()
        )));
    }
    Ok(())
}

/// Ring product, the bilinear extension of `[V_i][V_j] = Σ_k g_ijk [V_k]`.
pub fn multiply(a: &RepElement, b: &RepElement, t: &StructureTensor) -> Result<RepElement> {
    check_element(a, t)?;
    check_element(b, t)?;
    let s = t.s();
    let mut out = vec![BigInt::zero(); s];
    for i in (0..s).filter(|&i| !a.mults[i].is_zero()) {
        for j in (0..s).filter(|&j| !b.mults[j].is_zero()) {
            let ab = &a.mults[i] * &b.mults[j];
            for (k, slot) in out.iter_mut().enumerate() {
                let g = t.get(i, j, k);
                if g != 0 {
                    *slot += &ab * BigInt::from(g);
                }
            }
        }
    }
    Ok(RepElement::new(a.n, out))
}

/// Multiplicities `⟨χ_i, χ⟩`; fails unless `χ` is a virtual character.
pub fn decompose_character(table: &CharacterTable, chi: &[BigInt]) -> Result<RepElement> {
    let mults = (0..table.s())
        .map(|i| {
            let m = table.inner_product(&table.row(i), chi)?;
            if !m.is_integer() {
                return Err(Error::NotVirtualCharacter {
                    irrep: i,
                    value: m.to_string(),
                });
            }
            Ok(m.to_integer())
        })
        .collect::<Result<Vec<_>>>()?;
    let element = RepElement::new(table.n(), mults);
    if element.character(table) != chi {
        return Err(Error::NotVirtualCharacter {
            irrep: 0,
            value: "reconstruction differs from input".into(),
        });
    }
    Ok(element)
}

/// `V_i^{⊗k}` by repeated multiplication.
pub fn power_iterative(i: usize, k: usize, t: &StructureTensor) -> Result<RepElement> {
    if i >= t.s() {
        return Err(Error::IndexOutOfRange { index: i, size: t.s() });
    }
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "exponent",
            value: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    let base = t.basis(i);
    let mut acc = base.clone();
    for _ in 1..k {
        acc = multiply(&acc, &base, t)?;
    }
    Ok(acc)
}

/// `mult_k(V_i^{⊗n}) = Σ_b coeff[k][b] · b^n` over the distinct nonzero
/// character values `b` of the base irrep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormPower {
    pub n: usize,
    pub base_irrep: usize,
    /// Eigenbases by increasing absolute value (negative first), `1` last.
    pub bases: Vec<i64>,
    /// `coeffs[target][b]` pairs with `bases[b]`.
    #[serde(with = "serde_util::rational_matrix")]
    pub coeffs: Vec<Vec<Rational>>,
    /// `n!/dim V_target`, the natural common denominator of each row.
    #[serde(with = "serde_util::bigint_vec")]
    pub denominators: Vec<BigInt>,
}

impl ClosedFormPower {
    /// `(eigenbase, coefficient)` pairs for one target irrep.
    pub fn terms(&self, target: usize) -> Vec<(i64, Rational)> {
        self.bases
            .iter()
            .copied()
            .zip(self.coeffs[target].iter().cloned())
            .collect()
    }

    pub fn evaluate_target(&self, target: usize, exponent: u32) -> Rational {
        self.terms(target)
            .into_iter()
            .map(|(b, c)| c * Rational::from_integer(BigInt::from(b).pow(exponent)))
            .sum()
    }

    /// Multiplicity vector of `V_base^{⊗exponent}`.
    pub fn evaluate(&self, exponent: u32) -> Result<RepElement> {
        let mults = (0..self.coeffs.len())
            .map(|k| {
                let v = self.evaluate_target(k, exponent);
                if v.is_integer() {
                    Ok(v.to_integer())
                } else {
                    Err(Error::Consistency(format!(
                        "closed form for target {k} gives {v} at exponent {exponent}"
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RepElement::new(self.n, mults))
    }

    /// Integer numerators of one row over its denominator `n!/dim V_target`.
    pub fn numerators(&self, target: usize) -> Vec<BigInt> {
        let d = Rational::from_integer(self.denominators[target].clone());
        self.coeffs[target].iter().map(|c| (c * &d).to_integer()).collect()
    }
}

fn base_order(b: i64) -> (bool, i64, bool) {
    (b == 1, b.abs(), b > 0)
}

/// Closed form of `V_i^{⊗n}` from the orthogonality relations:
/// `mult_k(n) = Σ_t (|C_t|/n!) χ_i(t)^n χ_k(t)`, grouped by value of `χ_i(t)`.
///
/// The zero eigenbase is omitted (it vanishes for `n >= 1`); zero
/// coefficients are kept so that all targets share the same bases.
pub fn power_closed_form(i: usize, table: &CharacterTable) -> Result<ClosedFormPower> {
    check_index(table, i)?;
    let s = table.s();
    let mut groups: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for t in 0..s {
        let v = table.value_i64(i, t);
        if v != 0 {
            groups.entry(v).or_default().push(t);
        }
    }
    groups.entry(1).or_default();
    let mut bases: Vec<i64> = groups.keys().copied().collect();
    bases.sort_by_key(|&b| base_order(b));
    let order = table.group_order();
    let coeffs = (0..s)
        .map(|k| {
            bases
                .iter()
                .map(|b| {
                    let sum: BigInt = groups[b]
                        .iter()
                        .map(|&t| &table.classes()[t].size * table.value(k, t))
                        .sum();
                    Rational::new(sum, order.clone())
                })
                .collect()
        })
        .collect();
    let denominators = (0..s).map(|k| &order / table.dimension(k)).collect();
    let form = ClosedFormPower {
        n: table.n(),
        base_irrep: i,
        bases,
        coeffs,
        denominators,
    };
    for k in 0..s {
        if form.evaluate_target(k, 1) != Rational::from_integer(BigInt::from(u8::from(k == i))) {
            return Err(Error::Consistency(format!(
                "closed form of irrep {i} is wrong at n = 1"
            )));
        }
        let d = Rational::from_integer(form.denominators[k].clone());
        if form.coeffs[k].iter().any(|c| !(c * &d).is_integer()) {
            return Err(Error::Consistency(format!(
                "coefficients for target {k} are not integral over n!/dim"
            )));
        }
    }
    Ok(form)
}

/// The multiset `{χ_i(g_t)}` over all classes.
pub fn expected_spectrum(i: usize, table: &CharacterTable) -> Vec<BigInt> {
    let mut roots = table.row(i);
    roots.sort();
    roots
}

/// True iff the characteristic polynomial of multiplication by `[V_i]`
/// equals `Π_t (λ - χ_i(g_t))`.
pub fn eigen_spectrum_check(i: usize, t: &StructureTensor, table: &CharacterTable) -> Result<bool> {
    check_index(table, i)?;
    if t.s() != table.s() || t.order() != table.order() {
        return Err(Error::Dimension("tensor and table use different orderings".into()));
    }
    let m = multiplication_matrix(i, t)?;
    Ok(charpoly(&m)? == poly_from_roots(&expected_spectrum(i, table)))
}

/// Wire form: sparse triples.
#[derive(Serialize, Deserialize)]
struct TensorWire {
    n: usize,
    s: usize,
    unit: usize,
    order: TableOrder,
    irreps: Vec<Partition>,
    entries: Vec<(usize, usize, usize, u64)>,
}

impl Serialize for StructureTensor {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TensorWire {
            n: self.n,
            s: self.s,
            unit: self.unit,
            order: self.order,
            irreps: self.irreps.clone(),
            entries: self.triples(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StructureTensor {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = TensorWire::deserialize(deserializer)?;
        let s = wire.s;
        if wire.irreps.len() != s {
            return Err(D::Error::custom("irrep labels do not match s"));
        }
        let mut g = vec![0u64; s * s * s];
        for (i, j, k, v) in wire.entries {
            if i >= s || j >= s || k >= s {
                return Err(D::Error::custom("tensor index out of range"));
            }
            g[(i * s + j) * s + k] = v;
        }
        StructureTensor::from_parts(wire.n, wire.unit, wire.order, wire.irreps, g).map_err(D::Error::custom)
    }
}
