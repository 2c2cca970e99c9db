use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::partition::{class_size, factorial, partitions_of, Partition};
use super::reference::{reference_table, ReferenceTable};
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, Rational};

pub const MAX_TABLE_DEGREE: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    pub cycle_type: Partition,
    pub size: BigInt,
}

/// Which labelling the rows and columns of a table follow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableOrder {
    /// Irreps and classes both in reverse-lexicographic partition order.
    Canonical,
    /// Rows `V_1..V_s` and columns `g_1..g_s` as in the published tables.
    Paper,
}

/// Integer character table of `S_n`; `values[(i, t)]` is irrep `i` on class `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    irreps: Vec<Partition>,
    classes: Vec<ClassData>,
    values: IntMatrix,
    order: TableOrder,
    // published index -> canonical index
    paper_row_order: Option<Vec<usize>>,
    paper_class_order: Option<Vec<usize>>,
}

/// Murnaghan–Nakayama evaluator with a memo keyed by (shape, remaining cycle type).
#[derive(Default)]
pub struct MurnaghanNakayama {
    memo: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl MurnaghanNakayama {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^shape` evaluated on the class with the given cycle type.
    pub fn character(&mut self, shape: &Partition, cycle_type: &Partition) -> i64 {
        self.eval(shape.parts(), cycle_type.parts())
    }

    fn eval(&mut self, shape: &[usize], cycles: &[usize]) -> i64 {
        let Some((&r, rest)) = cycles.split_first() else {
            return i64::from(shape.is_empty());
        };
        let key = (shape.to_vec(), cycles.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        // beta-set: first-column hook lengths, strictly decreasing
        let len = shape.len();
        let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
        let mut total = 0i64;
        for (idx, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let target = b - r;
            let height = beta.iter().filter(|&&x| x > target && x < b).count();
            let mut moved = beta.clone();
            moved[idx] = target;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let smaller: Vec<usize> = moved
                .iter()
                .enumerate()
                .map(|(i, &x)| x - (len - 1 - i))
                .filter(|&p| p > 0)
                .collect();
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * self.eval(&smaller, rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// Complete character table of `S_n` in canonical order, with the published
/// alignment attached for `n` in {4, 5, 6}.
pub fn character_table(n: usize) -> Result<CharacterTable> {
    if !(1..=MAX_TABLE_DEGREE).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            min: 1,
            max: MAX_TABLE_DEGREE,
        });
    }
    let parts = partitions_of(n)?;
    let classes: Vec<ClassData> = parts
        .iter()
        .map(|p| ClassData {
            cycle_type: p.clone(),
            size: class_size(p),
        })
        .collect();
    let mut mn = MurnaghanNakayama::new();
    let values = IntMatrix::from_fn(parts.len(), parts.len(), |i, t| {
        BigInt::from(mn.character(&parts[i], &classes[t].cycle_type))
    });
    let mut table = CharacterTable {
        n,
        irreps: parts,
        classes,
        values,
        order: TableOrder::Canonical,
        paper_row_order: None,
        paper_class_order: None,
    };
    table.verify()?;
    if let Some(reference) = reference_table(n) {
        let alignment = align_to_reference(&table, reference)
            .into_iter()
            .next()
            .ok_or_else(|| Error::Consistency(format!("computed S_{n} table does not match the reference")))?;
        table.paper_row_order = Some(alignment.rows);
        table.paper_class_order = Some(alignment.classes);
    } else if n == 5 {
        table.paper_row_order = Some(conjugate_pair_order(&table.irreps));
    }
    Ok(table)
}

/// Trivial and sign first, then each remaining `(λ, λ')` pair in canonical
/// order, self-conjugate shapes last. This reproduces the published `S_6`
/// row order and is the convention used where no table is published.
pub fn conjugate_pair_order(irreps: &[Partition]) -> Vec<usize> {
    let index_of = |p: &Partition| irreps.iter().position(|q| q == p).unwrap();
    let mut order = Vec::with_capacity(irreps.len());
    let mut self_conjugate = Vec::new();
    for (i, p) in irreps.iter().enumerate() {
        let c = p.conjugate();
        if &c == p {
            self_conjugate.push(i);
        } else if p > &c {
            order.push(i);
            order.push(index_of(&c));
        }
    }
    order.extend(self_conjugate);
    order
}

/// A matching of a computed table onto a published one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alignment {
    /// `rows[p]` is the canonical irrep shown as published row `p`.
    pub rows: Vec<usize>,
    /// `classes[q]` is the canonical class shown as published column `q`.
    pub classes: Vec<usize>,
}

/// Every (row, column) matching of `table` onto `reference`, best first.
///
/// A published table only fixes columns up to automorphisms of `S_n` (for
/// `n = 6` the outer automorphism gives two matchings). Candidates are ranked
/// so that, at the first differing column, the class with more fixed points
/// wins; this labels the transposition class as the transposition class.
pub fn align_to_reference(table: &CharacterTable, reference: &ReferenceTable) -> Vec<Alignment> {
    let s = table.s();
    if reference.n != table.n || reference.values.len() != s {
        return Vec::new();
    }
    let values: Vec<Vec<i64>> = (0..s)
        .map(|i| (0..s).map(|t| table.value_i64(i, t)).collect())
        .collect();
    let mut found = Vec::new();
    let mut assignment = Vec::with_capacity(s);
    let mut used = vec![false; s];
    search_columns(table, reference, &values, &mut assignment, &mut used, &mut found);
    let fixed_points = |a: &Alignment| -> Vec<usize> {
        a.classes
            .iter()
            .map(|&t| table.classes[t].cycle_type.multiplicity(1))
            .collect()
    };
    found.sort_by(|a, b| {
        fixed_points(b)
            .cmp(&fixed_points(a))
            .then_with(|| a.classes.cmp(&b.classes))
    });
    found
}

fn search_columns(
    table: &CharacterTable,
    reference: &ReferenceTable,
    values: &[Vec<i64>],
    assignment: &mut Vec<usize>,
    used: &mut [bool],
    found: &mut Vec<Alignment>,
) {
    let s = values.len();
    let col = assignment.len();
    if col == s {
        if let Some(rows) = match_rows(reference, values, assignment) {
            found.push(Alignment {
                rows,
                classes: assignment.clone(),
            });
        }
        return;
    }
    for t in 0..s {
        if used[t] {
            continue;
        }
        if let Some(sizes) = reference.class_sizes {
            if table.classes[t].size != BigInt::from(sizes[col]) {
                continue;
            }
        }
        assignment.push(t);
        // every published row must still agree with some computed row
        let feasible = reference.values.iter().all(|prow| {
            values
                .iter()
                .any(|row| assignment.iter().enumerate().all(|(q, &c)| row[c] == prow[q]))
        });
        if feasible {
            used[t] = true;
            search_columns(table, reference, values, assignment, used, found);
            used[t] = false;
        }
        assignment.pop();
    }
}

fn match_rows(reference: &ReferenceTable, values: &[Vec<i64>], cols: &[usize]) -> Option<Vec<usize>> {
    let mut rows = Vec::with_capacity(values.len());
    let mut taken = vec![false; values.len()];
    for prow in reference.values {
        let i =
            (0..values.len()).find(|&i| !taken[i] && cols.iter().enumerate().all(|(q, &c)| values[i][c] == prow[q]))?;
        taken[i] = true;
        rows.push(i);
    }
    Some(rows)
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of irreducibles (= number of classes).
    pub fn s(&self) -> usize {
        self.irreps.len()
    }

    pub fn irreps(&self) -> &[Partition] {
        &self.irreps
    }

    pub fn classes(&self) -> &[ClassData] {
        &self.classes
    }

    pub fn values(&self) -> &IntMatrix {
        &self.values
    }

    pub fn value(&self, irrep: usize, class: usize) -> &BigInt {
        &self.values[(irrep, class)]
    }

    pub fn value_i64(&self, irrep: usize, class: usize) -> i64 {
        self.values[(irrep, class)]
            .to_i64()
            .expect("character values of S_n (n <= 12) fit in i64")
    }

    pub fn row(&self, irrep: usize) -> Vec<BigInt> {
        self.values.row(irrep).to_vec()
    }

    pub fn order(&self) -> TableOrder {
        self.order
    }

    pub fn group_order(&self) -> BigInt {
        factorial(self.n)
    }

    /// Column holding the identity class.
    pub fn identity_class(&self) -> usize {
        self.classes
            .iter()
            .position(|c| c.cycle_type.parts().iter().all(|&p| p == 1))
            .expect("identity class present")
    }

    pub fn dimension(&self, irrep: usize) -> &BigInt {
        self.value(irrep, self.identity_class())
    }

    pub fn irrep_index(&self, shape: &Partition) -> Option<usize> {
        self.irreps.iter().position(|p| p == shape)
    }

    pub fn class_index(&self, cycle_type: &Partition) -> Option<usize> {
        self.classes.iter().position(|c| &c.cycle_type == cycle_type)
    }

    /// Index of the trivial representation `(n)`.
    pub fn trivial_index(&self) -> usize {
        self.irreps
            .iter()
            .position(|p| p.len() == 1)
            .expect("trivial irrep present")
    }

    pub fn has_paper_order(&self) -> bool {
        self.paper_row_order.is_some()
    }

    pub fn paper_row_order(&self) -> Option<&[usize]> {
        self.paper_row_order.as_deref()
    }

    pub fn paper_class_order(&self) -> Option<&[usize]> {
        self.paper_class_order.as_deref()
    }

    /// A copy with rows (and, where published, columns) permuted into the
    /// conventional `V_i` / `g_t` numbering.
    pub fn to_paper_order(&self) -> Result<CharacterTable> {
        if self.order == TableOrder::Paper {
            return Ok(self.clone());
        }
        let rows = self.paper_row_order.clone().ok_or(Error::NoPaperOrder(self.n))?;
        let cols = self
            .paper_class_order
            .clone()
            .unwrap_or_else(|| (0..self.s()).collect());
        let table = CharacterTable {
            n: self.n,
            irreps: rows.iter().map(|&i| self.irreps[i].clone()).collect(),
            classes: cols.iter().map(|&t| self.classes[t].clone()).collect(),
            values: self.values.permuted(&rows, &cols),
            order: TableOrder::Paper,
            paper_row_order: Some(rows),
            paper_class_order: self.paper_class_order.clone(),
        };
        Ok(table)
    }

    /// `(1/n!) Σ_t |C_t| a_t b_t`. Characters of `S_n` are real, so no
    /// conjugation is applied.
    pub fn inner_product(&self, a: &[BigInt], b: &[BigInt]) -> Result<Rational> {
        if a.len() != self.s() || b.len() != self.s() {
            return Err(Error::Dimension(format!(
                "class functions of length {} and {} for {} classes",
                a.len(),
                b.len(),
                self.s()
            )));
        }
        let sum: BigInt = self
            .classes
            .iter()
            .zip(a.iter().zip(b))
            .map(|(c, (x, y))| &c.size * x * y)
            .sum();
        Ok(Rational::new(sum, self.group_order()))
    }

    /// Checks the orthogonality relations, `Σ dim² = n!`, the class equation
    /// and that a trivial row of all ones is present.
    pub fn verify(&self) -> Result<()> {
        let s = self.s();
        let order = self.group_order();
        let fail = |msg: String| Err(Error::Consistency(msg));
        if self.values.rows() != s || self.values.cols() != s || self.classes.len() != s {
            return fail("character table is not square".into());
        }
        let class_total: BigInt = self.classes.iter().map(|c| &c.size).sum();
        if class_total != order {
            return fail(format!("class sizes sum to {class_total}, not {order}"));
        }
        let dims: BigInt = (0..s).map(|i| self.dimension(i) * self.dimension(i)).sum();
        if dims != order {
            return fail(format!("sum of squared dimensions is {dims}, not {order}"));
        }
        let trivial = self.trivial_index();
        if (0..s).any(|t| !self.values[(trivial, t)].eq(&BigInt::from(1))) {
            return fail("trivial character is not identically one".into());
        }
        for i in 0..s {
            for j in i..s {
                let sum: BigInt = (0..s)
                    .map(|t| &self.classes[t].size * self.value(i, t) * self.value(j, t))
                    .sum();
                let want = if i == j { order.clone() } else { BigInt::zero() };
                if sum != want {
                    return fail(format!("row orthogonality fails for irreps {i}, {j}"));
                }
            }
        }
        for t in 0..s {
            for u in t..s {
                let sum: BigInt = (0..s).map(|i| self.value(i, t) * self.value(i, u)).sum();
                let want = if t == u {
                    &order / &self.classes[t].size
                } else {
                    BigInt::zero()
                };
                if sum != want {
                    return fail(format!("column orthogonality fails for classes {t}, {u}"));
                }
            }
        }
        Ok(())
    }
}

/// Wire form used for JSON.
#[derive(Serialize, Deserialize)]
struct TableWire {
    n: usize,
    order: TableOrder,
    irreps: Vec<Partition>,
    classes: Vec<Partition>,
    class_sizes: Vec<u64>,
    values: Vec<Vec<i64>>,
    paper_row_order: Option<Vec<usize>>,
    paper_class_order: Option<Vec<usize>>,
}

impl Serialize for CharacterTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let s = self.s();
        TableWire {
            n: self.n,
            order: self.order,
            irreps: self.irreps.clone(),
            classes: self.classes.iter().map(|c| c.cycle_type.clone()).collect(),
            class_sizes: self.classes.iter().map(|c| c.size.to_u64().expect("n <= 12")).collect(),
            values: (0..s).map(|i| (0..s).map(|t| self.value_i64(i, t)).collect()).collect(),
            paper_row_order: self.paper_row_order.clone(),
            paper_class_order: self.paper_class_order.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CharacterTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = TableWire::deserialize(deserializer)?;
        let s = wire.irreps.len();
        if wire.classes.len() != s || wire.class_sizes.len() != s || wire.values.len() != s {
            return Err(D::Error::custom("inconsistent character table lengths"));
        }
        let values = IntMatrix::from_rows(
            wire.values
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .map_err(D::Error::custom)?;
        let table = CharacterTable {
            n: wire.n,
            irreps: wire.irreps,
            classes: wire
                .classes
                .into_iter()
                .zip(wire.class_sizes)
                .map(|(cycle_type, size)| ClassData {
                    cycle_type,
                    size: BigInt::from(size),
                })
                .collect(),
            values,
            order: wire.order,
            paper_row_order: wire.paper_row_order,
            paper_class_order: wire.paper_class_order,
        };
        table.verify().map_err(D::Error::custom)?;
        Ok(table)
    }
}
