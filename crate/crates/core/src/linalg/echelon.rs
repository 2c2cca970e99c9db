use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, Matrix, RatMatrix, Rational};
use crate::error::{Error, Result};

type SparseRow = Vec<(usize, Rational)>;

/// Incrementally maintained reduced row-echelon form.
///
/// Rows are stored sparsely, each with a unit pivot and zeros in every other
/// pivot column. The reduced row-echelon form of a row space is unique, so the
/// result does not depend on the order in which rows are pushed.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<SparseRow>,
    // pivot column -> index into `rows`
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
            pivot_row: vec![None; cols],
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a dense row. Returns true if the rank grew.
    pub fn push_dense(&mut self, row: &[Rational]) -> bool {
        assert_eq!(row.len(), self.cols, "row length");
        let sparse: SparseRow = row
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        self.push_sparse(sparse)
    }

    /// Adds a row given as (column, value) pairs sorted by column.
    pub fn push_sparse(&mut self, mut row: SparseRow) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        let hits: Vec<(usize, Rational)> = row
            .iter()
            .filter_map(|(c, v)| self.pivot_row[*c].map(|r| (r, v.clone())))
            .collect();
        for (r, coeff) in hits {
            row = axpy(&row, &coeff, &self.rows[r]);
        }
        let Some((pivot, lead)) = row.first().cloned() else {
            return false;
        };
        let inv = lead.recip();
        for (_, v) in row.iter_mut() {
            *v *= &inv;
        }
        for existing in self.rows.iter_mut() {
            if let Ok(pos) = existing.binary_search_by_key(&pivot, |(c, _)| *c) {
                let coeff = existing[pos].1.clone();
                *existing = axpy(existing, &coeff, &row);
            }
        }
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.cols).filter(|&c| self.pivot_row[c].is_some()).collect()
    }

    /// Rows of the reduced row-echelon form ordered by pivot column.
    pub fn reduced_rows(&self) -> Vec<Vec<Rational>> {
        self.pivots()
            .into_iter()
            .map(|c| {
                let mut dense = vec![Rational::zero(); self.cols];
                for (i, v) in &self.rows[self.pivot_row[c].unwrap()] {
                    dense[*i] = v.clone();
                }
                dense
            })
            .collect()
    }

    /// Kernel basis with free variables in ascending column order, each vector
    /// scaled to coprime integers with a positive leading entry.
    pub fn nullspace(&self) -> Vec<Vec<BigInt>> {
        let free: Vec<usize> = (0..self.cols).filter(|&c| self.pivot_row[c].is_none()).collect();
        free.into_iter()
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for row in &self.rows {
                    let p = row[0].0;
                    if let Ok(pos) = row.binary_search_by_key(&f, |(c, _)| *c) {
                        v[p] = -row[pos].1.clone();
                    }
                }
                normalize_integer(&v)
            })
            .collect()
    }

    fn row_with_pivot(&self, c: usize) -> Option<&SparseRow> {
        self.pivot_row[c].map(|r| &self.rows[r])
    }
}

// target - coeff * source, both sorted sparse
fn axpy(target: &SparseRow, coeff: &Rational, source: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        let ti = target.get(i).map(|x| x.0);
        let sj = source.get(j).map(|x| x.0);
        match (ti, sj) {
            (Some(a), Some(b)) if a == b => {
                let v = &target[i].1 - coeff * &source[j].1;
                if !v.is_zero() {
                    out.push((a, v));
                }
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a < b => {
                out.push(target[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(target[i].clone());
                i += 1;
            }
            (_, Some(b)) => {
                out.push((b, -(coeff * &source[j].1)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Clears denominators, divides out the content and makes the first nonzero
/// entry positive.
pub(crate) fn normalize_integer(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        for x in ints.iter_mut() {
            *x = &*x / &g;
        }
    }
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in ints.iter_mut() {
            *x = -&*x;
        }
    }
    ints
}

fn echelon_of(m: &RatMatrix) -> Echelon {
    let mut e = Echelon::new(m.cols());
    for r in 0..m.rows() {
        e.push_dense(m.row(r));
    }
    e
}

/// Reduced row-echelon form and pivot columns.
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let e = echelon_of(m);
    let mut rows = e.reduced_rows();
    rows.resize(m.rows(), vec![Rational::zero(); m.cols()]);
    let mat = Matrix::new(m.rows(), m.cols(), rows.into_iter().flatten().collect()).expect("shape preserved");
    (mat, e.pivots())
}

pub fn rank(m: &RatMatrix) -> usize {
    echelon_of(m).rank()
}

/// Basis of `{v : m v = 0}`; see [`Echelon::nullspace`] for the normalization.
pub fn nullspace(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    echelon_of(m).nullspace()
}

/// Solves `m x = rhs`. `Ok(None)` means the system is inconsistent; for an
/// underdetermined system the free variables are set to zero.
pub fn solve(m: &RatMatrix, rhs: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if rhs.len() != m.rows() {
        return Err(Error::Dimension(format!(
            "rhs of length {} for {} equations",
            rhs.len(),
            m.rows()
        )));
    }
    let n = m.cols();
    let mut e = Echelon::new(n + 1);
    for (r, value) in rhs.iter().enumerate() {
        let mut row = m.row(r).to_vec();
        row.push(value.clone());
        e.push_dense(&row);
    }
    if e.row_with_pivot(n).is_some() {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    for p in e.pivots() {
        let row = e.row_with_pivot(p).unwrap();
        if let Some((_, v)) = row.iter().find(|(c, _)| *c == n) {
            x[p] = v.clone();
        }
    }
    Ok(Some(x))
}

/// Gauss–Jordan inverse.
pub fn inverse(m: &RatMatrix) -> Result<RatMatrix> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "inverse of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut a = m.to_rows();
    let mut inv = RatMatrix::identity(n).to_rows();
    let mut rank = 0;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            continue;
        };
        rank += 1;
        a.swap(p, k);
        inv.swap(p, k);
        let pinv = a[k][k].recip();
        for j in 0..n {
            a[k][j] *= &pinv;
            inv[k][j] *= &pinv;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone();
            for j in 0..n {
                let da = &f * &a[k][j];
                a[i][j] -= da;
                let di = &f * &inv[k][j];
                inv[i][j] -= di;
            }
        }
    }
    if rank < n {
        return Err(Error::Singular {
            rank: self::rank(m),
            size: n,
        });
    }
    Matrix::from_rows(inv)
}

pub fn inverse_int(m: &IntMatrix) -> Result<RatMatrix> {
    inverse(&m.to_rational())
}
