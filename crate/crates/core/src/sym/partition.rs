use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_PARTITION_DEGREE: usize = 30;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not nonincreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parts equal to `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|col| self.0.iter().filter(|&&p| p >= col).count())
                .collect(),
        )
    }

    /// `z_λ = Π k^{m_k} m_k!`, the order of the centralizer of a permutation
    /// with this cycle type.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let k = self.0[i];
            let m = self.multiplicity(k);
            for j in 1..=m {
                z *= BigInt::from(k) * BigInt::from(j);
            }
            i += m;
        }
        z
    }

    /// Permutation sign of any element with this cycle type.
    pub fn sign(&self) -> i64 {
        let even_cycles = self.0.iter().filter(|&&p| p % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("+"))
    }
}

/// Accepts `3+2+1`, `3,2,1` and `(3,2,1)`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = trimmed
            .split(['+', ','])
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.is_empty() {
            return Err(Error::InvalidPartition(s.to_string()));
        }
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order, starting with `(n)`.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    if !(1..=MAX_PARTITION_DEGREE).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            min: 1,
            max: MAX_PARTITION_DEGREE,
        });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fill(n, n, &mut prefix, &mut out);
    Ok(out)
}

fn fill(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(prefix.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        prefix.push(part);
        fill(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Size of the conjugacy class of `S_n` with the given cycle type: `n!/z_λ`.
pub fn class_size(cycle_type: &Partition) -> BigInt {
    factorial(cycle_type.n()) / cycle_type.centralizer_order()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partitions_of_four_in_order() {
        let got = partitions_of(4).unwrap();
        let want = vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])];
        assert_eq!(got, want);
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(1).unwrap().len(), 1);
        assert_eq!(partitions_of(6).unwrap().len(), 11);
        assert_eq!(partitions_of(10).unwrap().len(), 42);
        assert!(partitions_of(0).is_err());
        assert!(partitions_of(31).is_err());
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&p(&[1, 1, 1, 1, 1, 1])), BigInt::from(1));
        assert_eq!(class_size(&p(&[3, 2, 1])), BigInt::from(120));
        assert_eq!(class_size(&p(&[2, 2, 1, 1])), BigInt::from(45));
        assert_eq!(class_size(&p(&[5, 1])), BigInt::from(144));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3+2+1".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("(2,2)".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert!("1+2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p(&[4, 1, 1]).to_string(), "4+1+1");
    }

    #[test]
    fn conjugate_and_sign() {
        assert_eq!(p(&[4, 1, 1]).conjugate(), p(&[3, 1, 1, 1]));
        assert_eq!(p(&[3, 2, 1]).conjugate(), p(&[3, 2, 1]));
        assert_eq!(p(&[2, 1]).sign(), -1);
        assert_eq!(p(&[2, 2]).sign(), 1);
    }
}
