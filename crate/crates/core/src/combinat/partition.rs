use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// A composition of `r` into exactly `n` nonnegative parts; trailing zeros
/// are kept because the length `n` is part of the data.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts, including zeros.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part, 1-based; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.0.clone())
    }
}

/// All compositions of `r` into `n` parts, largest first in lexicographic
/// order, e.g. `(2,0), (1,1), (0,2)`.
pub fn enumerate_compositions(n: usize, r: usize) -> Vec<Composition> {
    fn rec(n: usize, r: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 1 {
            prefix.push(r);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=r).rev() {
            prefix.push(first);
            rec(n - 1, r - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if r == 0 {
            out.push(Composition(Vec::new()));
        }
        return out;
    }
    rec(n, r, &mut Vec::with_capacity(n), &mut out);
    out
}

/// A partition: weakly decreasing positive parts. The empty partition is
/// allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates the parts. Trailing zeros are dropped; any other zero or an
    /// increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return domain(format!("partition {parts:?} has an interior zero part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("partition {parts:?} is not weakly decreasing"));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(r)`; empty when `r = 0`.
    pub fn row(r: usize) -> Self {
        if r == 0 {
            Self::empty()
        } else {
            Partition(vec![r])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    /// The `i`-th part, 1-based; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Cells `(row, column)`, 1-based, in row reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// The conjugate partition, `dual_i = #{ j : part_j >= i }`.
    pub fn dual(&self) -> Partition {
        let first = self.part(1);
        Partition((1..=first).map(|i| self.0.iter().filter(|&&p| p >= i).count()).collect())
    }

    /// Dominance: every partial sum of `self` is at most that of `other`.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return domain(format!(
                "dominance compares partitions of equal size, got |{self}| = {} and |{other}| = {}",
                self.size(),
                other.size()
            ));
        }
        let len = self.num_parts().max(other.num_parts());
        let (mut a, mut b) = (0, 0);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Strict dominance `self ⊲ other`.
    pub fn strictly_dominated_by(&self, other: &Partition) -> Result<bool> {
        Ok(self != other && self.dominated_by(other)?)
    }
}

/// `mu ⊴ lambda` in the dominance order.
pub fn dominance_le(mu: &Partition, lambda: &Partition) -> Result<bool> {
    mu.dominated_by(lambda)
}

pub fn dual_partition(lambda: &Partition) -> Partition {
    lambda.dual()
}

/// All partitions of `r`, in decreasing lexicographic order.
pub fn partitions_of(r: usize) -> Vec<Partition> {
    fn rec(r: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if r == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=r.min(max)).rev() {
            prefix.push(first);
            rec(r - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, r, &mut Vec::new(), &mut out);
    out
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// Parses comma-separated nonnegative integers such as `"3,1"`.
pub fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}"))))
        .collect()
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition(parse_parts(s)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn compositions() {
        let c = enumerate_compositions(2, 2);
        assert_eq!(c, vec![Composition::new(vec![2, 0]), Composition::new(vec![1, 1]), Composition::new(vec![0, 2])]);
        assert_eq!(enumerate_compositions(1, 5), vec![Composition::new(vec![5])]);
        assert_eq!(enumerate_compositions(3, 0), vec![Composition::new(vec![0, 0, 0])]);
    }

    #[test]
    fn duals() {
        assert_eq!(p(&[3, 1]).dual(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1]).dual(), p(&[2, 1]));
        assert_eq!(p(&[4]).dual(), p(&[1, 1, 1, 1]));
        assert_eq!(Partition::empty().dual(), Partition::empty());
    }

    #[test]
    fn dominance() {
        assert!(dominance_le(&p(&[1, 1, 1, 1]), &p(&[2, 1, 1])).unwrap());
        assert!(dominance_le(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(!dominance_le(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert!(dominance_le(&p(&[3]), &p(&[2, 1, 1])).is_err());
    }

    #[test]
    fn validation_and_parsing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        assert_eq!("3,1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,x".parse::<Partition>().is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|r| partitions_of(r).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }
}
