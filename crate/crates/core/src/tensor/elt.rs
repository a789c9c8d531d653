use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::error::{domain, Error, Result};
use crate::ring::Laurent;

/// Subscripts `(i_1, ..., i_r)` of a pure tensor `ω_{i_1} ⊗ ... ⊗ ω_{i_r}`.
pub type IndexTuple = Vec<i64>;

/// Representative of `s` modulo `n` in `1..=n`, so `0` maps to `n`.
pub fn residue_class(s: i64, n: usize) -> usize {
    ((s - 1).rem_euclid(n as i64) + 1) as usize
}

/// A finite linear combination of pure tensors in `Ω^{⊗r}`, where `Ω` has
/// basis `ω_i`, `i ∈ Z`, and `n` fixes the residues `ī`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElt {
    n: usize,
    r: usize,
    terms: BTreeMap<IndexTuple, Laurent>,
}

impl TensorElt {
    pub fn zero(n: usize, r: usize) -> Self {
        TensorElt { n, r, terms: BTreeMap::new() }
    }

    /// The pure tensor `ω_i`.
    pub fn basis(n: usize, idx: IndexTuple) -> Result<Self> {
        if n == 0 {
            return domain("modulus n must be at least 1");
        }
        if idx.is_empty() {
            return domain("a pure tensor needs at least one factor");
        }
        let mut v = Self::zero(n, idx.len());
        v.add_term(idx, Laurent::one());
        Ok(v)
    }

    pub fn from_terms<I: IntoIterator<Item = (IndexTuple, Laurent)>>(n: usize, r: usize, terms: I) -> Result<Self> {
        let mut v = Self::zero(n, r);
        for (idx, c) in terms {
            if idx.len() != r {
                return domain(format!("index {idx:?} does not have length {r}"));
            }
            v.add_term(idx, c);
        }
        Ok(v)
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexTuple, &Laurent)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &[i64]) -> Laurent {
        self.terms.get(idx).cloned().unwrap_or_default()
    }

    /// Whether every index lies in `[1, n]^r`.
    pub fn is_finite_part(&self) -> bool {
        let n = self.n as i64;
        self.terms.keys().flatten().all(|&x| (1..=n).contains(&x))
    }

    pub(crate) fn add_term(&mut self, idx: IndexTuple, c: Laurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Laurent) -> Self {
        let mut out = Self::zero(self.n, self.r);
        for (idx, x) in &self.terms {
            out.add_term(idx.clone(), x * c);
        }
        out
    }

    /// Extends an operator given on pure tensors linearly.
    pub fn linear<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&[i64], &mut TensorElt),
    {
        let mut out = Self::zero(self.n, self.r);
        for (idx, c) in &self.terms {
            let mut image = Self::zero(self.n, self.r);
            f(idx, &mut image);
            for (j, x) in image.terms {
                out.add_term(j, &x * c);
            }
        }
        out
    }

    fn check(&self, other: &TensorElt) -> Result<()> {
        if self.n != other.n || self.r != other.r {
            return domain(format!(
                "tensor shape mismatch: (n={}, r={}) vs (n={}, r={})",
                self.n, self.r, other.n, other.r
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &TensorElt) -> Result<Self> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &TensorElt) -> Result<Self> {
        self.check(other)?;
        Ok(self - other)
    }
}

impl<'a> Add<&'a TensorElt> for &'a TensorElt {
    type Output = TensorElt;
    /// Panics if `n` or `r` differ; see [`TensorElt::try_add`].
    fn add(self, rhs: &TensorElt) -> TensorElt {
        self.check(rhs).expect("tensor shape mismatch");
        let mut out = self.clone();
        for (idx, c) in &rhs.terms {
            out.add_term(idx.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a TensorElt> for &'a TensorElt {
    type Output = TensorElt;
    fn sub(self, rhs: &TensorElt) -> TensorElt {
        self + &(-rhs)
    }
}

impl Neg for &TensorElt {
    type Output = TensorElt;
    fn neg(self) -> TensorElt {
        TensorElt {
            n: self.n,
            r: self.r,
            terms: self.terms.iter().map(|(i, c)| (i.clone(), -c)).collect(),
        }
    }
}

fn fmt_index(f: &mut fmt::Formatter<'_>, idx: &[i64]) -> fmt::Result {
    write!(f, "w[")?;
    for (k, x) in idx.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "]")
}

impl fmt::Display for TensorElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (idx, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "({c})*")?;
            }
            fmt_index(f, idx)?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElt[n={}]({self})", self.n)
    }
}

impl Serialize for TensorElt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            idx: &'a IndexTuple,
            coeff: &'a Laurent,
        }
        let v: Vec<Term> = self.terms.iter().map(|(idx, coeff)| Term { idx, coeff }).collect();
        v.serialize(s)
    }
}

/// Parses a pure tensor written `"w[3,1,2]"` (the `w` and brackets are
/// optional; entries may be negative).
pub fn parse_index_tuple(s: &str) -> Result<IndexTuple> {
    let body = s.trim().trim_start_matches('w').trim();
    let body = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')).unwrap_or(body);
    let idx = body
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad tensor index {t:?} in {s:?}"))))
        .collect::<Result<IndexTuple>>()?;
    if idx.is_empty() {
        return Err(Error::Parse(format!("empty pure tensor {s:?}")));
    }
    Ok(idx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues() {
        assert_eq!(residue_class(4, 3), 1);
        assert_eq!(residue_class(0, 2), 2);
        assert_eq!(residue_class(-1, 3), 2);
        assert_eq!(residue_class(3, 3), 3);
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_index_tuple("w[3,1,2]").unwrap(), vec![3, 1, 2]);
        assert_eq!(parse_index_tuple("[-1, 4]").unwrap(), vec![-1, 4]);
        assert!(parse_index_tuple("w[]").is_err());
        assert!(parse_index_tuple("w[1,x]").is_err());
    }

    #[test]
    fn cancellation_and_json() {
        let v = TensorElt::basis(3, vec![1, 2]).unwrap();
        assert!((&v - &v).is_zero());
        let s = serde_json::to_string(&v.scale(&Laurent::q())).unwrap();
        assert_eq!(s, r#"[{"idx":[1,2],"coeff":[{"ea":0,"eq":1,"num":"1","den":"1"}]}]"#);
        assert!(v.try_add(&TensorElt::basis(2, vec![1, 2]).unwrap()).is_err());
    }
}
