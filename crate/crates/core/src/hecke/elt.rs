use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinat::{young_subgroup, Composition, Permutation};
use crate::error::{domain, Error, Result};
use crate::ring::{Laurent, Rat};

/// An element of the finite Hecke algebra `H(r)` in the `T_w` basis, with
/// `(T_i + 1)(T_i - q^2) = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HeckeElt {
    r: usize,
    terms: BTreeMap<Permutation, Laurent>,
}

impl HeckeElt {
    pub fn zero(r: usize) -> Self {
        HeckeElt { r, terms: BTreeMap::new() }
    }

    /// `T_e`.
    pub fn one(r: usize) -> Self {
        Self::basis(Permutation::identity(r))
    }

    pub fn basis(w: Permutation) -> Self {
        Self::term(w, Laurent::one())
    }

    pub fn term(w: Permutation, c: Laurent) -> Self {
        let mut x = Self::zero(w.rank());
        x.add_term(w, c);
        x
    }

    pub fn scalar(c: Laurent, r: usize) -> Self {
        Self::term(Permutation::identity(r), c)
    }

    /// `T_i`.
    pub fn generator(i: usize, r: usize) -> Result<Self> {
        Ok(Self::basis(Permutation::simple(i, r)?))
    }

    /// Builds from `(permutation, coefficient)` pairs; all ranks must equal `r`.
    pub fn from_terms<I: IntoIterator<Item = (Permutation, Laurent)>>(r: usize, terms: I) -> Result<Self> {
        let mut x = Self::zero(r);
        for (w, c) in terms {
            if w.rank() != r {
                return domain(format!("permutation {w} does not lie in S_{r}"));
            }
            x.add_term(w, c);
        }
        Ok(x)
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

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Laurent)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> Laurent {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn max_numer_digits(&self) -> usize {
        self.terms.values().map(Laurent::max_numer_digits).max().unwrap_or(0)
    }

    fn add_term(&mut self, w: Permutation, c: Laurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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
        let mut out = Self::zero(self.r);
        if c.is_zero() {
            return out;
        }
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// `self * T_i`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let q2 = Laurent::q_pow(2);
        let q2m1 = &q2 - &Laurent::one();
        let mut out = Self::zero(self.r);
        for (w, c) in &self.terms {
            let ws = w.times_simple(i);
            if w.has_right_descent(i) {
                out.add_term(w.clone(), c * &q2m1);
                out.add_term(ws, c.shift_q(2));
            } else {
                out.add_term(ws, c.clone());
            }
        }
        out
    }

    /// `T_i * self`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        let q2 = Laurent::q_pow(2);
        let q2m1 = &q2 - &Laurent::one();
        let mut out = Self::zero(self.r);
        for (w, c) in &self.terms {
            let sw = w.simple_times(i);
            if w.has_left_descent(i) {
                out.add_term(w.clone(), c * &q2m1);
                out.add_term(sw, c.shift_q(2));
            } else {
                out.add_term(sw, c.clone());
            }
        }
        out
    }

    /// Checked product.
    pub fn mul(&self, other: &HeckeElt) -> Result<Self> {
        if self.r != other.r {
            return domain(format!("cannot multiply elements of H({}) and H({})", self.r, other.r));
        }
        let mut out = Self::zero(self.r);
        for (v, c) in &other.terms {
            let prod = v.reduced_word().into_iter().fold(self.clone(), |acc, i| acc.mul_simple_right(i));
            for (w, x) in prod.terms {
                out.add_term(w, &x * c);
            }
        }
        Ok(out)
    }

    /// The anti-involution fixing every `T_i`: `T_w -> T_{w^-1}`.
    pub fn star(&self) -> Self {
        let mut out = Self::zero(self.r);
        for (w, c) in &self.terms {
            out.add_term(w.inverse(), c.clone());
        }
        out
    }

    fn check_rank(&self, other: &HeckeElt) -> Result<()> {
        if self.r != other.r {
            return domain(format!("rank mismatch: H({}) vs H({})", self.r, other.r));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &HeckeElt) -> Result<Self> {
        self.check_rank(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &HeckeElt) -> Result<Self> {
        self.check_rank(other)?;
        Ok(self - other)
    }
}

/// `T_i^{-1} = q^-2 T_i + (q^-2 - 1) T_e`.
pub fn inv_gen(i: usize, r: usize) -> Result<HeckeElt> {
    let s = Permutation::simple(i, r)?;
    let qm2 = Laurent::q_pow(-2);
    let mut x = HeckeElt::term(s, qm2.clone());
    x.add_term(Permutation::identity(r), &qm2 - &Laurent::one());
    Ok(x)
}

/// `x_lambda = sum over S_lambda of T_w`.
pub fn x_lambda(lambda: &Composition) -> HeckeElt {
    let mut x = HeckeElt::zero(lambda.size());
    for w in young_subgroup(lambda) {
        x.add_term(w, Laurent::one());
    }
    x
}

/// `y_lambda = sum over S_lambda of (-q^2)^{-l(w)} T_w`.
pub fn y_lambda(lambda: &Composition) -> HeckeElt {
    let mut x = HeckeElt::zero(lambda.size());
    for w in young_subgroup(lambda) {
        let l = w.length() as i32;
        let sign = if l % 2 == 0 { 1 } else { -1 };
        x.add_term(w, Laurent::term(Rat::from_int(sign), 0, -2 * l));
    }
    x
}

impl<'a> Add<&'a HeckeElt> for &'a HeckeElt {
    type Output = HeckeElt;
    /// Panics on a rank mismatch; see [`HeckeElt::try_add`].
    fn add(self, rhs: &HeckeElt) -> HeckeElt {
        assert_eq!(self.r, rhs.r, "rank mismatch");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a HeckeElt> for &'a HeckeElt {
    type Output = HeckeElt;
    fn sub(self, rhs: &HeckeElt) -> HeckeElt {
        self + &(-rhs)
    }
}

impl Neg for &HeckeElt {
    type Output = HeckeElt;
    fn neg(self) -> HeckeElt {
        HeckeElt { r: self.r, terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl<'a> Mul<&'a HeckeElt> for &'a HeckeElt {
    type Output = HeckeElt;
    /// Panics on a rank mismatch; see [`HeckeElt::mul`].
    fn mul(self, rhs: &HeckeElt) -> HeckeElt {
        HeckeElt::mul(self, rhs).expect("rank mismatch")
    }
}

impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "T{w}")?;
            } else {
                write!(f, "({c})*T{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElt[r={}]({self})", self.r)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    perm: Permutation,
    coeff: Laurent,
}

impl Serialize for HeckeElt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(w, c)| TermRepr { perm: w.clone(), coeff: c.clone() })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HeckeElt {
    /// The rank is read from the first term; an empty array is rejected since
    /// it does not determine `r`.
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<TermRepr>::deserialize(d)?;
        let Some(first) = v.first() else {
            return Err(serde::de::Error::custom("empty HeckeElt array does not fix the rank"));
        };
        let r = first.perm.rank();
        HeckeElt::from_terms(r, v.into_iter().map(|t| (t.perm, t.coeff)))
            .map_err(|e: Error| serde::de::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: usize, r: usize) -> HeckeElt {
        HeckeElt::generator(i, r).unwrap()
    }

    #[test]
    fn quadratic() {
        let lhs = &t(1, 2) * &t(1, 2);
        let rhs = &t(1, 2).scale(&(&Laurent::q_pow(2) - &Laurent::one())) + &HeckeElt::scalar(Laurent::q_pow(2), 2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn braid() {
        let a = &(&t(1, 3) * &t(2, 3)) * &t(1, 3);
        let b = &(&t(2, 3) * &t(1, 3)) * &t(2, 3);
        assert_eq!(a, b);
        assert_eq!(a.num_terms(), 1);
    }

    #[test]
    fn inverse_generator() {
        let inv = inv_gen(1, 2).unwrap();
        assert_eq!(&t(1, 2) * &inv, HeckeElt::one(2));
        assert_eq!(&inv * &t(1, 2), HeckeElt::one(2));
        assert_eq!(inv.star(), inv);
        assert!(inv_gen(2, 2).is_err());
    }

    #[test]
    fn star_reverses_words() {
        let x = &t(1, 3) * &t(2, 3);
        assert_eq!(x.star(), &t(2, 3) * &t(1, 3));
        assert_eq!(HeckeElt::one(3).star(), HeckeElt::one(3));
    }

    #[test]
    fn left_and_right_simple_products_agree_with_mul() {
        let x = &(&t(1, 3) * &t(2, 3)) + &HeckeElt::scalar(Laurent::a(), 3);
        assert_eq!(x.mul_simple_left(2), &t(2, 3) * &x);
        assert_eq!(x.mul_simple_right(2), &x * &t(2, 3));
    }

    #[test]
    fn young_symmetrizers() {
        let two = Composition::new(vec![2]);
        assert_eq!(x_lambda(&two), &HeckeElt::one(2) + &t(1, 2));
        let y = y_lambda(&two);
        assert_eq!(y, &HeckeElt::one(2) - &t(1, 2).scale(&Laurent::q_pow(-2)));
        assert_eq!(x_lambda(&Composition::new(vec![1, 1])), HeckeElt::one(2));
        assert_eq!(x_lambda(&two).mul_simple_right(1), x_lambda(&two).scale(&Laurent::q_pow(2)));
        assert_eq!(y.mul_simple_right(1), -&y);
    }

    #[test]
    fn rank_mismatch() {
        assert!(HeckeElt::one(2).mul(&HeckeElt::one(3)).is_err());
        assert!(HeckeElt::one(2).try_add(&HeckeElt::one(3)).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let x = &t(1, 3) * &t(2, 3);
        let s = serde_json::to_string(&x.scale(&Laurent::q())).unwrap();
        assert!(s.contains("\"perm\":[3,1,2]"), "{s}");
        let back: HeckeElt = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x.scale(&Laurent::q()));
    }
}
