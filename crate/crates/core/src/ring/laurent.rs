use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rat;
use crate::error::{Error, Result};

/// Exponent pair `(e_a, e_q)` of a monomial `a^e_a q^e_q`.
pub type Exps = (i32, i32);

/// Nonzero rational multiple of `a^ea q^eq`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    coeff: Rat,
    ea: i32,
    eq: i32,
}

impl Monomial {
    pub fn new(coeff: Rat, ea: i32, eq: i32) -> Result<Self> {
        if coeff.is_zero() {
            return Err(Error::Domain("monomial with zero coefficient".into()));
        }
        Ok(Monomial { coeff, ea, eq })
    }

    /// `a^ea q^eq` with coefficient one.
    pub fn unit(ea: i32, eq: i32) -> Self {
        Monomial { coeff: Rat::one(), ea, eq }
    }

    pub fn q_pow(eq: i32) -> Self {
        Self::unit(0, eq)
    }

    pub fn coeff(&self) -> &Rat {
        &self.coeff
    }

    pub fn ea(&self) -> i32 {
        self.ea
    }

    pub fn eq(&self) -> i32 {
        self.eq
    }

    pub fn exps(&self) -> Exps {
        (self.ea, self.eq)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            coeff: &self.coeff * &other.coeff,
            ea: self.ea + other.ea,
            eq: self.eq + other.eq,
        }
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            coeff: self.coeff.recip().expect("monomial coefficient is nonzero"),
            ea: -self.ea,
            eq: -self.eq,
        }
    }

    pub fn pow(&self, e: i32) -> Monomial {
        Monomial {
            coeff: self.coeff.pow(e).expect("monomial coefficient is nonzero"),
            ea: self.ea * e,
            eq: self.eq * e,
        }
    }

    pub fn to_laurent(&self) -> Laurent {
        Laurent { terms: vec![(self.exps(), self.coeff.clone())] }
    }

    /// Canonical order used for multisegment centers: `(ea, eq, coeff)`.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        (self.ea, self.eq, &self.coeff).cmp(&(other.ea, other.eq, &other.coeff))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialRepr {
    coeff: String,
    ea: i32,
    eq: i32,
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MonomialRepr { coeff: self.coeff.to_string(), ea: self.ea, eq: self.eq }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = MonomialRepr::deserialize(d)?;
        let coeff: Rat = r.coeff.parse().map_err(D::Error::custom)?;
        Monomial::new(coeff, r.ea, r.eq).map_err(D::Error::custom)
    }
}

/// Laurent polynomial in the formal variables `a` and `q` with rational
/// coefficients.
///
/// Terms are kept sorted by exponent pair `(ea, eq)` and never carry a zero
/// coefficient, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: Vec<(Exps, Rat)>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rat::from_int(n))
    }

    pub fn term(c: Rat, ea: i32, eq: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Laurent { terms: vec![((ea, eq), c)] }
        }
    }

    pub fn q_pow(eq: i32) -> Self {
        Self::term(Rat::one(), 0, eq)
    }

    pub fn a_pow(ea: i32) -> Self {
        Self::term(Rat::one(), ea, 0)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn a() -> Self {
        Self::a_pow(1)
    }

    /// Builds a value from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exps, Rat)>>(terms: I) -> Self {
        let mut v: Vec<(Exps, Rat)> = terms.into_iter().collect();
        v.sort_by(|x, y| x.0.cmp(&y.0));
        Laurent { terms: merge_sorted(v) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exps, &Rat)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, ea: i32, eq: i32) -> Rat {
        match self.terms.binary_search_by(|t| t.0.cmp(&(ea, eq))) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rat::zero(),
        }
    }

    pub fn as_monomial(&self) -> Option<Monomial> {
        match self.terms.as_slice() {
            [((ea, eq), c)] => Some(Monomial { coeff: c.clone(), ea: *ea, eq: *eq }),
            _ => None,
        }
    }

    /// Multiplicative inverse; only monomials are units.
    pub fn inverse(&self) -> Option<Self> {
        self.as_monomial().map(|m| m.inv().to_laurent())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|((ea, eq), c)| ((ea + m.ea, eq + m.eq), c * &m.coeff))
                .collect(),
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift_q(&self, e: i32) -> Self {
        Laurent { terms: self.terms.iter().map(|((ea, eq), c)| ((*ea, eq + e), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents require a monomial.
    pub fn pow_signed(&self, e: i32) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u32))
        } else {
            self.inverse().map(|inv| inv.pow(e.unsigned_abs()))
        }
    }

    /// Substitutes `q -> q^k` (with `k = -1` this is the bar involution on `q`).
    pub fn subs_q_power(&self, k: i32) -> Self {
        Self::from_terms(self.terms.iter().map(|((ea, eq), c)| ((*ea, eq * k), c.clone())))
    }

    /// Largest number of decimal digits in any numerator.
    pub fn max_numer_digits(&self) -> usize {
        self.terms.iter().map(|(_, c)| c.numer_digits()).max().unwrap_or(0)
    }

    fn bounds(&self) -> (Exps, Exps) {
        let mut lo = (i32::MAX, i32::MAX);
        let mut hi = (i32::MIN, i32::MIN);
        for ((ea, eq), _) in &self.terms {
            lo = (lo.0.min(*ea), lo.1.min(*eq));
            hi = (hi.0.max(*ea), hi.1.max(*eq));
        }
        (lo, hi)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in the Laurent ring. Panics if `d` is zero.
    ///
    /// Repeatedly cancels lexicographically leading terms. Every term of a
    /// true quotient lies in the box spanned by the per-variable degree
    /// differences, which bounds the loop.
    pub fn exact_div(&self, d: &Laurent) -> Option<Laurent> {
        assert!(!d.is_zero(), "exact division by zero");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(m) = d.as_monomial() {
            return Some(self.mul_monomial(&m.inv()));
        }
        let (flo, fhi) = self.bounds();
        let (dlo, dhi) = d.bounds();
        let lo = (flo.0 - dlo.0, flo.1 - dlo.1);
        let hi = (fhi.0 - dhi.0, fhi.1 - dhi.1);
        if lo.0 > hi.0 || lo.1 > hi.1 {
            return None;
        }
        let (dlead, dcoeff) = d.terms.last().cloned().unwrap();
        let mut rem = self.clone();
        let mut quot: Vec<(Exps, Rat)> = Vec::new();
        while let Some((rlead, rcoeff)) = rem.terms.last() {
            let e = (rlead.0 - dlead.0, rlead.1 - dlead.1);
            if e.0 < lo.0 || e.0 > hi.0 || e.1 < lo.1 || e.1 > hi.1 {
                return None;
            }
            let c = rcoeff / &dcoeff;
            let m = Monomial { coeff: c.clone(), ea: e.0, eq: e.1 };
            rem = &rem - &d.mul_monomial(&m);
            quot.push((e, c));
        }
        quot.reverse();
        Some(Laurent { terms: quot })
    }
}

/// Sums adjacent equal keys of a key-sorted vector and drops zeros.
fn merge_sorted(v: Vec<(Exps, Rat)>) -> Vec<(Exps, Rat)> {
    let mut out: Vec<(Exps, Rat)> = Vec::with_capacity(v.len());
    for (e, c) in v {
        match out.last_mut() {
            Some((le, lc)) if *le == e => *lc += &c,
            _ => {
                if let Some((_, lc)) = out.last() {
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                out.push((e, c));
            }
        }
    }
    if let Some((_, lc)) = out.last() {
        if lc.is_zero() {
            out.pop();
        }
    }
    out
}

fn merge_add(x: &[(Exps, Rat)], y: &[(Exps, Rat)], negate_y: bool) -> Vec<(Exps, Rat)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            Ordering::Less => {
                out.push(x[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let c = if negate_y { -&y[j].1 } else { y[j].1.clone() };
                out.push((y[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_y { &x[i].1 - &y[j].1 } else { &x[i].1 + &y[j].1 };
                if !c.is_zero() {
                    out.push((x[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&x[i..]);
    for (e, c) in &y[j..] {
        out.push((*e, if negate_y { -c } else { c.clone() }));
    }
    out
}

impl<'a> Add<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        Laurent { terms: merge_add(&self.terms, &rhs.terms, false) }
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(self, rhs: Laurent) -> Laurent {
        &self + &rhs
    }
}

impl<'a> Sub<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        Laurent { terms: merge_add(&self.terms, &rhs.terms, true) }
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, rhs: Laurent) -> Laurent {
        &self - &rhs
    }
}

impl<'a> Mul<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        if let Some(m) = rhs.as_monomial() {
            return self.mul_monomial(&m);
        }
        if let Some(m) = self.as_monomial() {
            return rhs.mul_monomial(&m);
        }
        let mut v = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for ((a1, q1), c1) in &self.terms {
            for ((a2, q2), c2) in &rhs.terms {
                v.push(((a1 + a2, q1 + q2), c1 * c2));
            }
        }
        v.sort_by(|x, y| x.0.cmp(&y.0));
        Laurent { terms: merge_sorted(v) }
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        &self * &rhs
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

impl From<Monomial> for Laurent {
    fn from(m: Monomial) -> Self {
        m.to_laurent()
    }
}

fn fmt_var(f: &mut fmt::Formatter<'_>, name: &str, e: i32, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        write!(f, "*")?;
    }
    *first = false;
    if e == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{e}")
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest powers first reads more naturally.
        for (k, ((ea, eq), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut first = true;
            if !abs.is_one() || (*ea == 0 && *eq == 0) {
                write!(f, "{abs}")?;
                first = false;
            }
            fmt_var(f, "a", *ea, &mut first)?;
            fmt_var(f, "q", *eq, &mut first)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    ea: i32,
    eq: i32,
    num: String,
    den: String,
}

impl Serialize for Laurent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|((ea, eq), c)| TermRepr {
                ea: *ea,
                eq: *eq,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Laurent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<TermRepr>::deserialize(d)?;
        let mut terms = Vec::with_capacity(v.len());
        for t in v {
            let c: Rat = format!("{}/{}", t.num, t.den).parse().map_err(D::Error::custom)?;
            terms.push(((t.ea, t.eq), c));
        }
        Ok(Laurent::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i32) -> Laurent {
        Laurent::q_pow(e)
    }

    #[test]
    fn add_distinct_terms() {
        let s = &q(1) + &q(-1);
        assert_eq!(s.num_terms(), 2);
        assert_eq!(s.to_string(), "q + q^-1");
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&q(1) - &q(-1)) * &(&q(1) + &q(-1));
        assert_eq!(lhs, &q(2) - &q(-2));
    }

    #[test]
    fn self_subtraction_is_canonical_zero() {
        let x = Laurent::from_terms(vec![((1, 2), Rat::from_int(3)), ((0, -1), Rat::new(1, 2).unwrap())]);
        let z = &x - &x;
        assert!(z.is_zero());
        assert_eq!(z, Laurent::zero());
    }

    #[test]
    fn exact_div_detects_remainder() {
        let f = &q(2) - &Laurent::one();
        let g = &q(1) - &Laurent::one();
        assert_eq!(f.exact_div(&g).unwrap(), &q(1) + &Laurent::one());
        assert_eq!(g.exact_div(&f), None);
        let h = &q(1) + &Laurent::a();
        assert_eq!(f.exact_div(&h), None);
    }

    #[test]
    fn json_is_sorted_by_exponents() {
        let x = Laurent::from_terms(vec![((1, -2), Rat::one()), ((0, 3), Rat::new(-1, 2).unwrap())]);
        let js = serde_json::to_string(&x).unwrap();
        assert_eq!(
            js,
            r#"[{"ea":0,"eq":3,"num":"-1","den":"2"},{"ea":1,"eq":-2,"num":"1","den":"1"}]"#
        );
        let back: Laurent = serde_json::from_str(&js).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn display() {
        let x = Laurent::from_terms(vec![((1, 2), Rat::one()), ((0, 0), Rat::from_int(-2)), ((-1, 0), Rat::new(3, 2).unwrap())]);
        assert_eq!(x.to_string(), "a*q^2 - 2 + 3/2*a^-1");
    }
}
