use std::fmt;
use std::str::FromStr;

use super::elt::{inv_gen, HeckeElt};
use crate::error::{domain, Error, Result};
use crate::ring::Laurent;

/// A generator of the affine Hecke algebra appearing in a word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    /// `T_i`.
    T(usize),
    /// `X_j^e`, `e != 0`.
    X(usize, i32),
}

/// A scalar times a product of affine generators, read left to right.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineWord {
    pub scalar: Laurent,
    pub letters: Vec<Letter>,
}

impl AffineWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        AffineWord { scalar: Laurent::one(), letters }
    }

    pub fn with_scalar(scalar: Laurent, letters: Vec<Letter>) -> Self {
        AffineWord { scalar, letters }
    }

    /// Checks every index against rank `r`.
    pub fn validate(&self, r: usize) -> Result<()> {
        for l in &self.letters {
            match *l {
                Letter::T(i) if i == 0 || i >= r => return domain(format!("T_{i} is not a generator for r = {r}")),
                Letter::X(j, _) if j == 0 || j > r => return domain(format!("X_{j} is not a generator for r = {r}")),
                _ => {}
            }
        }
        Ok(())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Letter::T(i) => write!(f, "T{i}"),
            Letter::X(j, 1) => write!(f, "X{j}"),
            Letter::X(j, e) => write!(f, "X{j}^{e}"),
        }
    }
}

impl fmt::Display for AffineWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        if self.scalar.is_one() {
            write!(f, "{}", body.join(" "))
        } else {
            write!(f, "({}) {}", self.scalar, body.join(" "))
        }
    }
}

/// Parses one token: `T1`, `T_1`, `X2`, `X_2`, `X2^-1`, `X_2^{-1}`.
impl FromStr for Letter {
    type Err = Error;
    fn from_str(tok: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad affine Hecke letter {tok:?}"));
        let mut chars = tok.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str().trim_start_matches('_');
        let (idx, exp) = match rest.split_once('^') {
            Some((i, e)) => (i, Some(e.trim_start_matches('{').trim_end_matches('}'))),
            None => (rest, None),
        };
        let idx = idx.trim_start_matches('{').trim_end_matches('}').parse::<usize>().map_err(|_| bad())?;
        match (head, exp) {
            ('T', None) => Ok(Letter::T(idx)),
            ('X', None) => Ok(Letter::X(idx, 1)),
            ('X', Some(e)) => match e.parse::<i32>() {
                Ok(0) | Err(_) => Err(bad()),
                Ok(e) => Ok(Letter::X(idx, e)),
            },
            _ => Err(bad()),
        }
    }
}

/// Whitespace- or `*`-separated letters, e.g. `"T1 X2 X2^-1"`.
impl FromStr for AffineWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split(|c: char| c.is_whitespace() || c == '*')
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>>>()?;
        Ok(AffineWord::new(letters))
    }
}

/// The palindromic word `T_{j-1} ... T_1 T_1 ... T_{j-1}`.
fn palindrome(j: usize) -> Vec<usize> {
    (1..j).rev().chain(1..j).collect()
}

/// The Murphy operator `L_j = a q^{-2(j-1)} T_{j-1}...T_1 T_1...T_{j-1}`.
pub fn murphy_l(j: usize, r: usize) -> Result<HeckeElt> {
    if j == 0 || j > r {
        return domain(format!("L_{j} undefined for r = {r}"));
    }
    let scalar = Laurent::term(1.into(), 1, -2 * (j as i32 - 1));
    let x = palindrome(j).into_iter().fold(HeckeElt::scalar(scalar, r), |acc, i| acc.mul_simple_right(i));
    Ok(x)
}

/// `L_j^{-1}`, from the generator inverses and the inverted scalar.
pub fn murphy_l_inv(j: usize, r: usize) -> Result<HeckeElt> {
    if j == 0 || j > r {
        return domain(format!("L_{j} undefined for r = {r}"));
    }
    let mut x = HeckeElt::scalar(Laurent::term(1.into(), -1, 2 * (j as i32 - 1)), r);
    for i in palindrome(j) {
        x = x.mul(&inv_gen(i, r)?)?;
    }
    Ok(x)
}

/// `L_j^e` for any integer `e`.
pub fn murphy_l_pow(j: usize, e: i32, r: usize) -> Result<HeckeElt> {
    let base = if e >= 0 { murphy_l(j, r)? } else { murphy_l_inv(j, r)? };
    let mut x = HeckeElt::one(r);
    for _ in 0..e.unsigned_abs() {
        x = x.mul(&base)?;
    }
    Ok(x)
}

/// The evaluation map: `T_i -> T_i`, `X_j -> L_j`, extended multiplicatively.
pub fn ev_a(word: &AffineWord, r: usize) -> Result<HeckeElt> {
    word.validate(r)?;
    let mut x = HeckeElt::scalar(word.scalar.clone(), r);
    for l in &word.letters {
        x = match *l {
            Letter::T(i) => x.mul_simple_right(i),
            Letter::X(j, e) => x.mul(&murphy_l_pow(j, e, r)?)?,
        };
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::HeckeElt;

    fn word(s: &str) -> AffineWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_words() {
        let w = word("T1 X2 X2^-1 X_3^{-2} T_2");
        assert_eq!(
            w.letters,
            vec![Letter::T(1), Letter::X(2, 1), Letter::X(2, -1), Letter::X(3, -2), Letter::T(2)]
        );
        assert!("T1 Y2".parse::<AffineWord>().is_err());
        assert!("X1^0".parse::<AffineWord>().is_err());
        assert!(ev_a(&word("T3"), 3).is_err());
        assert!(ev_a(&word("X4"), 3).is_err());
    }

    #[test]
    fn small_murphy_operators() {
        assert_eq!(murphy_l(1, 3).unwrap(), HeckeElt::scalar(Laurent::a(), 3));
        let l2 = murphy_l(2, 2).unwrap();
        let t1 = HeckeElt::generator(1, 2).unwrap();
        let coeff = &Laurent::a() - &Laurent::term(1.into(), 1, -2);
        assert_eq!(l2, &t1.scale(&coeff) + &HeckeElt::scalar(Laurent::a(), 2));
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(ev_a(&word("X1"), 2).unwrap(), HeckeElt::scalar(Laurent::a(), 2));
        assert_eq!(ev_a(&word("X1^-1"), 2).unwrap(), HeckeElt::scalar(Laurent::a_pow(-1), 2));
        let lhs = ev_a(&word("T1 X1 T1"), 3).unwrap();
        assert_eq!(lhs, murphy_l(2, 3).unwrap().scale(&Laurent::q_pow(2)));
        assert!(ev_a(&word("X3 X3^-1"), 3).unwrap() == HeckeElt::one(3));
    }

    #[test]
    fn murphy_operators_commute() {
        let r = 4;
        let ls: Vec<_> = (1..=r).map(|j| murphy_l(j, r).unwrap()).collect();
        for i in 0..r {
            for j in i + 1..r {
                assert_eq!(&ls[i] * &ls[j], &ls[j] * &ls[i]);
            }
        }
    }
}
