use std::fmt;

use serde::Serialize;

use crate::error::{domain, Result};
use crate::ring::{Monomial, UPoly};

/// Sorts inverse roots canonically so that equal multisets compare equal.
pub(crate) fn sort_roots(mut roots: Vec<Monomial>) -> Vec<Monomial> {
    roots.sort_by(Monomial::canonical_cmp);
    roots
}

/// `(Q_1(u), ..., Q_n(u))`, each with constant term 1, optionally with the
/// inverse roots `ρ` of each `Q_i = Π (1 - ρ u)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DrinfeldTuple {
    polys: Vec<UPoly>,
    factored: Option<Vec<Vec<Monomial>>>,
    degrees: Vec<usize>,
}

impl DrinfeldTuple {
    pub fn from_polys(polys: Vec<UPoly>) -> Result<Self> {
        for (i, p) in polys.iter().enumerate() {
            if !p.constant_term().is_one() {
                return domain(format!("Q_{} = {p} does not have constant term 1", i + 1));
            }
        }
        let degrees = polys.iter().map(|p| p.degree().unwrap_or(0)).collect();
        Ok(DrinfeldTuple { polys, factored: None, degrees })
    }

    /// Builds each `Q_i` from its inverse roots.
    pub fn from_inverse_roots(roots: Vec<Vec<Monomial>>) -> Self {
        let roots: Vec<Vec<Monomial>> = roots.into_iter().map(sort_roots).collect();
        let polys: Vec<UPoly> = roots.iter().map(|r| UPoly::from_inverse_roots(r)).collect();
        let degrees = roots.iter().map(Vec::len).collect();
        DrinfeldTuple { polys, factored: Some(roots), degrees }
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polys(&self) -> &[UPoly] {
        &self.polys
    }

    /// `Q_i`, 1-based.
    pub fn poly(&self, i: usize) -> &UPoly {
        &self.polys[i - 1]
    }

    pub fn factored(&self) -> Option<&[Vec<Monomial>]> {
        self.factored.as_deref()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Drops the factored form, keeping only the expanded polynomials.
    pub fn without_factored(&self) -> Self {
        DrinfeldTuple { factored: None, ..self.clone() }
    }

    /// Equality of the expanded polynomials only.
    pub fn same_polys(&self, other: &DrinfeldTuple) -> bool {
        self.polys == other.polys
    }
}

impl fmt::Display for DrinfeldTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.polys.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "Q_{} = ", i + 1)?;
            match &self.factored {
                Some(roots) if !roots[i].is_empty() => {
                    let fs: Vec<String> = roots[i].iter().map(|m| format!("(1 - {m}*u)")).collect();
                    write!(f, "{}", fs.join(""))?
                }
                _ => write!(f, "{p}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Laurent;

    #[test]
    fn constant_terms_checked() {
        let bad = UPoly::from_coeffs(vec![Laurent::from_int(2), Laurent::one()]);
        assert!(DrinfeldTuple::from_polys(vec![bad]).is_err());
        let q = DrinfeldTuple::from_inverse_roots(vec![vec![Monomial::unit(1, 0)], vec![]]);
        assert_eq!(q.degrees(), &[1, 0]);
        assert!(q.poly(2).is_one());
        assert!(DrinfeldTuple::from_polys(q.polys().to_vec()).unwrap().same_polys(&q));
    }
}
