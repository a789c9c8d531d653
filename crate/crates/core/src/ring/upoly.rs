use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Laurent, Monomial};
use crate::error::{domain, Result};

/// Polynomial in `u` with [`Laurent`] coefficients, stored by ascending
/// power with no trailing zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Laurent>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Laurent::one())
    }

    pub fn constant(c: Laurent) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Laurent>) -> Self {
        while coeffs.last().is_some_and(Laurent::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    /// `1 - m u`.
    pub fn linear_factor(m: &Monomial) -> Self {
        Self::from_coeffs(vec![Laurent::one(), -m.to_laurent()])
    }

    /// `prod_i (1 - rho_i u)`; the listed monomials are inverse roots, so the
    /// zero of each factor in `u` is `rho_i^-1`.
    pub fn from_inverse_roots(roots: &[Monomial]) -> Self {
        roots.iter().fold(Self::one(), |acc, m| &acc * &Self::linear_factor(m))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Laurent] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Laurent {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Laurent {
        self.coeff(0)
    }

    /// `f(m u)`: the coefficient of `u^k` is multiplied by `m^k`.
    pub fn substitute_scale(&self, m: &Monomial) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut power = Monomial::unit(0, 0);
        for c in &self.coeffs {
            out.push(c.mul_monomial(&power));
            power = power.mul(m);
        }
        Self::from_coeffs(out)
    }

    /// Exact quotient `self / g`.
    ///
    /// Returns `Ok(None)` when the division leaves a remainder, or when a
    /// quotient coefficient would not be a Laurent polynomial.
    pub fn exact_divide(&self, g: &UPoly) -> Result<Option<UPoly>> {
        let Some(dg) = g.degree() else {
            return domain("exact_divide by the zero polynomial");
        };
        let Some(df) = self.degree() else {
            return Ok(Some(Self::zero()));
        };
        if df < dg {
            return Ok(None);
        }
        let lead = &g.coeffs[dg];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Laurent::zero(); df - dg + 1];
        for k in (0..=df - dg).rev() {
            let top = &rem[k + dg];
            if top.is_zero() {
                continue;
            }
            let Some(c) = top.exact_div(lead) else {
                return Ok(None);
            };
            for (j, gc) in g.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * gc);
            }
            quot[k] = c;
        }
        if rem.iter().all(Laurent::is_zero) {
            Ok(Some(Self::from_coeffs(quot)))
        } else {
            Ok(None)
        }
    }

    pub fn max_numer_digits(&self) -> usize {
        self.coeffs.iter().map(Laurent::max_numer_digits).max().unwrap_or(0)
    }
}

impl<'a> Add<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::from_coeffs((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::from_coeffs((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Laurent::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
        UPoly::from_coeffs(out)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*u")?,
                _ => write!(f, "({c})*u^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

impl Serialize for UPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for UPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(UPoly::from_coeffs(Vec::<Laurent>::deserialize(d)?))
    }
}
