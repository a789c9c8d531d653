//! Fraction-free elimination over the Laurent ring.

use crate::error::{Error, Result};
use crate::ring::Laurent;

/// Result of a fraction-free Gauss-Jordan inversion of a square matrix `M`.
#[derive(Clone, Debug)]
pub struct FfInverse {
    /// `det(M)`.
    pub det: Laurent,
    /// `det(M) * M^{-1}`, i.e. the adjugate.
    pub adj: Vec<Vec<Laurent>>,
    /// Largest numerator (decimal digits) met in any intermediate entry.
    pub max_numer_digits: usize,
}

/// Bareiss-style Gauss-Jordan on `[M | I]`.
///
/// Every intermediate entry is a minor of the augmented matrix, so each
/// division by the previous pivot is exact in the Laurent ring. Pivots are
/// chosen by fewest terms. Returns `Ok(None)` when `M` is singular.
pub fn ff_inverse(m: &[Vec<Laurent>]) -> Result<Option<FfInverse>> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Domain("ff_inverse needs a square matrix".into()));
    }
    let mut a: Vec<Vec<Laurent>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v = row.clone();
            v.extend((0..n).map(|j| if i == j { Laurent::one() } else { Laurent::zero() }));
            v
        })
        .collect();
    let mut prev = Laurent::one();
    let mut negate = false;
    let mut digits = 0;
    for k in 0..n {
        let Some(p) = (k..n)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| (a[i][k].num_terms(), i))
        else {
            return Ok(None);
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let pivot_row = a[k].clone();
        let pivot = pivot_row[k].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let factor = row[k].clone();
            for j in 0..2 * n {
                if j == k {
                    continue;
                }
                let mut v = &pivot * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v = &v - &(&factor * &pivot_row[j]);
                }
                let v = v
                    .exact_div(&prev)
                    .ok_or_else(|| Error::Inconsistent(format!("Bareiss step {k} left a non-exact quotient")))?;
                digits = digits.max(v.max_numer_digits());
                row[j] = v;
            }
            row[k] = Laurent::zero();
        }
        prev = pivot;
    }
    // The left block is now prev * I and the right block prev * M^{-1};
    // prev is det(M) up to the sign of the row permutation.
    let sign = |x: &Laurent| if negate { -x } else { x.clone() };
    let adj = a.into_iter().map(|row| row[n..].iter().map(sign).collect()).collect();
    let det = sign(&prev);
    Ok(Some(FfInverse { det, adj, max_numer_digits: digits }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: i64) -> Laurent {
        Laurent::from_int(n)
    }

    fn mat_mul(x: &[Vec<Laurent>], y: &[Vec<Laurent>]) -> Vec<Vec<Laurent>> {
        let n = x.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(Laurent::zero(), |acc, k| &acc + &(&x[i][k] * &y[k][j])))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn integer_matrix() {
        let m = vec![vec![l(2), l(1)], vec![l(1), l(3)]];
        let inv = ff_inverse(&m).unwrap().unwrap();
        assert_eq!(inv.det, l(5));
        let prod = mat_mul(&m, &inv.adj);
        assert_eq!(prod, vec![vec![l(5), l(0)], vec![l(0), l(5)]]);
    }

    #[test]
    fn laurent_matrix_with_swap() {
        let q = Laurent::q();
        let m = vec![vec![l(0), q.clone(), l(1)], vec![l(1), l(0), Laurent::a()], vec![q.clone(), l(1), l(0)]];
        let inv = ff_inverse(&m).unwrap().unwrap();
        let prod = mat_mul(&m, &inv.adj);
        for (i, row) in prod.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(*x, if i == j { inv.det.clone() } else { l(0) });
            }
        }
        // det = 0*(0 - a) - q*(0 - a q) + 1*(1 - 0) = a q^2 + 1
        assert_eq!(inv.det, &Laurent::term(1.into(), 1, 2) + &l(1));
    }

    #[test]
    fn singular() {
        let m = vec![vec![Laurent::q(), l(1)], vec![Laurent::q_pow(2), Laurent::q()]];
        assert!(ff_inverse(&m).unwrap().is_none());
    }
}
