use super::{Laurent, Rat};
use crate::error::{domain, Result};

/// Balanced quantum integer `[n]_q = (q^n - q^-n) / (q - q^-1)`.
///
/// Expanded directly as `q^(n-1) + q^(n-3) + ... + q^(1-n)`; negative `n`
/// gives `-[|n|]_q`.
pub fn qint(n: i64) -> Laurent {
    let m = n.unsigned_abs() as i32;
    let terms = (0..m).map(|k| ((0, m - 1 - 2 * k), Rat::one()));
    let v = Laurent::from_terms(terms);
    if n < 0 {
        -v
    } else {
        v
    }
}

/// Gaussian binomial `[n choose m]_q`, as the exact quotient of the falling
/// product of q-integers by `[m]_q!`.
pub fn qbinom(n: i64, m: i64) -> Result<Laurent> {
    if n < 0 || m < 0 {
        return domain(format!("qbinom({n}, {m}): arguments must be nonnegative"));
    }
    if m > n {
        return domain(format!("qbinom({n}, {m}): m exceeds n"));
    }
    let mut num = Laurent::one();
    let mut den = Laurent::one();
    for i in 0..m {
        num = &num * &qint(n - i);
        den = &den * &qint(i + 1);
    }
    Ok(num.exact_div(&den).expect("Gaussian binomials are Laurent polynomials"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_qints() {
        assert!(qint(0).is_zero());
        assert!(qint(1).is_one());
        assert_eq!(qint(2), &Laurent::q() + &Laurent::q_pow(-1));
        assert_eq!(qint(-3), -qint(3));
    }

    #[test]
    fn small_binomials() {
        for n in 0..6 {
            assert!(qbinom(n, 0).unwrap().is_one());
        }
        assert_eq!(qbinom(2, 1).unwrap(), &Laurent::q() + &Laurent::q_pow(-1));
        let expect = Laurent::from_terms(vec![((0, 2), Rat::one()), ((0, 0), Rat::one()), ((0, -2), Rat::one())]);
        assert_eq!(qbinom(3, 2).unwrap(), expect);
        assert!(qbinom(2, 3).is_err());
    }
}
