use std::time::Instant;

use serde::Serialize;

use super::{run_cases, Report, Tally};
use crate::combinat::{partitions_of, residue, Composition, Partition};
use crate::drinfeld::central_scalar;
use crate::error::{Error, Result};
use crate::hecke::{in_ideal_above, murphy_basis, murphy_l_pow, x_lambda, HeckeElt, MAX_MURPHY_RANK};
use crate::sign::Sign;

/// Bound on the numerator size reached while inverting the Murphy
/// transition matrix.
pub const MAX_ELIMINATION_DIGITS: usize = 64;

#[derive(Serialize)]
struct JmConfig {
    r: usize,
    t_max: u32,
}

fn sign_str(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "",
        Sign::Minus => "-",
    }
}

fn jm_for(lambda: &Partition, t_max: u32, t: &mut Tally) {
    let r = lambda.size();
    let x = x_lambda(&Composition::from(lambda));
    for tt in 1..=t_max {
        for sign in Sign::BOTH {
            let e = sign.apply(tt as i32);
            let mut total = Ok(HeckeElt::zero(r));
            for s in 1..=r {
                let lhs = murphy_l_pow(s, e, r).and_then(|l| x.mul(&l));
                let rhs = residue(lambda, s).map(|res| x.scale(&res.pow(e).to_laurent()));
                total = total.and_then(|acc| acc.try_add(lhs.as_ref().map_err(Clone::clone)?));
                let diff = lhs.as_ref().map_err(Clone::clone).and_then(|l| l.try_sub(rhs.as_ref().map_err(Clone::clone)?));
                t.check_that(
                    || format!("x_λ L_{s}^{}{tt} ≡ res(s)^{}{tt} x_λ, λ={lambda}", sign_str(sign), sign_str(sign)),
                    diff.and_then(|d| in_ideal_above(lambda, &d)),
                    || (super::show(&lhs), format!("{} mod H^(>{lambda})", super::show(&rhs))),
                );
            }
            let c = central_scalar(lambda, tt, sign);
            let rhs = x.scale(&c);
            let diff = total.as_ref().map_err(Clone::clone).and_then(|l| l.try_sub(&rhs));
            t.check_that(
                || format!("x_λ Σ_s L_s^{}{tt} ≡ c_{tt}({lambda}) x_λ", sign_str(sign)),
                diff.and_then(|d| in_ideal_above(lambda, &d)),
                || (super::show(&total), format!("{rhs} mod H^(>{lambda})")),
            );
        }
    }
}

/// The residue congruences `x_λ L_s^{±t} ≡ res(s)^{±t} x_λ` modulo
/// `H^{⊳λ}` for every `λ ⊢ r`, and their sum against the central scalar;
/// also bounds the coefficient growth of the Murphy basis inversion.
pub fn verify_jm(r: usize, t_max: u32) -> Result<Report> {
    if r == 0 {
        return Err(Error::Domain("verify_jm needs r >= 1".into()));
    }
    if r > MAX_MURPHY_RANK {
        return Err(Error::Unsupported(format!(
            "verify_jm refuses r = {r}: the Murphy transition matrix has r! = {} rows and is inverted \
             exactly over Laurent polynomials; the supported maximum is r = {MAX_MURPHY_RANK}",
            (1..=r).product::<usize>()
        )));
    }
    let start = Instant::now();
    let mut tally = Tally::default();
    let basis = murphy_basis(r);
    tally.check_that(
        || format!("Murphy basis of H({r}) inverts with numerators of at most {MAX_ELIMINATION_DIGITS} digits"),
        basis.as_ref().map(|b| b.max_numer_digits() <= MAX_ELIMINATION_DIGITS).map_err(Clone::clone),
        || {
            let d = basis.as_ref().map(|b| b.max_numer_digits().to_string()).unwrap_or_default();
            (format!("{d} digits"), format!("<= {MAX_ELIMINATION_DIGITS}"))
        },
    );
    let shapes = partitions_of(r);
    tally.merge(run_cases(&shapes, |lambda| {
        let mut t = Tally::default();
        jm_for(lambda, t_max, &mut t);
        t
    }));
    Ok(Report::finish("jm", JmConfig { r, t_max }, tally, false, start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Status;

    #[test]
    fn small_ranks() {
        let rep = verify_jm(1, 2).unwrap();
        assert_eq!((rep.cases, rep.status), (1 + 4 * 2, Status::Pass), "{rep}");
        let rep = verify_jm(3, 2).unwrap();
        assert_eq!(rep.status, Status::Pass, "{rep}");
        assert_eq!(rep.cases, 1 + 3 * 2 * 2 * (3 + 1));
    }

    #[test]
    fn cost_guard() {
        assert!(matches!(verify_jm(MAX_MURPHY_RANK + 1, 1), Err(Error::Unsupported(_))));
    }
}
