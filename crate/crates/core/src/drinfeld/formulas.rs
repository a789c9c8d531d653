use super::segment::{Multisegment, Segment};
use super::tuple::{sort_roots, DrinfeldTuple};
use crate::combinat::Partition;
use crate::error::{domain, Error, Result};
use crate::ring::{Laurent, Monomial, UPoly};
use crate::sign::Sign;

fn aq(eq: i32) -> Monomial {
    Monomial::unit(1, eq)
}

fn check_parts(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.num_parts() > n {
        return domain(format!("{lambda} has {} parts but n = {n}", lambda.num_parts()));
    }
    Ok(())
}

/// `∂(s)`: `Q_i(u) = Π_{k=i}^{n-1} P_k(u q^{k-2i+1})` with
/// `P_k(u) = Π_{ν_j = k} (1 - a_j u)`. Requires `n > r`.
pub fn partial_map(s: &Multisegment, n: usize) -> Result<DrinfeldTuple> {
    let r = s.total();
    if n <= r {
        return domain(format!("the map from multisegments needs n > r, got n = {n}, r = {r}"));
    }
    let roots = (1..=n)
        .map(|i| {
            s.segments()
                .iter()
                .filter(|seg| seg.length() >= i)
                .map(|seg| seg.center().mul(&Monomial::q_pow(seg.length() as i32 - 2 * i as i32 + 1)))
                .collect()
        })
        .collect();
    Ok(DrinfeldTuple::from_inverse_roots(roots))
}

/// Inverse roots of `P_j = Π_{s=λ_{j+1}+1}^{λ_j} (1 - a q^{2s-1-j} u)`.
fn p_roots(lambda: &Partition, j: usize) -> Vec<Monomial> {
    (lambda.part(j + 1) + 1..=lambda.part(j))
        .map(|s| aq(2 * s as i32 - 1 - j as i32))
        .collect()
}

/// `P_1, ..., P_{n-1}` for `λ` with at most `n` parts.
pub fn p_from_lambda(lambda: &Partition, n: usize) -> Result<Vec<UPoly>> {
    check_parts(lambda, n)?;
    Ok((1..n).map(|j| UPoly::from_inverse_roots(&p_roots(lambda, j))).collect())
}

/// `Q_i` with inverse roots `a q^{2(s-i)}`, `s = 1..λ_i`: the zeros of `Q_i`
/// form the segment `[a^{-1} q^{-λ_i+2i-1}; λ_i)`.
pub fn q_from_segments_cor(lambda: &Partition, n: usize) -> Result<DrinfeldTuple> {
    check_parts(lambda, n)?;
    let roots = (1..=n)
        .map(|i| {
            let li = lambda.part(i);
            if li == 0 {
                return Vec::new();
            }
            let zeros = Segment::new(Monomial::unit(-1, -(li as i32) + 2 * i as i32 - 1), li).expect("length >= 1");
            zeros.expand().iter().map(Monomial::inv).collect()
        })
        .collect();
    Ok(DrinfeldTuple::from_inverse_roots(roots))
}

/// The triangular recursion: `Q_m = Π_{s=1}^{λ_m} (1 - a q^{2(s-m)} u)` and
/// `Q_i(u) = P_i(u q^{-i+1}) ... P_{m-1}(u q^{m-2i}) Q_m(u q^{2(m-i)})`.
fn q_recursive_roots(lambda: &Partition, n: usize) -> Vec<Vec<Monomial>> {
    let m = lambda.num_parts();
    let qm: Vec<Monomial> = (1..=lambda.part(m)).map(|s| aq(2 * (s as i32 - m as i32))).collect();
    (1..=n)
        .map(|i| {
            if i > m {
                return Vec::new();
            }
            let mut roots = Vec::new();
            for k in i..m {
                let shift = Monomial::q_pow(k as i32 - 2 * i as i32 + 1);
                roots.extend(p_roots(lambda, k).iter().map(|x| x.mul(&shift)));
            }
            let shift = Monomial::q_pow(2 * (m as i32 - i as i32));
            roots.extend(qm.iter().map(|x| x.mul(&shift)));
            roots
        })
        .collect()
}

/// The Drinfeld tuple of `λ` built by the triangular recursion alone.
pub fn q_from_recursion(lambda: &Partition, n: usize) -> Result<DrinfeldTuple> {
    check_parts(lambda, n)?;
    Ok(DrinfeldTuple::from_inverse_roots(q_recursive_roots(lambda, n)))
}

/// The Drinfeld tuple of `λ` at parameter `a`, read off the segment
/// description and checked against the triangular recursion.
pub fn q_from_lambda(lambda: &Partition, n: usize) -> Result<DrinfeldTuple> {
    let cor = q_from_segments_cor(lambda, n)?;
    let rec = q_from_recursion(lambda, n)?;
    if cor != rec {
        return Err(Error::Inconsistent(format!(
            "segment form and recursion disagree for {lambda}, n = {n}:\n{cor}\nvs\n{rec}"
        )));
    }
    Ok(cor)
}

/// `s(λ, a) = Σ_i Σ_{k=λ_{i+1}+1}^{λ_i} [a q^{2k-1-i}; i)`.
pub fn s_lambda_a(lambda: &Partition) -> Result<Multisegment> {
    let mut segs = Vec::new();
    for i in 1..=lambda.num_parts() {
        for k in lambda.part(i + 1) + 1..=lambda.part(i) {
            segs.push(Segment::new(aq(2 * k as i32 - 1 - i as i32), i)?);
        }
    }
    Multisegment::new(segs)
}

/// `c_t^±(λ) = a^{±t} Σ_{cells (i,j)} q^{±2t(j-i)}`.
pub fn central_scalar(lambda: &Partition, t: u32, sign: Sign) -> Laurent {
    let e = sign.apply(t as i32);
    lambda
        .cells()
        .fold(Laurent::zero(), |acc, (i, j)| &acc + &Laurent::term(1.into(), e, 2 * e * (j as i32 - i as i32)))
}

/// Both sides of `Π_i Q_i(u) = Π_i Π_{j=1}^{λ_i} (1 - a q^{2(j-i)} u)`.
pub fn product_identity(lambda: &Partition, n: usize) -> Result<(UPoly, UPoly)> {
    let q = q_from_lambda(lambda, n)?;
    let lhs = q.polys().iter().fold(UPoly::one(), |acc, p| &acc * p);
    let rhs = lambda
        .cells()
        .fold(UPoly::one(), |acc, (i, j)| &acc * &UPoly::linear_factor(&aq(2 * (j as i32 - i as i32))));
    Ok((lhs, rhs))
}

/// `Q_i(q^{i-1} u) / Q_{i+1}(q^{i+1} u)` for `i = 1..n-1`, or `None` at the
/// first ratio that is not a polynomial.
fn ratios(q: &DrinfeldTuple) -> Result<Option<Vec<UPoly>>> {
    let mut out = Vec::new();
    for i in 1..q.len() {
        let num = q.poly(i).substitute_scale(&Monomial::q_pow(i as i32 - 1));
        let den = q.poly(i + 1).substitute_scale(&Monomial::q_pow(i as i32 + 1));
        match num.exact_divide(&den)? {
            Some(p) => out.push(p),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

pub fn is_dominant(q: &DrinfeldTuple) -> Result<bool> {
    Ok(ratios(q)?.is_some())
}

/// `P_i(u) = Q_i(q^{i-1} u) / Q_{i+1}(q^{i+1} u)`.
pub fn p_from_q(q: &DrinfeldTuple) -> Result<Vec<UPoly>> {
    ratios(q)?.ok_or_else(|| Error::Domain("the tuple is not dominant".into()))
}

/// Removes `sub` from `from` as multisets, or `None` if `sub` is not
/// contained in `from`.
fn multiset_minus(from: &[Monomial], sub: &[Monomial]) -> Option<Vec<Monomial>> {
    let mut rest = from.to_vec();
    for x in sub {
        let pos = rest.iter().position(|y| y == x)?;
        rest.swap_remove(pos);
    }
    Some(sort_roots(rest))
}

/// Inverse of [`partial_map`], computed on inverse roots: the inverse roots
/// of `P_i` are exactly the centers of the length-`i` segments.
pub fn partial_inverse(q: &DrinfeldTuple) -> Result<Multisegment> {
    let Some(roots) = q.factored() else {
        return Err(Error::Unsupported("partial_inverse needs the factored form of the tuple".into()));
    };
    let n = roots.len();
    if n == 0 || !roots[n - 1].is_empty() {
        return domain("partial_inverse needs Q_n = 1");
    }
    let mut segs = Vec::new();
    for i in 1..n {
        let num: Vec<Monomial> = roots[i - 1].iter().map(|x| x.mul(&Monomial::q_pow(i as i32 - 1))).collect();
        let den: Vec<Monomial> = roots[i].iter().map(|x| x.mul(&Monomial::q_pow(i as i32 + 1))).collect();
        let p = multiset_minus(&num, &den)
            .ok_or_else(|| Error::Domain(format!("Q_{i}(q^{}u)/Q_{}(q^{}u) is not a polynomial", i - 1, i + 1, i + 1)))?;
        for b in p {
            segs.push(Segment::new(b, i)?);
        }
    }
    Multisegment::new(segs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn seg(eq: i32, k: usize) -> Segment {
        Segment::new(aq(eq), k).unwrap()
    }

    fn lin(eq: i32) -> UPoly {
        UPoly::linear_factor(&aq(eq))
    }

    #[test]
    fn partial_map_examples() {
        let s = Multisegment::new(vec![seg(0, 1)]).unwrap();
        let q = partial_map(&s, 2).unwrap();
        assert_eq!(q.polys(), &[lin(0), UPoly::one()]);
        let s = Multisegment::new(vec![seg(2, 1), seg(-1, 2)]).unwrap();
        let q = partial_map(&s, 4).unwrap();
        assert_eq!(q.poly(1), &(&lin(2) * &lin(0)));
        assert_eq!(q.poly(2), &lin(-2));
        assert!(q.poly(3).is_one() && q.poly(4).is_one());
        assert_eq!(Partition::new(q.degrees().to_vec()).unwrap(), p(&[2, 1]).dual());
        assert!(partial_map(&s, 3).is_err());
    }

    #[test]
    fn p_examples() {
        assert_eq!(p_from_lambda(&p(&[1]), 2).unwrap(), vec![lin(0)]);
        assert_eq!(p_from_lambda(&p(&[2, 1]), 3).unwrap(), vec![lin(2), lin(-1)]);
        let ps = p_from_lambda(&p(&[2, 2]), 3).unwrap();
        assert!(ps[0].is_one());
        assert_eq!(ps[1], &lin(-1) * &lin(1));
        assert!(p_from_lambda(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_from_lambda(&p(&[1]), 2).unwrap().polys(), &[lin(0), UPoly::one()]);
        let q = q_from_lambda(&p(&[2, 1]), 3).unwrap();
        assert_eq!(q.polys(), &[&lin(2) * &lin(0), lin(-2), UPoly::one()]);
        let q = q_from_lambda(&p(&[1, 1]), 2).unwrap();
        assert_eq!(q.polys(), &[lin(0), lin(-2)]);
        assert!(q_from_lambda(&p(&[1, 1, 1]), 2).is_err());
        assert_eq!(q_from_segments_cor(&p(&[2, 1]), 3).unwrap().poly(2), &lin(-2));
    }

    #[test]
    fn segments_of_partitions() {
        let s = s_lambda_a(&p(&[2, 1])).unwrap();
        assert_eq!(s, Multisegment::new(vec![seg(2, 1), seg(-1, 2)]).unwrap());
        assert_eq!(s_lambda_a(&p(&[1])).unwrap(), Multisegment::new(vec![seg(0, 1)]).unwrap());
        assert_eq!(s.partition(), p(&[2, 1]).dual());
        assert!(s_lambda_a(&Partition::empty()).is_err());
    }

    #[test]
    fn central_scalars() {
        assert_eq!(central_scalar(&p(&[1]), 1, Sign::Plus), Laurent::a());
        let expect = Laurent::from_terms(vec![((1, -2), 1.into()), ((1, 0), 1.into()), ((1, 2), 1.into())]);
        assert_eq!(central_scalar(&p(&[2, 1]), 1, Sign::Plus), expect);
        let expect = Laurent::from_terms(vec![((-2, -4), 1.into()), ((-2, 0), 1.into()), ((-2, 4), 1.into())]);
        assert_eq!(central_scalar(&p(&[2, 1]), 2, Sign::Minus), expect);
    }

    #[test]
    fn product_identity_examples() {
        let (l, r) = product_identity(&p(&[2, 1]), 3).unwrap();
        assert_eq!(l, r);
        assert_eq!(l, &(&lin(0) * &lin(2)) * &lin(-2));
        let (l, r) = product_identity(&Partition::empty(), 2).unwrap();
        assert!(l.is_one() && r.is_one());
    }

    #[test]
    fn dominance() {
        let q = DrinfeldTuple::from_polys(vec![lin(0), UPoly::one()]).unwrap();
        assert!(is_dominant(&q).unwrap());
        assert_eq!(p_from_q(&q).unwrap(), vec![lin(0)]);
        let swapped = DrinfeldTuple::from_polys(vec![UPoly::one(), lin(0)]).unwrap();
        assert!(!is_dominant(&swapped).unwrap());
        assert!(p_from_q(&swapped).is_err());
    }

    #[test]
    fn inverse_examples() {
        let s = Multisegment::new(vec![seg(0, 1)]).unwrap();
        assert_eq!(partial_inverse(&partial_map(&s, 2).unwrap()).unwrap(), s);
        let q = q_from_lambda(&p(&[2, 1]), 4).unwrap();
        assert_eq!(partial_inverse(&q).unwrap(), s_lambda_a(&p(&[2, 1])).unwrap());
        let s = Multisegment::new(vec![seg(0, 2), seg(0, 2)]).unwrap();
        assert_eq!(partial_inverse(&partial_map(&s, 5).unwrap()).unwrap(), s);
        assert!(matches!(partial_inverse(&q.without_factored()), Err(Error::Unsupported(_))));
    }
}
