use std::collections::HashMap;

use super::action::{act_hecke_variant, act_left, act_left_variant, GenLabel, Variant};
use super::elt::{residue_class, IndexTuple, TensorElt};
use crate::combinat::Composition;
use crate::error::{domain, Result};
use crate::hecke::{ev_a, AffineWord, Letter};
use crate::ring::Laurent;
use crate::sign::Sign;

/// The evaluation map on tensor space: `ω_j X^{-m} -> ω_j · ev_a(X^{-m})`.
/// The image lies in `Ω_n^{⊗r}`, and tensors already there are fixed.
pub fn eps_a(v: &TensorElt) -> Result<TensorElt> {
    eps_a_variant(v, Variant::Faithful)
}

pub fn eps_a_variant(v: &TensorElt, variant: Variant) -> Result<TensorElt> {
    let (n, r) = (v.modulus(), v.rank());
    let nn = n as i64;
    let mut cache: HashMap<Vec<i64>, crate::hecke::HeckeElt> = HashMap::new();
    let mut out = TensorElt::zero(n, r);
    for (idx, c) in v.terms() {
        let j: IndexTuple = idx.iter().map(|&x| residue_class(x, n) as i64).collect();
        let m: Vec<i64> = idx.iter().zip(&j).map(|(x, y)| (x - y) / nn).collect();
        let base = TensorElt::basis(n, j)?.scale(c);
        if m.iter().all(|&x| x == 0) {
            out = &out + &base;
            continue;
        }
        let h = match cache.get(&m) {
            Some(h) => h.clone(),
            None => {
                let letters = m
                    .iter()
                    .enumerate()
                    .filter(|(_, &mt)| mt != 0)
                    .map(|(t, &mt)| Letter::X(t + 1, -mt as i32))
                    .collect();
                let h = ev_a(&AffineWord::new(letters), r)?;
                cache.insert(m.clone(), h.clone());
                h
            }
        };
        out = &out + &act_hecke_variant(&base, &h, variant)?;
    }
    Ok(out)
}

/// `f_k`: `f_2 = F_1`, `f_k = F_{k-1} f_{k-1} - q^{-1} f_{k-1} F_{k-1}`.
pub fn apply_fk(k: usize, v: &TensorElt) -> Result<TensorElt> {
    let n = v.modulus();
    if k < 2 || k > n {
        return domain(format!("f_{k} needs 2 <= k <= n = {n}"));
    }
    if k == 2 {
        return act_left(GenLabel::F(1), v);
    }
    let g = GenLabel::F(k - 1);
    let first = act_left(g, &apply_fk(k - 1, v)?)?;
    let second = apply_fk(k - 1, &act_left(g, v)?)?;
    Ok(&first - &second.scale(&Laurent::q_pow(-1)))
}

/// `e_k`: `e_2 = E_1`, `e_k = e_{k-1} E_{k-1} - q E_{k-1} e_{k-1}`.
pub fn apply_ek(k: usize, v: &TensorElt) -> Result<TensorElt> {
    apply_ek_variant(k, v, Variant::Faithful)
}

fn apply_ek_variant(k: usize, v: &TensorElt, variant: Variant) -> Result<TensorElt> {
    let n = v.modulus();
    if k < 2 || k > n {
        return domain(format!("e_{k} needs 2 <= k <= n = {n}"));
    }
    if k == 2 {
        return act_left_variant(GenLabel::E(1), v, variant);
    }
    let g = GenLabel::E(k - 1);
    let first = apply_ek_variant(k - 1, &act_left_variant(g, v, variant)?, variant)?;
    let second = act_left_variant(g, &apply_ek_variant(k - 1, v, variant)?, variant)?;
    Ok(&first - &second.scale(&Laurent::q()))
}

fn require_finite(v: &TensorElt) -> Result<()> {
    if !v.is_finite_part() {
        return domain("the evaluation operators act on tensors indexed by [1, n]^r");
    }
    Ok(())
}

/// `Ev_a(E_n)` acting on `Ω_n^{⊗r}`: `v -> a q^{-1} f_n(K_1 K_n v)`.
pub fn apply_ev_en(v: &TensorElt) -> Result<TensorElt> {
    require_finite(v)?;
    let n = v.modulus();
    let kv = act_left(GenLabel::K(1, Sign::Plus), &act_left(GenLabel::K(n, Sign::Plus), v)?)?;
    Ok(apply_fk(n, &kv)?.scale(&Laurent::term(1.into(), 1, -1)))
}

/// `Ev_a(F_n)` acting on `Ω_n^{⊗r}`: `v -> a^{-1} q e_n((K_1 K_n)^{-1} v)`.
pub fn apply_ev_fn(v: &TensorElt) -> Result<TensorElt> {
    apply_ev_fn_variant(v, Variant::Faithful)
}

pub fn apply_ev_fn_variant(v: &TensorElt, variant: Variant) -> Result<TensorElt> {
    require_finite(v)?;
    let n = v.modulus();
    let kv = act_left(GenLabel::K(1, Sign::Minus), &act_left(GenLabel::K(n, Sign::Minus), v)?)?;
    Ok(apply_ek_variant(n, &kv, variant)?.scale(&Laurent::term(1.into(), -1, 1)))
}

/// `u_{λ,j} = ω_1^{j-1} ω_n ω_1^{λ_1-j} ω_2^{λ_2} ... ω_n^{λ_n}`, with `n`
/// the length of `λ`.
pub fn u_lambda_j(lambda: &Composition, j: usize) -> Result<IndexTuple> {
    let n = lambda.len();
    let l1 = lambda.part(1);
    if j == 0 || j > l1 {
        return domain(format!("u_(λ,{j}) needs 1 <= j <= λ_1 = {l1}"));
    }
    let mut idx = Vec::with_capacity(lambda.size());
    idx.extend(std::iter::repeat(1).take(j - 1));
    idx.push(n as i64);
    idx.extend(std::iter::repeat(1).take(l1 - j));
    for (i, &p) in lambda.parts().iter().enumerate().skip(1) {
        idx.extend(std::iter::repeat(i as i64 + 1).take(p));
    }
    Ok(idx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, idx: &[i64]) -> TensorElt {
        TensorElt::basis(n, idx.to_vec()).unwrap()
    }

    #[test]
    fn eps_examples() {
        let v = &w(3, &[1, 3]) + &w(3, &[2, 2]);
        assert_eq!(eps_a(&v).unwrap(), v);
        assert_eq!(eps_a(&w(2, &[0])).unwrap(), w(2, &[2]).scale(&Laurent::a()));
        assert_eq!(eps_a(&w(2, &[3])).unwrap(), w(2, &[1]).scale(&Laurent::a_pow(-1)));
    }

    #[test]
    fn f_and_e_operators() {
        assert_eq!(apply_fk(2, &w(2, &[1])).unwrap(), w(2, &[2]));
        assert_eq!(apply_fk(3, &w(3, &[1, 2])).unwrap(), w(3, &[3, 2]));
        assert!(apply_fk(3, &w(3, &[3, 3])).unwrap().is_zero());
        assert!(apply_fk(4, &w(3, &[1])).is_err());
    }

    #[test]
    fn evaluation_operators() {
        assert_eq!(apply_ev_en(&w(2, &[1])).unwrap(), w(2, &[2]).scale(&Laurent::a()));
        assert!(apply_ev_en(&w(2, &[2])).unwrap().is_zero());
        assert_eq!(apply_ev_fn(&w(2, &[2])).unwrap(), w(2, &[1]).scale(&Laurent::a_pow(-1)));
        assert!(apply_ev_en(&w(2, &[0])).is_err());
    }

    #[test]
    fn u_tensors() {
        let l = Composition::new(vec![2, 1, 0]);
        assert_eq!(u_lambda_j(&l, 1).unwrap(), vec![3, 1, 2]);
        assert_eq!(u_lambda_j(&l, 2).unwrap(), vec![1, 3, 2]);
        assert_eq!(u_lambda_j(&Composition::new(vec![1, 0]), 1).unwrap(), vec![2]);
        assert!(u_lambda_j(&l, 3).is_err());
    }
}
