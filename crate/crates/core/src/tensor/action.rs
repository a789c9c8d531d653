use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::elt::{residue_class, TensorElt};
use crate::error::{domain, Error, Result};
use crate::hecke::{AffineWord, HeckeElt, Letter};
use crate::ring::Laurent;
use crate::sign::Sign;

/// Which implementation of the actions to use. Everything except
/// `Faithful` deliberately breaks one convention so that the verification
/// suites can be shown to notice.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    #[default]
    Faithful,
    /// `q -> q^-1` in the `i_k < i_{k+1}` case of the `T_k` action.
    FlippedMiddleExponent,
    /// `E_i` carries `K̃_i` on the earlier slots instead of the later ones.
    FlippedECoproduct,
}

/// A Chevalley-type generator of the quantum affine algebra.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GenLabel {
    E(usize),
    F(usize),
    /// `K_i` or `K_i^{-1}`.
    K(usize, Sign),
    /// The central element `z_t^±`, `t >= 1`.
    Z(u32, Sign),
}

impl GenLabel {
    pub fn validate(&self, n: usize) -> Result<()> {
        match *self {
            GenLabel::E(i) | GenLabel::F(i) | GenLabel::K(i, _) if i == 0 || i > n => {
                domain(format!("generator {self} needs an index in 1..={n}"))
            }
            GenLabel::Z(0, _) => domain("z_t needs t >= 1"),
            _ => Ok(()),
        }
    }

    /// Every `E_i, F_i, K_i^{±1}` for `i <= n`, and `z_t^±` for `t <= t_max`.
    pub fn all(n: usize, t_max: u32) -> Vec<GenLabel> {
        let mut out = Vec::new();
        for i in 1..=n {
            out.extend([GenLabel::E(i), GenLabel::F(i), GenLabel::K(i, Sign::Plus), GenLabel::K(i, Sign::Minus)]);
        }
        for t in 1..=t_max {
            out.extend([GenLabel::Z(t, Sign::Plus), GenLabel::Z(t, Sign::Minus)]);
        }
        out
    }
}

impl fmt::Display for GenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GenLabel::E(i) => write!(f, "E{i}"),
            GenLabel::F(i) => write!(f, "F{i}"),
            GenLabel::K(i, Sign::Plus) => write!(f, "K{i}"),
            GenLabel::K(i, Sign::Minus) => write!(f, "K{i}^-1"),
            GenLabel::Z(t, Sign::Plus) => write!(f, "z{t}+"),
            GenLabel::Z(t, Sign::Minus) => write!(f, "z{t}-"),
        }
    }
}

/// Accepts `E1`, `F2`, `K1`, `K1^-1`, `z1+`, `z2-` (also `z1^+`).
impl FromStr for GenLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad generator {s:?}"));
        let s = s.trim();
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str().trim_start_matches('_');
        let num = |x: &str| x.parse::<usize>().map_err(|_| bad());
        match head {
            'E' => Ok(GenLabel::E(num(rest)?)),
            'F' => Ok(GenLabel::F(num(rest)?)),
            'K' => match rest.strip_suffix("^-1") {
                Some(i) => Ok(GenLabel::K(num(i)?, Sign::Minus)),
                None => Ok(GenLabel::K(num(rest)?, Sign::Plus)),
            },
            'z' | 'Z' => {
                let rest = rest.replace('^', "");
                let (t, sign) = if let Some(t) = rest.strip_suffix('+') {
                    (t, Sign::Plus)
                } else if let Some(t) = rest.strip_suffix('-') {
                    (t, Sign::Minus)
                } else {
                    return Err(bad());
                };
                Ok(GenLabel::Z(num(t)? as u32, sign))
            }
            _ => Err(bad()),
        }
    }
}

fn next_cyclic(i: usize, n: usize) -> usize {
    if i == n {
        1
    } else {
        i + 1
    }
}

/// Exponent of `q` by which `K̃_i = K_i K_{i+1}^{-1}` acts on `ω_s`.
fn ktilde_exp(i: usize, s: i64, n: usize) -> i32 {
    let c = residue_class(s, n);
    (c == i) as i32 - (c == next_cyclic(i, n)) as i32
}

/// Left action of a generator through the iterated coproduct.
pub fn act_left(g: GenLabel, v: &TensorElt) -> Result<TensorElt> {
    act_left_variant(g, v, Variant::Faithful)
}

pub fn act_left_variant(g: GenLabel, v: &TensorElt, variant: Variant) -> Result<TensorElt> {
    let n = v.modulus();
    g.validate(n)?;
    let nn = n as i64;
    Ok(v.linear(|idx, out| match g {
        GenLabel::E(i) => {
            let target = next_cyclic(i, n);
            for s in 0..idx.len() {
                if residue_class(idx[s], n) != target {
                    continue;
                }
                let others = if variant == Variant::FlippedECoproduct { &idx[..s] } else { &idx[s + 1..] };
                let e: i32 = others.iter().map(|&x| ktilde_exp(i, x, n)).sum();
                let mut j = idx.to_vec();
                j[s] -= 1;
                out.add_term(j, Laurent::q_pow(e));
            }
        }
        GenLabel::F(i) => {
            for s in 0..idx.len() {
                if residue_class(idx[s], n) != i {
                    continue;
                }
                let e: i32 = idx[..s].iter().map(|&x| -ktilde_exp(i, x, n)).sum();
                let mut j = idx.to_vec();
                j[s] += 1;
                out.add_term(j, Laurent::q_pow(e));
            }
        }
        GenLabel::K(i, sign) => {
            let count = idx.iter().filter(|&&x| residue_class(x, n) == i).count() as i32;
            out.add_term(idx.to_vec(), Laurent::q_pow(sign.apply(count)));
        }
        GenLabel::Z(t, sign) => {
            let shift = -(sign.apply(t as i32) as i64) * nn;
            for s in 0..idx.len() {
                let mut j = idx.to_vec();
                j[s] += shift;
                out.add_term(j, Laurent::one());
            }
        }
    }))
}

/// `ω_j T_k` for `j` with `j_k, j_{k+1}` compared as integers.
fn finite_t(idx: &[i64], k: usize, variant: Variant, out: &mut TensorElt) {
    let (a, b) = (idx[k - 1], idx[k]);
    let mut swapped = idx.to_vec();
    swapped.swap(k - 1, k);
    let q2m1 = &Laurent::q_pow(2) - &Laurent::one();
    if a < b {
        let e = if variant == Variant::FlippedMiddleExponent { -1 } else { 1 };
        out.add_term(swapped, Laurent::q_pow(e));
    } else if a == b {
        out.add_term(swapped, Laurent::q_pow(2));
    } else {
        out.add_term(swapped, Laurent::q());
        out.add_term(idx.to_vec(), q2m1);
    }
}

/// `ω_i T_k` for arbitrary `i ∈ Z^r`.
///
/// Write `ω_i = ω_j X^{-m}` with `j ∈ [1,n]^r` and move `T_k` to the left
/// of the Laurent monomial `f = X^{-m}` by the Bernstein relation
/// `f T_k = T_k (s_k f) + (q^2-1) (f - s_k f) / (1 - X_k X_{k+1}^{-1})`.
/// When `i ∈ [1,n]^r` only the three-case formula remains.
fn t_on_basis(idx: &[i64], k: usize, n: usize, variant: Variant, out: &mut TensorElt) {
    let nn = n as i64;
    let j: Vec<i64> = idx.iter().map(|&x| residue_class(x, n) as i64).collect();
    let m: Vec<i64> = idx.iter().zip(&j).map(|(x, y)| (x - y) / nn).collect();
    // T_k part, followed by s_k f: entries k, k+1 take the swapped shifts.
    let mut head = TensorElt::zero(n, idx.len());
    finite_t(&j, k, variant, &mut head);
    let mut ms = m.clone();
    ms.swap(k - 1, k);
    for (jj, c) in head.terms() {
        let shifted: Vec<i64> = jj.iter().zip(&ms).map(|(x, mt)| x + mt * nn).collect();
        out.add_term(shifted, c.clone());
    }
    // (q^2-1) ω_j g with g = (f - s_k f)/(1 - y), y = X_k X_{k+1}^{-1}.
    let (a, b) = (-m[k - 1], -m[k]);
    if a == b {
        return;
    }
    let q2m1 = &Laurent::q_pow(2) - &Laurent::one();
    let (lo, hi, coeff) = if a > b { (b, a, -&q2m1) } else { (a, b, q2m1) };
    for l in lo..hi {
        // X_k^l X_{k+1}^{a+b-l}; X_t^e shifts entry t by -e n.
        let mut shifted: Vec<i64> = j.iter().zip(&m).map(|(x, mt)| x + mt * nn).collect();
        shifted[k - 1] = j[k - 1] - l * nn;
        shifted[k] = j[k] - (a + b - l) * nn;
        out.add_term(shifted, coeff.clone());
    }
}

/// Right action of an affine Hecke generator: `X_t^{±1}` shifts entry `t`
/// by `∓n`; `T_k` as in [`t_on_basis`].
pub fn act_right(h: Letter, v: &TensorElt) -> Result<TensorElt> {
    act_right_variant(h, v, Variant::Faithful)
}

pub fn act_right_variant(h: Letter, v: &TensorElt, variant: Variant) -> Result<TensorElt> {
    let (n, r) = (v.modulus(), v.rank());
    match h {
        Letter::T(k) if k == 0 || k >= r => return domain(format!("T_{k} does not act on rank {r}")),
        Letter::X(t, _) if t == 0 || t > r => return domain(format!("X_{t} does not act on rank {r}")),
        _ => {}
    }
    let nn = n as i64;
    Ok(v.linear(|idx, out| match h {
        Letter::T(k) => t_on_basis(idx, k, n, variant, out),
        Letter::X(t, e) => {
            let mut j = idx.to_vec();
            j[t - 1] -= e as i64 * nn;
            out.add_term(j, Laurent::one());
        }
    }))
}

/// `v · h` for `h ∈ H(r)`, each `T_w` applied along a reduced word.
pub fn act_hecke(v: &TensorElt, h: &HeckeElt) -> Result<TensorElt> {
    act_hecke_variant(v, h, Variant::Faithful)
}

pub fn act_hecke_variant(v: &TensorElt, h: &HeckeElt, variant: Variant) -> Result<TensorElt> {
    if h.rank() != v.rank() {
        return domain(format!("H({}) does not act on rank {}", h.rank(), v.rank()));
    }
    let mut out = TensorElt::zero(v.modulus(), v.rank());
    for (w, c) in h.terms() {
        let mut x = v.clone();
        for k in w.reduced_word() {
            x = act_right_variant(Letter::T(k), &x, variant)?;
        }
        out = &out + &x.scale(c);
    }
    Ok(out)
}

/// `v · word`, including the word's scalar.
pub fn act_word(v: &TensorElt, word: &AffineWord) -> Result<TensorElt> {
    act_word_variant(v, word, Variant::Faithful)
}

pub fn act_word_variant(v: &TensorElt, word: &AffineWord, variant: Variant) -> Result<TensorElt> {
    let mut x = v.scale(&word.scalar);
    for &l in &word.letters {
        x = match l {
            Letter::X(t, e) if e.abs() > 1 => {
                let step = Letter::X(t, e.signum());
                (0..e.abs()).try_fold(x, |acc, _| act_right_variant(step, &acc, variant))?
            }
            _ => act_right_variant(l, &x, variant)?,
        };
    }
    Ok(x)
}

/// `#{t : ī_t = j}` for `j = 1..n`.
pub fn weight_of(idx: &[i64], n: usize) -> Vec<usize> {
    let mut w = vec![0; n];
    for &x in idx {
        w[residue_class(x, n) - 1] += 1;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, idx: &[i64]) -> TensorElt {
        TensorElt::basis(n, idx.to_vec()).unwrap()
    }

    fn q(e: i32) -> Laurent {
        Laurent::q_pow(e)
    }

    #[test]
    fn left_examples() {
        assert_eq!(act_left(GenLabel::E(1), &w(3, &[2])).unwrap(), w(3, &[1]));
        assert_eq!(act_left(GenLabel::Z(1, Sign::Plus), &w(3, &[4])).unwrap(), w(3, &[1]));
        let got = act_left(GenLabel::E(1), &w(3, &[2, 2])).unwrap();
        let expect = &w(3, &[1, 2]).scale(&q(-1)) + &w(3, &[2, 1]);
        assert_eq!(got, expect);
        assert_eq!(act_left(GenLabel::F(1), &w(2, &[1])).unwrap(), w(2, &[2]));
        assert_eq!(act_left(GenLabel::E(2), &w(2, &[1])).unwrap(), w(2, &[0]));
        assert!(act_left(GenLabel::E(4), &w(3, &[1])).is_err());
    }

    #[test]
    fn right_examples() {
        let t1 = Letter::T(1);
        assert_eq!(act_right(t1, &w(3, &[1, 2])).unwrap(), w(3, &[2, 1]).scale(&q(1)));
        assert_eq!(act_right(t1, &w(3, &[1, 1])).unwrap(), w(3, &[1, 1]).scale(&q(2)));
        let expect = &w(3, &[1, 2]).scale(&q(1)) + &w(3, &[2, 1]).scale(&(&q(2) - &Laurent::one()));
        assert_eq!(act_right(t1, &w(3, &[2, 1])).unwrap(), expect);
        assert_eq!(act_right(Letter::X(2, -1), &w(3, &[1, 2])).unwrap(), w(3, &[1, 5]));
    }

    #[test]
    fn extended_t_action() {
        let t1 = Letter::T(1);
        assert_eq!(act_right(t1, &w(2, &[-1, 1])).unwrap(), w(2, &[1, -1]));
        let expect = &w(2, &[-1, 1]).scale(&q(2)) + &w(2, &[1, -1]).scale(&(&q(2) - &Laurent::one()));
        assert_eq!(act_right(t1, &w(2, &[1, -1])).unwrap(), expect);
        assert_eq!(act_right(t1, &w(2, &[2, 3])).unwrap(), w(2, &[3, 2]).scale(&q(1)));
        let expect = &w(2, &[3, -1]) + &w(2, &[1, 1]).scale(&(&Laurent::one() - &q(2)));
        assert_eq!(act_right(t1, &w(2, &[-1, 3])).unwrap(), expect);
    }

    #[test]
    fn t_x_t_relation() {
        // T_1 X_1 T_1 = q^2 X_2 on a spread of indices.
        let word: AffineWord = "T1 X1 T1".parse().unwrap();
        for a in -2..=4 {
            for b in -2..=4 {
                let v = w(2, &[a, b]);
                let lhs = act_word(&v, &word).unwrap();
                let rhs = act_right(Letter::X(2, 1), &v).unwrap().scale(&q(2));
                assert_eq!(lhs, rhs, "at ({a},{b})");
            }
        }
    }

    #[test]
    fn weights() {
        assert_eq!(weight_of(&[1, 2, 2], 3), vec![1, 2, 0]);
        assert_eq!(weight_of(&[4, 1], 3), vec![2, 0, 0]);
        assert_eq!(weight_of(&[0], 2), vec![0, 1]);
    }

    #[test]
    fn labels_parse() {
        for g in GenLabel::all(3, 2) {
            assert_eq!(g.to_string().parse::<GenLabel>().unwrap(), g);
        }
        assert!("Q1".parse::<GenLabel>().is_err());
        assert!("z1".parse::<GenLabel>().is_err());
    }
}
