use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{run_cases, Report, SuiteConfig, Tally, Window};
use crate::combinat::{enumerate_compositions, Composition};
use crate::error::{Error, Result};
use crate::hecke::Letter;
use crate::ring::Laurent;
use crate::sign::Sign;
use crate::tensor::{
    act_left_variant, act_right_variant, apply_ev_en, apply_ev_fn_variant, apply_fk, eps_a_variant, u_lambda_j, GenLabel,
    IndexTuple, TensorElt,
};

/// Which evaluation identity to compare.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Which {
    En,
    Fn,
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::En => "En",
            Which::Fn => "Fn",
        })
    }
}

impl FromStr for Which {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "en" | "e" => Ok(Which::En),
            "fn" | "f" => Ok(Which::Fn),
            _ => Err(Error::Parse(format!("expected En or Fn, got {s:?}"))),
        }
    }
}

#[derive(Serialize)]
struct EvalConfig<'a> {
    #[serde(flatten)]
    cfg: &'a SuiteConfig,
    which: Which,
}

/// `ε_a(E_n · v)` against `Ev_a(E_n) · v` on every basis vector of
/// `Ω_n^{⊗r}` (likewise for `F_n`, which is only reported). The window is
/// not used: both sides are only defined on `[1, n]^r`.
pub fn verify_eval_compat(cfg: &SuiteConfig, which: Which) -> Result<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let n = cfg.n;
    let variant = cfg.variant;
    let tuples = Window::new(1, n as i64).tuples(cfg.r);
    let tally = run_cases(&tuples, |idx| {
        let mut t = Tally::default();
        let v = TensorElt::basis(n, idx.clone());
        let (lhs, rhs) = match (&v, which) {
            (Err(e), _) => (Err(e.clone()), Err(e.clone())),
            (Ok(v), Which::En) => (
                act_left_variant(GenLabel::E(n), v, variant).and_then(|x| eps_a_variant(&x, variant)),
                apply_ev_en(v),
            ),
            (Ok(v), Which::Fn) => (
                act_left_variant(GenLabel::F(n), v, variant).and_then(|x| eps_a_variant(&x, variant)),
                apply_ev_fn_variant(v, variant),
            ),
        };
        t.check(|| format!("eps_a({which} w{idx:?}) = Ev_a({which}) w{idx:?}"), lhs, rhs);
        t
    });
    let suite = format!("eval-compat-{which}");
    Ok(Report::finish(&suite, EvalConfig { cfg, which }, tally, which == Which::Fn, start))
}

fn basis_sum(n: usize, r: usize, terms: impl IntoIterator<Item = (IndexTuple, Laurent)>) -> Result<TensorElt> {
    let mut out = TensorElt::zero(n, r);
    for (idx, c) in terms {
        out = out.try_add(&TensorElt::basis(n, idx)?.scale(&c))?;
    }
    Ok(out)
}

/// `u_{λ,1} T_1 ... T_k = q^k u_{λ,k+1} + (q^2-1) Σ_{s<=k} q^{2k-s-1} u_{λ,s}`.
fn check_ttu(lambda: &Composition, n: usize, cfg: &SuiteConfig, t: &mut Tally) {
    let r = lambda.size();
    let q2m1 = &Laurent::q_pow(2) - &Laurent::one();
    for k in 1..lambda.part(1) {
        let lhs = u_lambda_j(lambda, 1).and_then(|u| {
            let mut x = TensorElt::basis(n, u)?;
            for i in 1..=k {
                x = act_right_variant(Letter::T(i), &x, cfg.variant)?;
            }
            Ok(x)
        });
        let rhs = (|| {
            let mut terms = vec![(u_lambda_j(lambda, k + 1)?, Laurent::q_pow(k as i32))];
            for s in 1..=k {
                terms.push((u_lambda_j(lambda, s)?, &q2m1 * &Laurent::q_pow(2 * k as i32 - s as i32 - 1)));
            }
            basis_sum(n, r, terms)
        })();
        t.check(|| format!("ttu λ={lambda} k={k}"), lhs, rhs);
    }
}

/// `f_k · ω_1^{λ_1} ... ω_{k-1}^{λ_{k-1}} ω_j = Σ_s q^{1-s} ω_1^{s-1} ω_k ω_1^{λ_1-s} ω_2^{λ_2} ... ω_j`
/// for every tail `j ∈ [k, n]^{r - λ_1 - ... - λ_{k-1}}`.
fn check_ttg(k: usize, prefix: &[usize], r: usize, n: usize, t: &mut Tally) {
    let mut head: IndexTuple = Vec::new();
    for (i, &p) in prefix.iter().enumerate() {
        head.extend(std::iter::repeat(i as i64 + 1).take(p));
    }
    let l1 = prefix[0];
    for tail in Window::new(k as i64, n as i64).tuples(r - head.len()) {
        let mut idx = head.clone();
        idx.extend(&tail);
        let lhs = TensorElt::basis(n, idx.clone()).and_then(|v| apply_fk(k, &v));
        let rhs = (|| {
            let terms = (1..=l1).map(|s| {
                let mut j = idx.clone();
                j[..l1].fill(1);
                j[s - 1] = k as i64;
                (j, Laurent::q_pow(1 - s as i32))
            });
            basis_sum(n, r, terms)
        })();
        t.check(|| format!("ttg k={k} on w{idx:?}"), lhs, rhs);
    }
}

/// `z_t^± · ω_i = ω_i Σ_s X_s^{±t}`.
fn check_central(idx: &IndexTuple, cfg: &SuiteConfig, t: &mut Tally) {
    for tt in 1..=cfg.t_max {
        for sign in Sign::BOTH {
            let v = TensorElt::basis(cfg.n, idx.clone());
            let lhs = v.clone().and_then(|v| act_left_variant(GenLabel::Z(tt, sign), &v, cfg.variant));
            let rhs = v.and_then(|v| {
                let mut out = TensorElt::zero(cfg.n, cfg.r);
                for s in 1..=cfg.r {
                    out = &out + &act_right_variant(Letter::X(s, sign.apply(tt as i32)), &v, cfg.variant)?;
                }
                Ok(out)
            });
            t.check(|| format!("central z{tt}{} on w{idx:?}", if sign == Sign::Plus { "+" } else { "-" }), lhs, rhs);
        }
    }
}

/// The closed formulas for `u_{λ,1} T_1 ... T_k`, for `f_k` on
/// `ω_1^{λ_1} ... ω_j`, and for the central elements `z_t^±`, each against
/// direct application of the operators.
pub fn verify_lemmas(cfg: &SuiteConfig) -> Result<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let (n, r) = (cfg.n, cfg.r);
    let comps = enumerate_compositions(n, r);
    let mut tally = run_cases(&comps, |lambda| {
        let mut t = Tally::default();
        check_ttu(lambda, n, cfg, &mut t);
        t
    });
    // Different λ sharing λ_1..λ_{k-1} give the same ttg cases.
    let mut prefixes = BTreeSet::new();
    for lambda in &comps {
        for k in 2..=n {
            prefixes.insert((k, lambda.parts()[..k - 1].to_vec()));
        }
    }
    let prefixes: Vec<(usize, Vec<usize>)> = prefixes.into_iter().collect();
    tally.merge(run_cases(&prefixes, |(k, prefix)| {
        let mut t = Tally::default();
        check_ttg(*k, prefix, r, n, &mut t);
        t
    }));
    let tuples = cfg.window.tuples(r);
    tally.merge(run_cases(&tuples, |idx| {
        let mut t = Tally::default();
        check_central(idx, cfg, &mut t);
        t
    }));
    Ok(Report::finish("lemmas", cfg, tally, false, start))
}
