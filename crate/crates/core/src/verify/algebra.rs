use std::time::Instant;

use super::{run_cases, Report, SuiteConfig, Tally};
use crate::error::Result;
use crate::hecke::{AffineWord, HeckeElt, Letter};
use crate::ring::{qbinom, Laurent};
use crate::sign::Sign;
use crate::tensor::{act_left_variant, act_word_variant, GenLabel, TensorElt, Variant};

/// `Σ c · g_1 g_2 ... g_k`, acting on the left (the last label first).
type LeftSum = Vec<(Laurent, Vec<GenLabel>)>;

struct LeftRelation {
    name: String,
    lhs: LeftSum,
    rhs: LeftSum,
}

fn word(gs: &[GenLabel]) -> LeftSum {
    vec![(Laurent::one(), gs.to_vec())]
}

fn eval_left(sum: &LeftSum, v: &TensorElt, variant: Variant) -> Result<TensorElt> {
    let mut out = TensorElt::zero(v.modulus(), v.rank());
    for (c, gs) in sum {
        let mut x = v.clone();
        for &g in gs.iter().rev() {
            x = act_left_variant(g, &x, variant)?;
        }
        out = &out + &x.scale(c);
    }
    Ok(out)
}

fn next(i: usize, n: usize) -> usize {
    i % n + 1
}

/// Affine type A Cartan entry; `n = 2` has the doubled off-diagonal entry.
fn cartan(i: usize, j: usize, n: usize) -> i64 {
    if i == j {
        2
    } else if n == 2 {
        -2
    } else if j == next(i, n) || i == next(j, n) {
        -1
    } else {
        0
    }
}

fn commutes(name: &str, a: GenLabel, b: GenLabel) -> LeftRelation {
    LeftRelation { name: format!("{name} {a}*{b} = {b}*{a}"), lhs: word(&[a, b]), rhs: word(&[b, a]) }
}

fn serre(name: &str, i: usize, j: usize, n: usize, gen: fn(usize) -> GenLabel) -> LeftRelation {
    let m = 1 - cartan(i, j, n);
    let lhs = (0..=m)
        .map(|a| {
            let c = qbinom(m, a).expect("0 <= a <= m");
            let c = if a % 2 == 1 { -c } else { c };
            let mut gs = vec![gen(i); a as usize];
            gs.push(gen(j));
            gs.extend(std::iter::repeat(gen(i)).take((m - a) as usize));
            (c, gs)
        })
        .collect();
    LeftRelation {
        name: format!("{name} i={i} j={j} (degree {m})"),
        lhs,
        rhs: Vec::new(),
    }
}

fn qgl_relations(n: usize, t_max: u32) -> Vec<LeftRelation> {
    use GenLabel::{E, F, K, Z};
    let signs = Sign::BOTH;
    let mut rels = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for si in signs {
                for sj in signs {
                    if (i, si) != (j, sj) {
                        rels.push(commutes("QGL1", K(i, si), K(j, sj)));
                    }
                }
            }
        }
        rels.push(LeftRelation { name: format!("QGL1 K{i}*K{i}^-1 = 1"), lhs: word(&[K(i, Sign::Plus), K(i, Sign::Minus)]), rhs: word(&[]) });
        rels.push(LeftRelation { name: format!("QGL1 K{i}^-1*K{i} = 1"), lhs: word(&[K(i, Sign::Minus), K(i, Sign::Plus)]), rhs: word(&[]) });
    }
    for i in 1..=n {
        for j in 1..=n {
            let e = (i == j) as i32 - (i == next(j, n)) as i32;
            rels.push(LeftRelation {
                name: format!("QGL2 K{i}*E{j} = q^{e} E{j}*K{i}"),
                lhs: word(&[K(i, Sign::Plus), E(j)]),
                rhs: vec![(Laurent::q_pow(e), vec![E(j), K(i, Sign::Plus)])],
            });
            rels.push(LeftRelation {
                name: format!("QGL2 K{i}*F{j} = q^{} F{j}*K{i}", -e),
                lhs: word(&[K(i, Sign::Plus), F(j)]),
                rhs: vec![(Laurent::q_pow(-e), vec![F(j), K(i, Sign::Plus)])],
            });
        }
    }
    // Cleared of the denominator q - q^-1.
    let qq = &Laurent::q() - &Laurent::q_pow(-1);
    for i in 1..=n {
        for j in 1..=n {
            let rhs = if i == j {
                let i1 = next(i, n);
                vec![
                    (Laurent::one(), vec![K(i, Sign::Plus), K(i1, Sign::Minus)]),
                    (Laurent::from_int(-1), vec![K(i, Sign::Minus), K(i1, Sign::Plus)]),
                ]
            } else {
                Vec::new()
            };
            rels.push(LeftRelation {
                name: format!("QGL3 (q-q^-1)(E{i}*F{j} - F{j}*E{i})"),
                lhs: vec![(qq.clone(), vec![E(i), F(j)]), (-&qq, vec![F(j), E(i)])],
                rhs,
            });
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                rels.push(serre("QGL4", i, j, n, E));
                rels.push(serre("QGL5", i, j, n, F));
            }
        }
    }
    let zs: Vec<GenLabel> = (1..=t_max).flat_map(|t| signs.map(|s| Z(t, s))).collect();
    for (x, &a) in zs.iter().enumerate() {
        for &b in &zs[x + 1..] {
            rels.push(commutes("QGL6", a, b));
        }
    }
    for &z in &zs {
        for i in 1..=n {
            for s in signs {
                rels.push(commutes("QGL7", K(i, s), z));
            }
            rels.push(commutes("QGL8", E(i), z));
            rels.push(commutes("QGL8", F(i), z));
        }
    }
    rels
}

/// Every relation of the quantum affine algebra, as an operator identity on
/// every pure tensor with entries in the window.
pub fn verify_qgl(cfg: &SuiteConfig) -> Result<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let rels = qgl_relations(cfg.n, cfg.t_max);
    let tuples = cfg.window.tuples(cfg.r);
    let tally = run_cases(&tuples, |idx| {
        let mut t = Tally::default();
        let v = TensorElt::basis(cfg.n, idx.clone());
        for rel in &rels {
            let (lhs, rhs) = match &v {
                Ok(v) => (eval_left(&rel.lhs, v, cfg.variant), eval_left(&rel.rhs, v, cfg.variant)),
                Err(e) => (Err(e.clone()), Err(e.clone())),
            };
            t.check(|| format!("{} on w{idx:?}", rel.name), lhs, rhs);
        }
        t
    });
    Ok(Report::finish("qgl", cfg, tally, false, start))
}

/// `Σ c · h_1 h_2 ... h_k`, acting on the right (the first letter first).
type RightSum = Vec<(Laurent, Vec<Letter>)>;

struct RightRelation {
    name: String,
    lhs: RightSum,
    rhs: RightSum,
}

fn rword(ls: &[Letter]) -> RightSum {
    vec![(Laurent::one(), ls.to_vec())]
}

fn rcommutes(a: Letter, b: Letter) -> RightRelation {
    RightRelation { name: format!("{a}*{b} = {b}*{a}"), lhs: rword(&[a, b]), rhs: rword(&[b, a]) }
}

fn eval_right(sum: &RightSum, v: &TensorElt, variant: Variant) -> Result<TensorElt> {
    let mut out = TensorElt::zero(v.modulus(), v.rank());
    for (c, ls) in sum {
        out = &out + &act_word_variant(v, &AffineWord::with_scalar(c.clone(), ls.clone()), variant)?;
    }
    Ok(out)
}

fn affine_relations(r: usize) -> Vec<RightRelation> {
    use Letter::{T, X};
    let q2 = Laurent::q_pow(2);
    let q2m1 = &q2 - &Laurent::one();
    let mut rels = Vec::new();
    for i in 1..r {
        rels.push(RightRelation {
            name: format!("T{i}*T{i} = (q^2-1)T{i} + q^2"),
            lhs: rword(&[T(i), T(i)]),
            rhs: vec![(q2m1.clone(), vec![T(i)]), (q2.clone(), vec![])],
        });
        if i + 1 < r {
            rels.push(RightRelation {
                name: format!("T{i}*T{}*T{i} = T{}*T{i}*T{}", i + 1, i + 1, i + 1),
                lhs: rword(&[T(i), T(i + 1), T(i)]),
                rhs: rword(&[T(i + 1), T(i), T(i + 1)]),
            });
        }
        for j in i + 2..r {
            rels.push(rcommutes(T(i), T(j)));
        }
        rels.push(RightRelation {
            name: format!("T{i}*X{i}*T{i} = q^2 X{}", i + 1),
            lhs: rword(&[T(i), X(i, 1), T(i)]),
            rhs: vec![(q2.clone(), vec![X(i + 1, 1)])],
        });
        for j in (1..=r).filter(|&j| j != i && j != i + 1) {
            rels.push(rcommutes(X(j, 1), T(i)));
            rels.push(rcommutes(X(j, -1), T(i)));
        }
    }
    for i in 1..=r {
        rels.push(RightRelation { name: format!("X{i}*X{i}^-1 = 1"), lhs: rword(&[X(i, 1), X(i, -1)]), rhs: rword(&[]) });
        rels.push(RightRelation { name: format!("X{i}^-1*X{i} = 1"), lhs: rword(&[X(i, -1), X(i, 1)]), rhs: rword(&[]) });
        for j in i + 1..=r {
            for (ei, ej) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                rels.push(rcommutes(X(i, ei), X(j, ej)));
            }
        }
    }
    rels
}

/// The finite relations checked inside `H(r)` by direct multiplication.
fn finite_relations(r: usize, t: &mut Tally) {
    let g = |i| HeckeElt::generator(i, r);
    let q2 = Laurent::q_pow(2);
    for i in 1..r {
        let lhs = g(i).and_then(|x| x.mul(&x));
        let rhs = g(i).map(|x| &x.scale(&(&q2 - &Laurent::one())) + &HeckeElt::scalar(q2.clone(), r));
        t.check(|| format!("H({r}): T{i}*T{i} = (q^2-1)T{i} + q^2"), lhs, rhs);
        for j in i + 1..r {
            let (a, b) = (g(i), g(j));
            if j == i + 1 {
                let lhs = a.clone().and_then(|a| b.clone().and_then(|b| a.mul(&b)?.mul(&a)));
                let rhs = a.and_then(|a| b.and_then(|b| b.mul(&a)?.mul(&b)));
                t.check(|| format!("H({r}): braid T{i},T{j}"), lhs, rhs);
            } else {
                let lhs = a.clone().and_then(|a| b.clone().and_then(|b| a.mul(&b)));
                let rhs = a.and_then(|a| b.and_then(|b| b.mul(&a)));
                t.check(|| format!("H({r}): T{i}*T{j} = T{j}*T{i}"), lhs, rhs);
            }
        }
    }
}

/// The affine Hecke relations for the right action on windowed pure
/// tensors, plus the finite relations inside `H(r)`.
pub fn verify_affine_hecke(cfg: &SuiteConfig) -> Result<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let rels = affine_relations(cfg.r);
    let tuples = cfg.window.tuples(cfg.r);
    let mut tally = run_cases(&tuples, |idx| {
        let mut t = Tally::default();
        let v = TensorElt::basis(cfg.n, idx.clone());
        for rel in &rels {
            let (lhs, rhs) = match &v {
                Ok(v) => (eval_right(&rel.lhs, v, cfg.variant), eval_right(&rel.rhs, v, cfg.variant)),
                Err(e) => (Err(e.clone()), Err(e.clone())),
            };
            t.check(|| format!("{} on w{idx:?}", rel.name), lhs, rhs);
        }
        t
    });
    let mut fin = Tally::default();
    finite_relations(cfg.r, &mut fin);
    tally.merge(fin);
    Ok(Report::finish("affine-hecke", cfg, tally, false, start))
}

/// Every generator of the quantum affine algebra against every generator
/// `T_k, X_t^{±1}` of the affine Hecke algebra.
pub fn verify_commuting(cfg: &SuiteConfig) -> Result<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let gens = GenLabel::all(cfg.n, cfg.t_max);
    let mut letters: Vec<Letter> = (1..cfg.r).map(Letter::T).collect();
    for t in 1..=cfg.r {
        letters.extend([Letter::X(t, 1), Letter::X(t, -1)]);
    }
    let tuples = cfg.window.tuples(cfg.r);
    let variant = cfg.variant;
    let tally = run_cases(&tuples, |idx| {
        let mut t = Tally::default();
        let v = TensorElt::basis(cfg.n, idx.clone());
        for &g in &gens {
            for &h in &letters {
                let hw = AffineWord::new(vec![h]);
                let (lhs, rhs) = match &v {
                    Ok(v) => (
                        act_word_variant(v, &hw, variant).and_then(|x| act_left_variant(g, &x, variant)),
                        act_left_variant(g, v, variant).and_then(|x| act_word_variant(&x, &hw, variant)),
                    ),
                    Err(e) => (Err(e.clone()), Err(e.clone())),
                };
                t.check(|| format!("{g} against {h} on w{idx:?}"), lhs, rhs);
            }
        }
        t
    });
    Ok(Report::finish("commuting", cfg, tally, false, start))
}
