use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Report, Tally};
use crate::combinat::{partitions_of, residue, Partition};
use crate::drinfeld::{
    central_scalar, is_dominant, p_from_lambda, p_from_q, partial_inverse, partial_map, product_identity, q_from_lambda,
    q_from_recursion, q_from_segments_cor, s_lambda_a, Multisegment, Segment,
};
use crate::error::{domain, Result};
use crate::ring::{Laurent, Monomial, Rat, UPoly};
use crate::sign::Sign;

/// Multisegments drawn by the round trip inside [`verify_drinfeld`].
pub const ROUNDTRIP_SAMPLES: usize = 200;
/// Largest total length drawn by the round trip.
pub const ROUNDTRIP_MAX_TOTAL: usize = 5;

#[derive(Serialize)]
struct DrinfeldConfig {
    r_max: usize,
    n: usize,
    seed: u64,
}

#[derive(Serialize)]
struct RoundtripConfig {
    count: usize,
    max_total: usize,
    n: usize,
    seed: u64,
}

struct Polys(Vec<UPoly>);

impl PartialEq for Polys {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl std::fmt::Display for Polys {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(UPoly::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn shape_checks(lambda: &Partition, n: usize, t: &mut Tally) {
    let r = lambda.size();
    t.check(|| format!("(a) recursion = segment form, λ={lambda}"), q_from_recursion(lambda, n), q_from_segments_cor(lambda, n));
    let (lhs, rhs) = match product_identity(lambda, n) {
        Ok((l, r)) => (Ok(l), Ok(r)),
        Err(e) => (Err(e.clone()), Err(e)),
    };
    t.check(|| format!("(b) Π Q_i = Π_cells (1 - res u), λ={lambda}"), lhs, rhs);
    let q = q_from_lambda(lambda, n);
    t.check_that(
        || format!("(c) Q(λ) dominant, λ={lambda}"),
        q.as_ref().map_err(Clone::clone).and_then(is_dominant),
        || (super::show(&q), "dominant".into()),
    );
    t.check(
        || format!("(c) P recovered from Q, λ={lambda}"),
        q.as_ref().map_err(Clone::clone).and_then(p_from_q).map(Polys),
        p_from_lambda(lambda, n).map(Polys),
    );
    if r < n {
        t.check(
            || format!("(d) ∂(s(λ,a)) = Q(λ,a), λ={lambda}"),
            s_lambda_a(lambda).and_then(|s| partial_map(&s, n)).map(|d| Polys(d.polys().to_vec())),
            q.as_ref().map_err(Clone::clone).map(|d| Polys(d.polys().to_vec())),
        );
    }
    t.check(|| format!("(e) partition of s(λ,a) = λ', λ={lambda}"), s_lambda_a(lambda).map(|s| s.partition()), Ok(lambda.dual()));
    for tt in 1..=3 {
        for sign in Sign::BOTH {
            let e = sign.apply(tt as i32);
            let sum = (1..=r).try_fold(Laurent::zero(), |acc, s| Ok(&acc + &residue(lambda, s)?.pow(e).to_laurent()));
            t.check(|| format!("c_{tt}^{sign}({lambda}) = Σ_s res(s)^{e}"), Ok(central_scalar(lambda, tt, sign)), sum);
        }
    }
}

fn random_center(rng: &mut ChaCha8Rng) -> Monomial {
    const COEFFS: [(i64, i64); 5] = [(1, 1), (1, 1), (-1, 1), (2, 1), (-3, 2)];
    let (num, den) = COEFFS[rng.gen_range(0..COEFFS.len())];
    let c = Rat::new(num, den).expect("nonzero denominator");
    Monomial::new(c, rng.gen_range(-2..=2), rng.gen_range(-6..=6)).expect("nonzero coefficient")
}

/// A multisegment of total length between 1 and `max_total`.
fn random_multisegment(rng: &mut ChaCha8Rng, max_total: usize) -> Result<Multisegment> {
    let mut left = rng.gen_range(1..=max_total);
    let mut segs = Vec::new();
    while left > 0 {
        let k = rng.gen_range(1..=left);
        segs.push(Segment::new(random_center(rng), k)?);
        left -= k;
    }
    Multisegment::new(segs)
}

fn roundtrip_into(count: usize, max_total: usize, n: usize, seed: u64, t: &mut Tally) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let s = random_multisegment(&mut rng, max_total)?;
        let back = partial_map(&s, n).and_then(|q| partial_inverse(&q));
        t.check(|| format!("round trip #{i}: {s}"), back, Ok(s.clone()));
    }
    Ok(())
}

/// `partial_inverse(partial_map(s)) = s` on `count` seeded random
/// multisegments of total length at most `max_total < n`.
pub fn verify_roundtrip(count: usize, max_total: usize, n: usize, seed: u64) -> Result<Report> {
    if max_total == 0 || max_total >= n {
        return domain(format!("the round trip needs 1 <= max_total < n, got max_total = {max_total}, n = {n}"));
    }
    let start = Instant::now();
    let mut t = Tally::default();
    roundtrip_into(count, max_total, n, seed, &mut t)?;
    Ok(Report::finish("roundtrip", RoundtripConfig { count, max_total, n, seed }, t, false, start))
}

/// For every `λ ⊢ r`, `r <= r_max`, with at most `n` parts: the recursion
/// against the segment form of `Q(λ, a)`, the product identity, dominance
/// and recovery of `P`, `∂(s(λ,a)) = Q(λ,a)` (when `r < n`), the partition
/// of `s(λ,a)` against `λ'`, and `c_t^±(λ)` against residue sums for
/// `t <= 3`. Ends with the seeded round trip on random multisegments.
pub fn verify_drinfeld(r_max: usize, n: usize, seed: u64) -> Result<Report> {
    if n < 2 {
        return domain(format!("verify_drinfeld needs n >= 2, got {n}"));
    }
    let start = Instant::now();
    let shapes: Vec<Partition> =
        (1..=r_max).flat_map(partitions_of).filter(|l| l.num_parts() <= n).collect();
    let mut tally = super::run_cases(&shapes, |lambda| {
        let mut t = Tally::default();
        shape_checks(lambda, n, &mut t);
        t
    });
    roundtrip_into(ROUNDTRIP_SAMPLES, ROUNDTRIP_MAX_TOTAL.min(n - 1), n, seed, &mut tally)?;
    Ok(Report::finish("drinfeld", DrinfeldConfig { r_max, n, seed }, tally, false, start))
}
