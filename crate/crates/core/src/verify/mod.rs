//! Executable checks of the algebraic identities, one suite per family,
//! each producing a [`Report`].

mod algebra;
mod drinfeld;
mod jm;
mod lemmas;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::hecke::MAX_MURPHY_RANK;
use crate::tensor::{IndexTuple, Variant};

pub use algebra::{verify_affine_hecke, verify_commuting, verify_qgl};
pub use drinfeld::{verify_drinfeld, verify_roundtrip};
pub use jm::verify_jm;
pub use lemmas::{verify_eval_compat, verify_lemmas, Which};

/// Only the first this many failures are kept in a report; the total is
/// still counted.
pub const MAX_RECORDED_FAILURES: usize = 100;

/// Environment variable holding the number of worker threads.
pub const WORKERS_ENV: &str = "QSCHUR_WORKERS";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Disagreements are recorded but never count as a failure.
    ReportOnly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ReportOnly => "report-only",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Failure {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub config: serde_json::Value,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub failures_total: usize,
    pub status: Status,
    pub elapsed_ms: u64,
}

impl Report {
    fn finish(suite: &str, config: impl Serialize, tally: Tally, report_only: bool, start: Instant) -> Report {
        let failures_total = tally.failures.len();
        let status = if report_only {
            Status::ReportOnly
        } else if failures_total == 0 {
            Status::Pass
        } else {
            Status::Fail
        };
        let mut failures = tally.failures;
        failures.truncate(MAX_RECORDED_FAILURES);
        Report {
            suite: suite.to_string(),
            config: serde_json::to_value(config).expect("configs serialize"),
            cases: tally.cases,
            failures,
            failures_total,
            status,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }

    /// True unless an asserted suite failed.
    pub fn ok(&self) -> bool {
        self.status != Status::Fail
    }

    /// Zeroes the timing so that reruns serialize identically.
    pub fn without_timing(mut self) -> Report {
        self.elapsed_ms = 0;
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<16} {:>8} cases {:>6} failures  {:<11} {:>7} ms  {}",
            self.suite, self.cases, self.failures_total, self.status, self.elapsed_ms, self.config
        )?;
        for x in &self.failures {
            write!(f, "\n  {}\n    lhs: {}\n    rhs: {}", x.case, x.lhs, x.rhs)?;
        }
        if self.failures_total > self.failures.len() {
            write!(f, "\n  ... {} more", self.failures_total - self.failures.len())?;
        }
        Ok(())
    }
}

/// Closed interval of tensor indices; empty when `lo > hi`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(into = "[i64; 2]", from = "[i64; 2]")]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Self {
        Window { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    /// Every tuple in `[lo, hi]^r`, lexicographically.
    pub fn tuples(&self, r: usize) -> Vec<IndexTuple> {
        if self.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Vec::with_capacity(r)];
        for _ in 0..r {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (self.lo..=self.hi).map(move |x| {
                        let mut t = t.clone();
                        t.push(x);
                        t
                    })
                })
                .collect();
        }
        out
    }
}

impl From<Window> for [i64; 2] {
    fn from(w: Window) -> Self {
        [w.lo, w.hi]
    }
}

impl From<[i64; 2]> for Window {
    fn from([lo, hi]: [i64; 2]) -> Self {
        Window { lo, hi }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// `LO..HI`, both ends inclusive.
impl FromStr for Window {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad window {s:?}, expected LO..HI"));
        let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        Ok(Window { lo: lo.trim().parse().map_err(|_| bad())?, hi: hi.trim().parse().map_err(|_| bad())? })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub n: usize,
    pub r: usize,
    pub window: Window,
    pub t_max: u32,
    pub variant: Variant,
    pub seed: u64,
}

impl SuiteConfig {
    /// Window `[-n, 2n]`, `t_max = 2`.
    pub fn new(n: usize, r: usize) -> Self {
        let nn = n as i64;
        SuiteConfig { n, r, window: Window::new(-nn, 2 * nn), t_max: 2, variant: Variant::Faithful, seed: 0 }
    }

    pub fn with_window(self, window: Window) -> Self {
        SuiteConfig { window, ..self }
    }

    pub fn with_t_max(self, t_max: u32) -> Self {
        SuiteConfig { t_max, ..self }
    }

    pub fn with_variant(self, variant: Variant) -> Self {
        SuiteConfig { variant, ..self }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        SuiteConfig { seed, ..self }
    }

    /// `n >= 2`, `r >= 1`, and a nonempty window must contain `[1, n]`.
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return domain(format!("n = {} but suites need n >= 2", self.n));
        }
        if self.r == 0 {
            return domain("suites need r >= 1");
        }
        let w = self.window;
        if !w.is_empty() && (w.lo > 1 || w.hi < self.n as i64) {
            return domain(format!("window {w} does not contain [1, {}]", self.n));
        }
        Ok(())
    }
}

/// Number of worker threads from the environment; 1 if unset or invalid.
pub fn workers() -> usize {
    std::env::var(WORKERS_ENV).ok().and_then(|s| s.trim().parse().ok()).filter(|&w| w >= 1).unwrap_or(1)
}

/// Case count and failures of part of a suite.
#[derive(Default)]
pub(crate) struct Tally {
    cases: usize,
    failures: Vec<Failure>,
}

fn show<T: fmt::Display>(x: &Result<T>) -> String {
    match x {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

impl Tally {
    /// One case: both sides must evaluate and agree. The description is
    /// only built on failure.
    pub(crate) fn check<T: PartialEq + fmt::Display>(&mut self, case: impl FnOnce() -> String, lhs: Result<T>, rhs: Result<T>) {
        self.cases += 1;
        let same = matches!((&lhs, &rhs), (Ok(l), Ok(r)) if l == r);
        if !same {
            self.failures.push(Failure { case: case(), lhs: show(&lhs), rhs: show(&rhs) });
        }
    }

    /// One case recorded as a predicate, with both sides given as text.
    pub(crate) fn check_that(&mut self, case: impl FnOnce() -> String, ok: Result<bool>, sides: impl FnOnce() -> (String, String)) {
        self.cases += 1;
        match ok {
            Ok(true) => {}
            Ok(false) => {
                let (lhs, rhs) = sides();
                self.failures.push(Failure { case: case(), lhs, rhs });
            }
            Err(e) => self.failures.push(Failure { case: case(), lhs: format!("error: {e}"), rhs: String::new() }),
        }
    }

    pub(crate) fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }
}

/// Runs `f` on every item, in parallel when more than one worker is
/// configured, and merges in item order so the result does not depend on
/// scheduling.
pub(crate) fn run_cases<T, F>(items: &[T], f: F) -> Tally
where
    T: Sync,
    F: Fn(&T) -> Tally + Sync + Send,
{
    let w = workers();
    let parts: Vec<Tally> = if w <= 1 || items.len() <= 1 {
        items.iter().map(&f).collect()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(w).build() {
            Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
            Err(_) => items.iter().map(&f).collect(),
        }
    };
    let mut out = Tally::default();
    for p in parts {
        out.merge(p);
    }
    out
}

/// Every suite on one configuration. The `jm` suite is included only when
/// `r` is within the Murphy cost guard.
pub fn verify_all(cfg: &SuiteConfig) -> Result<Vec<Report>> {
    let mut out = vec![
        verify_qgl(cfg)?,
        verify_affine_hecke(cfg)?,
        verify_commuting(cfg)?,
        verify_eval_compat(cfg, Which::En)?,
        verify_eval_compat(cfg, Which::Fn)?,
        verify_lemmas(cfg)?,
    ];
    if cfg.r <= MAX_MURPHY_RANK {
        out.push(verify_jm(cfg.r, cfg.t_max)?);
    }
    out.push(verify_drinfeld(cfg.r, cfg.n, cfg.seed)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windows() {
        let w: Window = "-1..2".parse().unwrap();
        assert_eq!(w, Window::new(-1, 2));
        assert_eq!(w.tuples(2).len(), 16);
        assert_eq!(w.tuples(2)[1], vec![-1, 0]);
        assert!(Window::new(1, 0).tuples(3).is_empty());
        assert!("1-2".parse::<Window>().is_err());
        assert_eq!(serde_json::to_string(&w).unwrap(), "[-1,2]");
    }

    #[test]
    fn configs() {
        let c = SuiteConfig::new(3, 2);
        assert_eq!(c.window, Window::new(-3, 6));
        assert!(c.validate().is_ok());
        assert!(c.clone().with_window(Window::new(2, 6)).validate().is_err());
        assert!(c.clone().with_window(Window::new(1, 0)).validate().is_ok());
        assert!(SuiteConfig::new(1, 2).validate().is_err());
    }

    #[test]
    fn tally_records_only_failures() {
        let mut t = Tally::default();
        t.check(|| "same".into(), Ok(1), Ok(1));
        t.check(|| "differ".into(), Ok(1), Ok(2));
        t.check::<i32>(|| "error".into(), Err(Error::Domain("x".into())), Ok(2));
        assert_eq!(t.cases, 3);
        assert_eq!(t.failures.len(), 2);
        assert_eq!(t.failures[0], Failure { case: "differ".into(), lhs: "1".into(), rhs: "2".into() });
        assert!(t.failures[1].lhs.starts_with("error"));
    }
}
