use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::error::{domain, Error, Result};
use crate::ring::Monomial;

/// The segment `[c; k) = (c q^{-k+1}, c q^{-k+3}, ..., c q^{k-1})`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "SegmentRepr")]
pub struct Segment {
    center: Monomial,
    length: usize,
}

#[derive(Deserialize)]
struct SegmentRepr {
    center: Monomial,
    length: usize,
}

impl TryFrom<SegmentRepr> for Segment {
    type Error = Error;
    fn try_from(r: SegmentRepr) -> Result<Self> {
        Segment::new(r.center, r.length)
    }
}

impl Segment {
    pub fn new(center: Monomial, length: usize) -> Result<Self> {
        if length == 0 {
            return domain("segments have length at least 1");
        }
        Ok(Segment { center, length })
    }

    pub fn center(&self) -> &Monomial {
        &self.center
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// The `k` entries `c q^{-k+1+2(t-1)}`, `t = 1..k`.
    pub fn expand(&self) -> Vec<Monomial> {
        let k = self.length as i32;
        (0..k).map(|t| self.center.mul(&Monomial::q_pow(1 - k + 2 * t))).collect()
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        other.length.cmp(&self.length).then_with(|| self.center.canonical_cmp(&other.center))
    }
}

pub fn segment_expand(s: &Segment) -> Vec<Monomial> {
    s.expand()
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {})", self.center, self.length)
    }
}

/// A nonempty multiset of segments, kept sorted by length (longest first),
/// then by center `(e_a, e_q, coeff)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<Segment>", into = "Vec<Segment>")]
pub struct Multisegment {
    segments: Vec<Segment>,
}

impl Multisegment {
    pub fn new(mut segments: Vec<Segment>) -> Result<Self> {
        if segments.is_empty() {
            return domain("a multisegment needs at least one segment");
        }
        segments.sort_by(Segment::canonical_cmp);
        Ok(Multisegment { segments })
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// `r = Σ lengths`.
    pub fn total(&self) -> usize {
        self.segments.iter().map(Segment::length).sum()
    }

    /// The segment lengths as a partition.
    pub fn partition(&self) -> Partition {
        Partition::new(self.segments.iter().map(Segment::length).collect()).expect("lengths are sorted descending")
    }
}

pub fn multisegment_partition(s: &Multisegment) -> Partition {
    s.partition()
}

impl TryFrom<Vec<Segment>> for Multisegment {
    type Error = Error;
    fn try_from(v: Vec<Segment>) -> Result<Self> {
        Multisegment::new(v)
    }
}

impl From<Multisegment> for Vec<Segment> {
    fn from(m: Multisegment) -> Self {
        m.segments
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.segments.iter().map(Segment::to_string).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
