//! Coupler-curve invariants read off a class: multiplicity, degree, class partitions,
//! genus bounds and intersection numbers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::calligraph::{glue, is_thin, Calligraph, GlueKind};
use crate::class::{big_to_json, class_product, ClassVector};
use crate::rigidity::is_minimally_rigid;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultiplicityReason {
    Thin,
    P3Left,
    P3Right,
}

impl MultiplicityReason {
    fn tag(self) -> &'static str {
        match self {
            MultiplicityReason::Thin => "thin",
            MultiplicityReason::P3Left => "P3-left",
            MultiplicityReason::P3Right => "P3-right",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MultiplicityStatus {
    Known { m: u64, reason: MultiplicityReason },
    /// Divisors of gcd(a,b,c); not authoritative.
    Unknown { candidates: Vec<u64> },
}

impl MultiplicityStatus {
    pub fn known(&self) -> Option<u64> {
        match self {
            MultiplicityStatus::Known { m, .. } => Some(*m),
            MultiplicityStatus::Unknown { .. } => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            MultiplicityStatus::Known { m, reason } => json!({ "status": "known", "m": m, "reason": reason.tag() }),
            MultiplicityStatus::Unknown { candidates } => {
                json!({ "status": "unknown", "candidates": candidates, "authoritative": false })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("class {class} does not have the shape {expected} required when {reason}")]
    P3Shape { class: ClassVector, expected: &'static str, reason: &'static str },
    #[error("{m} does not divide {value}")]
    Divisibility { m: u64, value: BigInt },
    #[error("multiplicity must be positive")]
    ZeroMultiplicity,
    #[error("class entries too large for partition enumeration")]
    TooLarge,
}

/// Coupler multiplicity from thinness or from the shape forced by a non-rigid union with L or R.
pub fn multiplicity_status(g: &Calligraph, cls: &ClassVector) -> Result<MultiplicityStatus, InvariantError> {
    if is_thin(g) {
        return Ok(MultiplicityStatus::Known { m: 1, reason: MultiplicityReason::Thin });
    }
    let to_m = |x: &BigInt| x.to_u64().filter(|&m| m > 0);
    if !is_minimally_rigid(&glue(g.graph(), GlueKind::L)) {
        return match to_m(&cls.a) {
            Some(m) if cls.a == cls.b && cls.c.is_zero() => Ok(MultiplicityStatus::Known { m, reason: MultiplicityReason::P3Left }),
            _ => Err(InvariantError::P3Shape { class: cls.clone(), expected: "(m,m,0)", reason: "G∪L is not minimally rigid" }),
        };
    }
    if !is_minimally_rigid(&glue(g.graph(), GlueKind::R)) {
        return match to_m(&cls.a) {
            Some(m) if cls.a == cls.c && cls.b.is_zero() => Ok(MultiplicityStatus::Known { m, reason: MultiplicityReason::P3Right }),
            _ => Err(InvariantError::P3Shape { class: cls.clone(), expected: "(m,0,m)", reason: "G∪R is not minimally rigid" }),
        };
    }
    let g = cls.a.gcd(&cls.b).gcd(&cls.c);
    let candidates = match g.to_u64() {
        Some(0) | None => Vec::new(),
        Some(g) => (1..=g).filter(|d| g % d == 0).collect(),
    };
    Ok(MultiplicityStatus::Unknown { candidates })
}

/// Degree of the coupler curve: 2a/m.
pub fn coupler_degree(cls: &ClassVector, m: u64) -> Result<BigInt, InvariantError> {
    if m == 0 {
        return Err(InvariantError::ZeroMultiplicity);
    }
    let two_a: BigInt = &cls.a * 2;
    let (q, r) = two_a.div_rem(&BigInt::from(m));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(InvariantError::Divisibility { m, value: two_a })
    }
}

pub type Part = (i64, i64, i64);

/// Unordered tuple of parts, stored in lexicographically descending order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClassPartition {
    pub parts: Vec<Part>,
}

impl ClassPartition {
    pub fn degrees(&self) -> Vec<i64> {
        self.parts.iter().map(|p| 2 * p.0).collect()
    }

    pub fn genus_bounds(&self, n_sing: u64) -> Vec<i64> {
        self.parts.iter().map(|&p| genus_bound(p, n_sing)).collect()
    }

    pub fn sum(&self) -> Part {
        self.parts.iter().fold((0, 0, 0), |s, p| (s.0 + p.0, s.1 + p.1, s.2 + p.2))
    }

    pub fn is_valid_part(p: Part) -> bool {
        p.0 >= p.1 && p.1 >= 0 && p.0 >= p.2 && p.2 >= 0
    }

    /// The partition with 1 and 2 exchanged in every part.
    pub fn mirrored(&self) -> Self {
        let mut parts: Vec<Part> = self.parts.iter().map(|&(a, b, c)| (a, c, b)).collect();
        parts.sort_by(|x, y| y.cmp(x));
        ClassPartition { parts }
    }
}

/// All multisets of n parts summing to cls/m with α0 ≥ α1,α2 ≥ 0.
/// `degrees`, when given, fixes 2·α0 of each part (in any order).
pub fn enumerate_partitions(
    cls: &ClassVector,
    m: u64,
    n: usize,
    degrees: Option<&[i64]>,
) -> Result<Vec<ClassPartition>, InvariantError> {
    if m == 0 {
        return Err(InvariantError::ZeroMultiplicity);
    }
    let div = |x: &BigInt| -> Result<i64, InvariantError> {
        let (q, r) = x.div_rem(&BigInt::from(m));
        if !r.is_zero() {
            return Err(InvariantError::Divisibility { m, value: x.clone() });
        }
        q.to_i64().filter(|q| *q <= 4096).ok_or(InvariantError::TooLarge)
    };
    let target = (div(&cls.a)?, div(&cls.b)?, div(&cls.c)?);
    if n == 0 {
        return Ok(if target == (0, 0, 0) { vec![ClassPartition { parts: vec![] }] } else { vec![] });
    }
    let mut a_lists: Vec<Vec<i64>> = Vec::new();
    match degrees {
        Some(ds) => {
            if ds.len() != n || ds.iter().any(|d| d % 2 != 0 || *d < 0) {
                return Ok(vec![]);
            }
            let mut a: Vec<i64> = ds.iter().map(|d| d / 2).collect();
            a.sort_by(|x, y| y.cmp(x));
            if a.iter().sum::<i64>() == target.0 {
                a_lists.push(a);
            }
        }
        None => non_increasing(target.0, n, target.0, &mut Vec::new(), &mut a_lists),
    }
    let mut out = Vec::new();
    for a in a_lists {
        let mut parts = Vec::with_capacity(n);
        fill(&a, target.1, target.2, &mut parts, &mut out);
    }
    for p in &mut out {
        p.parts.sort_by(|x, y| y.cmp(x));
    }
    out.sort_by(|x, y| y.cmp(x));
    out.dedup();
    Ok(out)
}

fn non_increasing(rest: i64, k: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if k == 0 {
        if rest == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for x in (0..=cap.min(rest)).rev() {
        if x * (k as i64) < rest {
            break;
        }
        cur.push(x);
        non_increasing(rest - x, k - 1, x, cur, out);
        cur.pop();
    }
}

fn fill(a: &[i64], b_rest: i64, c_rest: i64, cur: &mut Vec<Part>, out: &mut Vec<ClassPartition>) {
    let i = cur.len();
    if i == a.len() {
        if b_rest == 0 && c_rest == 0 {
            out.push(ClassPartition { parts: cur.clone() });
        }
        return;
    }
    let cap_after: i64 = a[i + 1..].iter().sum();
    for b in 0..=a[i].min(b_rest) {
        if b_rest - b > cap_after {
            continue;
        }
        for c in 0..=a[i].min(c_rest) {
            if c_rest - c > cap_after {
                continue;
            }
            // equal consecutive degrees: keep parts non-increasing to skip permutations
            if i > 0 && a[i] == a[i - 1] && (a[i], b, c) > cur[i - 1] {
                continue;
            }
            cur.push((a[i], b, c));
            fill(a, b_rest - b, c_rest - c, cur, out);
            cur.pop();
        }
    }
}

/// a(a−2) − b(b−1) − c(c−1) + 1 − n_sing.
pub fn genus_bound(p: Part, n_sing: u64) -> i64 {
    let (a, b, c) = p;
    a * (a - 2) - b * (b - 1) - c * (c - 1) + 1 - n_sing as i64
}

/// Partitions whose every part keeps a nonnegative genus bound with `n_sing` singular points per part.
pub fn filter_by_genus(parts: Vec<ClassPartition>, n_sing: u64) -> Vec<ClassPartition> {
    parts.into_iter().filter(|p| p.parts.iter().all(|&q| genus_bound(q, n_sing) >= 0)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntersectionCount {
    Exact(BigInt),
    NonIntegral(BigRational),
}

impl IntersectionCount {
    pub fn exact(&self) -> Option<&BigInt> {
        match self {
            IntersectionCount::Exact(v) => Some(v),
            IntersectionCount::NonIntegral(_) => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            IntersectionCount::Exact(v) => json!({ "value": big_to_json(v), "integral": true }),
            IntersectionCount::NonIntegral(q) => json!({ "value": q.to_string(), "integral": false }),
        }
    }
}

/// [G]·[G′]/(m·m′).
pub fn intersection_count(cls1: &ClassVector, m1: u64, cls2: &ClassVector, m2: u64) -> Result<IntersectionCount, InvariantError> {
    if m1 == 0 || m2 == 0 {
        return Err(InvariantError::ZeroMultiplicity);
    }
    let q = BigRational::new(class_product(cls1, cls2), BigInt::from(m1) * BigInt::from(m2));
    Ok(if q.denom().is_one() { IntersectionCount::Exact(q.to_integer()) } else { IntersectionCount::NonIntegral(q) })
}

/// Request for partitions in a report.
#[derive(Clone, Debug, Default)]
pub struct PartitionRequest {
    pub n: usize,
    pub degrees: Option<Vec<i64>>,
    /// Lower bound on singular points per component, supplied by the caller.
    pub min_sing: u64,
    pub discard_negative: bool,
}

#[derive(Clone, Debug)]
pub struct CouplerReport {
    pub class: ClassVector,
    pub multiplicity: MultiplicityStatus,
    pub degree: Option<BigInt>,
    pub partitions: Vec<ClassPartition>,
    pub min_sing: u64,
    pub intersections: Vec<(String, IntersectionCount)>,
}

impl CouplerReport {
    pub fn build(
        g: &Calligraph,
        cls: &ClassVector,
        request: Option<&PartitionRequest>,
        others: &[(String, ClassVector, u64)],
    ) -> Result<Self, InvariantError> {
        let multiplicity = multiplicity_status(g, cls)?;
        let m = multiplicity.known();
        let degree = m.map(|m| coupler_degree(cls, m)).transpose()?;
        let (partitions, min_sing) = match (request, m) {
            (Some(req), Some(m)) => {
                let all = enumerate_partitions(cls, m, req.n, req.degrees.as_deref())?;
                let kept = if req.discard_negative { filter_by_genus(all, req.min_sing) } else { all };
                (kept, req.min_sing)
            }
            _ => (Vec::new(), request.map_or(0, |r| r.min_sing)),
        };
        let intersections = match m {
            Some(m) => others
                .iter()
                .map(|(name, c2, m2)| Ok((name.clone(), intersection_count(cls, m, c2, *m2)?)))
                .collect::<Result<_, InvariantError>>()?,
            None => Vec::new(),
        };
        Ok(CouplerReport { class: cls.clone(), multiplicity, degree, partitions, min_sing, intersections })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "class": self.class.to_json(),
            "multiplicity": self.multiplicity.to_json(),
            "degree": self.degree.as_ref().map(big_to_json),
            "partitions": self.partitions.iter().map(|p| json!({
                "parts": p.parts.iter().map(|q| json!([q.0, q.1, q.2])).collect::<Vec<_>>(),
                "degrees": p.degrees(),
                "genus_bounds": p.genus_bounds(self.min_sing),
            })).collect::<Vec<_>>(),
            "intersections": self.intersections.iter().map(|(name, v)| {
                let mut o = v.to_json();
                o["with"] = json!(name);
                o
            }).collect::<Vec<_>>(),
        })
    }
}
