//! Eight-condition centricity verifier and small pseudo classes.

use rigid_algebra::{Budget, Field, GaussianRational};
use rigidcount::calligraph::Calligraph;
use rigidcount::class::ClassVector;
use serde_json::{json, Value};

use crate::family::{Series, SeriesAnalysis};
use crate::ops::Coord;
use crate::points::{Locus, Point, PointSet};
use crate::ring::EdgeRing;
use crate::{BasepointError, GPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
    Inconclusive(String),
}

impl Status {
    fn tag(&self) -> Value {
        match self {
            Status::Holds => json!("holds"),
            Status::Fails => json!("fails"),
            Status::Inconclusive(m) => json!({ "inconclusive": m }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConditionReport {
    pub index: u8,
    /// The value of c for conditions 7 and 8.
    pub c: Option<GaussianRational>,
    pub status: Status,
    pub points: Option<PointSet>,
    /// For conditions that apply T: whether every element of Ĝ∘T(P) is divisible by s, and by s/x0.
    pub s_divides: Option<(bool, bool)>,
}

impl ConditionReport {
    pub fn to_json(&self) -> Value {
        json!({
            "condition": self.index,
            "c": self.c.as_ref().map(|c| c.to_string()),
            "status": self.status.tag(),
            "base_points": self.points.as_ref().map(PointSet::to_json),
            "s_divides_eliminant": self.s_divides.map(|d| d.0),
            "product_divides_eliminant": self.s_divides.map(|d| d.1),
        })
    }
}

/// What established centricity: all eight conditions, or a direct classification of every base
/// point of the eliminant's series when some condition does not hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    Conditions,
    Series,
}

#[derive(Clone, Debug)]
pub enum CentricVerdict {
    Centric { certificate: Certificate, conditions: Vec<ConditionReport>, series: Option<SeriesAnalysis> },
    Inconclusive { step: u8, reason: String, conditions: Vec<ConditionReport>, series: Option<SeriesAnalysis> },
}

impl CentricVerdict {
    pub fn is_centric(&self) -> bool {
        matches!(self, CentricVerdict::Centric { .. })
    }

    /// True when every condition holds.
    pub fn all_conditions_hold(&self) -> bool {
        self.conditions().len() == 10 && self.conditions().iter().all(|c| c.status == Status::Holds)
    }

    pub fn conditions(&self) -> &[ConditionReport] {
        match self {
            CentricVerdict::Centric { conditions, .. } | CentricVerdict::Inconclusive { conditions, .. } => conditions,
        }
    }

    pub fn series(&self) -> Option<&SeriesAnalysis> {
        match self {
            CentricVerdict::Centric { series, .. } | CentricVerdict::Inconclusive { series, .. } => series.as_ref(),
        }
    }

    pub fn to_json(&self) -> Value {
        let conds: Vec<Value> = self.conditions().iter().map(ConditionReport::to_json).collect();
        let series = self.series().map(SeriesAnalysis::to_json);
        match self {
            CentricVerdict::Centric { certificate, .. } => {
                let cert = match certificate {
                    Certificate::Conditions => "conditions",
                    Certificate::Series => "series",
                };
                json!({ "verdict": "centric", "certificate": cert, "conditions": conds, "series": series })
            }
            CentricVerdict::Inconclusive { step, reason, .. } => {
                json!({ "verdict": "inconclusive", "step": step, "reason": reason, "conditions": conds, "series": series })
            }
        }
    }
}

struct Checker<'a> {
    ring: EdgeRing,
    mu: Vec<GPoly>,
    budget: &'a Budget,
}

fn pts(list: &[(i64, i64)]) -> Vec<Point> {
    list.iter().map(|&(re, im)| Point::new(GaussianRational::zero(), GaussianRational::from_ints(re, im))).collect()
}

impl Checker<'_> {
    fn bg(&self, p: &[GPoly], locus: Locus) -> Result<PointSet, BasepointError> {
        self.ring.b(&self.ring.g(p, self.budget)?, locus, self.budget)
    }

    /// B∘G∘T(P), together with the divisibility of Ĝ∘T(P) by s.
    fn bgt(&self, p: &[GPoly]) -> Result<(PointSet, (bool, bool)), BasepointError> {
        let (tp, s) = self.ring.t(p, self.budget)?;
        let hat = self.ring.hat_g(&tp, self.budget)?;
        let x0 = rigid_algebra::Monomial::var(self.ring.nvars(), self.ring.x0(), 1);
        let product = s.div_monomial(&x0).expect("s has the factor x0");
        let divides = |d: &GPoly| !hat.is_empty() && hat.iter().all(|f| f.div_exact(d).is_some());
        let divisible = (divides(&s), divides(&product));
        let g: Vec<GPoly> = hat.iter().map(|f| self.ring.h_ff(f)).collect();
        Ok((self.ring.b(&g, Locus::XAxisZero, self.budget)?, divisible))
    }

    fn condition(&self, index: u8, c: Option<&GPoly>) -> Result<(bool, Option<PointSet>, Option<(bool, bool)>), BasepointError> {
        let r = &self.ring;
        let each = |f: &dyn Fn(&GPoly) -> GPoly| -> Vec<GPoly> { self.mu.iter().map(f).collect() };
        let h = each(&|f| r.h(f, Coord::X0));
        let i = r.i_const();
        let origin = Point::origin();
        Ok(match index {
            1 => {
                let target = r.int(1).add(&r.var(r.y0()).pow(2));
                let ok = h.iter().any(|f| f.eval_var(r.x0(), &GaussianRational::zero()).monic() == target);
                (ok, None, None)
            }
            2 => {
                let b = self.bg(&self.mu, Locus::Plane)?;
                (b.is_empty(), Some(b), None)
            }
            3 => {
                let b = self.bg(&h, Locus::XAxisZero)?;
                (b.subset_of(&pts(&[(0, 1), (0, -1)])), Some(b), None)
            }
            4 => {
                let hy = each(&|f| r.h(f, Coord::Y0));
                let b = self.bg(&hy, Locus::XAxisZero)?;
                (!b.contains(&origin), Some(b), None)
            }
            5 | 6 | 7 | 8 => {
                let mh: Vec<GPoly> = h.iter().map(|f| r.m(f, &i)).collect();
                let p: Vec<GPoly> = match (index, c) {
                    (5, _) => mh,
                    (6, _) => h.iter().map(|f| r.n(f, &i)).collect(),
                    (7, Some(c)) => mh.iter().map(|f| r.m(f, c)).collect(),
                    (8, Some(c)) => mh.iter().map(|f| r.n(f, c)).collect(),
                    _ => unreachable!("conditions 7 and 8 take c"),
                };
                let (b, div) = self.bgt(&p)?;
                let ok = match index {
                    5 => b.subset_of(&pts(&[(0, 0), (0, -1)])),
                    7 => b.is_empty(),
                    _ => !b.contains(&origin),
                };
                (ok, Some(b), Some(div))
            }
            _ => unreachable!("eight conditions"),
        })
    }
}

impl EdgeRing {
    pub(crate) fn h_ff(&self, f: &GPoly) -> GPoly {
        self.hat_f(&self.hat_f(f, Coord::X0), Coord::Y0)
    }
}

/// Evaluates the eight sufficient conditions for centricity with c ∈ {0, i}, each within the
/// budget. If one does not hold, falls back to classifying the base points of the eliminant's
/// series directly; if that is unavailable too the verdict is inconclusive at the first such condition.
pub fn check_centric(g: &Calligraph, budget: &Budget) -> Result<CentricVerdict, BasepointError> {
    let ring = EdgeRing::new(g.graph(), &[])?;
    let mu = ring.mu_all();
    let checker = Checker { ring, mu, budget };
    let series = eliminant_series(&checker.ring, &checker.mu, budget).ok().and_then(|s| s.analyze(budget).ok());
    let mut conditions = Vec::new();
    let steps: Vec<(u8, Option<GaussianRational>)> = (1..=6)
        .map(|k| (k, None))
        .chain([7u8, 8].into_iter().flat_map(|k| [GaussianRational::zero(), GaussianRational::i()].map(|c| (k, Some(c)))))
        .collect();
    let mut first_miss: Option<(u8, String)> = None;
    for (index, c) in steps {
        let cp = c.as_ref().map(|c| checker.ring.constant(c.clone()));
        let (status, points, s_divides) = match checker.condition(index, cp.as_ref()) {
            Ok((true, p, d)) => (Status::Holds, p, d),
            Ok((false, p, d)) => (Status::Fails, p, d),
            Err(e) => (Status::Inconclusive(e.to_string()), None, None),
        };
        let miss = match &status {
            Status::Holds => None,
            Status::Fails => Some(format!("condition {index} does not hold")),
            Status::Inconclusive(m) => Some(m.clone()),
        };
        if first_miss.is_none() {
            first_miss = miss.map(|m| (index, m));
        }
        conditions.push(ConditionReport { index, c, status, points, s_divides });
    }
    Ok(match first_miss {
        None => CentricVerdict::Centric { certificate: Certificate::Conditions, conditions, series },
        Some(_) if series.as_ref().is_some_and(|s| s.is_centric()) => {
            CentricVerdict::Centric { certificate: Certificate::Series, conditions, series }
        }
        Some((step, reason)) => CentricVerdict::Inconclusive { step, reason, conditions, series },
    })
}

fn eliminant_series(ring: &EdgeRing, mu: &[GPoly], budget: &Budget) -> Result<Series, BasepointError> {
    let f = eliminant(ring, mu, budget)?;
    Ok(Series::from_affine(&f, ring.x0(), ring.y0()))
}

/// The unique element of G∘μ(E).
pub fn eliminant(ring: &EdgeRing, mu: &[GPoly], budget: &Budget) -> Result<GPoly, BasepointError> {
    let g = ring.g(mu, budget)?;
    match g.as_slice() {
        [f] => Ok(f.clone()),
        other => Err(BasepointError::NotUnique(other.len())),
    }
}

/// (m·a, m·b, m·c) from the cyclic, 1-centric and 2-centric multiplicities of the coupler-curve series.
pub fn pseudo_class_small(g: &Calligraph, m: u64, budget: &Budget) -> Result<ClassVector, BasepointError> {
    if m == 0 {
        return Err(BasepointError::Input("coupler multiplicity must be positive".into()));
    }
    let ring = EdgeRing::new(g.graph(), &[])?;
    let analysis = eliminant_series(&ring, &ring.mu_all(), budget)?.analyze(budget)?;
    if !analysis.is_centric() {
        return Err(BasepointError::Inconclusive("series is not centric".into()));
    }
    let (a, b, c) = analysis.abc();
    let m = m as i64;
    Ok(ClassVector::new(m * a as i64, m * b as i64, m * c as i64))
}
