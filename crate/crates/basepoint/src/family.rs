//! Families of plane curves parametrized by edge lengths, their charts and infinitely near base points.

use rigid_algebra::univariate::{degree, gcd};
use rigid_algebra::{Budget, Field, GaussianRational, Monomial, Poly};
use serde_json::{json, Value};

use crate::points::{coefficient_system, common_zeros, to_dense, translate, Locus, Point, PointSet};
use crate::{BasepointError, GPoly};

/// A polynomial in two designated variables whose other variables act as parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub poly: GPoly,
    pub x: usize,
    pub y: usize,
}

impl Family {
    pub fn new(poly: GPoly, x: usize, y: usize) -> Self {
        Family { poly, x, y }
    }

    pub fn coefficients(&self) -> Vec<GPoly> {
        coefficient_system(&self.poly, self.x, self.y)
    }

    /// Lowest (x, y)-degree after moving `p` to the origin; 0 when `p` is not a base point.
    pub fn multiplicity_at(&self, p: &Point) -> u32 {
        let t = translate(&self.poly, self.x, self.y, p);
        t.terms().iter().map(|(m, _)| m.degree_in(&[self.x, self.y])).min().unwrap_or(u32::MAX)
    }

    fn chart(&self, p: &Point, m: u32, along: usize) -> Result<Family, BasepointError> {
        let n = self.poly.nvars();
        let ord = self.poly.order();
        let var = |v| Poly::var(n, ord, v);
        let other = if along == self.x { self.y } else { self.x };
        let mut images: Vec<GPoly> = (0..n).map(var).collect();
        images[along] = var(along).add(&Poly::constant(n, ord, coord(p, self, along)));
        images[other] = var(other).mul(&var(along)).add(&Poly::constant(n, ord, coord(p, self, other)));
        let q = self.poly.substitute(&images);
        let out = q
            .div_monomial(&Monomial::var(n, along, m as _))
            .ok_or_else(|| BasepointError::Division(format!("not divisible by the {m}-th power at {p}")))?;
        Ok(Family { poly: out, ..self.clone() })
    }

    /// α_p^m: substitute (x + p_x, y·x + p_y) and divide by x^m.
    pub fn alpha(&self, p: &Point, m: u32) -> Result<Family, BasepointError> {
        self.chart(p, m, self.x)
    }

    /// β_p^m: substitute (x·y + p_x, y + p_y) and divide by y^m.
    pub fn beta(&self, p: &Point, m: u32) -> Result<Family, BasepointError> {
        self.chart(p, m, self.y)
    }

    pub fn base_points(&self, locus: Locus, budget: &Budget) -> Result<PointSet, BasepointError> {
        common_zeros(&self.coefficients(), self.x, self.y, locus, budget)
    }

    pub fn conj(&self) -> Family {
        Family { poly: self.poly.map_coeffs(|c| c.conj()), ..self.clone() }
    }
}

fn coord(p: &Point, f: &Family, v: usize) -> GaussianRational {
    if v == f.x {
        p.x.clone()
    } else {
        p.y.clone()
    }
}

/// Homogenizes in (x, y) against a new coordinate, then dehomogenizes at `r` ∈ {x, y}:
/// a term x^a y^b of a degree-d polynomial becomes x^(d−a−b) y^b for r = x, x^a y^(d−a−b) for r = y.
pub fn rechart(f: &GPoly, x: usize, y: usize, r: usize) -> GPoly {
    let d = f.degree_in(&[x, y]).unwrap_or(0);
    let terms = f.terms().iter().map(|(m, c)| {
        let rest = (d - m.degree_in(&[x, y])) as _;
        (m.with_exp(r, rest), c.clone())
    });
    let terms: Vec<_> = terms.collect();
    Poly::from_terms(f.nvars(), f.order(), terms)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chart {
    Affine,
    Gamma1,
    Gamma2,
}

impl Chart {
    pub fn tag(self) -> &'static str {
        match self {
            Chart::Affine => "affine",
            Chart::Gamma1 => "gamma1",
            Chart::Gamma2 => "gamma2",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    Cyclic,
    OneCentric,
    TwoCentric,
    Other,
}

impl PointKind {
    pub fn tag(self) -> &'static str {
        match self {
            PointKind::Cyclic => "cyclic",
            PointKind::OneCentric => "one-centric",
            PointKind::TwoCentric => "two-centric",
            PointKind::Other => "other",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePointRecord {
    pub point: Point,
    pub multiplicity: u32,
    pub chart: Chart,
    /// Parent points of the infinitely-near chain, outermost first; `beta` marks the y-chart.
    pub lineage: Vec<Point>,
    pub via_beta: bool,
    pub kind: PointKind,
}

impl BasePointRecord {
    pub fn to_json(&self) -> Value {
        json!({
            "point": self.point.to_json(),
            "multiplicity": self.multiplicity,
            "chart": self.chart.tag(),
            "lineage": self.lineage.iter().map(Point::to_json).collect::<Vec<_>>(),
            "blowup_chart": if self.via_beta { "beta" } else { "alpha" },
            "kind": self.kind.tag(),
        })
    }

    fn conj(&self) -> Self {
        BasePointRecord {
            point: self.point.conj(),
            lineage: self.lineage.iter().map(Point::conj).collect(),
            ..self.clone()
        }
    }
}

/// The three dehomogenizations γ0, γ1, γ2 of a series, and the restriction to the line at infinity.
#[derive(Clone, Debug)]
pub struct Series {
    pub charts: [Family; 3],
    /// h(0, 1, y) as a polynomial in the chart's y variable.
    pub at_infinity: GPoly,
    pub degree: u32,
}

impl Series {
    /// `h` must be homogeneous in `z`; the charts use z1 as x and z2 as y.
    pub fn from_homogeneous(h: &GPoly, z: [usize; 3]) -> Result<Series, BasepointError> {
        let degs: Vec<u32> = h.terms().iter().map(|(m, _)| m.degree_in(&z)).collect();
        let d = degs.first().copied().unwrap_or(0);
        if degs.iter().any(|&e| e != d) {
            return Err(BasepointError::Inhomogeneous(format!("degrees {degs:?}")));
        }
        let n = h.nvars();
        let ord = h.order();
        let var = |v| Poly::var(n, ord, v);
        let one = Poly::one(n, ord);
        let sub = |a: GPoly, b: GPoly, c: GPoly| {
            let mut images: Vec<GPoly> = (0..n).map(var).collect();
            images[z[0]] = a;
            images[z[1]] = b;
            images[z[2]] = c;
            h.substitute(&images)
        };
        let g0 = sub(one.clone(), var(z[1]), var(z[2]));
        let g1 = sub(var(z[1]), one.clone(), var(z[2]));
        let g2 = sub(var(z[2]), var(z[1]), one.clone());
        let inf = sub(Poly::zero(n, ord), one, var(z[2]));
        let fam = |p| Family::new(p, z[1], z[2]);
        Ok(Series { charts: [fam(g0), fam(g1), fam(g2)], at_infinity: inf, degree: d })
    }

    /// The series of the projective closure of the affine family `f` in (x, y).
    pub fn from_affine(f: &GPoly, x: usize, y: usize) -> Series {
        let d = f.degree_in(&[x, y]).unwrap_or(0);
        let top: Vec<_> = f.terms().iter().filter(|(m, _)| m.degree_in(&[x, y]) == d).cloned().collect();
        let top = Poly::from_terms(f.nvars(), f.order(), top).eval_var(x, &GaussianRational::one());
        let fam = |p| Family::new(p, x, y);
        Series {
            charts: [fam(f.clone()), fam(rechart(f, x, y, x)), fam(rechart(f, x, y, y))],
            at_infinity: top,
            degree: d,
        }
    }

    /// True when the general member meets the line at infinity only at (0:1:±i).
    pub fn meets_infinity_only_at_cyclic(&self) -> Result<bool, BasepointError> {
        let y = self.charts[1].y;
        let coeffs: Vec<Vec<GaussianRational>> =
            coefficient_system(&self.at_infinity, usize::MAX, y).iter().map(|c| to_dense(c, y)).collect();
        let g = coeffs.iter().fold(Vec::new(), |g, c| gcd(&g, c));
        if degree(&g) != Some(self.degree as usize) || coeffs.iter().any(|c| degree(c).is_some_and(|d| d != self.degree as usize)) {
            return Ok(false);
        }
        let roots = crate::points::roots_of(&g)?;
        let i = GaussianRational::i();
        Ok(roots.iter().all(|r| *r == i || *r == i.neg()))
    }

    /// Base points of the series with their infinitely near points up to two levels.
    pub fn analyze(&self, budget: &Budget) -> Result<SeriesAnalysis, BasepointError> {
        let [g0, g1, g2] = &self.charts;
        let mut records = Vec::new();
        let push = |records: &mut Vec<BasePointRecord>, fam: &Family, set: PointSet, chart, lineage: &[Point], beta: bool, kind: &dyn Fn(&Point) -> PointKind| -> Result<Vec<(Point, u32)>, BasepointError> {
            let PointSet::Finite(pts) = set else {
                return Err(BasepointError::Inconclusive(format!("infinitely many base points in chart {}", Chart::tag(chart))));
            };
            let mut out = Vec::new();
            for p in pts {
                let m = fam.multiplicity_at(&p);
                records.push(BasePointRecord { point: p.clone(), multiplicity: m, chart, lineage: lineage.to_vec(), via_beta: beta, kind: kind(&p) });
                out.push((p, m));
            }
            Ok(out)
        };
        let other = |_: &Point| PointKind::Other;
        push(&mut records, g0, g0.base_points(Locus::Plane, budget)?, Chart::Affine, &[], false, &other)?;
        let on_line = g1.base_points(Locus::XAxisZero, budget)?;
        let cyclic = |p: &Point| if is_cyclic(p) { PointKind::Cyclic } else { PointKind::Other };
        let firsts = push(&mut records, g1, on_line, Chart::Gamma1, &[], false, &cyclic)?;
        let m2 = g2.multiplicity_at(&Point::origin());
        if m2 > 0 {
            records.push(BasePointRecord { point: Point::origin(), multiplicity: m2, chart: Chart::Gamma2, lineage: vec![], via_beta: false, kind: PointKind::Other });
        }
        for (p, m) in firsts.into_iter().filter(|(p, _)| is_cyclic(p)) {
            let a = g1.alpha(&p, m)?;
            let yp = p.y.clone();
            let near = move |q: &Point| {
                if !q.x.is_zero() {
                    PointKind::Other
                } else if q.y.is_zero() {
                    PointKind::OneCentric
                } else if q.y == yp.neg() {
                    PointKind::TwoCentric
                } else {
                    PointKind::Other
                }
            };
            let seconds = push(&mut records, &a, a.base_points(Locus::Plane, budget)?, Chart::Gamma1, &[p.clone()], false, &near)?;
            let b = g1.beta(&p, m)?;
            let mb = b.multiplicity_at(&Point::origin());
            if mb > 0 {
                records.push(BasePointRecord { point: Point::origin(), multiplicity: mb, chart: Chart::Gamma1, lineage: vec![p.clone()], via_beta: true, kind: PointKind::Other });
            }
            for (q, n) in seconds {
                let aa = a.alpha(&q, n)?;
                let lineage = [p.clone(), q.clone()];
                push(&mut records, &aa, aa.base_points(Locus::Plane, budget)?, Chart::Gamma1, &lineage, false, &other)?;
                let bb = a.beta(&q, n)?;
                let mb = bb.multiplicity_at(&Point::origin());
                if mb > 0 {
                    records.push(BasePointRecord { point: Point::origin(), multiplicity: mb, chart: Chart::Gamma1, lineage: lineage.to_vec(), via_beta: true, kind: PointKind::Other });
                }
            }
        }
        let at_infinity = self.meets_infinity_only_at_cyclic()?;
        Ok(SeriesAnalysis { records, at_infinity_cyclic_only: at_infinity })
    }
}

pub fn is_cyclic(p: &Point) -> bool {
    let i = GaussianRational::i();
    p.x.is_zero() && (p.y == i || p.y == i.neg())
}

#[derive(Clone, Debug)]
pub struct SeriesAnalysis {
    pub records: Vec<BasePointRecord>,
    pub at_infinity_cyclic_only: bool,
}

impl SeriesAnalysis {
    pub fn is_centric(&self) -> bool {
        self.at_infinity_cyclic_only && self.records.iter().all(|r| r.kind != PointKind::Other)
    }

    /// Every record has a conjugate record with the same multiplicity, chart and kind.
    pub fn conjugate_closed(&self) -> bool {
        self.records.iter().all(|r| self.records.contains(&r.conj()))
    }

    fn multiplicity_of(&self, kind: PointKind, y: &GaussianRational) -> u32 {
        self.records
            .iter()
            .filter(|r| r.kind == kind && r.lineage.first().map_or(&r.point.y, |p| &p.y) == y)
            .map(|r| r.multiplicity)
            .max()
            .unwrap_or(0)
    }

    /// Multiplicities (a, b, c) of the cyclic, 1-centric and 2-centric base points over (0, i).
    pub fn abc(&self) -> (u32, u32, u32) {
        let i = GaussianRational::i();
        (
            self.multiplicity_of(PointKind::Cyclic, &i),
            self.multiplicity_of(PointKind::OneCentric, &i),
            self.multiplicity_of(PointKind::TwoCentric, &i),
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "records": self.records.iter().map(BasePointRecord::to_json).collect::<Vec<_>>(),
            "infinity_cyclic_only": self.at_infinity_cyclic_only,
            "conjugate_closed": self.conjugate_closed(),
            "centric": self.is_centric(),
        })
    }
}
