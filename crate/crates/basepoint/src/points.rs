//! Exact common zeros of coefficient systems in two designated variables.

use std::cmp::Ordering;
use std::fmt;

use rigid_algebra::univariate::{gaussian_roots, gcd, trim};
use rigid_algebra::{buchberger, Budget, Field, GaussianRational, MonomialOrder, Poly};
use serde_json::{json, Value};

use crate::{BasepointError, GPoly};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: GaussianRational,
    pub y: GaussianRational,
}

fn key(z: &GaussianRational) -> (&rigid_algebra::Rational, &rigid_algebra::Rational) {
    (&z.re, &z.im)
}

impl Ord for Point {
    fn cmp(&self, o: &Self) -> Ordering {
        (key(&self.x), key(&self.y)).cmp(&(key(&o.x), key(&o.y)))
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Point {
    pub fn new(x: GaussianRational, y: GaussianRational) -> Self {
        Point { x, y }
    }

    pub fn ints(xr: i64, xi: i64, yr: i64, yi: i64) -> Self {
        Point::new(GaussianRational::from_ints(xr, xi), GaussianRational::from_ints(yr, yi))
    }

    pub fn origin() -> Self {
        Point::ints(0, 0, 0, 0)
    }

    pub fn conj(&self) -> Self {
        Point::new(self.x.conj(), self.y.conj())
    }

    pub fn swapped(&self) -> Self {
        Point::new(self.y.clone(), self.x.clone())
    }

    pub fn to_json(&self) -> Value {
        json!([self.x.to_string(), self.y.to_string()])
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Result of a base-point extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointSet {
    Finite(Vec<Point>),
    /// Every point of the constraint locus (the whole line x=0, or a curve in the plane).
    Infinite,
}

impl PointSet {
    pub fn empty() -> Self {
        PointSet::Finite(Vec::new())
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, PointSet::Finite(v) if v.is_empty())
    }

    pub fn contains(&self, p: &Point) -> bool {
        match self {
            PointSet::Finite(v) => v.contains(p),
            PointSet::Infinite => true,
        }
    }

    pub fn subset_of(&self, allowed: &[Point]) -> bool {
        match self {
            PointSet::Finite(v) => v.iter().all(|p| allowed.contains(p)),
            PointSet::Infinite => false,
        }
    }

    pub fn points(&self) -> &[Point] {
        match self {
            PointSet::Finite(v) => v,
            PointSet::Infinite => &[],
        }
    }

    pub fn union(self, o: PointSet) -> PointSet {
        match (self, o) {
            (PointSet::Finite(mut a), PointSet::Finite(b)) => {
                a.extend(b);
                a.sort();
                a.dedup();
                PointSet::Finite(a)
            }
            _ => PointSet::Infinite,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            PointSet::Finite(v) => Value::Array(v.iter().map(Point::to_json).collect()),
            PointSet::Infinite => json!("infinite"),
        }
    }
}

/// Where the common zeros are sought.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Locus {
    Plane,
    /// The line x = 0.
    XAxisZero,
}

/// Coefficients of `p` with respect to every variable other than `x` and `y`.
pub fn coefficient_system(p: &GPoly, x: usize, y: usize) -> Vec<GPoly> {
    let params: Vec<usize> = (0..p.nvars()).filter(|&v| v != x && v != y).collect();
    p.coefficients_in(&params).into_iter().map(|(_, c)| c).collect()
}

/// Dense coefficients of a polynomial that uses only variable `v`.
pub fn to_dense(p: &GPoly, v: usize) -> Vec<GaussianRational> {
    let mut out = vec![GaussianRational::zero(); p.degree_in_var(v).unwrap_or(0) as usize + 1];
    for (m, c) in p.terms() {
        debug_assert!(m.degree() == m.exp(v) as u32, "polynomial uses other variables");
        out[m.exp(v) as usize] = c.clone();
    }
    trim(out)
}

fn roots(p: &[GaussianRational], what: &str) -> Result<Vec<GaussianRational>, BasepointError> {
    gaussian_roots(p).map_err(|d| BasepointError::Inconclusive(format!("{what}: factor of degree {d} without Gaussian-rational roots")))
}

/// Common zeros of `polys` (in the variables `x`, `y` only) on the given locus.
pub fn common_zeros(polys: &[GPoly], x: usize, y: usize, locus: Locus, budget: &Budget) -> Result<PointSet, BasepointError> {
    let polys: Vec<&GPoly> = polys.iter().filter(|p| !p.is_zero()).collect();
    if polys.is_empty() {
        return Ok(PointSet::Infinite);
    }
    match locus {
        Locus::XAxisZero => {
            let zero = GaussianRational::zero();
            let mut g: Vec<GaussianRational> = Vec::new();
            for p in polys {
                g = gcd(&g, &to_dense(&p.eval_var(x, &zero), y));
                if g.len() == 1 {
                    return Ok(PointSet::empty());
                }
            }
            if g.is_empty() {
                return Ok(PointSet::Infinite);
            }
            let mut pts: Vec<Point> = roots(&g, "x=0 restriction")?.into_iter().map(|u| Point::new(zero.clone(), u)).collect();
            pts.sort();
            Ok(PointSet::Finite(pts))
        }
        Locus::Plane => {
            // y > x in lex, so the last basis element is univariate in x
            let map: Vec<usize> = (0..polys[0].nvars()).map(|v| if v == y { 0 } else { 1 }).collect();
            let local: Vec<GPoly> = polys.iter().map(|p| p.remap(2, MonomialOrder::Lex, &map)).collect();
            let gb = buchberger(&local, budget)?;
            if gb.is_unit_ideal() {
                return Ok(PointSet::empty());
            }
            if !gb.is_zero_dimensional() {
                return Ok(PointSet::Infinite);
            }
            let last = gb.polys.iter().find(|g| !g.uses_var(0)).expect("zero-dimensional lex basis");
            let mut pts = Vec::new();
            for xr in roots(&to_dense(last, 1), "eliminant in x")? {
                let mut g: Vec<GaussianRational> = Vec::new();
                for b in &gb.polys {
                    g = gcd(&g, &to_dense(&b.eval_var(1, &xr), 0));
                }
                if g.len() > 1 {
                    for yr in roots(&g, "fibre in y")? {
                        pts.push(Point::new(xr.clone(), yr));
                    }
                }
            }
            pts.sort();
            Ok(PointSet::Finite(pts))
        }
    }
}

/// Translates `p` so that `pt` moves to the origin of the (x, y) plane.
pub fn translate(p: &GPoly, x: usize, y: usize, pt: &Point) -> GPoly {
    let n = p.nvars();
    let ord = p.order();
    let mut images: Vec<GPoly> = (0..n).map(|v| Poly::var(n, ord, v)).collect();
    images[x] = images[x].add(&Poly::constant(n, ord, pt.x.clone()));
    images[y] = images[y].add(&Poly::constant(n, ord, pt.y.clone()));
    p.substitute(&images)
}

pub fn roots_of(p: &[GaussianRational]) -> Result<Vec<GaussianRational>, BasepointError> {
    roots(p, "univariate factor")
}
