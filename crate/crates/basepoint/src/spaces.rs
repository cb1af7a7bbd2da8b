//! Decomposition of V(T∘M∘H∘μ(E) ∪ {x0}) into linear spaces and their projections to (x0, y0).

use rigid_algebra::linear::rref;
use rigid_algebra::{Field, GaussianRational, Monomial, Poly};
use rigidcount::graph::MarkedGraph;
use serde_json::{json, Value};

use crate::ops::Coord;
use crate::ring::EdgeRing;
use crate::{BasepointError, GPoly};

/// Projection of one linear piece onto the (x0, y0)-plane inside V(x0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Projection {
    Line,
    Point(GaussianRational),
}

/// Square root of a polynomial of degree at most 2 that is the square of a linear form.
fn linear_sqrt(p: &GPoly) -> Option<GPoly> {
    let n = p.nvars();
    let ord = p.order();
    let mut vars: Vec<usize> = (0..n).filter(|&v| p.uses_var(v)).collect();
    vars.sort();
    let mut root = Poly::zero(n, ord);
    let mut anchor: Option<(usize, GaussianRational)> = None;
    for &v in &vars {
        let sq = p.coeff(&Monomial::var(n, v, 2));
        let Some(d) = sq.sqrt() else { return None };
        if d.is_zero() {
            continue;
        }
        let d = match &anchor {
            None => {
                anchor = Some((v, d.clone()));
                d
            }
            Some((a, da)) => {
                let cross = p.coeff(&Monomial::var(n, *a, 1).mul(&Monomial::var(n, v, 1)));
                if cross == da.mul(&d).add(&da.mul(&d)) { d } else { d.neg() }
            }
        };
        root = root.add(&Poly::var(n, ord, v).scale(&d));
    }
    let Some((a, da)) = anchor else {
        let c = p.constant_term().sqrt()?;
        return Some(Poly::constant(n, ord, c));
    };
    let lin = p.coeff(&Monomial::var(n, a, 1));
    let c0 = lin.div(&da.add(&da));
    let root = root.add(&Poly::constant(n, ord, c0));
    (root.mul(&root) == *p).then_some(root)
}

/// Linear factors of a polynomial of degree at most 2, if it splits.
pub fn linear_factors(p: &GPoly) -> Option<Vec<GPoly>> {
    match p.total_degree() {
        None => Some(vec![]),
        Some(0) => Some(vec![p.clone()]),
        Some(1) => Some(vec![p.clone()]),
        Some(2) => {
            let n = p.nvars();
            let ord = p.order();
            let v = (0..n).filter(|&v| p.uses_var(v)).max_by_key(|&v| (p.degree_in_var(v), std::cmp::Reverse(v)))?;
            let parts: Vec<(u32, GPoly)> = (0..=2u32)
                .map(|e| {
                    let ts: Vec<_> = p.terms().iter().filter(|(m, _)| m.exp(v) as u32 == e).map(|(m, c)| (m.with_exp(v, 0), c.clone())).collect();
                    (e, Poly::from_terms(n, ord, ts))
                })
                .collect();
            let (a, b, c) = (&parts[2].1, &parts[1].1, &parts[0].1);
            let x = Poly::var(n, ord, v);
            if a.is_zero() {
                if b.is_constant() {
                    return None;
                }
                // p = b·x + c with b linear free of x; the factor free of x divides both
                let q = p.div_exact(b)?;
                return Some(vec![b.clone(), q]);
            }
            let a = a.constant_term();
            let four_a = Poly::constant(n, ord, a.mul(&GaussianRational::from_i64(4)));
            let disc = b.mul(b).sub(&four_a.mul(c));
            let r = linear_sqrt(&disc)?;
            let two_a = Poly::constant(n, ord, a.add(&a));
            let f1 = two_a.mul(&x).add(b).sub(&r);
            let f2 = two_a.mul(&x).add(b).add(&r);
            (f1.mul(&f2).scale(&a.mul(&GaussianRational::from_i64(4)).inv()) == *p).then(|| vec![f1, f2])
        }
        Some(_) => None,
    }
}

/// Pieces of V(T∘M∘H∘μ(E) ∪ {x0}). At x0 = 0 the substitution of T sends x0 and every edge
/// length to zero, so the set U of T is not needed. Returns the projection of every nonempty piece.
pub fn vertical_pieces(g: &MarkedGraph) -> Result<Vec<Projection>, BasepointError> {
    let ring = EdgeRing::new(g, &[])?;
    let zero = GaussianRational::zero();
    let i = ring.i_const();
    let mut polys = Vec::new();
    for f in ring.mu_all() {
        let mut p = ring.m(&ring.h(&f, Coord::X0), &i).eval_var(ring.x0(), &zero);
        for l in ring.ell_vars() {
            p = p.eval_var(l, &zero);
        }
        polys.push(p);
    }
    let mut choices: Vec<Vec<GPoly>> = Vec::new();
    for p in &polys {
        let fs = linear_factors(p).ok_or_else(|| BasepointError::Inconclusive(format!("{} does not split", ring.fmt(p))))?;
        let fs: Vec<GPoly> = fs.into_iter().filter(|f| !f.is_constant()).collect();
        if fs.is_empty() && !p.is_zero() {
            return Ok(vec![]);
        }
        if !fs.is_empty() {
            choices.push(fs);
        }
    }
    // columns: every variable except x0 and the edge lengths, y0 last, then the constant
    let mut cols: Vec<usize> = (0..ring.nvars()).filter(|&v| v != ring.x0() && v != ring.y0() && !ring.ell_vars().contains(&v)).collect();
    cols.push(ring.y0());
    let mut out = Vec::new();
    let total: usize = choices.iter().map(|c| c.len()).product();
    for mut k in 0..total {
        let mut rows = Vec::new();
        for c in &choices {
            let f = &c[k % c.len()];
            k /= c.len();
            let mut row: Vec<GaussianRational> = cols.iter().map(|&v| f.coeff(&Monomial::var(ring.nvars(), v, 1))).collect();
            row.push(f.constant_term().neg());
            rows.push(row);
        }
        let red = rref(&rows);
        let width = cols.len();
        if red.iter().any(|r| r[..width].iter().all(|c| c.is_zero()) && !r[width].is_zero()) {
            continue;
        }
        let y = width - 1;
        let fixed = red.iter().find(|r| r[..y].iter().all(|c| c.is_zero()) && !r[y].is_zero());
        out.push(match fixed {
            Some(r) => Projection::Point(r[width].div(&r[y])),
            None => Projection::Line,
        });
    }
    Ok(out)
}

/// Every piece projects to V(x0), (0, 0) or (0, −i).
pub fn check_vertical_pieces(g: &MarkedGraph) -> Result<(bool, Value), BasepointError> {
    let pieces = vertical_pieces(g)?;
    let ok = pieces.iter().all(|p| match p {
        Projection::Line => true,
        Projection::Point(u) => u.is_zero() || *u == GaussianRational::i().neg(),
    });
    let shown: Vec<Value> = pieces
        .iter()
        .map(|p| match p {
            Projection::Line => json!("V(x0)"),
            Projection::Point(u) => json!(format!("(0, {u})")),
        })
        .collect();
    Ok((ok, json!({ "pieces": shown, "ok": ok })))
}
