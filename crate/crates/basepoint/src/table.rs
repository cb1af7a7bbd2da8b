//! Symbolic verification of the operator table on single edge polynomials.

use rigid_algebra::GaussianRational;
use rigidcount::graph::MarkedGraph;

use crate::ops::Coord;
use crate::ring::EdgeRing;
use crate::{BasepointError, GPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Contains0,
    Neither,
    Contains1,
    Contains2,
}

impl EdgeKind {
    pub const ALL: [EdgeKind; 4] = [EdgeKind::Contains0, EdgeKind::Neither, EdgeKind::Contains1, EdgeKind::Contains2];

    /// Edge {i, j} of the given kind in a graph with free vertices 3 and 4.
    fn edge(self) -> (u32, u32) {
        match self {
            EdgeKind::Contains0 => (0, 3),
            EdgeKind::Neither => (3, 4),
            EdgeKind::Contains1 => (1, 3),
            EdgeKind::Contains2 => (2, 3),
        }
    }
}

/// Value of c used for rows 6 and 7: a free symbol, or a constant.
#[derive(Clone, Debug)]
pub enum CValue {
    Symbol,
    Const(GaussianRational),
}

pub struct Table {
    ring: EdgeRing,
}

const TABLE_EDGES: [(u32, u32); 6] = [(0, 3), (3, 4), (1, 3), (2, 3), (1, 2), (0, 4)];

impl Table {
    pub fn new() -> Self {
        let g = MarkedGraph::from_edges(TABLE_EDGES).expect("valid graph");
        Table { ring: EdgeRing::new(&g, &["c", "s"]).expect("ring") }
    }

    pub fn ring(&self) -> &EdgeRing {
        &self.ring
    }

    fn c_poly(&self, c: &CValue) -> GPoly {
        match c {
            CValue::Symbol => self.ring.var(self.ring.param("c").unwrap()),
            CValue::Const(z) => self.ring.constant(z.clone()),
        }
    }

    /// Applies the operator composition of a row (1 = μ, 2 = H, 3 = H_y0, 4 = T∘M∘H,
    /// 5 = T∘N∘H, 6 = T∘M_c∘M∘H, 7 = T∘N_c∘M∘H) to μ(e), with s a free symbol.
    pub fn apply(&self, kind: EdgeKind, row: u8, c: &CValue) -> Result<GPoly, BasepointError> {
        let r = &self.ring;
        let (a, b) = kind.edge();
        let mu = r.mu((a, b));
        let s = r.var(r.param("s").unwrap());
        let i = r.i_const();
        let h = r.h(&mu, Coord::X0);
        Ok(match row {
            1 => mu,
            2 => h,
            3 => r.h(&mu, Coord::Y0),
            4 => r.t_with(&r.m(&h, &i), &s),
            5 => r.t_with(&r.n(&h, &i), &s),
            6 => r.t_with(&r.m(&r.m(&h, &i), &self.c_poly(c)), &s),
            7 => r.t_with(&r.n(&r.m(&h, &i), &self.c_poly(c)), &s),
            _ => return Err(BasepointError::Input(format!("row {row} outside 1..7"))),
        })
    }

    /// The tabulated polynomial for a row and edge kind, written with i = 3 and j = 4.
    pub fn expected(&self, kind: EdgeKind, row: u8, c: &CValue) -> Result<GPoly, BasepointError> {
        let col = match kind {
            EdgeKind::Contains0 => match row {
                1 => "(x0-x3)^2+(y0-y3)^2-l30^2",
                2 => "(1-x3*x0)^2+(y0-y3*x0)^2-l30^2*x0^2",
                3 => "(x0-x3*y0)^2+(1-y3*y0)^2-l30^2*y0^2",
                4 => "(x3-i*y0+i*y3)*(-2+x0*s*(x3+i*y0-i*y3))-x0*l30^2*s^3",
                5 => "(1+i*x3*y0-y3*y0)*(2*i+x0*s*(1-i*x3*y0-y3*y0))-y0^2*x0*l30^2*s^3",
                6 => "2*i*(c+i*x3-y3)+x0*s*(c^2+x3^2+2*i*y0-2*c*y3+y3^2+x0*y0*s*(2*c-2*y3+y0*x0*s))-x0*l30^2*s^3",
                7 => "(c+i*x3+x0*s-y3)*(2*i+y0*x0*s*(c-i*x3+x0*s-y3))-y0*x0*l30^2*s^3",
                _ => return Err(BasepointError::Input(format!("row {row} outside 1..7"))),
            },
            EdgeKind::Neither => if row <= 3 { "(x3-x4)^2+(y3-y4)^2-l43^2" } else { "(x3-x4)^2+(y3-y4)^2-l43^2*s^2" },
            EdgeKind::Contains1 => if row <= 3 { "x3^2+y3^2-l31^2" } else { "x3^2+y3^2-l31^2*s^2" },
            EdgeKind::Contains2 => if row <= 3 { "(x3-1)^2+y3^2-l32^2" } else { "(x3-1)^2+y3^2-l32^2*s^2" },
        };
        let p = self.ring.parse(col)?;
        Ok(match c {
            CValue::Const(z) => p.eval_var(self.ring.param("c").unwrap(), z),
            CValue::Symbol => p,
        })
    }
}

impl Default for Table {
    fn default() -> Self {
        Table::new()
    }
}

/// Checks one row of the table for one edge kind; on mismatch returns the difference.
pub fn check_table1(kind: EdgeKind, row: u8, c: &CValue) -> Result<Result<(), String>, BasepointError> {
    let t = Table::new();
    let got = t.apply(kind, row, c)?;
    let want = t.expected(kind, row, c)?;
    let diff = got.sub(&want);
    Ok(if diff.is_zero() { Ok(()) } else { Err(t.ring().fmt(&diff)) })
}
