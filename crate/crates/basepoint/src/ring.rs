//! Polynomial ring of a calligraph: vertex coordinates and edge lengths under the elimination order.

use std::collections::BTreeMap;

use rigid_algebra::{Field, GaussianRational, MonomialOrder, Poly};
use rigidcount::graph::{edge, Edge, MarkedGraph, Vertex};

use crate::{BasepointError, GPoly};

/// Variables x_v, y_v for v ∈ V = v(G)∖{1,2} and l_e for e ∈ E = e(G)∖{{1,2}}, plus optional
/// named parameters. Index 0 is the largest variable in the lex order; ascending, the order is
/// parameters < l_e (by larger endpoint, then smaller) < x_0 < y_0 < x_3 < y_3 < ….
#[derive(Clone, Debug)]
pub struct EdgeRing {
    names: Vec<String>,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    x: BTreeMap<Vertex, usize>,
    y: BTreeMap<Vertex, usize>,
    ell: BTreeMap<Edge, usize>,
    params: BTreeMap<String, usize>,
}

impl EdgeRing {
    pub fn new(g: &MarkedGraph, params: &[&str]) -> Result<Self, BasepointError> {
        if !g.has_vertex(0) {
            return Err(BasepointError::Input("vertex 0 missing".into()));
        }
        let vertices: Vec<Vertex> = g.vertices().iter().copied().filter(|&v| v != 1 && v != 2).collect();
        let mut edges: Vec<Edge> = g.edges().iter().copied().filter(|&e| e != (1, 2)).collect();
        edges.sort_by_key(|&(a, b)| (a.max(b), a.min(b)));
        let mut ascending: Vec<String> = params.iter().map(|p| p.to_string()).collect();
        ascending.extend(edges.iter().map(|&(a, b)| format!("l{}{}", a.max(b), a.min(b))));
        for v in &vertices {
            ascending.push(format!("x{v}"));
            ascending.push(format!("y{v}"));
        }
        let n = ascending.len();
        let idx = |k: usize| n - 1 - k;
        let params_map = params.iter().enumerate().map(|(k, p)| (p.to_string(), idx(k))).collect();
        let off = params.len();
        let ell = edges.iter().enumerate().map(|(k, &e)| (e, idx(off + k))).collect();
        let off = off + edges.len();
        let x = vertices.iter().enumerate().map(|(k, &v)| (v, idx(off + 2 * k))).collect();
        let y = vertices.iter().enumerate().map(|(k, &v)| (v, idx(off + 2 * k + 1))).collect();
        ascending.reverse();
        Ok(EdgeRing { names: ascending, vertices, edges, x, y, ell, params: params_map })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> Vec<&str> {
        self.names.iter().map(|s| s.as_str()).collect()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn x0(&self) -> usize {
        self.x[&0]
    }

    pub fn y0(&self) -> usize {
        self.y[&0]
    }

    pub fn ell_var(&self, e: Edge) -> Option<usize> {
        self.ell.get(&edge(e.0, e.1)).copied()
    }

    pub fn ell_vars(&self) -> Vec<usize> {
        self.ell.values().copied().collect()
    }

    pub fn param(&self, name: &str) -> Option<usize> {
        self.params.get(name).copied()
    }

    /// Variables of S: x0, y0, the edge lengths and the parameters.
    pub fn s_vars(&self) -> Vec<usize> {
        let mut v = vec![self.x0(), self.y0()];
        v.extend(self.ell.values());
        v.extend(self.params.values());
        v
    }

    pub fn in_s(&self, p: &GPoly) -> bool {
        let s = self.s_vars();
        (0..self.nvars()).filter(|v| !s.contains(v)).all(|v| !p.uses_var(v))
    }

    pub fn var(&self, i: usize) -> GPoly {
        Poly::var(self.nvars(), MonomialOrder::Lex, i)
    }

    pub fn constant(&self, c: GaussianRational) -> GPoly {
        Poly::constant(self.nvars(), MonomialOrder::Lex, c)
    }

    pub fn int(&self, v: i64) -> GPoly {
        self.constant(GaussianRational::from_ints(v, 0))
    }

    pub fn zero(&self) -> GPoly {
        Poly::zero(self.nvars(), MonomialOrder::Lex)
    }

    /// x-coordinate of a vertex; vertices 1 and 2 are pinned at (0,0) and (1,0).
    pub fn xc(&self, v: Vertex) -> GPoly {
        match v {
            1 => self.int(0),
            2 => self.int(1),
            _ => self.var(self.x[&v]),
        }
    }

    pub fn yc(&self, v: Vertex) -> GPoly {
        match v {
            1 | 2 => self.int(0),
            _ => self.var(self.y[&v]),
        }
    }

    /// (x_i − x_j)² + (y_i − y_j)² − l_e².
    pub fn mu(&self, e: Edge) -> GPoly {
        let (i, j) = e;
        let dx = self.xc(i).sub(&self.xc(j));
        let dy = self.yc(i).sub(&self.yc(j));
        let l = self.var(self.ell[&edge(i, j)]);
        dx.mul(&dx).add(&dy.mul(&dy)).sub(&l.mul(&l))
    }

    pub fn mu_all(&self) -> Vec<GPoly> {
        self.edges.iter().map(|&e| self.mu(e)).collect()
    }

    pub fn parse(&self, src: &str) -> Result<GPoly, BasepointError> {
        Ok(Poly::parse(src, &self.names(), MonomialOrder::Lex)?)
    }

    pub fn fmt(&self, p: &GPoly) -> String {
        p.fmt_with(&self.names())
    }
}

pub fn is_i(z: &GaussianRational) -> bool {
    *z == GaussianRational::i()
}

pub fn gi(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_ints(re, im)
}

pub fn gzero() -> GaussianRational {
    <GaussianRational as Field>::zero()
}
