//! Hatted operators on single polynomials and their composites on polynomial sets.

use rigid_algebra::{buchberger, Budget, GaussianRational, Monomial};

use crate::family::rechart;
use crate::points::{coefficient_system, common_zeros, Locus, PointSet};
use crate::ring::EdgeRing;
use crate::{BasepointError, GPoly};

/// Which of x0, y0 an operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coord {
    X0,
    Y0,
}

impl EdgeRing {
    fn coord(&self, r: Coord) -> usize {
        match r {
            Coord::X0 => self.x0(),
            Coord::Y0 => self.y0(),
        }
    }

    fn identity_images(&self) -> Vec<GPoly> {
        (0..self.nvars()).map(|v| self.var(v)).collect()
    }

    /// Ĥ_r.
    pub fn hat_h(&self, f: &GPoly, r: Coord) -> GPoly {
        rechart(f, self.x0(), self.y0(), self.coord(r))
    }

    /// F̂_r: removes the largest power of r dividing f.
    pub fn hat_f(&self, f: &GPoly, r: Coord) -> GPoly {
        let v = self.coord(r);
        let e = f.monomial_content().exp(v);
        f.div_monomial(&Monomial::var(self.nvars(), v, e)).expect("content divides")
    }

    fn hat_ff(&self, f: &GPoly) -> GPoly {
        self.hat_f(&self.hat_f(f, Coord::X0), Coord::Y0)
    }

    /// M̂_c: y0 → x0·y0 + c.
    pub fn hat_m(&self, f: &GPoly, c: &GPoly) -> GPoly {
        let mut im = self.identity_images();
        im[self.y0()] = self.var(self.x0()).mul(&self.var(self.y0())).add(c);
        f.substitute(&im)
    }

    /// N̂_c: x0 → x0·y0, y0 → y0 + c.
    pub fn hat_n(&self, f: &GPoly, c: &GPoly) -> GPoly {
        let mut im = self.identity_images();
        im[self.x0()] = self.var(self.x0()).mul(&self.var(self.y0()));
        im[self.y0()] = self.var(self.y0()).add(c);
        f.substitute(&im)
    }

    pub fn swap_xy(&self, f: &GPoly) -> GPoly {
        let mut im = self.identity_images();
        im.swap(self.x0(), self.y0());
        f.substitute(&im)
    }

    pub fn h(&self, f: &GPoly, r: Coord) -> GPoly {
        self.hat_ff(&self.hat_h(f, r))
    }

    pub fn m(&self, f: &GPoly, c: &GPoly) -> GPoly {
        self.hat_ff(&self.hat_m(f, c))
    }

    pub fn n(&self, f: &GPoly, c: &GPoly) -> GPoly {
        self.swap_xy(&self.hat_ff(&self.hat_n(f, c)))
    }

    pub fn i_const(&self) -> GPoly {
        self.constant(GaussianRational::i())
    }

    /// x0 → x0·s and l_e → l_e·s for every edge variable.
    pub fn t_with(&self, f: &GPoly, s: &GPoly) -> GPoly {
        let mut im = self.identity_images();
        im[self.x0()] = self.var(self.x0()).mul(s);
        for l in self.ell_vars() {
            im[l] = self.var(l).mul(s);
        }
        f.substitute(&im)
    }

    /// s = x0·∏(y0 − u).
    pub fn s_poly(&self, us: &[GaussianRational]) -> GPoly {
        us.iter().fold(self.var(self.x0()), |s, u| s.mul(&self.var(self.y0()).sub(&self.constant(u.clone()))))
    }

    /// Ĝ: the reduced lex Gröbner basis of ⟨P⟩ ∩ S.
    pub fn hat_g(&self, p: &[GPoly], budget: &Budget) -> Result<Vec<GPoly>, BasepointError> {
        let gb = buchberger(p, budget)?;
        Ok(gb.polys.into_iter().filter(|g| self.in_s(g)).collect())
    }

    pub fn g(&self, p: &[GPoly], budget: &Budget) -> Result<Vec<GPoly>, BasepointError> {
        Ok(self.hat_g(p, budget)?.iter().map(|f| self.hat_ff(f)).collect())
    }

    /// B_t: union over f of the common zeros of the edge-length coefficients of f.
    pub fn b(&self, p: &[GPoly], locus: Locus, budget: &Budget) -> Result<PointSet, BasepointError> {
        let mut out = PointSet::empty();
        for f in p.iter().filter(|f| self.in_s(f)) {
            let cs = coefficient_system(f, self.x0(), self.y0());
            out = out.union(common_zeros(&cs, self.x0(), self.y0(), locus, budget)?);
        }
        Ok(out)
    }

    /// T applied to P with U read from B∘G(P); returns T(P) and s.
    pub fn t(&self, p: &[GPoly], budget: &Budget) -> Result<(Vec<GPoly>, GPoly), BasepointError> {
        let g = self.g(p, budget)?;
        if g.len() != 1 {
            return Err(BasepointError::NotUnique(g.len()));
        }
        let us: Vec<GaussianRational> = match self.b(&g, Locus::XAxisZero, budget)? {
            PointSet::Finite(pts) => pts.into_iter().map(|q| q.y).collect(),
            PointSet::Infinite => return Err(BasepointError::Inconclusive("B∘G(P) is the whole line x0=0".into())),
        };
        let s = self.s_poly(&us);
        Ok((p.iter().map(|f| self.t_with(f, &s)).collect(), s))
    }
}
