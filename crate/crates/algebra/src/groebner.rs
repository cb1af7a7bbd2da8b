use std::cmp::Ordering;

use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Poly};
use crate::AlgebraError;

/// Work limits for a Gröbner computation.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Maximum number of elementary reduction steps.
    pub max_reductions: u64,
    /// Maximum number of polynomials ever added to the basis.
    pub max_basis: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_reductions: 50_000_000, max_basis: 20_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<F> {
    pub polys: Vec<Poly<F>>,
    pub order: MonomialOrder,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Work<'a, F> {
    basis: Vec<Poly<F>>,
    sugar: Vec<u32>,
    redundant: Vec<bool>,
    pairs: Vec<Pair>,
    budget: &'a Budget,
    reductions: u64,
}

impl<'a, F: Field> Work<'a, F> {
    fn charge(&mut self) -> Result<(), AlgebraError> {
        self.reductions += 1;
        if self.reductions > self.budget.max_reductions {
            return Err(AlgebraError::Budget(format!("more than {} reduction steps", self.budget.max_reductions)));
        }
        Ok(())
    }

    /// Full normal form of `f` with respect to every stored polynomial.
    fn normal_form(&mut self, f: Poly<F>) -> Result<Poly<F>, AlgebraError> {
        let nvars = f.nvars();
        let order = f.order();
        let mut p = f;
        let mut rem: Vec<(Monomial, F)> = Vec::new();
        while let Some((lm, lc)) = p.terms().first().cloned() {
            let reducer = self.basis.iter().find(|g| g.leading_monomial().unwrap().divides(&lm));
            match reducer {
                Some(g) => {
                    let q = g.leading_monomial().unwrap().quotient_of(&lm).unwrap();
                    let c = lc.div(g.leading_coeff().unwrap());
                    p = p.sub_scaled_term_mul(&c, &q, g);
                    self.charge()?;
                }
                None => {
                    rem.push((lm.clone(), lc));
                    let lead = Poly::term(nvars, order, lm, p.leading_coeff().unwrap().clone());
                    p = p.sub(&lead);
                }
            }
        }
        Ok(Poly::from_terms(nvars, order, rem))
    }

    fn lm(&self, i: usize) -> &Monomial {
        self.basis[i].leading_monomial().unwrap()
    }

    /// Gebauer–Möller installation of a new basis element.
    fn update(&mut self, h: Poly<F>, sugar: u32) -> Result<(), AlgebraError> {
        if self.basis.len() >= self.budget.max_basis {
            return Err(AlgebraError::Budget(format!("more than {} basis elements", self.budget.max_basis)));
        }
        let hi = self.basis.len();
        self.basis.push(h);
        self.sugar.push(sugar);
        self.redundant.push(false);
        let lh = self.lm(hi).clone();

        let mut cands: Vec<Pair> = Vec::new();
        for g in 0..hi {
            if self.redundant[g] {
                continue;
            }
            let lcm = lh.lcm(self.lm(g));
            let s = pair_sugar(&lcm, &lh, sugar, self.lm(g), self.sugar[g]);
            cands.push(Pair { i: g, j: hi, lcm, sugar: s });
        }
        // criterion M and F on the new pairs
        let mut kept: Vec<Pair> = Vec::new();
        for (k, p) in cands.iter().enumerate() {
            let coprime = lh.is_coprime(self.lm(p.i));
            let dominated = cands
                .iter()
                .enumerate()
                .any(|(l, q)| l != k && q.lcm.divides(&p.lcm) && (q.lcm != p.lcm || l < k))
                || kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p.clone());
            }
        }
        // product criterion
        let kept: Vec<Pair> = kept.into_iter().filter(|p| !lh.is_coprime(self.lm(p.i))).collect();
        // criterion B on the old pairs
        let mut old = std::mem::take(&mut self.pairs);
        old.retain(|p| {
            let drop = lh.divides(&p.lcm)
                && lh.lcm(self.lm(p.i)) != p.lcm
                && lh.lcm(self.lm(p.j)) != p.lcm;
            !drop
        });
        old.extend(kept);
        self.pairs = old;
        for g in 0..hi {
            if !self.redundant[g] && lh.divides(self.lm(g)) {
                self.redundant[g] = true;
            }
        }
        Ok(())
    }

    fn pop_pair(&mut self, order: MonomialOrder) -> Option<Pair> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }
}

fn pair_sugar(lcm: &Monomial, a: &Monomial, sa: u32, b: &Monomial, sb: u32) -> u32 {
    let da = sa + lcm.degree() - a.degree();
    let db = sb + lcm.degree() - b.degree();
    da.max(db)
}

fn s_poly<F: Field>(f: &Poly<F>, g: &Poly<F>, lcm: &Monomial) -> Poly<F> {
    let mf = f.leading_monomial().unwrap().quotient_of(lcm).unwrap();
    let mg = g.leading_monomial().unwrap().quotient_of(lcm).unwrap();
    let a = f.mul_term(&mf, &f.leading_coeff().unwrap().inv());
    let b = g.mul_term(&mg, &g.leading_coeff().unwrap().inv());
    a.sub(&b)
}

/// Reduced Gröbner basis of the ideal generated by `gens` under their common order.
///
/// Pairs are selected by sugar degree, then by lcm, then by index, so the result and the
/// amount of work are deterministic for a fixed input order.
pub fn buchberger<F: Field>(gens: &[Poly<F>], budget: &Budget) -> Result<GroebnerBasis<F>, AlgebraError> {
    let first = gens.first().ok_or(AlgebraError::EmptyInput)?;
    let (nvars, order) = (first.nvars(), first.order());
    for g in gens {
        if g.nvars() != nvars || g.order() != order {
            return Err(AlgebraError::RingMismatch);
        }
    }
    let mut work = Work {
        basis: Vec::new(),
        sugar: Vec::new(),
        redundant: Vec::new(),
        pairs: Vec::new(),
        budget,
        reductions: 0,
    };
    for g in gens {
        let h = work.normal_form(g.clone())?;
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(GroebnerBasis { polys: vec![Poly::one(nvars, order)], order });
        }
        let sugar = g.total_degree().unwrap_or(0);
        work.update(h.monic(), sugar)?;
    }
    while let Some(p) = work.pop_pair(order) {
        let s = s_poly(&work.basis[p.i], &work.basis[p.j], &p.lcm);
        let h = work.normal_form(s)?;
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(GroebnerBasis { polys: vec![Poly::one(nvars, order)], order });
        }
        work.update(h.monic(), p.sugar)?;
    }
    let mut minimal: Vec<Poly<F>> = Vec::new();
    for (k, g) in work.basis.iter().enumerate() {
        if work.redundant[k] {
            continue;
        }
        let lm = g.leading_monomial().unwrap();
        let covered = work.basis.iter().enumerate().any(|(l, o)| {
            l != k && !work.redundant[l] && o.leading_monomial().unwrap().divides(lm)
                && (o.leading_monomial().unwrap() != lm || l < k)
        });
        if !covered {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Poly<F>> = minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, p)| p.clone()).collect();
        let mut w = Work {
            basis: others,
            sugar: Vec::new(),
            redundant: Vec::new(),
            pairs: Vec::new(),
            budget,
            reductions: 0,
        };
        let lead = Poly::term(nvars, order, minimal[k].leading_monomial().unwrap().clone(), minimal[k].leading_coeff().unwrap().clone());
        let tail = w.normal_form(minimal[k].sub(&lead))?;
        reduced.push(lead.add(&tail).monic());
    }
    reduced.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    Ok(GroebnerBasis { polys: reduced, order })
}

impl<F: Field> GroebnerBasis<F> {
    pub fn is_unit_ideal(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant() && !self.polys[0].is_zero()
    }

    pub fn nvars(&self) -> usize {
        self.polys[0].nvars()
    }

    /// Normal form of `f` modulo the basis.
    pub fn reduce(&self, f: &Poly<F>) -> Poly<F> {
        let budget = Budget { max_reductions: u64::MAX, max_basis: usize::MAX };
        let mut w = Work {
            basis: self.polys.clone(),
            sugar: Vec::new(),
            redundant: Vec::new(),
            pairs: Vec::new(),
            budget: &budget,
            reductions: 0,
        };
        w.normal_form(f.clone()).expect("unbounded budget")
    }

    /// True when every variable has a pure power among the leading monomials.
    pub fn is_zero_dimensional(&self) -> bool {
        if self.is_unit_ideal() {
            return true;
        }
        let n = self.nvars();
        (0..n).all(|v| {
            self.polys.iter().any(|g| {
                let m = g.leading_monomial().unwrap();
                m.exp(v) > 0 && m.degree() == m.exp(v) as u32
            })
        })
    }

    /// Monomials outside the leading-term ideal, or `None` if there are infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        if self.is_unit_ideal() {
            return Some(Vec::new());
        }
        if !self.is_zero_dimensional() {
            return None;
        }
        let n = self.nvars();
        let leads: Vec<&Monomial> = self.polys.iter().map(|g| g.leading_monomial().unwrap()).collect();
        let mut out = Vec::new();
        let mut stack = vec![(Monomial::one(n), 0usize)];
        while let Some((m, first)) = stack.pop() {
            out.push(m.clone());
            for v in first..n {
                let child = m.mul(&Monomial::var(n, v, 1));
                if !leads.iter().any(|l| l.divides(&child)) {
                    stack.push((child, v));
                }
            }
        }
        out.sort_by(|a, b| self.order.cmp(a, b));
        Some(out)
    }

    /// Dimension of the quotient ring as a vector space, if finite.
    pub fn quotient_dimension(&self) -> Option<usize> {
        self.standard_monomials().map(|v| v.len())
    }

    /// Every S-polynomial of the basis reduces to zero.
    pub fn verify(&self) -> bool {
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let lcm = self.polys[i].leading_monomial().unwrap().lcm(self.polys[j].leading_monomial().unwrap());
                let s = s_poly(&self.polys[i], &self.polys[j], &lcm);
                if !self.reduce(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Minimal polynomial (low-to-high coefficients, monic) of multiplication by `form` on the
    /// quotient ring, computed from the Krylov sequence of 1.
    pub fn minimal_polynomial(&self, form: &Poly<F>) -> Option<Vec<F>> {
        let basis = self.standard_monomials()?;
        let dim = basis.len();
        let order = self.order;
        let index = |m: &Monomial| basis.binary_search_by(|b| order.cmp(b, m)).ok();
        let to_vec = |p: &Poly<F>| -> Vec<F> {
            let mut v = vec![F::zero(); dim];
            for (m, c) in p.terms() {
                v[index(m).expect("normal form uses standard monomials")] = c.clone();
            }
            v
        };
        let nvars = form.nvars();
        // columns of the multiplication matrix
        let cols: Vec<Vec<F>> = basis
            .iter()
            .map(|m| to_vec(&self.reduce(&form.mul_term(m, &F::one()))))
            .collect();
        let apply = |v: &[F]| -> Vec<F> {
            let mut out = vec![F::zero(); dim];
            for (k, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (r, x) in cols[k].iter().enumerate() {
                    if !x.is_zero() {
                        out[r] = out[r].add(&x.mul(c));
                    }
                }
            }
            out
        };
        let one = Poly::one(nvars, order);
        let mut krylov: Vec<Vec<F>> = vec![to_vec(&self.reduce(&one))];
        // incremental echelon form: rows reduced, each with the combination of Krylov vectors
        let mut echelon: Vec<(usize, Vec<F>, Vec<F>)> = Vec::new();
        loop {
            let k = krylov.len() - 1;
            let mut v = krylov[k].clone();
            let mut comb = vec![F::zero(); k + 1];
            comb[k] = F::one();
            for (piv, row, rc) in &echelon {
                if !v[*piv].is_zero() {
                    let f = v[*piv].clone();
                    for t in 0..dim {
                        v[t] = v[t].sub(&row[t].mul(&f));
                    }
                    for (t, x) in rc.iter().enumerate() {
                        comb[t] = comb[t].sub(&x.mul(&f));
                    }
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                None => return Some(comb),
                Some(piv) => {
                    let inv = v[piv].inv();
                    let row: Vec<F> = v.iter().map(|x| x.mul(&inv)).collect();
                    let rc: Vec<F> = comb.iter().map(|x| x.mul(&inv)).collect();
                    echelon.push((piv, row, rc));
                    let next = apply(&krylov[k]);
                    krylov.push(next);
                }
            }
        }
    }
}

/// Sorts polynomials by leading monomial; handy for comparing bases.
pub fn sort_by_leading<F: Field>(polys: &mut [Poly<F>]) {
    polys.sort_by(|a, b| match (a.leading_monomial(), b.leading_monomial()) {
        (Some(x), Some(y)) => a.order().cmp(x, y),
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
    });
}
