//! F4 over word-sized prime fields, specialised to graded reverse lexicographic order.
//!
//! Monomials in at most [`MAX_VARS`] variables are packed into a `u128` so that integer
//! comparison is the grevlex comparison: the total degree sits in the top 16 bits and the
//! exponent of variable `i` is stored complemented (`63 - e`) in the 7-bit slot `i`.

use std::collections::HashMap;

use crate::field::Rational;
use crate::groebner::Budget;
use crate::poly::{Monomial, MonomialOrder, Poly};
use crate::AlgebraError;

pub const MAX_VARS: usize = 16;
pub const MAX_EXP: u32 = 63;

/// Word-sized primes used by the modular counting oracle.
pub const PRIME_31A: u64 = 2_147_483_647;
pub const PRIME_31B: u64 = 2_147_483_629;

const SLOT: u32 = 7;
const DEG_SHIFT: u32 = 112;

const fn spread(v: u128) -> u128 {
    let mut acc = 0u128;
    let mut i = 0;
    while i < MAX_VARS {
        acc |= v << (SLOT as usize * i);
        i += 1;
    }
    acc
}

const C63: u128 = spread(63);
const GUARD: u128 = spread(64);
const LOW: u128 = (1u128 << DEG_SHIFT) - 1;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PackedMonomial(u128);

impl PackedMonomial {
    pub const ONE: PackedMonomial = PackedMonomial(C63);

    pub fn from_exps(exps: &[u32]) -> Option<Self> {
        if exps.len() > MAX_VARS {
            return None;
        }
        let mut key = C63;
        let mut deg = 0u128;
        for (i, &e) in exps.iter().enumerate() {
            if e > MAX_EXP {
                return None;
            }
            key -= (e as u128) << (SLOT as usize * i);
            deg += e as u128;
        }
        Some(PackedMonomial(key | deg << DEG_SHIFT))
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0u32; MAX_VARS];
        e[i] = 1;
        Self::from_exps(&e).unwrap()
    }

    pub fn exp(self, i: usize) -> u32 {
        63 - ((self.0 >> (SLOT as usize * i)) & 127) as u32
    }

    pub fn exps(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exp(i)).collect()
    }

    pub fn degree(self) -> u32 {
        (self.0 >> DEG_SHIFT) as u32
    }

    /// Product; exponents must stay at most 63.
    pub fn mul(self, o: Self) -> Self {
        debug_assert!((0..MAX_VARS).all(|i| self.exp(i) + o.exp(i) <= MAX_EXP));
        PackedMonomial(self.0 + o.0 - C63)
    }

    pub fn divides(self, o: Self) -> bool {
        (((self.0 & LOW) | GUARD) - (o.0 & LOW)) & GUARD == GUARD
    }

    /// `o / self`, assuming divisibility.
    pub fn quotient_of(self, o: Self) -> Self {
        PackedMonomial(o.0 + C63 - self.0)
    }

    pub fn lcm(self, o: Self) -> Self {
        let mut e = [0u32; MAX_VARS];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.exp(i).max(o.exp(i));
        }
        Self::from_exps(&e).expect("lcm exponents stay bounded")
    }

    pub fn is_coprime(self, o: Self) -> bool {
        (0..MAX_VARS).all(|i| self.exp(i) == 0 || o.exp(i) == 0)
    }
}

fn mul_mod<const P: u64>(a: u64, b: u64) -> u64 {
    a * b % P
}

fn pow_mod<const P: u64>(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod::<P>(r, a);
        }
        a = mul_mod::<P>(a, a);
        e >>= 1;
    }
    r
}

fn inv_mod<const P: u64>(a: u64) -> u64 {
    assert!(a % P != 0, "inverse of zero");
    pow_mod::<P>(a, P - 2)
}

/// Image of a rational in Z/P, or `None` if P divides the denominator.
pub fn rational_mod<const P: u64>(q: &Rational) -> Option<u64> {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    let p = BigInt::from(P);
    let num = ((q.numer() % &p) + &p) % &p;
    let den = ((q.denom() % &p) + &p) % &p;
    let den = den.to_u64()?;
    if den == 0 {
        return None;
    }
    Some(mul_mod::<P>(num.to_u64()?, inv_mod::<P>(den)))
}

/// Polynomial over Z/P with terms sorted by decreasing grevlex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPoly<const P: u64> {
    pub terms: Vec<(PackedMonomial, u64)>,
}

impl<const P: u64> ModPoly<P> {
    pub fn from_terms(mut terms: Vec<(PackedMonomial, u64)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(PackedMonomial, u64)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % P;
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = (*lc + c) % P,
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        ModPoly { terms: out }
    }

    /// Reduces a rational grevlex polynomial modulo P.
    pub fn from_poly(f: &Poly<Rational>) -> Option<Self> {
        if f.nvars() > MAX_VARS || f.order() != MonomialOrder::GrevLex {
            return None;
        }
        let mut terms = Vec::with_capacity(f.len());
        for (m, c) in f.terms() {
            let e: Vec<u32> = m.exps().iter().map(|&x| x as u32).collect();
            terms.push((PackedMonomial::from_exps(&e)?, rational_mod::<P>(c)?));
        }
        Some(Self::from_terms(terms))
    }

    pub fn to_poly_exps(&self, nvars: usize) -> Vec<(Monomial, u64)> {
        self.terms
            .iter()
            .map(|&(m, c)| {
                let e: Vec<crate::poly::Exp> = m.exps(nvars).iter().map(|&x| x as crate::poly::Exp).collect();
                (Monomial::from_exps(&e), c)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<PackedMonomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn monic(mut self) -> Self {
        if let Some(&(_, c)) = self.terms.first() {
            let inv = inv_mod::<P>(c);
            for t in &mut self.terms {
                t.1 = mul_mod::<P>(t.1, inv);
            }
        }
        self
    }
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: PackedMonomial,
}

/// Row of a Macaulay matrix before column numbering: `mult * basis[poly]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct RowSpec {
    mult: PackedMonomial,
    poly: usize,
}

struct State<'a, const P: u64> {
    basis: Vec<ModPoly<P>>,
    redundant: Vec<bool>,
    pairs: Vec<Pair>,
    budget: &'a Budget,
    work: u64,
}

impl<'a, const P: u64> State<'a, P> {
    fn lm(&self, i: usize) -> PackedMonomial {
        self.basis[i].terms[0].0
    }

    fn charge(&mut self, amount: u64) -> Result<(), AlgebraError> {
        self.work += amount;
        if self.work > self.budget.max_reductions.saturating_mul(64) {
            return Err(AlgebraError::Budget(format!("F4 exceeded {} row operations", self.budget.max_reductions.saturating_mul(64))));
        }
        Ok(())
    }

    /// Gebauer–Möller installation.
    fn update(&mut self, h: ModPoly<P>) -> Result<(), AlgebraError> {
        if self.basis.len() >= self.budget.max_basis {
            return Err(AlgebraError::Budget(format!("more than {} basis elements", self.budget.max_basis)));
        }
        let hi = self.basis.len();
        self.basis.push(h);
        self.redundant.push(false);
        let lh = self.lm(hi);
        let cands: Vec<Pair> = (0..hi)
            .filter(|&g| !self.redundant[g])
            .map(|g| Pair { i: g, j: hi, lcm: lh.lcm(self.lm(g)) })
            .collect();
        let mut kept: Vec<Pair> = Vec::new();
        for (k, p) in cands.iter().enumerate() {
            let coprime = lh.is_coprime(self.lm(p.i));
            let dominated = cands
                .iter()
                .enumerate()
                .any(|(l, q)| l != k && q.lcm.divides(p.lcm) && (q.lcm != p.lcm || l < k))
                || kept.iter().any(|q| q.lcm.divides(p.lcm));
            if coprime || !dominated {
                kept.push(*p);
            }
        }
        kept.retain(|p| !lh.is_coprime(self.lm(p.i)));
        let mut old = std::mem::take(&mut self.pairs);
        old.retain(|p| !(lh.divides(p.lcm) && lh.lcm(self.lm(p.i)) != p.lcm && lh.lcm(self.lm(p.j)) != p.lcm));
        old.extend(kept);
        self.pairs = old;
        for g in 0..hi {
            if !self.redundant[g] && lh.divides(self.lm(g)) {
                self.redundant[g] = true;
            }
        }
        Ok(())
    }

    fn find_reducer(&self, m: PackedMonomial) -> Option<usize> {
        (0..self.basis.len()).find(|&g| !self.redundant[g] && self.lm(g).divides(m))
    }
}

/// A sparse row: strictly increasing column indices with nonzero coefficients.
type Row = Vec<(u32, u64)>;

/// Numbers the monomials of the given row specs (plus reducers found by symbolic
/// preprocessing) and returns (reducer rows, rows to reduce, column monomials).
fn build_matrix<const P: u64>(
    st: &State<'_, P>,
    pivots_in: Vec<RowSpec>,
    todo_in: Vec<RowSpec>,
) -> (Vec<Row>, Vec<Row>, Vec<PackedMonomial>) {
    let mut known: HashMap<PackedMonomial, bool> = HashMap::new();
    let mut queue: Vec<PackedMonomial> = Vec::new();
    let mut reducers: Vec<RowSpec> = pivots_in;
    for r in &reducers {
        known.insert(r.mult.mul(st.lm(r.poly)), true);
    }
    let push_monos = |spec: &RowSpec, known: &mut HashMap<PackedMonomial, bool>, queue: &mut Vec<PackedMonomial>| {
        for &(m, _) in &st.basis[spec.poly].terms {
            let mm = spec.mult.mul(m);
            known.entry(mm).or_insert_with(|| {
                queue.push(mm);
                false
            });
        }
    };
    for r in reducers.clone().iter().chain(todo_in.iter()) {
        push_monos(r, &mut known, &mut queue);
    }
    while let Some(m) = queue.pop() {
        if known[&m] {
            continue;
        }
        if let Some(g) = st.find_reducer(m) {
            let spec = RowSpec { mult: st.lm(g).quotient_of(m), poly: g };
            known.insert(m, true);
            push_monos(&spec, &mut known, &mut queue);
            reducers.push(spec);
        }
    }
    let mut cols: Vec<PackedMonomial> = known.keys().copied().collect();
    cols.sort_unstable_by(|a, b| b.cmp(a));
    let index: HashMap<PackedMonomial, u32> = cols.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
    let to_row = |spec: &RowSpec| -> Row {
        st.basis[spec.poly].terms.iter().map(|&(m, c)| (index[&spec.mult.mul(m)], c)).collect()
    };
    (reducers.iter().map(to_row).collect(), todo_in.iter().map(to_row).collect(), cols)
}

/// Reduces `todo` rows against pivot rows (distinct leading columns) and among themselves.
/// Returns the nonzero reduced rows, each monic, with pairwise distinct leading columns.
fn reduce_rows<const P: u64>(
    ncols: usize,
    pivot_rows: Vec<Row>,
    todo: Vec<Row>,
    work: &mut u64,
) -> Vec<Row> {
    let mut piv: Vec<Option<usize>> = vec![None; ncols];
    let mut store: Vec<Row> = Vec::with_capacity(pivot_rows.len() + todo.len());
    for r in pivot_rows {
        let lead = r[0].0 as usize;
        if piv[lead].is_none() {
            piv[lead] = Some(store.len());
            store.push(r);
        }
    }
    let mut acc = vec![0u64; ncols];
    let mut out_idx = Vec::new();
    for r in todo {
        let start = r[0].0 as usize;
        for &(c, v) in &r {
            acc[c as usize] = v;
        }
        let mut lead: Option<usize> = None;
        for col in start..ncols {
            let v = acc[col];
            if v == 0 {
                continue;
            }
            match piv[col] {
                Some(pi) => {
                    let prow = &store[pi];
                    let f = P - v;
                    *work += prow.len() as u64;
                    for &(c, pv) in prow {
                        let a = &mut acc[c as usize];
                        *a = (*a + f * pv) % P;
                    }
                }
                None => {
                    if lead.is_none() {
                        lead = Some(col);
                    }
                }
            }
        }
        let Some(lead) = lead else { continue };
        let inv = inv_mod::<P>(acc[lead]);
        let mut row: Row = Vec::new();
        for (col, a) in acc.iter_mut().enumerate().skip(lead) {
            if *a != 0 {
                row.push((col as u32, mul_mod::<P>(*a, inv)));
                *a = 0;
            }
        }
        piv[lead] = Some(store.len());
        out_idx.push(store.len());
        store.push(row);
    }
    out_idx.into_iter().map(|i| std::mem::take(&mut store[i])).collect()
}

fn row_to_poly<const P: u64>(row: &Row, cols: &[PackedMonomial]) -> ModPoly<P> {
    ModPoly { terms: row.iter().map(|&(c, v)| (cols[c as usize], v)).collect() }
}

/// Reduced Gröbner basis (grevlex) of the ideal generated by `gens` over Z/P, sorted by
/// increasing leading monomial. Returns `[1]` for the unit ideal.
pub fn f4<const P: u64>(gens: &[ModPoly<P>], budget: &Budget) -> Result<Vec<ModPoly<P>>, AlgebraError> {
    let mut st = State::<P> { basis: Vec::new(), redundant: Vec::new(), pairs: Vec::new(), budget, work: 0 };
    // echelonize the generators first so that leading monomials are distinct
    let gens: Vec<ModPoly<P>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Err(AlgebraError::EmptyInput);
    }
    let mut cols: Vec<PackedMonomial> = gens.iter().flat_map(|g| g.terms.iter().map(|t| t.0)).collect();
    cols.sort_unstable_by(|a, b| b.cmp(a));
    cols.dedup();
    let index: HashMap<PackedMonomial, u32> = cols.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
    let rows: Vec<Row> = gens.iter().map(|g| g.terms.iter().map(|&(m, c)| (index[&m], c)).collect()).collect();
    let mut work = 0;
    let mut init = reduce_rows::<P>(cols.len(), Vec::new(), rows, &mut work);
    init.sort_by_key(|r| std::cmp::Reverse(r[0].0));
    for r in &init {
        let p = row_to_poly::<P>(r, &cols);
        if p.terms[0].0 == PackedMonomial::ONE {
            return Ok(vec![ModPoly { terms: vec![(PackedMonomial::ONE, 1)] }]);
        }
        st.update(p)?;
    }

    while !st.pairs.is_empty() {
        let d = st.pairs.iter().map(|p| p.lcm.degree()).min().unwrap();
        let (sel, rest): (Vec<Pair>, Vec<Pair>) = st.pairs.iter().partition(|p| p.lcm.degree() == d);
        st.pairs = rest;
        let mut pivots: Vec<RowSpec> = Vec::new();
        let mut todo: Vec<RowSpec> = Vec::new();
        let mut seen_lead: HashMap<PackedMonomial, ()> = HashMap::new();
        let mut seen_spec: HashMap<RowSpec, ()> = HashMap::new();
        for p in &sel {
            for g in [p.i, p.j] {
                let spec = RowSpec { mult: st.lm(g).quotient_of(p.lcm), poly: g };
                if seen_spec.insert(spec, ()).is_some() {
                    continue;
                }
                if seen_lead.insert(p.lcm, ()).is_none() {
                    pivots.push(spec);
                } else {
                    todo.push(spec);
                }
            }
        }
        let (prows, trows, cols) = build_matrix(&st, pivots, todo);
        let mut work = 0;
        let new_rows = reduce_rows::<P>(cols.len(), prows, trows, &mut work);
        st.charge(work)?;
        let mut new_polys: Vec<ModPoly<P>> = new_rows.iter().map(|r| row_to_poly::<P>(r, &cols)).collect();
        new_polys.sort_by(|a, b| a.terms[0].0.cmp(&b.terms[0].0));
        for p in new_polys {
            if p.terms[0].0 == PackedMonomial::ONE {
                return Ok(vec![ModPoly { terms: vec![(PackedMonomial::ONE, 1)] }]);
            }
            st.update(p)?;
        }
    }
    interreduce(&st)
}

/// Minimal basis followed by full tail reduction.
fn interreduce<const P: u64>(st: &State<'_, P>) -> Result<Vec<ModPoly<P>>, AlgebraError> {
    let mut minimal: Vec<usize> = Vec::new();
    for k in 0..st.basis.len() {
        if st.redundant[k] {
            continue;
        }
        let lm = st.lm(k);
        let covered = (0..st.basis.len()).any(|l| l != k && !st.redundant[l] && st.lm(l).divides(lm) && (st.lm(l) != lm || l < k));
        if !covered {
            minimal.push(k);
        }
    }
    let mut sub = State::<P> { basis: Vec::new(), redundant: Vec::new(), pairs: Vec::new(), budget: st.budget, work: 0 };
    for &k in &minimal {
        sub.basis.push(st.basis[k].clone());
        sub.redundant.push(false);
    }
    let specs: Vec<RowSpec> = (0..sub.basis.len()).map(|k| RowSpec { mult: PackedMonomial::ONE, poly: k }).collect();
    let (rows, _, cols) = build_matrix(&sub, specs, Vec::new());
    // back substitution: process rows by increasing leading monomial
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(rows[i][0].0));
    let ncols = cols.len();
    let mut piv: Vec<Option<Row>> = vec![None; ncols];
    let mut acc = vec![0u64; ncols];
    for i in order {
        let r = &rows[i];
        let lead = r[0].0 as usize;
        for &(c, v) in r {
            acc[c as usize] = v;
        }
        for col in lead + 1..ncols {
            let v = acc[col];
            if v == 0 {
                continue;
            }
            if let Some(prow) = &piv[col] {
                let f = P - v;
                for &(c, pv) in prow {
                    let a = &mut acc[c as usize];
                    *a = (*a + f * pv) % P;
                }
            }
        }
        let mut row = Vec::new();
        for (col, a) in acc.iter_mut().enumerate().skip(lead) {
            if *a != 0 {
                row.push((col as u32, *a));
                *a = 0;
            }
        }
        piv[lead] = Some(row);
    }
    let mut out: Vec<ModPoly<P>> = Vec::new();
    for k in 0..sub.basis.len() {
        let lm = sub.basis[k].terms[0].0;
        let col = cols.iter().position(|&m| m == lm).unwrap();
        out.push(row_to_poly::<P>(piv[col].as_ref().unwrap(), &cols).monic());
    }
    out.sort_by(|a, b| a.terms[0].0.cmp(&b.terms[0].0));
    Ok(out)
}

/// Number of standard monomials, or `None` if the ideal is not zero-dimensional.
pub fn quotient_dimension(leads: &[PackedMonomial], nvars: usize) -> Option<usize> {
    if leads.contains(&PackedMonomial::ONE) {
        return Some(0);
    }
    for v in 0..nvars {
        let x = PackedMonomial::var(v);
        let pure = leads.iter().any(|&m| (0..nvars).all(|i| i == v || m.exp(i) == 0) && x.divides(m));
        if !pure {
            return None;
        }
    }
    let mut count = 0usize;
    let mut stack: Vec<(PackedMonomial, usize)> = vec![(PackedMonomial::ONE, 0)];
    while let Some((m, last)) = stack.pop() {
        count += 1;
        for v in last..nvars {
            let n = m.mul(PackedMonomial::var(v));
            if !leads.iter().any(|l| l.divides(n)) {
                stack.push((n, v));
            }
        }
    }
    Some(count)
}
