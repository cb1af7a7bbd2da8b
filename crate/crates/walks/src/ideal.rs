use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rigid_algebra::linear::{pivot, rref};
use rigid_algebra::Rational;
use rigidcount::graph::Vertex;

/// Variable a_v or b_v of the ring A.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A(Vertex),
    B(Vertex),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::A(v) => write!(f, "a{v}"),
            Var::B(v) => write!(f, "b{v}"),
        }
    }
}

/// Affine linear polynomial over the rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LinearPoly {
    coeffs: BTreeMap<Var, Rational>,
    constant: Rational,
}

pub(crate) fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

impl LinearPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        LinearPoly { coeffs: BTreeMap::new(), constant: q(c) }
    }

    pub fn var(v: Var) -> Self {
        Self::zero().with_term(v, q(1))
    }

    /// Builds from integer terms, e.g. `[(B(0), 1), (B(3), -2)]` and constant 1.
    pub fn from_terms(terms: &[(Var, i64)], constant: i64) -> Self {
        let mut p = Self::constant(constant);
        for &(v, c) in terms {
            p = p.with_term(v, q(c));
        }
        p
    }

    fn with_term(mut self, v: Var, c: Rational) -> Self {
        let e = self.coeffs.entry(v).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&v);
        }
        self
    }

    pub fn coeff(&self, v: Var) -> Rational {
        self.coeffs.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> &Rational {
        &self.constant
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty() && self.constant.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.constant += &o.constant;
        for (v, c) in &o.coeffs {
            out = out.with_term(*v, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinearPoly {
            coeffs: self.coeffs.iter().map(|(v, x)| (*v, x * c)).collect(),
            constant: &self.constant * c,
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn to_row(&self, order: &[Var]) -> Vec<Rational> {
        let mut row: Vec<Rational> = order.iter().map(|v| self.coeff(*v)).collect();
        row.push(self.constant.clone());
        row
    }

    fn from_row(row: &[Rational], order: &[Var]) -> Self {
        let mut p = LinearPoly { coeffs: BTreeMap::new(), constant: row[order.len()].clone() };
        for (v, c) in order.iter().zip(row) {
            if !c.is_zero() {
                p.coeffs.insert(*v, c.clone());
            }
        }
        p
    }
}

impl fmt::Display for LinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let mut push = |c: &Rational, name: Option<String>| {
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match name {
                Some(n) if a.is_one() => out.push_str(&n),
                Some(n) => out.push_str(&format!("{a}*{n}")),
                None => out.push_str(&a.to_string()),
            }
        };
        for (v, c) in &self.coeffs {
            push(c, Some(v.to_string()));
        }
        if !self.constant.is_zero() {
            push(&self.constant, None);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Reduced row-echelon basis of a linear ideal; columns follow `order`, constant last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearIdealBasis {
    order: Vec<Var>,
    rows: Vec<LinearPoly>,
}

impl LinearIdealBasis {
    /// Variables missing from `order` are appended in their natural order.
    pub fn new(generators: &[LinearPoly], order: &[Var]) -> Self {
        let mut order = order.to_vec();
        let mut extra: Vec<Var> = generators.iter().flat_map(|p| p.vars()).filter(|v| !order.contains(v)).collect();
        extra.sort();
        extra.dedup();
        order.extend(extra);
        let rows: Vec<Vec<Rational>> = generators.iter().map(|p| p.to_row(&order)).collect();
        let reduced = rref(&rows);
        let n = order.len();
        let rows = if reduced.iter().any(|r| pivot(r) == Some(n)) {
            vec![LinearPoly::constant(1)]
        } else {
            reduced.iter().map(|r| LinearPoly::from_row(r, &order)).collect()
        };
        LinearIdealBasis { order, rows }
    }

    pub fn order(&self) -> &[Var] {
        &self.order
    }

    pub fn rows(&self) -> &[LinearPoly] {
        &self.rows
    }

    pub fn is_unit(&self) -> bool {
        self.rows.len() == 1 && self.rows[0].is_constant() && !self.rows[0].is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Basis of I ∩ C[remaining variables], in the remaining order.
    pub fn eliminate(&self, vars: &[Var]) -> LinearIdealBasis {
        let mut first: Vec<Var> = vars.to_vec();
        first.extend(self.order.iter().filter(|v| !vars.contains(v)));
        let full = LinearIdealBasis::new(&self.rows, &first);
        let kept: Vec<LinearPoly> = full.rows.into_iter().filter(|p| vars.iter().all(|v| p.coeff(*v).is_zero())).collect();
        let rest: Vec<Var> = self.order.iter().copied().filter(|v| !vars.contains(v)).collect();
        LinearIdealBasis::new(&kept, &rest)
    }

    /// Keeps only the variables in `keep`.
    pub fn restrict_to(&self, keep: &[Var]) -> LinearIdealBasis {
        let drop: Vec<Var> = self.order.iter().copied().filter(|v| !keep.contains(v)).collect();
        self.eliminate(&drop)
    }

    pub fn contains(&self, p: &LinearPoly) -> bool {
        let mut gens = self.rows.clone();
        gens.push(p.clone());
        LinearIdealBasis::new(&gens, &self.order).rows.len() == self.rows.len()
    }

    /// Equality of the generated ideals, independent of the column order.
    pub fn same_ideal(&self, other: &LinearIdealBasis) -> bool {
        let mut order = self.order.clone();
        order.extend(other.order.iter().filter(|v| !self.order.contains(v)));
        LinearIdealBasis::new(&self.rows, &order).rows == LinearIdealBasis::new(&other.rows, &order).rows
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.rows.iter().map(|p| p.to_string()).collect()
    }
}
