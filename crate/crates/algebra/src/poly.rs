use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use smallvec::SmallVec;

use crate::field::{Field, Rational};
use crate::AlgebraError;

pub type Exp = u16;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[Exp; 16]>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), deg: 0 }
    }

    pub fn var(nvars: usize, i: usize, e: Exp) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = e;
        m.deg = e as u32;
        m
    }

    pub fn from_exps(exps: &[Exp]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps), deg: exps.iter().map(|&e| e as u32).sum() }
    }

    pub fn exps(&self) -> &[Exp] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> Exp {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let exps: SmallVec<[Exp; 16]> = self.exps.iter().zip(&o.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, deg: self.deg + o.deg }
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.deg <= o.deg && self.exps.iter().zip(&o.exps).all(|(a, b)| a <= b)
    }

    /// `o / self`, if `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial) -> Option<Monomial> {
        if !self.divides(o) {
            return None;
        }
        let exps: SmallVec<[Exp; 16]> = o.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, deg: o.deg - self.deg })
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let exps: SmallVec<[Exp; 16]> = self.exps.iter().zip(&o.exps).map(|(a, b)| *a.max(b)).collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let exps: SmallVec<[Exp; 16]> = self.exps.iter().zip(&o.exps).map(|(a, b)| *a.min(b)).collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn is_coprime(&self, o: &Monomial) -> bool {
        self.exps.iter().zip(&o.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Degree restricted to the listed variables.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&v| self.exps[v] as u32).sum()
    }

    pub fn with_exp(&self, i: usize, e: Exp) -> Monomial {
        let mut m = self.clone();
        m.deg = m.deg - m.exps[i] as u32 + e as u32;
        m.exps[i] = e;
        m
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MonomialOrder {
    /// Lexicographic with variable 0 the largest.
    Lex,
    /// Graded reverse lexicographic with variable 0 the largest.
    GrevLex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::GrevLex => a.deg.cmp(&b.deg).then_with(|| {
                for i in (0..a.exps.len()).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// Sparse multivariate polynomial. Terms are kept sorted by decreasing monomial
/// under `order`, with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F> {
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> Poly<F> {
    pub fn zero(nvars: usize, order: MonomialOrder) -> Self {
        Poly { nvars, order, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, order: MonomialOrder, c: F) -> Self {
        let mut p = Self::zero(nvars, order);
        if !c.is_zero() {
            p.terms.push((Monomial::one(nvars), c));
        }
        p
    }

    pub fn one(nvars: usize, order: MonomialOrder) -> Self {
        Self::constant(nvars, order, F::one())
    }

    pub fn var(nvars: usize, order: MonomialOrder, i: usize) -> Self {
        Self::term(nvars, order, Monomial::var(nvars, i, 1), F::one())
    }

    pub fn term(nvars: usize, order: MonomialOrder, m: Monomial, c: F) -> Self {
        assert_eq!(m.nvars(), nvars);
        let mut p = Self::zero(nvars, order);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms<I>(nvars: usize, order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, F)>,
    {
        let mut acc: HashMap<Monomial, F> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars);
            match acc.get_mut(&m) {
                Some(v) => *v = v.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Monomial, F)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly { nvars, order, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_term(&self) -> F {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => F::zero(),
        }
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn degree_in(&self, vars: &[usize]) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree_in(vars)).max()
    }

    pub fn degree_in_var(&self, v: usize) -> Option<Exp> {
        self.terms.iter().map(|t| t.0.exp(v)).max()
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.terms.iter().any(|t| t.0.exp(v) > 0)
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        match self.terms.binary_search_by(|t| self.order.cmp(m, &t.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly { nvars: self.nvars, order, terms }
    }

    fn same_ring(&self, o: &Self) {
        assert_eq!(self.nvars, o.nvars, "polynomials from different rings");
        assert_eq!(self.order, o.order, "polynomials with different orders");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, None)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, Some(&F::one().neg()))
    }

    fn combine(&self, o: &Self, scale: Option<&F>) -> Self {
        self.same_ring(o);
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < o.terms.len() {
            let ord = if i == self.terms.len() {
                Ordering::Less
            } else if j == o.terms.len() {
                Ordering::Greater
            } else {
                self.order.cmp(&self.terms[i].0, &o.terms[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = match scale {
                        Some(s) => o.terms[j].1.mul(s),
                        None => o.terms[j].1.clone(),
                    };
                    out.push((o.terms[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = match scale {
                        Some(s) => self.terms[i].1.add(&o.terms[j].1.mul(s)),
                        None => self.terms[i].1.add(&o.terms[j].1),
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { nvars: self.nvars, order: self.order, terms: out }
    }

    /// `self - c·m·g`, the elementary reduction step.
    pub fn sub_scaled_term_mul(&self, c: &F, m: &Monomial, g: &Self) -> Self {
        self.same_ring(g);
        let neg = c.neg();
        let shifted: Vec<(Monomial, F)> = g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc.mul(&neg))).collect();
        let shifted = Poly { nvars: self.nvars, order: self.order, terms: shifted };
        self.add(&shifted)
    }

    pub fn neg(&self) -> Self {
        Poly {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        Poly {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x.mul(c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        Poly {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(tm, x)| (tm.mul(m), x.mul(c))).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.same_ring(o);
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        let (small, large) = if self.terms.len() <= o.terms.len() { (self, o) } else { (o, self) };
        let mut acc = Self::zero(self.nvars, self.order);
        for (m, c) in &small.terms {
            acc = acc.add(&large.mul_term(m, c));
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars, self.order);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    /// Substitutes `images[i]` for variable `i`. The images may live in another ring.
    pub fn substitute(&self, images: &[Poly<F>]) -> Poly<F> {
        assert_eq!(images.len(), self.nvars);
        let (nv, ord) = match images.first() {
            Some(p) => (p.nvars, p.order),
            None => (0, self.order),
        };
        let mut powers: Vec<Vec<Poly<F>>> = images.iter().map(|p| vec![Poly::one(nv, ord), p.clone()]).collect();
        let mut terms: Vec<(Monomial, F)> = Vec::new();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(nv, ord, c.clone());
            for (v, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[v].len() <= e as usize {
                    let next = powers[v].last().unwrap().mul(&images[v]);
                    powers[v].push(next);
                }
                t = t.mul(&powers[v][e as usize]);
            }
            terms.extend(t.terms);
        }
        Poly::from_terms(nv, ord, terms)
    }

    /// Sets variable `v` to the constant `value`.
    pub fn eval_var(&self, v: usize, value: &F) -> Self {
        let mut pows: Vec<F> = vec![F::one()];
        let terms = self.terms.iter().map(|(m, c)| {
            let e = m.exp(v) as usize;
            while pows.len() <= e {
                let next = pows.last().unwrap().mul(value);
                pows.push(next);
            }
            (m.with_exp(v, 0), c.mul(&pows[e]))
        });
        let terms: Vec<_> = terms.collect();
        Poly::from_terms(self.nvars, self.order, terms)
    }

    /// Evaluates at a full point.
    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars);
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&point[v]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Renames variables into a ring with `nvars` variables: variable `i` becomes `map[i]`.
    pub fn remap(&self, nvars: usize, order: MonomialOrder, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps: Vec<Exp> = vec![0; nvars];
            for (i, &e) in m.exps().iter().enumerate() {
                exps[map[i]] += e;
            }
            (Monomial::from_exps(&exps), c.clone())
        });
        let terms: Vec<_> = terms.collect();
        Poly::from_terms(nvars, order, terms)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        let terms: Vec<(Monomial, G)> = self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect();
        Poly::from_terms(self.nvars, self.order, terms)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(self.nvars),
            Some((m, _)) => it.fold(m.clone(), |g, (t, _)| g.gcd(t)),
        }
    }

    /// Exact division by a monomial; `None` if some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, c) in &self.terms {
            terms.push((m.quotient_of(t)?, c.clone()));
        }
        // division by a monomial preserves the term order
        Some(Poly { nvars: self.nvars, order: self.order, terms })
    }

    /// Exact division by `g`; `None` when the remainder is nonzero.
    pub fn div_exact(&self, g: &Self) -> Option<Self> {
        self.same_ring(g);
        let (lm, lc) = g.terms.first().expect("division by zero polynomial");
        let lc_inv = lc.inv();
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, F)> = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let q = lm.quotient_of(&m)?;
            let qc = c.mul(&lc_inv);
            rem = rem.sub_scaled_term_mul(&qc, &q, g);
            quot.push((q, qc));
        }
        Some(Poly::from_terms(self.nvars, self.order, quot))
    }

    /// Partial derivative with respect to variable `v`.
    pub fn derivative(&self, v: usize) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.exp(v) > 0).map(|(m, c)| {
            let e = m.exp(v);
            (m.with_exp(v, e - 1), c.mul(&F::from_i64(e as i64)))
        });
        let terms: Vec<_> = terms.collect();
        Poly::from_terms(self.nvars, self.order, terms)
    }

    /// Groups terms by their exponents on `vars`, returning coefficient polynomials in the
    /// remaining variables (the grouped variables are zeroed out in each coefficient).
    pub fn coefficients_in(&self, vars: &[usize]) -> Vec<(Vec<Exp>, Poly<F>)> {
        let mut groups: Vec<(Vec<Exp>, Vec<(Monomial, F)>)> = Vec::new();
        let mut index: HashMap<Vec<Exp>, usize> = HashMap::new();
        for (m, c) in &self.terms {
            let key: Vec<Exp> = vars.iter().map(|&v| m.exp(v)).collect();
            let mut rest = m.clone();
            for &v in vars {
                rest = rest.with_exp(v, 0);
            }
            let slot = *index.entry(key.clone()).or_insert_with(|| {
                groups.push((key, Vec::new()));
                groups.len() - 1
            });
            groups[slot].1.push((rest, c.clone()));
        }
        groups
            .into_iter()
            .map(|(k, ts)| (k, Poly::from_terms(self.nvars, self.order, ts)))
            .collect()
    }

    pub fn fmt_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if body != "1" || m.is_one() {
                factors.push(body);
            }
            for (v, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[v].to_string()),
                    _ => factors.push(format!("{}^{}", names[v], e)),
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }

    /// Parses expressions like `(x0 - 1)^2 + y0^2 - l^2*x0^2`. Integers, `/` between
    /// integers, `i` (when the field has one and no variable is named `i`), `+ - * ^`
    /// and parentheses are supported.
    pub fn parse(src: &str, names: &[&str], order: MonomialOrder) -> Result<Self, AlgebraError> {
        let tokens = tokenize(src)?;
        let mut p = Parser { tokens, pos: 0, names, order };
        let out = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(AlgebraError::Parse(format!("trailing input in {src:?}")));
        }
        Ok(out)
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("v{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "{}", self.fmt_with(&refs))
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(num_bigint::BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Token>, AlgebraError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token::Num(s.parse().expect("digits")));
        } else if ch.is_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(ch) {
            out.push(Token::Op(ch));
            i += 1;
        } else {
            return Err(AlgebraError::Parse(format!("unexpected character {ch:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    names: &'a [&'a str],
    order: MonomialOrder,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr<F: Field>(&mut self) -> Result<Poly<F>, AlgebraError> {
        let n = self.names.len();
        let mut acc = if self.eat('-') { self.term::<F>()?.neg() } else { self.term()? };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                break;
            }
        }
        debug_assert_eq!(acc.nvars, n);
        Ok(acc)
    }

    fn term<F: Field>(&mut self) -> Result<Poly<F>, AlgebraError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat('/') {
                let d = self.power::<F>()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(AlgebraError::Parse("division by a non-constant".into()));
                }
                acc = acc.scale(&d.constant_term().inv());
            } else if matches!(self.peek(), Some(Token::Op('(')) | Some(Token::Ident(_)) | Some(Token::Num(_))) {
                // implicit multiplication
                acc = acc.mul(&self.power()?);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn power<F: Field>(&mut self) -> Result<Poly<F>, AlgebraError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.tokens.get(self.pos).cloned() {
                Some(Token::Num(e)) => {
                    self.pos += 1;
                    let e: u32 = e.try_into().map_err(|_| AlgebraError::Parse("exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                _ => Err(AlgebraError::Parse("expected integer exponent".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom<F: Field>(&mut self) -> Result<Poly<F>, AlgebraError> {
        let n = self.names.len();
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Num(v)) => {
                self.pos += 1;
                Ok(Poly::constant(n, self.order, F::from_rational(&Rational::from_integer(v))))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                if let Some(idx) = self.names.iter().position(|&s| s == name) {
                    Ok(Poly::var(n, self.order, idx))
                } else if name == "i" {
                    let unit = F::imaginary_unit().ok_or_else(|| AlgebraError::Parse("field has no i".into()))?;
                    Ok(Poly::constant(n, self.order, unit))
                } else {
                    Err(AlgebraError::Parse(format!("unknown variable {name}")))
                }
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(AlgebraError::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(self.power::<F>()?.neg())
            }
            other => Err(AlgebraError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}
