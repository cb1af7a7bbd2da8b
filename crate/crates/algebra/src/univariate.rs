//! Dense univariate polynomials, coefficients stored from low to high degree.

use crate::field::{Field, GaussianRational};

pub fn trim<F: Field>(mut p: Vec<F>) -> Vec<F> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn degree<F: Field>(p: &[F]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn monic<F: Field>(p: &[F]) -> Vec<F> {
    let p = trim(p.to_vec());
    match p.last() {
        Some(lc) => {
            let inv = lc.inv();
            p.iter().map(|c| c.mul(&inv)).collect()
        }
        None => p,
    }
}

pub fn div_rem<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let b = trim(b.to_vec());
    let db = degree(&b).expect("division by zero polynomial");
    let mut r = trim(a.to_vec());
    let lc_inv = b[db].inv();
    let mut q = vec![F::zero(); r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr].mul(&lc_inv);
        let shift = dr - db;
        for (k, bc) in b.iter().enumerate() {
            r[k + shift] = r[k + shift].sub(&bc.mul(&c));
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

pub fn gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    monic(&a)
}

pub fn derivative<F: Field>(p: &[F]) -> Vec<F> {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c.mul(&F::from_i64(k as i64))).collect())
}

pub fn is_squarefree<F: Field>(p: &[F]) -> bool {
    degree(&gcd(p, &derivative(p))) == Some(0)
}

pub fn squarefree_part<F: Field>(p: &[F]) -> Vec<F> {
    let g = gcd(p, &derivative(p));
    monic(&div_rem(p, &g).0)
}

pub fn eval<F: Field>(p: &[F], x: &F) -> F {
    p.iter().rev().fold(F::zero(), |acc, c| acc.mul(x).add(c))
}

/// Distinct roots in Q(i) of a nonzero polynomial. Quadratic pieces are solved exactly;
/// higher-degree pieces are searched for small Gaussian-rational roots. If a factor of
/// degree above two remains without such roots the remaining degree is returned as error.
pub fn gaussian_roots(p: &[GaussianRational]) -> Result<Vec<GaussianRational>, usize> {
    let mut s = squarefree_part(p);
    let mut roots = Vec::new();
    let candidates = small_gaussian_candidates();
    loop {
        match degree(&s) {
            None | Some(0) => break,
            Some(1) => {
                roots.push(s[0].neg().div(&s[1]));
                break;
            }
            Some(2) => {
                let (a, b, c) = (&s[2], &s[1], &s[0]);
                let four = GaussianRational::from_ints(4, 0);
                let disc = b.mul(b).sub(&four.mul(a).mul(c));
                let Some(r) = disc.sqrt() else { return Err(2) };
                let two_a = a.add(a);
                roots.push(b.neg().add(&r).div(&two_a));
                roots.push(b.neg().sub(&r).div(&two_a));
                break;
            }
            Some(d) => {
                let Some(z) = candidates.iter().find(|z| eval(&s, z).is_zero()) else { return Err(d) };
                roots.push(z.clone());
                s = div_rem(&s, &[z.neg(), GaussianRational::one()]).0;
            }
        }
    }
    Ok(roots)
}

fn small_gaussian_candidates() -> Vec<GaussianRational> {
    let mut out = Vec::new();
    for re in -3..=3 {
        for im in -3..=3 {
            out.push(GaussianRational::from_ints(re, im));
        }
    }
    out
}
