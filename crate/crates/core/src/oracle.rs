//! Independent realization counter: pinned distance equations with random rational squared
//! lengths, solved by Gröbner basis quotient dimension.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rigid_algebra::f4::{f4, quotient_dimension, ModPoly, PRIME_31A, PRIME_31B};
use rigid_algebra::univariate::{degree, is_squarefree};
use rigid_algebra::{buchberger, Budget, Field, Fp, FpA, FpB, GroebnerBasis, MonomialOrder, Poly, Rational};
use serde::{Deserialize, Serialize};

use crate::calligraph::strip_degree2;
use crate::graph::{Edge, MarkedGraph, Vertex};
use crate::rigidity::is_minimally_rigid;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("graph with {vertices} vertices exceeds the oracle bound {bound}: {graph:?}")]
    TooLarge { vertices: usize, bound: usize, graph: MarkedGraph },
    #[error("not rigid or degenerate lengths: the system has positive dimension")]
    PositiveDimensional,
    #[error("graph is not minimally rigid")]
    NotMinimallyRigid,
    #[error("non-generic sampling: counts {0:?} never agreed")]
    NonGeneric(Vec<u64>),
    #[error("no squared length for edge {0:?}")]
    MissingLength(Edge),
    #[error("{0}")]
    Budget(String),
}

/// Arithmetic used for the Gröbner computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleField {
    /// Rational lengths reduced modulo two primes, one per seed. Systems in at most 16
    /// variables use F4 over word-sized primes, larger ones Buchberger modulo 61/62-bit primes.
    Modular,
    /// Exact rational arithmetic throughout.
    Rational,
}

#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub max_vertices: usize,
    pub budget: Budget,
    pub attempts: usize,
    pub field: OracleField,
    pub squarefree_check: bool,
    /// The squarefree test is skipped above this quotient dimension.
    pub squarefree_max_dim: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_vertices: 7,
            budget: Budget::default(),
            attempts: 4,
            field: OracleField::Modular,
            squarefree_check: true,
            squarefree_max_dim: 160,
        }
    }
}

/// Squared edge lengths k/m with k in [1,97], m in [1,13]; the marked edge gets 1.
pub fn sample_lengths(g: &MarkedGraph, seed: u64, stream: u64) -> BTreeMap<Edge, Rational> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    g.edges()
        .iter()
        .map(|&e| {
            if e == (1, 2) {
                (e, Rational::from_integer(1.into()))
            } else {
                let k: i64 = rng.gen_range(1..=97);
                let m: i64 = rng.gen_range(1..=13);
                (e, Rational::new(k.into(), m.into()))
            }
        })
        .collect()
}

/// Coordinate variables x_v, y_v for every vertex outside {1,2}, in ascending vertex order.
pub fn coordinate_names(g: &MarkedGraph) -> Vec<String> {
    free_vertices(g).iter().flat_map(|v| [format!("x{v}"), format!("y{v}")]).collect()
}

fn free_vertices(g: &MarkedGraph) -> Vec<Vertex> {
    g.vertices().iter().copied().filter(|&v| v != 1 && v != 2).collect()
}

/// One equation (x_i−x_j)²+(y_i−y_j)² − ω² per edge except {1,2}, with vertex 1 at (0,0)
/// and vertex 2 at (1,0).
pub fn realization_system<F: Field>(
    g: &MarkedGraph,
    lengths: &BTreeMap<Edge, Rational>,
    order: MonomialOrder,
) -> Result<Vec<Poly<F>>, OracleError> {
    let free = free_vertices(g);
    let n = 2 * free.len();
    let coord = |v: Vertex| -> (Poly<F>, Poly<F>) {
        match v {
            1 => (Poly::zero(n, order), Poly::zero(n, order)),
            2 => (Poly::one(n, order), Poly::zero(n, order)),
            _ => {
                let k = free.iter().position(|&w| w == v).unwrap();
                (Poly::var(n, order, 2 * k), Poly::var(n, order, 2 * k + 1))
            }
        }
    };
    let mut out = Vec::new();
    for &(a, b) in g.edges() {
        if (a, b) == (1, 2) {
            continue;
        }
        let w = lengths.get(&(a, b)).ok_or(OracleError::MissingLength((a, b)))?;
        let (xa, ya) = coord(a);
        let (xb, yb) = coord(b);
        let dx = xa.sub(&xb);
        let dy = ya.sub(&yb);
        let eq = dx.mul(&dx).add(&dy.mul(&dy)).sub(&Poly::constant(n, order, F::from_rational(w)));
        out.push(eq);
    }
    Ok(out)
}

/// Random linear form in `n` variables with coefficients in [1, 1000003].
fn random_form<F: Field>(n: usize, rng: &mut ChaCha20Rng) -> Poly<F> {
    let mut form = Poly::zero(n, MonomialOrder::GrevLex);
    for v in 0..n {
        let c: i64 = rng.gen_range(1..=1_000_003);
        form = form.add(&Poly::var(n, MonomialOrder::GrevLex, v).scale(&F::from_i64(c)));
    }
    form
}

/// The minimal polynomial of a random linear form has degree `dim` and no repeated roots.
fn passes_squarefree<F: Field>(gb: &GroebnerBasis<F>, n: usize, dim: u64, rng: &mut ChaCha20Rng) -> bool {
    let form = random_form::<F>(n, rng);
    let mp = gb.minimal_polynomial(&form).expect("zero-dimensional");
    degree(&mp) == Some(dim as usize) && is_squarefree(&mp)
}

/// Quotient dimension of one sampled system over `F`; `None` if the squarefree test fails.
fn count_with<F: Field>(
    g: &MarkedGraph,
    lengths: &BTreeMap<Edge, Rational>,
    cfg: &OracleConfig,
    rng: &mut ChaCha20Rng,
) -> Result<Option<u64>, OracleError> {
    let system: Vec<Poly<F>> = realization_system(g, lengths, MonomialOrder::GrevLex)?;
    if system.is_empty() {
        return Ok(Some(1));
    }
    let gb = buchberger(&system, &cfg.budget).map_err(|e| OracleError::Budget(e.to_string()))?;
    let dim = gb.quotient_dimension().ok_or(OracleError::PositiveDimensional)? as u64;
    if cfg.squarefree_check && dim > 0 && dim as usize <= cfg.squarefree_max_dim && !passes_squarefree(&gb, system[0].nvars(), dim, rng) {
        return Ok(None);
    }
    Ok(Some(dim))
}

/// Same as [`count_with`] using F4 modulo the word-sized prime `P`.
fn count_with_f4<const P: u64>(
    g: &MarkedGraph,
    lengths: &BTreeMap<Edge, Rational>,
    cfg: &OracleConfig,
    rng: &mut ChaCha20Rng,
) -> Result<Option<u64>, OracleError> {
    let system: Vec<Poly<Rational>> = realization_system(g, lengths, MonomialOrder::GrevLex)?;
    if system.is_empty() {
        return Ok(Some(1));
    }
    let n = system[0].nvars();
    let Some(modular) = system.iter().map(ModPoly::<P>::from_poly).collect::<Option<Vec<_>>>() else {
        // a denominator vanishes modulo P
        return Ok(None);
    };
    let gb = f4::<P>(&modular, &cfg.budget).map_err(|e| OracleError::Budget(e.to_string()))?;
    let leads: Vec<_> = gb.iter().map(|p| p.terms[0].0).collect();
    let dim = quotient_dimension(&leads, n).ok_or(OracleError::PositiveDimensional)? as u64;
    if cfg.squarefree_check && dim > 0 && dim as usize <= cfg.squarefree_max_dim {
        let polys: Vec<Poly<Fp<P>>> = gb
            .iter()
            .map(|p| Poly::from_terms(n, MonomialOrder::GrevLex, p.to_poly_exps(n).into_iter().map(|(m, c)| (m, Fp::<P>(c)))))
            .collect();
        let gb = GroebnerBasis { polys, order: MonomialOrder::GrevLex };
        if !passes_squarefree(&gb, n, dim, rng) {
            return Ok(None);
        }
    }
    Ok(Some(dim))
}

fn count_sample(g: &MarkedGraph, seed: u64, stream: u64, second: bool, cfg: &OracleConfig) -> Result<Option<u64>, OracleError> {
    let lengths = sample_lengths(g, seed, stream);
    let mut rng = ChaCha20Rng::seed_from_u64(seed ^ 0x5eed_f0f0);
    rng.set_stream(stream);
    let small = 2 * g.vertex_count().saturating_sub(2) <= rigid_algebra::f4::MAX_VARS;
    match (cfg.field, second) {
        (OracleField::Rational, _) => count_with::<Rational>(g, &lengths, cfg, &mut rng),
        (OracleField::Modular, false) if small => count_with_f4::<PRIME_31A>(g, &lengths, cfg, &mut rng),
        (OracleField::Modular, true) if small => count_with_f4::<PRIME_31B>(g, &lengths, cfg, &mut rng),
        (OracleField::Modular, false) => count_with::<FpA>(g, &lengths, cfg, &mut rng),
        (OracleField::Modular, true) => count_with::<FpB>(g, &lengths, cfg, &mut rng),
    }
}

/// Number of complex realizations of a minimally rigid graph. Two independently seeded
/// samples must agree; otherwise fresh seeds are tried up to `cfg.attempts` times.
pub fn count_realizations_oracle(g: &MarkedGraph, seed: u64, cfg: &OracleConfig) -> Result<u64, OracleError> {
    if !is_minimally_rigid(g) {
        return Err(OracleError::NotMinimallyRigid);
    }
    let (h, k) = if g.vertex_count() > cfg.max_vertices { strip_degree2(g, false) } else { (g.clone(), 0) };
    if h.vertex_count() > cfg.max_vertices {
        return Err(OracleError::TooLarge { vertices: h.vertex_count(), bound: cfg.max_vertices, graph: h });
    }
    let mut seen = Vec::new();
    for attempt in 0..cfg.attempts as u64 {
        let a = count_sample(&h, seed, 2 * attempt, false, cfg)?;
        let b = count_sample(&h, seed, 2 * attempt + 1, true, cfg)?;
        if let (Some(a), Some(b)) = (a, b) {
            if a == b {
                return Ok(a << k);
            }
        }
        seen.extend(a);
        seen.extend(b);
    }
    Err(OracleError::NonGeneric(seen))
}
