//! Walks on a calligraph, the Δ_v reduction, τ-polynomials under sign labelings, and the
//! elimination checks that certify the possible projections to the b0-axis.

pub mod ideal;
pub mod labeling;
pub mod sample;
pub mod walk;

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use rigid_algebra::{buchberger, Budget, MonomialOrder, Poly, Rational};
use rigidcount::graph::{MarkedGraph, Vertex};
use serde_json::json;

pub use ideal::{LinearIdealBasis, LinearPoly, Var};
pub use labeling::SignLabeling;
pub use walk::{
    delta_chain, delta_v, greedy_route, initial_walks, is_initial, is_route, route_order, walk_concat, walk_max,
    walk_plus, walk_plus_at, Walk, WalkKind,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WalkError {
    #[error("not a walk: {0}")]
    NotAWalk(String),
    #[error("{0} + {1} is undefined")]
    PlusUndefined(String, String),
    #[error("max(Λ_{0} ∩ Λ_0) does not exist")]
    NoMax(Vertex),
    #[error("walk set is not initial: {0}")]
    NotInitial(String),
    #[error("G[V] is disconnected, so no route exists")]
    NoRoute,
    #[error("invalid sign labeling: {0}")]
    Labeling(String),
    #[error("elimination ideal {0} is not one of <0>, <1>, <b0>, <b0+1>")]
    Unexpected(String),
    #[error("groebner: {0}")]
    Algebra(String),
}

/// The four possible ideals I_τ(Λ) ∩ C[b0].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum B0Ideal {
    Zero,
    One,
    B0,
    B0Plus1,
}

impl B0Ideal {
    pub fn as_str(self) -> &'static str {
        match self {
            B0Ideal::Zero => "<0>",
            B0Ideal::One => "<1>",
            B0Ideal::B0 => "<b0>",
            B0Ideal::B0Plus1 => "<b0+1>",
        }
    }
}

impl fmt::Display for B0Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn a_term(v: Vertex) -> LinearPoly {
    match v {
        0 | 1 => LinearPoly::zero(),
        2 => LinearPoly::constant(-1),
        _ => LinearPoly::var(Var::A(v)),
    }
}

fn b_term(v: Vertex) -> LinearPoly {
    match v {
        1 | 2 => LinearPoly::zero(),
        _ => LinearPoly::var(Var::B(v)),
    }
}

/// φ_τ(i,j) = a_ij + τ({i,j})·b_ij.
pub fn phi(tau: &SignLabeling, i: Vertex, j: Vertex) -> LinearPoly {
    let a = a_term(i).sub(&a_term(j));
    let b = b_term(i).sub(&b_term(j));
    a.add(&b.scale(&ideal::q(tau.sign(i, j) as i64)))
}

pub fn tau_poly(walk: &Walk, tau: &SignLabeling) -> LinearPoly {
    walk.vertices().windows(2).fold(LinearPoly::zero(), |acc, w| acc.add(&phi(tau, w[0], w[1])))
}

/// χ_{τ,ρ} at every position of ρ.
pub fn chi(walk: &Walk, tau: &SignLabeling) -> Vec<i8> {
    let vs = walk.vertices();
    let r = vs.len() - 1;
    (0..=r)
        .map(|i| if i == 0 || i == r { 0 } else { tau.sign(vs[i], vs[i + 1]) - tau.sign(vs[i - 1], vs[i]) })
        .collect()
}

/// b0 + Σ χ(ρ_i)·b_{ρ_i}, without the constant ε.
pub fn chi_poly(walk: &Walk, tau: &SignLabeling) -> LinearPoly {
    let base = LinearPoly::var(Var::B(0));
    walk.vertices()
        .iter()
        .zip(chi(walk, tau))
        .fold(base, |acc, (&v, c)| acc.add(&b_term(v).scale(&ideal::q(c as i64))))
}

/// ε with τ_ρ = χ-polynomial + ε, if the difference is constant.
pub fn flip_epsilon(walk: &Walk, tau: &SignLabeling) -> Option<Rational> {
    let d = tau_poly(walk, tau).sub(&chi_poly(walk, tau));
    d.is_constant().then(|| d.constant_term().clone())
}

/// Writes a round walk as g − h with g, h western: splits ρ at an interior vertex u and
/// continues both halves along a shortest walk from u to 1. If 1 is only incident to the
/// marked edge, no western walk exists and both halves go to 2 instead.
pub fn round_decomposition(g: &MarkedGraph, walk: &Walk) -> Option<(Walk, Walk)> {
    if walk.kind() != Some(WalkKind::Round) || walk.len() < 2 {
        return None;
    }
    let vs = walk.vertices();
    let k = vs.len() / 2;
    let u = vs[k];
    let to_one = walk::shortest_walk(g, u, 1).or_else(|| walk::shortest_walk(g, u, 2))?;
    let first = Walk::unchecked(vs[..=k].to_vec());
    let second = Walk::unchecked(vs[k..].iter().rev().copied().collect());
    Some((walk_concat(&first, &to_one).ok()?, walk_concat(&second, &to_one).ok()?))
}

/// Column order: a-variables along the route, then b-variables, b0 last.
pub fn variable_order(order: &[Vertex]) -> Vec<Var> {
    let inner: Vec<Vertex> = order.iter().copied().filter(|&v| v != 0 && v != 1 && v != 2).collect();
    let mut vars: Vec<Var> = inner.iter().map(|&v| Var::A(v)).collect();
    vars.extend(inner.iter().map(|&v| Var::B(v)));
    vars.push(Var::B(0));
    vars
}

fn default_order(g: &MarkedGraph) -> Vec<Vertex> {
    match greedy_route(g) {
        Ok(r) => route_order(&r),
        Err(_) => walk::inner_vertices(g).into_iter().collect(),
    }
}

pub fn tau_ideal(walks: &BTreeSet<Walk>, tau: &SignLabeling, order: &[Var]) -> LinearIdealBasis {
    let gens: Vec<LinearPoly> = walks.iter().map(|w| tau_poly(w, tau)).collect();
    LinearIdealBasis::new(&gens, order)
}

fn classify(rows: &[LinearPoly]) -> Result<B0Ideal, WalkError> {
    match rows {
        [] => Ok(B0Ideal::Zero),
        [p] if p.is_constant() => Ok(B0Ideal::One),
        [p] if p.vars().collect::<Vec<_>>() == [Var::B(0)] && p.coeff(Var::B(0)).is_one() => {
            let c = p.constant_term();
            if c.is_zero() {
                Ok(B0Ideal::B0)
            } else if c.is_one() {
                Ok(B0Ideal::B0Plus1)
            } else {
                Err(WalkError::Unexpected(format!("<{p}>")))
            }
        }
        _ => Err(WalkError::Unexpected(format!("{:?}", rows.iter().map(|p| p.to_string()).collect::<Vec<_>>()))),
    }
}

/// I_τ(Λ) ∩ C[b0] by row reduction.
pub fn eliminate_b0(g: &MarkedGraph, walks: &BTreeSet<Walk>, tau: &SignLabeling) -> Result<B0Ideal, WalkError> {
    is_initial(g, walks)?;
    let basis = tau_ideal(walks, tau, &variable_order(&default_order(g)));
    classify(basis.restrict_to(&[Var::B(0)]).rows())
}

/// Same elimination through a lex Gröbner basis with b0 smallest.
pub fn eliminate_b0_groebner(
    g: &MarkedGraph,
    walks: &BTreeSet<Walk>,
    tau: &SignLabeling,
    budget: &Budget,
) -> Result<B0Ideal, WalkError> {
    is_initial(g, walks)?;
    let order = variable_order(&default_order(g));
    let n = order.len();
    let to_poly = |p: &LinearPoly| {
        let mut out = Poly::constant(n, MonomialOrder::Lex, p.constant_term().clone());
        for v in p.vars() {
            let i = order.iter().position(|&u| u == v).expect("variable in order");
            out = out.add(&Poly::var(n, MonomialOrder::Lex, i).scale(&p.coeff(v)));
        }
        out
    };
    let gens: Vec<Poly<Rational>> = walks.iter().map(|w| to_poly(&tau_poly(w, tau))).filter(|p| !p.is_zero()).collect();
    if gens.is_empty() {
        return Ok(B0Ideal::Zero);
    }
    let gb = buchberger(&gens, budget).map_err(|e| WalkError::Algebra(e.to_string()))?;
    let last = n - 1;
    let mut rows = Vec::new();
    for p in gb.polys.iter().filter(|p| (0..last).all(|i| !p.uses_var(i))) {
        let p = p.monic();
        let lin = p.degree_in_var(last).unwrap_or(0);
        if lin > 1 {
            return Err(WalkError::Unexpected(format!("<{}>", p.fmt_with(&[]))));
        }
        let c = LinearPoly::constant(1).scale(&p.constant_term());
        rows.push(if lin == 1 { LinearPoly::var(Var::B(0)).add(&c) } else { c });
    }
    classify(&rows)
}

/// Compares I_τ(Δ_v(Λ)) with I_τ(Λ) ∩ Â(v) at every step of the route.
pub fn cross_check_delta(
    g: &MarkedGraph,
    walks: &BTreeSet<Walk>,
    tau: &SignLabeling,
    route: &Walk,
) -> Result<bool, WalkError> {
    if !is_route(g, route) {
        return Err(WalkError::NoRoute);
    }
    let order = variable_order(&route_order(route));
    let chain = delta_chain(walks, route)?;
    for pair in chain.windows(2) {
        let v = pair[1].0.expect("every step after the first names its vertex");
        let before = tau_ideal(&pair[0].1, tau, &order).eliminate(&[Var::A(v)]);
        let after = tau_ideal(&pair[1].1, tau, &order);
        if !before.same_ideal(&after) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Everything the `walks` subcommand reports for one graph and labeling.
pub fn walk_report(g: &MarkedGraph, tau: &SignLabeling) -> Result<serde_json::Value, WalkError> {
    let route = greedy_route(g)?;
    let order = route_order(&route);
    let vars = variable_order(&order);
    let initial = initial_walks(g, &order);
    let chain = delta_chain(&initial, &route)?;
    let last = &chain.last().expect("nonempty").1;

    let sorted = |s: &BTreeSet<Walk>| {
        let mut v: Vec<&Walk> = s.iter().collect();
        v.sort_by(|a, b| walk::walk_cmp(a, b));
        v.into_iter().map(|w| w.to_string()).collect::<Vec<_>>()
    };
    let chain_json: Vec<serde_json::Value> =
        chain.iter().map(|(v, s)| json!({ "delta": v, "walks": sorted(s) })).collect();

    let final_ideal = tau_ideal(last, tau, &vars);
    let classified = last.iter().all(|w| w.kind_unoriented().is_some());
    let flip_ok = last
        .iter()
        .filter(|w| matches!(w.kind(), Some(WalkKind::Western | WalkKind::Eastern)))
        .all(|w| flip_epsilon(w, tau).is_some_and(|e| e.is_zero() || e.is_one()));

    let mut generators = Vec::new();
    let mut round_ok = true;
    for w in last {
        match w.kind_unoriented() {
            Some(WalkKind::Round) => match round_decomposition(g, w) {
                Some((a, b)) => {
                    round_ok &= tau_poly(&a, tau).sub(&tau_poly(&b, tau)) == tau_poly(w, tau);
                    generators.push(tau_poly(&a, tau));
                    generators.push(tau_poly(&b, tau));
                }
                None => round_ok = false,
            },
            _ => generators.push(tau_poly(w, tau)),
        }
    }
    let generated = LinearIdealBasis::new(&generators, &vars).same_ideal(&final_ideal);

    let b0 = eliminate_b0(g, &initial, tau)?;
    let b0_gb = eliminate_b0_groebner(g, &initial, tau, &Budget::default())?;
    let cross = cross_check_delta(g, &initial, tau, &route)?;
    Ok(json!({
        "graph": g.to_json_value(),
        "route": route.vertices(),
        "labeling": tau.to_json(),
        "chain": chain_json,
        "final_ideal": final_ideal.to_strings(),
        "b0_ideal": b0.as_str(),
        "checks": {
            "delta_cross_check": cross,
            "final_walks_classified": classified,
            "flip_identity": flip_ok,
            "round_decomposition": round_ok,
            "western_eastern_generate": generated,
            "groebner_agrees": b0 == b0_gb,
        }
    }))
}
