use std::collections::{BTreeSet, VecDeque};

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rigidcount::graph::{MarkedGraph, Vertex};
use rigid_walks::ideal::{LinearIdealBasis, LinearPoly, Var};
use rigid_walks::sample::{random_instance, sweep};
use rigid_walks::walk::walk_edges;
use rigid_walks::{
    cross_check_delta, delta_chain, eliminate_b0, flip_epsilon, greedy_route, round_decomposition, route_order,
    tau_poly, variable_order, B0Ideal, SignLabeling, Walk, WalkKind,
};

fn random_orientation(g: &MarkedGraph, rng: &mut impl Rng) -> BTreeSet<Walk> {
    walk_edges(g)
        .into_iter()
        .map(|(a, b)| Walk::new(g, if rng.gen_bool(0.5) { vec![a, b] } else { vec![b, a] }).unwrap())
        .collect()
}

/// Random walk from 0 that stops on first reaching 1 or 2.
fn random_outer_walk(g: &MarkedGraph, rng: &mut impl Rng) -> Option<Walk> {
    let es = walk_edges(g);
    let mut vs = vec![0];
    for _ in 0..40 {
        let here = *vs.last().unwrap();
        let next: Vec<Vertex> = g.neighbors(here).into_iter().filter(|&w| es.contains(&rigidcount::graph::edge(here, w))).collect();
        let &w = next.choose(rng)?;
        vs.push(w);
        if w == 1 || w == 2 {
            return Some(Walk::new(g, vs).unwrap());
        }
    }
    None
}

/// Vertices reachable from 0 along positive edges.
fn positive_component(g: &MarkedGraph, tau: &SignLabeling) -> BTreeSet<Vertex> {
    let mut seen = BTreeSet::from([0]);
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if (u, w) != (1, 2) && (w, u) != (1, 2) && tau.sign(u, w) == 1 && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen
}

/// p∘λ with λ: b_v ↦ b_v + b0/2 for v ∈ K∖{0}.
fn compose_lambda(p: &LinearPoly, k: &BTreeSet<Vertex>) -> LinearPoly {
    let half = LinearPoly::var(Var::B(0)).scale(&rigid_algebra::Rational::new(1.into(), 2.into()));
    k.iter().filter(|&&v| v != 0).fold(p.clone(), |acc, &v| acc.add(&half.scale(&p.coeff(Var::B(v)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn delta_along_route_leaves_only_outer_walks(seed in any::<u64>()) {
        let (g, tau) = random_instance(seed, 8);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let initial = random_orientation(&g, &mut rng);
        let route = greedy_route(&g).unwrap();
        let chain = delta_chain(&initial, &route).unwrap();
        for w in &chain.last().unwrap().1 {
            prop_assert!(w.kind_unoriented().is_some(), "{w} is not western, eastern or round");
        }
        prop_assert!(cross_check_delta(&g, &initial, &tau, &route).unwrap());
    }

    #[test]
    fn outer_walks_follow_chi(seed in any::<u64>()) {
        let (g, tau) = random_instance(seed, 8);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        for _ in 0..8 {
            let Some(w) = random_outer_walk(&g, &mut rng) else { continue };
            let eps = flip_epsilon(&w, &tau).expect("difference is constant");
            let want = if w.end() == 1 { "0" } else { "1" };
            prop_assert_eq!(eps.to_string(), want, "walk {}", w);
        }
    }

    #[test]
    fn round_walks_split_into_western_walks(seed in any::<u64>()) {
        let (g, tau) = random_instance(seed, 8);
        let route = greedy_route(&g).unwrap();
        let initial = rigid_walks::initial_walks(&g, &route_order(&route));
        let chain = delta_chain(&initial, &route).unwrap();
        for w in chain.last().unwrap().1.iter().filter(|w| w.kind() == Some(WalkKind::Round)) {
            let (a, b) = round_decomposition(&g, w).expect("1 or 2 is reachable");
            let want = if g.degree(1) > 1 { WalkKind::Western } else { WalkKind::Eastern };
            prop_assert_eq!(a.kind(), Some(want));
            prop_assert_eq!(b.kind(), Some(want));
            prop_assert_eq!(tau_poly(&a, &tau).sub(&tau_poly(&b, &tau)), tau_poly(w, &tau));
        }
    }

    #[test]
    fn b0_ideal_matches_positive_exits(seed in any::<u64>()) {
        let (g, tau) = random_instance(seed, 8);
        let route = greedy_route(&g).unwrap();
        let order = route_order(&route);
        let initial = rigid_walks::initial_walks(&g, &order);
        let b0 = eliminate_b0(&g, &initial, &tau).unwrap();
        let k = positive_component(&g, &tau);
        let allowed: &[B0Ideal] = match (k.contains(&1), k.contains(&2)) {
            (true, true) => &[B0Ideal::One],
            (true, false) => &[B0Ideal::B0, B0Ideal::One],
            (false, true) => &[B0Ideal::B0Plus1, B0Ideal::One],
            (false, false) => &[B0Ideal::Zero, B0Ideal::One],
        };
        prop_assert!(allowed.contains(&b0), "{:?} with positive component {:?}", b0, k);

        if !k.contains(&1) && !k.contains(&2) {
            let chain = delta_chain(&initial, &route).unwrap();
            let last = &chain.last().unwrap().1;
            let mut gens = Vec::new();
            for w in last {
                match round_decomposition(&g, w) {
                    Some((a, b)) => gens.extend([tau_poly(&a, &tau), tau_poly(&b, &tau)]),
                    None => gens.push(tau_poly(w, &tau)),
                }
            }
            for p in &gens {
                prop_assert!(num_traits::Zero::is_zero(&compose_lambda(p, &k).coeff(Var::B(0))));
            }
            let vars = variable_order(&order);
            let consistent = !LinearIdealBasis::new(&gens, &vars).is_unit();
            prop_assert_eq!(b0 == B0Ideal::Zero, consistent);
        }
    }
}

#[test]
fn elimination_holds_on_256_random_pairs() {
    let seeds: Vec<u64> = (0..256).collect();
    let outcomes = sweep(&seeds, 8);
    assert!(outcomes.iter().any(|o| o.vertices == 8));
    for o in &outcomes {
        assert!(o.holds(), "seed {}: {:?}", o.seed, o);
    }
    let kinds: BTreeSet<&str> = outcomes.iter().map(|o| o.b0.as_ref().unwrap().as_str()).collect();
    assert_eq!(kinds.len(), 4, "all four ideals occur: {kinds:?}");
}
