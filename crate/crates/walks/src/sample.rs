use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rigidcount::graph::{MarkedGraph, Vertex};
use rigidcount::henneberg::random_laman;
use rigidcount::is_calligraph;

use crate::labeling::SignLabeling;
use crate::walk::greedy_route;
use crate::WalkError;

/// Random calligraph with `n` vertices (3 ≤ n) that admits a route: a random Laman graph
/// loses one edge and is relabeled so that another edge becomes {1,2}.
pub fn random_calligraph(n: usize, rng: &mut impl Rng) -> MarkedGraph {
    assert!(n >= 3, "calligraphs need vertices 0, 1 and 2");
    loop {
        let k = random_laman(n, rng.gen());
        let edges: Vec<(Vertex, Vertex)> = k.edges().iter().copied().collect();
        let drop = *edges.choose(rng).expect("nonempty");
        let marked = *edges.iter().filter(|&&e| e != drop).collect::<Vec<_>>().choose(rng).expect("at least two edges");
        let mut rest: Vec<Vertex> = k.vertices().iter().copied().filter(|&v| v != marked.0 && v != marked.1).collect();
        rest.shuffle(rng);
        let mut map = BTreeMap::from([(marked.0, 1), (marked.1, 2)]);
        for (i, v) in rest.into_iter().enumerate() {
            map.insert(v, if i == 0 { 0 } else { i as Vertex + 2 });
        }
        let Some(g) = k.remove_edge(drop).and_then(|h| h.relabel(&map).ok()) else {
            continue;
        };
        if is_calligraph(&g) && greedy_route(&g).is_ok() {
            return g;
        }
    }
}

/// Deterministic (calligraph, labeling) pair with 3..=max_n vertices.
pub fn random_instance(seed: u64, max_n: usize) -> (MarkedGraph, SignLabeling) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(3..=max_n.max(3));
    let g = random_calligraph(n, &mut rng);
    let tau = SignLabeling::random(&g, &mut rng);
    (g, tau)
}

/// Outcome of the elimination checks on one random instance.
#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub seed: u64,
    pub vertices: usize,
    pub b0: Result<crate::B0Ideal, WalkError>,
    pub groebner: Result<crate::B0Ideal, WalkError>,
    pub cross_check: Result<bool, WalkError>,
}

impl SweepOutcome {
    pub fn holds(&self) -> bool {
        self.b0.is_ok() && self.b0 == self.groebner && self.cross_check == Ok(true)
    }
}

/// Runs eliminate_b0 (row reduction and Gröbner) and the Δ cross-check on every seed.
pub fn sweep(seeds: &[u64], max_n: usize) -> Vec<SweepOutcome> {
    rigidcount::par::map(seeds, |&seed| {
        let (g, tau) = random_instance(seed, max_n);
        let route = greedy_route(&g).expect("sampled calligraphs have routes");
        let initial = crate::initial_walks(&g, &crate::route_order(&route));
        SweepOutcome {
            seed,
            vertices: g.vertex_count(),
            b0: crate::eliminate_b0(&g, &initial, &tau),
            groebner: crate::eliminate_b0_groebner(&g, &initial, &tau, &rigid_algebra::Budget::default()),
            cross_check: crate::cross_check_delta(&g, &initial, &tau, &route),
        }
    })
}
