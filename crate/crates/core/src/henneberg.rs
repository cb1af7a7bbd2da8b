//! Henneberg constructions: exhaustive small corpus and seeded random extensions.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canonical::{canonical_form, CanonicalKey, KeyMode};
use crate::graph::{edge, remark_image, Edge, MarkedGraph, Vertex};

/// Type I: new vertex joined to `u` and `v`.
pub fn henneberg_one(g: &MarkedGraph, u: Vertex, v: Vertex) -> MarkedGraph {
    let w = g.max_vertex() + 1;
    g.with_edge(w, u).with_edge(w, v)
}

/// Type II: edge `e` replaced by a new vertex joined to both endpoints and to `x`.
/// Returns `None` when `e` is missing or `x` lies on it. The marked edge is restored by relabeling if `e` was {1,2}.
pub fn henneberg_two(g: &MarkedGraph, e: Edge, x: Vertex) -> Option<MarkedGraph> {
    if x == e.0 || x == e.1 || !g.has_vertex(x) {
        return None;
    }
    if edge(e.0, e.1) == (1, 2) {
        // mark some other edge first so that {1,2} can be removed
        let f = *g.edges().iter().find(|&&f| f != (1, 2) && f.0 != x && f.1 != x)?;
        let h = g.remarked(f);
        let img = |v| remark_image(f, v);
        return henneberg_two(&h, (img(1), img(2)), img(x));
    }
    let w = g.max_vertex() + 1;
    let h = g.remove_edge(e)?.with_edge(w, e.0).with_edge(w, e.1).with_edge(w, x);
    Some(if h.has_edge(1, 2) { h } else { h.remarked(edge(e.0, w)) })
}

fn key(g: &MarkedGraph) -> CanonicalKey {
    canonical_form(g, KeyMode::Unmarked).expect("corpus graphs contain the marked edge").key
}

/// All minimally rigid graphs with 3..=max_n vertices reachable from the triangle,
/// one representative per isomorphism class, grouped by vertex count.
pub fn corpus(max_n: usize) -> BTreeMap<usize, Vec<MarkedGraph>> {
    let mut out: BTreeMap<usize, Vec<MarkedGraph>> = BTreeMap::new();
    let mut level = vec![MarkedGraph::triangle()];
    let mut n = 3;
    while n <= max_n && !level.is_empty() {
        out.insert(n, level.clone());
        if n == max_n {
            break;
        }
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for h in extensions(g) {
                if seen.insert(key(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
        n += 1;
    }
    out
}

/// Every type I and type II extension of `g`.
pub fn extensions(g: &MarkedGraph) -> Vec<MarkedGraph> {
    let vs: Vec<Vertex> = g.vertices().iter().copied().collect();
    let mut out = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            out.push(henneberg_one(g, u, v));
        }
    }
    for &e in g.edges() {
        for &x in &vs {
            out.extend(henneberg_two(g, e, x));
        }
    }
    out
}

/// Random type I extension (seeded).
pub fn random_henneberg_one(g: &MarkedGraph, rng: &mut impl Rng) -> MarkedGraph {
    let vs: Vec<Vertex> = g.vertices().iter().copied().collect();
    let pair: Vec<Vertex> = vs.choose_multiple(rng, 2).copied().collect();
    henneberg_one(g, pair[0], pair[1])
}

/// Random minimally rigid graph with `n` vertices built by random type I/II moves from the triangle.
pub fn random_laman(n: usize, seed: u64) -> MarkedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = MarkedGraph::triangle();
    while g.vertex_count() < n {
        if rng.gen_bool(0.5) {
            let edges: Vec<Edge> = g.edges().iter().copied().collect();
            let e = *edges.choose(&mut rng).expect("nonempty");
            let x = *g.vertices().iter().filter(|&&x| x != e.0 && x != e.1).collect::<Vec<_>>().choose(&mut rng).expect("n>=3");
            if let Some(h) = henneberg_two(&g, e, *x) {
                g = h;
                continue;
            }
        }
        g = random_henneberg_one(&g, &mut rng);
    }
    g
}
