use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::graph::{MarkedGraph, Vertex};

/// Why a graph fails the Laman count conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LamanViolation {
    /// |E| differs from 2|V| - 3.
    EdgeCount { vertices: usize, edges: usize },
    /// A subgraph spans more than 2k - 3 edges on its k vertices.
    Overbraced { vertices: BTreeSet<Vertex>, edges: usize },
}

impl fmt::Display for LamanViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LamanViolation::EdgeCount { vertices, edges } => write!(
                f,
                "graph has {edges} edges but 2|V|-3 = {} for |V| = {vertices}",
                2 * *vertices as i64 - 3
            ),
            LamanViolation::Overbraced { vertices, edges } => write!(
                f,
                "subgraph on {:?} has {edges} edges, more than 2k-3 = {}",
                vertices,
                2 * vertices.len() as i64 - 3
            ),
        }
    }
}

struct PebbleGame {
    pebbles: Vec<u8>,
    out: Vec<Vec<usize>>,
}

impl PebbleGame {
    fn new(n: usize) -> Self {
        PebbleGame { pebbles: vec![2; n], out: vec![Vec::new(); n] }
    }

    /// Moves one free pebble onto `start` without touching `keep`.
    fn fetch(&mut self, start: usize, keep: usize) -> Result<(), ()> {
        let n = self.pebbles.len();
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[start] = true;
        seen[keep] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &self.out[v] {
                if seen[w] {
                    continue;
                }
                seen[w] = true;
                parent[w] = Some(v);
                if self.pebbles[w] > 0 {
                    // reverse the path w <- ... <- start
                    let mut cur = w;
                    while let Some(p) = parent[cur] {
                        let pos = self.out[p].iter().position(|&x| x == cur).unwrap();
                        self.out[p].swap_remove(pos);
                        self.out[cur].push(p);
                        cur = p;
                    }
                    self.pebbles[w] -= 1;
                    self.pebbles[start] += 1;
                    return Ok(());
                }
                stack.push(w);
            }
        }
        Err(())
    }

    fn reach(&self, from: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.pebbles.len()];
        let mut stack: Vec<usize> = from.to_vec();
        for &v in from {
            seen[v] = true;
        }
        let mut out = from.to_vec();
        while let Some(v) = stack.pop() {
            for &w in &self.out[v] {
                if !seen[w] {
                    seen[w] = true;
                    out.push(w);
                    stack.push(w);
                }
            }
        }
        out
    }

    /// Tries to insert edge (u,v) as independent. On failure returns the blocking vertex set.
    fn insert(&mut self, u: usize, v: usize) -> Result<(), Vec<usize>> {
        while self.pebbles[u] + self.pebbles[v] < 4 {
            let (a, b) = if self.pebbles[u] < 2 { (u, v) } else { (v, u) };
            if self.fetch(a, b).is_err() {
                return Err(self.reach(&[u, v]));
            }
        }
        self.pebbles[u] -= 1;
        self.out[u].push(v);
        Ok(())
    }
}

/// Runs the (2,3)-pebble game; returns the first dependent edge's blocking subgraph.
fn independence(g: &MarkedGraph) -> Result<(), BTreeSet<Vertex>> {
    let (labels, _) = g.indexed();
    let index: BTreeMap<Vertex, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut game = PebbleGame::new(labels.len());
    for &(a, b) in g.edges() {
        if let Err(reached) = game.insert(index[&a], index[&b]) {
            return Err(reached.into_iter().map(|i| labels[i]).collect());
        }
    }
    Ok(())
}

/// (2,3)-sparsity: every subgraph on k ≥ 2 vertices has at most 2k − 3 edges.
pub fn is_independent(g: &MarkedGraph) -> bool {
    independence(g).is_ok()
}

pub fn is_minimally_rigid(g: &MarkedGraph) -> bool {
    laman_violation(g).is_none()
}

pub fn laman_violation(g: &MarkedGraph) -> Option<LamanViolation> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if let Err(verts) = independence(g) {
        let edges = g.edges().iter().filter(|(a, b)| verts.contains(a) && verts.contains(b)).count();
        return Some(LamanViolation::Overbraced { vertices: verts, edges });
    }
    if 2 * n as i64 - 3 != m as i64 {
        return Some(LamanViolation::EdgeCount { vertices: n, edges: m });
    }
    None
}

/// Exhaustive check of the count conditions; exponential, for tests on small graphs.
pub fn is_minimally_rigid_brute_force(g: &MarkedGraph) -> bool {
    let labels: Vec<Vertex> = g.vertices().iter().copied().collect();
    let n = labels.len();
    if 2 * n as i64 - 3 != g.edge_count() as i64 {
        return false;
    }
    assert!(n <= 20, "brute force limited to 20 vertices");
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as i64;
        if k < 2 {
            continue;
        }
        let inside = |v: &Vertex| mask >> labels.iter().position(|x| x == v).unwrap() & 1 == 1;
        let e = g.edges().iter().filter(|(a, b)| inside(a) && inside(b)).count() as i64;
        if e > 2 * k - 3 {
            return false;
        }
    }
    true
}

/// More than three vertices and connected after deleting any two of them.
pub fn is_three_connected(g: &MarkedGraph) -> bool {
    let (labels, adj) = g.indexed();
    let n = labels.len();
    if n < 4 {
        return false;
    }
    let connected_without = |x: usize, y: usize| {
        let start = (0..n).find(|&v| v != x && v != y).unwrap();
        let mut seen = vec![false; n];
        seen[x] = true;
        seen[y] = true;
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n - 2
    };
    (0..n).all(|x| (x + 1..n).all(|y| connected_without(x, y)))
}

/// Minimally rigid after deleting any single edge (the marked edge included).
pub fn is_redundantly_rigid(g: &MarkedGraph) -> bool {
    let n = g.vertex_count() as i64;
    if g.edge_count() as i64 - 1 != 2 * n - 3 {
        return false;
    }
    let (labels, _) = g.indexed();
    let index: BTreeMap<Vertex, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    g.edges().iter().all(|&skip| {
        let mut game = PebbleGame::new(labels.len());
        g.edges().iter().filter(|&&e| e != skip).all(|&(a, b)| game.insert(index[&a], index[&b]).is_ok())
    })
}
