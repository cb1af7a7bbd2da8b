//! Canonical forms for memoization.
//!
//! Vertices are coloured (vertex 0, the pair {1,2}, everything else), the colouring is refined
//! to an equitable partition, and ties are broken by trying every vertex of the first smallest
//! non-singleton cell. The lexicographically smallest adjacency encoding over all leaves is the
//! key.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{GraphError, MarkedGraph, Vertex};

pub const MAX_KEY_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        if s.len() % 2 != 0 {
            return None;
        }
        let bytes: Option<Vec<u8>> = (0..s.len()).step_by(2).map(|i| u8::from_str_radix(s.get(i..i + 2)?, 16).ok()).collect();
        bytes.map(CanonicalKey)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

/// Which vertices keep their identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KeyMode {
    /// Vertex 0 fixed, {1,2} fixed setwise.
    Marked,
    /// Plain graph isomorphism.
    Unmarked,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub key: CanonicalKey,
    /// Canonical position of every vertex, indexed like the sorted vertex list.
    pub positions: Vec<(Vertex, usize)>,
    /// In marked mode: vertex 2 precedes vertex 1 in the canonical order.
    pub swapped: bool,
}

pub fn canonical_key(g: &MarkedGraph) -> Result<CanonicalKey, GraphError> {
    canonical_form(g, KeyMode::Marked).map(|c| c.key)
}

pub fn canonical_form(g: &MarkedGraph, mode: KeyMode) -> Result<CanonicalForm, GraphError> {
    let (labels, adj) = g.indexed();
    let n = labels.len();
    if n > MAX_KEY_VERTICES {
        return Err(GraphError::TooLarge(n));
    }
    let initial: Vec<u32> = labels
        .iter()
        .map(|&v| match mode {
            KeyMode::Unmarked => 0,
            KeyMode::Marked => match v {
                0 => 0,
                1 | 2 => 1,
                _ => 2,
            },
        })
        .collect();
    let mut header = vec![n as u8];
    for c in 0..3u32 {
        header.push(initial.iter().filter(|&&x| x == c).count() as u8);
    }
    let mut bits = vec![0u64; n];
    for (v, ns) in adj.iter().enumerate() {
        for &w in ns {
            bits[v] |= 1 << w;
        }
    }
    let mut search = Search { adj: &adj, bits: &bits, n, best: None };
    search.run(initial);
    let (code, perm) = search.best.expect("at least one leaf");
    let mut key = header;
    key.extend(code);
    let positions: Vec<(Vertex, usize)> = labels.iter().enumerate().map(|(i, &v)| (v, perm[i])).collect();
    let pos = |label: Vertex| positions.iter().find(|(v, _)| *v == label).map(|&(_, p)| p);
    let swapped = match (mode, pos(1), pos(2)) {
        (KeyMode::Marked, Some(p1), Some(p2)) => p2 < p1,
        _ => false,
    };
    Ok(CanonicalForm { key: CanonicalKey(key), positions, swapped })
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    bits: &'a [u64],
    n: usize,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl<'a> Search<'a> {
    /// Equitable refinement; colours are renumbered densely in a label-independent way.
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let mut ncolors = distinct(&colors);
        loop {
            let sigs: Vec<(u32, Vec<u32>)> = (0..self.n)
                .map(|v| {
                    let mut s: Vec<u32> = self.adj[v].iter().map(|&w| colors[w]).collect();
                    s.sort_unstable();
                    (colors[v], s)
                })
                .collect();
            let mut uniq: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
            uniq.sort();
            uniq.dedup();
            colors = sigs.iter().map(|s| uniq.binary_search(&s).unwrap() as u32).collect();
            if uniq.len() == ncolors {
                return colors;
            }
            ncolors = uniq.len();
        }
    }

    fn run(&mut self, colors: Vec<u32>) {
        let colors = self.refine(colors);
        let k = distinct(&colors);
        if k == self.n {
            self.leaf(&colors);
            return;
        }
        // first smallest non-singleton cell
        let mut sizes = vec![0usize; k];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let cell = (0..k).filter(|&c| sizes[c] > 1).min_by_key(|&c| (sizes[c], c)).unwrap() as u32;
        for v in 0..self.n {
            if colors[v] != cell {
                continue;
            }
            let next: Vec<u32> = (0..self.n)
                .map(|u| 2 * colors[u] + u32::from(colors[u] == cell && u != v))
                .collect();
            self.run(next);
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let mut inv = vec![0usize; self.n];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        let mut code = Vec::with_capacity(self.n * 8);
        for i in 0..self.n {
            let row = self.bits[inv[i]];
            let mut canon: u64 = 0;
            for (j, &w) in inv.iter().enumerate() {
                if row >> w & 1 == 1 {
                    canon |= 1 << j;
                }
            }
            code.extend_from_slice(&canon.to_be_bytes());
        }
        match &self.best {
            Some((b, _)) if *b <= code => {}
            _ => self.best = Some((code, perm)),
        }
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}
