use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::graph::{edge, Edge, GraphError, MarkedGraph, Vertex};
use crate::rigidity::{is_minimally_rigid, is_redundantly_rigid, is_three_connected};

/// The three gadgets glued onto a calligraph by the class algorithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GlueKind {
    L,
    R,
    C,
}

impl GlueKind {
    pub const ALL: [GlueKind; 3] = [GlueKind::L, GlueKind::R, GlueKind::C];
}

/// Returns G∪L, G∪R or G∪C_v with v = max(v(G)) + 1.
pub fn glue(g: &MarkedGraph, kind: GlueKind) -> MarkedGraph {
    match kind {
        GlueKind::L => g.with_edge(0, 1),
        GlueKind::R => g.with_edge(0, 2),
        GlueKind::C => {
            let v = g.max_vertex() + 1;
            g.with_edge(v, 0).with_edge(v, 1).with_edge(v, 2)
        }
    }
}

pub fn is_calligraph(g: &MarkedGraph) -> bool {
    g.has_vertex(0) && is_minimally_rigid(&glue(g, GlueKind::C))
}

/// A marked graph with vertex 0 such that gluing C_v yields a minimally rigid graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Calligraph(MarkedGraph);

impl Calligraph {
    pub fn new(g: MarkedGraph) -> Result<Self, GraphError> {
        if is_calligraph(&g) {
            Ok(Calligraph(g))
        } else {
            Err(GraphError::NotCalligraph)
        }
    }

    pub fn graph(&self) -> &MarkedGraph {
        &self.0
    }

    pub fn into_graph(self) -> MarkedGraph {
        self.0
    }

    pub fn l() -> Self {
        Calligraph(MarkedGraph::from_parts([0, 1, 2].into(), [(0, 1), (1, 2)].into()))
    }

    pub fn r() -> Self {
        Calligraph(MarkedGraph::from_parts([0, 1, 2].into(), [(0, 2), (1, 2)].into()))
    }

    pub fn c3() -> Self {
        Calligraph(MarkedGraph::from_parts([0, 1, 2, 3].into(), [(0, 3), (1, 2), (1, 3), (2, 3)].into()))
    }

    pub fn glue(&self, kind: GlueKind) -> MarkedGraph {
        glue(&self.0, kind)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CalligraphicSplit {
    pub left: Calligraph,
    pub right: Calligraph,
    /// Original labels of the chosen marked edge and vertex 0.
    pub pivot: (Edge, Vertex),
    /// The input graph after relabeling; equals left ∪ right.
    pub relabeled: MarkedGraph,
}

impl CalligraphicSplit {
    pub fn is_non_trivial(&self) -> bool {
        let n = self.relabeled.vertex_count();
        let (a, b) = (self.left.graph().vertex_count(), self.right.graph().vertex_count());
        n >= a + 2 && a >= b
    }

    /// Both split axioms: shared edges are exactly {1,2} and shared vertices exactly {0,1,2}.
    pub fn satisfies_axioms(&self) -> bool {
        let (l, r) = (self.left.graph(), self.right.graph());
        let shared_e: BTreeSet<Edge> = l.edges().intersection(r.edges()).copied().collect();
        let shared_v: BTreeSet<Vertex> = l.vertices().intersection(r.vertices()).copied().collect();
        shared_e == BTreeSet::from([(1, 2)])
            && shared_v == BTreeSet::from([0, 1, 2])
            && l.union(r) == self.relabeled
    }
}

/// Relabels so that `e` becomes {1,2} (smaller endpoint to 1), `zero` becomes 0, and the
/// remaining vertices become 3,4,… in ascending original order.
pub fn pivot_relabel(g: &MarkedGraph, e: Edge, zero: Vertex) -> MarkedGraph {
    let (a, b) = edge(e.0, e.1);
    let mut map: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    map.insert(a, 1);
    map.insert(b, 2);
    map.insert(zero, 0);
    let mut next = 3;
    for &v in g.vertices() {
        if v != a && v != b && v != zero {
            map.insert(v, next);
            next += 1;
        }
    }
    g.relabel(&map).expect("pivot relabeling is a bijection")
}

/// Largest number of attachment blocks for which every grouping is tried.
const MAX_BLOCKS: usize = 16;

/// All non-trivial splits obtainable with the given pivot, in mask order.
fn splits_at(g: &MarkedGraph, e: Edge, zero: Vertex) -> Vec<CalligraphicSplit> {
    let h = pivot_relabel(g, e, zero);
    let rest: BTreeSet<Vertex> = h.vertices().iter().copied().filter(|&v| v > 2).collect();
    let comps = h.components_within(&rest);
    // blocks: each component with its incident edges, and loose edges inside {0,1,2}
    let mut blocks: Vec<(BTreeSet<Vertex>, BTreeSet<Edge>)> = comps
        .into_iter()
        .map(|c| {
            let es = h.edges().iter().copied().filter(|(a, b)| c.contains(a) || c.contains(b)).collect();
            (c, es)
        })
        .collect();
    for loose in [(0, 1), (0, 2)] {
        if h.has_edge(loose.0, loose.1) {
            blocks.push((BTreeSet::new(), BTreeSet::from([loose])));
        }
    }
    let k = blocks.len();
    if !(2..=MAX_BLOCKS).contains(&k) {
        return Vec::new();
    }
    let mut out = Vec::new();
    // block 0 always on the first side to avoid mirrored duplicates
    for mask in 0u32..(1 << (k - 1)) {
        let side = |i: usize| i == 0 || (mask >> (i - 1)) & 1 == 1;
        if (0..k).all(side) {
            continue;
        }
        let build = |want: bool| {
            let mut vs: BTreeSet<Vertex> = BTreeSet::from([0, 1, 2]);
            let mut es: BTreeSet<Edge> = BTreeSet::from([(1, 2)]);
            for (i, (bv, be)) in blocks.iter().enumerate() {
                if side(i) == want {
                    vs.extend(bv);
                    es.extend(be);
                }
            }
            MarkedGraph::from_parts(vs, es)
        };
        let (a, b) = (build(true), build(false));
        let (a, b) = if a.vertex_count() >= b.vertex_count() { (a, b) } else { (b, a) };
        if b.vertex_count() < 5 {
            continue;
        }
        let count_ok = |x: &MarkedGraph| x.edge_count() + 4 == 2 * x.vertex_count();
        if !count_ok(&a) || !count_ok(&b) || !is_calligraph(&a) || !is_calligraph(&b) {
            continue;
        }
        out.push(CalligraphicSplit {
            left: Calligraph(a),
            right: Calligraph(b),
            pivot: (edge(e.0, e.1), zero),
            relabeled: h.clone(),
        });
    }
    out
}

fn check_split_pre(g: &MarkedGraph) -> Result<(), GraphError> {
    if !is_minimally_rigid(g) {
        return Err(GraphError::Precondition("find_split needs a minimally rigid graph".into()));
    }
    if let Some(v) = g.vertices().iter().find(|&&v| v != 1 && v != 2 && g.degree(v) == 2) {
        return Err(GraphError::Precondition(format!("vertex {v} has degree 2")));
    }
    Ok(())
}

/// The graph's own marking first (when it has a vertex 0), then edges lexicographically and
/// vertices ascending.
fn pivots(g: &MarkedGraph) -> Vec<(Edge, Vertex)> {
    let own = g.has_vertex(0).then_some(((1, 2), 0));
    let mut free = Vec::new();
    let mut touching = Vec::new();
    for &e in g.edges() {
        let bucket = if (1..=2).contains(&e.0) || (1..=2).contains(&e.1) { &mut touching } else { &mut free };
        for &v in g.vertices() {
            if v != e.0 && v != e.1 && Some((e, v)) != own {
                bucket.push((e, v));
            }
        }
    }
    own.into_iter().chain(free).chain(touching).collect()
}

/// First non-trivial calligraphic split in pivot order: the existing marked edge with vertex 0,
/// then edges avoiding vertices 1 and 2, then the rest. Edges go lexicographically, vertices ascending.
pub fn find_split(g: &MarkedGraph) -> Result<Option<CalligraphicSplit>, GraphError> {
    find_split_from(g, 0)
}

/// Like [`find_split`] but starts the scan at pivot number `offset` (wrapping around).
pub fn find_split_from(g: &MarkedGraph, offset: usize) -> Result<Option<CalligraphicSplit>, GraphError> {
    if g.vertex_count() < 7 && is_minimally_rigid(g) {
        return Ok(None);
    }
    check_split_pre(g)?;
    let ps = pivots(g);
    let len = ps.len();
    for k in 0..len {
        let (e, v) = ps[(k + offset) % len];
        if let Some(s) = splits_at(g, e, v).into_iter().next() {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Every non-trivial split over all pivots; used for tracing and tests.
pub fn all_splits(g: &MarkedGraph) -> Result<Vec<CalligraphicSplit>, GraphError> {
    check_split_pre(g)?;
    Ok(pivots(g).into_iter().flat_map(|(e, v)| splits_at(g, e, v)).collect())
}

/// Removes degree-2 vertices outside {1,2} (and outside {0} when `keep_zero`) while more than
/// three vertices remain. Returns the reduced graph and the number of removals.
pub fn strip_degree2(g: &MarkedGraph, keep_zero: bool) -> (MarkedGraph, u32) {
    let mut g = g.clone();
    let mut k = 0;
    loop {
        if g.vertex_count() <= 3 {
            return (g, k);
        }
        let degrees = g.degrees();
        let pick = degrees
            .iter()
            .find(|&(&v, &d)| d == 2 && v != 1 && v != 2 && !(keep_zero && v == 0))
            .map(|(&v, _)| v);
        match pick {
            Some(v) => {
                g = g.remove_vertex(v);
                k += 1;
            }
            None => return (g, k),
        }
    }
}

/// G∪L∪R is 3-connected and redundantly rigid.
pub fn is_thin(c: &Calligraph) -> bool {
    let g = c.graph().with_edge(0, 1).with_edge(0, 2);
    if c.graph().has_edge(0, 1) || c.graph().has_edge(0, 2) {
        return false;
    }
    is_three_connected(&g) && is_redundantly_rigid(&g)
}
