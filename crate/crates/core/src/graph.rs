use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

pub type Vertex = u32;
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid json graph: {0}")]
    Json(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge {0:?} uses a vertex not in the vertex set")]
    DanglingEdge(Edge),
    #[error("marked edge {{1,2}} is missing")]
    MissingMarkedEdge,
    #[error("graph has {0} vertices; canonical keys support at most 64")]
    TooLarge(usize),
    #[error("not a calligraph")]
    NotCalligraph,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Finite simple graph containing the marked edge {1,2}.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedGraph {
    vertices: BTreeSet<Vertex>,
    edges: BTreeSet<Edge>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<Vertex>,
    edges: Vec<[Vertex; 2]>,
}

impl MarkedGraph {
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = Edge>,
    {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !vertices.contains(&u) || !vertices.contains(&v) {
                return Err(GraphError::DanglingEdge((u, v)));
            }
            set.insert(edge(u, v));
        }
        if !set.contains(&(1, 2)) {
            return Err(GraphError::MissingMarkedEdge);
        }
        Ok(MarkedGraph { vertices, edges: set })
    }

    /// Vertex set taken from the edge endpoints.
    pub fn from_edges<E>(edges: E) -> Result<Self, GraphError>
    where
        E: IntoIterator<Item = Edge>,
    {
        let edges: Vec<Edge> = edges.into_iter().collect();
        let vertices: Vec<Vertex> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        Self::new(vertices, edges)
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_parts(vertices: BTreeSet<Vertex>, edges: BTreeSet<Edge>) -> Self {
        debug_assert!(edges.contains(&(1, 2)));
        MarkedGraph { vertices, edges }
    }

    pub fn single_edge() -> Self {
        Self::from_parts([1, 2].into(), [(1, 2)].into())
    }

    pub fn triangle() -> Self {
        Self::from_parts([0, 1, 2].into(), [(0, 1), (0, 2), (1, 2)].into())
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains(&edge(u, v))
    }

    pub fn max_vertex(&self) -> Vertex {
        *self.vertices.iter().next_back().expect("marked graph has vertices")
    }

    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn degrees(&self) -> BTreeMap<Vertex, usize> {
        let mut d: BTreeMap<Vertex, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for &(a, b) in &self.edges {
            *d.get_mut(&a).unwrap() += 1;
            *d.get_mut(&b).unwrap() += 1;
        }
        d
    }

    pub fn adjacency(&self) -> BTreeMap<Vertex, Vec<Vertex>> {
        let mut adj: BTreeMap<Vertex, Vec<Vertex>> = self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for &(a, b) in &self.edges {
            adj.get_mut(&a).unwrap().push(b);
            adj.get_mut(&b).unwrap().push(a);
        }
        adj
    }

    /// Dense view: sorted labels and index adjacency lists.
    pub fn indexed(&self) -> (Vec<Vertex>, Vec<Vec<usize>>) {
        let labels: Vec<Vertex> = self.vertices.iter().copied().collect();
        let index: BTreeMap<Vertex, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); labels.len()];
        for &(a, b) in &self.edges {
            adj[index[&a]].push(index[&b]);
            adj[index[&b]].push(index[&a]);
        }
        (labels, adj)
    }

    /// Removes a vertex other than 1 or 2 together with its edges.
    pub fn remove_vertex(&self, v: Vertex) -> Self {
        assert!(v != 1 && v != 2, "cannot remove a marked vertex");
        let mut g = self.clone();
        g.vertices.remove(&v);
        g.edges.retain(|&(a, b)| a != v && b != v);
        g
    }

    pub fn remove_edge(&self, e: Edge) -> Option<Self> {
        let e = edge(e.0, e.1);
        if e == (1, 2) || !self.edges.contains(&e) {
            return None;
        }
        let mut g = self.clone();
        g.edges.remove(&e);
        Some(g)
    }

    /// Simple-graph union with an extra edge (endpoints are added as needed).
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Self {
        assert_ne!(u, v);
        let mut g = self.clone();
        g.vertices.insert(u);
        g.vertices.insert(v);
        g.edges.insert(edge(u, v));
        g
    }

    /// Relabels by two transpositions so that edge `e` becomes the marked edge.
    pub fn remarked(&self, e: Edge) -> Self {
        let e = edge(e.0, e.1);
        let map: BTreeMap<Vertex, Vertex> = self.vertices.iter().map(|&v| (v, remark_image(e, v))).collect();
        self.relabel(&map).expect("transpositions are bijective")
    }

    pub fn union(&self, other: &MarkedGraph) -> Self {
        MarkedGraph {
            vertices: self.vertices.union(&other.vertices).copied().collect(),
            edges: self.edges.union(&other.edges).copied().collect(),
        }
    }

    /// Applies an injective relabeling; labels missing from `map` are kept.
    pub fn relabel(&self, map: &BTreeMap<Vertex, Vertex>) -> Result<Self, GraphError> {
        let f = |v: Vertex| *map.get(&v).unwrap_or(&v);
        let vertices: BTreeSet<Vertex> = self.vertices.iter().map(|&v| f(v)).collect();
        if vertices.len() != self.vertices.len() {
            return Err(GraphError::Precondition("relabeling is not injective".into()));
        }
        Self::new(vertices, self.edges.iter().map(|&(a, b)| (f(a), f(b))))
    }

    /// Induced subgraph on `keep`. The result must still contain {1,2}.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Result<Self, GraphError> {
        let edges: Vec<Edge> = self.edges.iter().copied().filter(|(a, b)| keep.contains(a) && keep.contains(b)).collect();
        Self::new(keep.iter().copied(), edges)
    }

    /// Connected components of the subgraph induced on `subset`.
    pub fn components_within(&self, subset: &BTreeSet<Vertex>) -> Vec<BTreeSet<Vertex>> {
        let adj = self.adjacency();
        let mut seen: BTreeSet<Vertex> = BTreeSet::new();
        let mut out = Vec::new();
        for &s in subset {
            if seen.contains(&s) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([s]);
            seen.insert(s);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &w in &adj[&v] {
                    if subset.contains(&w) && seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components_within(&self.vertices).len() == 1
    }

    pub fn parse_text(src: &str) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (k, raw) in src.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(GraphError::Parse { line: k + 1, msg: format!("expected \"u v\", got {line:?}") });
            }
            let p = |s: &str| {
                s.parse::<Vertex>()
                    .map_err(|_| GraphError::Parse { line: k + 1, msg: format!("invalid vertex {s:?}") })
            };
            let (u, v) = (p(parts[0])?, p(parts[1])?);
            if u == v {
                return Err(GraphError::Parse { line: k + 1, msg: format!("self-loop at {u}") });
            }
            edges.push((u, v));
        }
        Self::from_edges(edges)
    }

    pub fn parse_json(src: &str) -> Result<Self, GraphError> {
        let g: GraphJson = serde_json::from_str(src).map_err(|e| GraphError::Json(e.to_string()))?;
        Self::new(g.vertices, g.edges.into_iter().map(|[u, v]| (u, v)))
    }

    /// Accepts either format; JSON is recognised by a leading '{'.
    pub fn parse(src: &str) -> Result<Self, GraphError> {
        if src.trim_start().starts_with('{') {
            Self::parse_json(src)
        } else {
            Self::parse_text(src)
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(GraphJson {
            vertices: self.vertices.iter().copied().collect(),
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        })
        .expect("serializable")
    }
}

impl fmt::Debug for MarkedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "G[{}]", es.join(" "))
    }
}

/// Image of `v` under the relabeling used by [`MarkedGraph::remarked`].
pub fn remark_image(e: Edge, v: Vertex) -> Vertex {
    let t1 = |x: Vertex| if x == e.0 { 1 } else if x == 1 { e.0 } else { x };
    let b = t1(e.1);
    let t2 = |x: Vertex| if x == b { 2 } else if x == 2 { b } else { x };
    t2(t1(v))
}
