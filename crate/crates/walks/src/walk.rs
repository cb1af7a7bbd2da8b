use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use rigidcount::graph::{edge, Edge, MarkedGraph, Vertex};

use crate::WalkError;

/// Edge set E = e(G) without the marked edge {1,2}.
pub fn walk_edges(g: &MarkedGraph) -> BTreeSet<Edge> {
    g.edges().iter().copied().filter(|&e| e != (1, 2)).collect()
}

/// V = v(G) without 1 and 2.
pub fn inner_vertices(g: &MarkedGraph) -> BTreeSet<Vertex> {
    g.vertices().iter().copied().filter(|&v| v != 1 && v != 2).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WalkKind {
    Western,
    Eastern,
    Round,
}

/// Sequence of vertices whose consecutive pairs lie in E.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Walk(Vec<Vertex>);

impl Walk {
    pub fn new(g: &MarkedGraph, vertices: Vec<Vertex>) -> Result<Self, WalkError> {
        if vertices.is_empty() {
            return Err(WalkError::NotAWalk("empty vertex sequence".into()));
        }
        for w in vertices.windows(2) {
            let e = edge(w[0], w[1]);
            if w[0] == w[1] || e == (1, 2) || !g.edges().contains(&e) {
                return Err(WalkError::NotAWalk(format!("{{{},{}}} is not in E", w[0], w[1])));
            }
        }
        if vertices.len() == 1 && !g.has_vertex(vertices[0]) {
            return Err(WalkError::NotAWalk(format!("vertex {} not in graph", vertices[0])));
        }
        Ok(Walk(vertices))
    }

    /// Parses "034" (single digits) or "0,3,4" / "0-3-4".
    pub fn parse(g: &MarkedGraph, s: &str) -> Result<Self, WalkError> {
        let s = s.trim();
        let vs: Option<Vec<Vertex>> = if s.contains([',', '-']) {
            s.split([',', '-']).map(|p| p.trim().parse::<Vertex>().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10)).collect()
        };
        let vs = vs.ok_or_else(|| WalkError::NotAWalk(format!("cannot parse walk {s:?}")))?;
        Self::new(g, vs)
    }

    pub(crate) fn unchecked(vertices: Vec<Vertex>) -> Self {
        debug_assert!(!vertices.is_empty());
        Walk(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn start(&self) -> Vertex {
        self.0[0]
    }

    pub fn end(&self) -> Vertex {
        *self.0.last().expect("walks are nonempty")
    }

    /// Number of steps r.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() == 1
    }

    pub fn touches(&self, v: Vertex) -> bool {
        self.start() == v || self.end() == v
    }

    pub fn reversed(&self) -> Walk {
        Walk(self.0.iter().rev().copied().collect())
    }

    pub fn kind(&self) -> Option<WalkKind> {
        match (self.start(), self.end()) {
            (0, 1) => Some(WalkKind::Western),
            (0, 2) => Some(WalkKind::Eastern),
            (0, 0) if self.len() > 0 => Some(WalkKind::Round),
            _ => None,
        }
    }

    /// Kind of the walk or of its reversal.
    pub fn kind_unoriented(&self) -> Option<WalkKind> {
        self.kind().or_else(|| self.reversed().kind())
    }

    /// ρ⊙ρ′ with the junction ρ_r = ρ′_0 required.
    fn odot(&self, other: &Walk) -> Option<Walk> {
        if self.end() != other.start() {
            return None;
        }
        let mut v = self.0[..self.0.len() - 1].to_vec();
        v.extend_from_slice(&other.0);
        Some(Walk(v))
    }

    fn candidates(&self, other: &Walk) -> [(Walk, Walk); 4] {
        let (a, b) = (self.clone(), other.clone());
        let (ra, rb) = (self.reversed(), other.reversed());
        [(a.clone(), b.clone()), (a, rb.clone()), (ra.clone(), b), (ra, rb)]
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&v| v < 10) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join("-"))
        }
    }
}

/// ρ⊙ρ′; errors unless ρ ends where ρ′ starts.
pub fn walk_concat(a: &Walk, b: &Walk) -> Result<Walk, WalkError> {
    a.odot(b).ok_or_else(|| WalkError::PlusUndefined(a.to_string(), b.to_string()))
}

/// First of ρ⊙ρ′, ρ⊙−ρ′, −ρ⊙ρ′, −ρ⊙−ρ′ that joins at a common vertex.
pub fn walk_plus(a: &Walk, b: &Walk) -> Result<Walk, WalkError> {
    a.candidates(b)
        .iter()
        .find_map(|(x, y)| x.odot(y))
        .ok_or_else(|| WalkError::PlusUndefined(a.to_string(), b.to_string()))
}

/// Like `walk_plus`, but the junction must be the vertex `v`.
pub fn walk_plus_at(a: &Walk, b: &Walk, v: Vertex) -> Result<Walk, WalkError> {
    a.candidates(b)
        .iter()
        .filter(|(x, _)| x.end() == v)
        .find_map(|(x, y)| x.odot(y))
        .ok_or_else(|| WalkError::PlusUndefined(a.to_string(), b.to_string()))
}

/// Longer walks are larger; equal lengths compare lexicographically.
pub fn walk_cmp(a: &Walk, b: &Walk) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0))
}

pub fn walk_max<'a, I: IntoIterator<Item = &'a Walk>>(walks: I) -> Option<&'a Walk> {
    walks.into_iter().max_by(|a, b| walk_cmp(a, b))
}

/// Δ_v(Λ) with ρ = max(Λ_v ∩ Λ_0).
pub fn delta_v(walks: &BTreeSet<Walk>, v: Vertex) -> Result<BTreeSet<Walk>, WalkError> {
    let (at_v, mut out): (BTreeSet<Walk>, BTreeSet<Walk>) = walks.iter().cloned().partition(|w| w.touches(v));
    if at_v.is_empty() {
        return Ok(out);
    }
    let rho = walk_max(at_v.iter().filter(|w| w.touches(0))).ok_or(WalkError::NoMax(v))?.clone();
    for other in at_v.iter().filter(|w| **w != rho) {
        out.insert(walk_plus_at(&rho, other, v)?);
    }
    Ok(out)
}

/// Checks that Λ has one orientation of every edge of E and nothing else.
pub fn is_initial(g: &MarkedGraph, walks: &BTreeSet<Walk>) -> Result<(), WalkError> {
    let es = walk_edges(g);
    if walks.len() != es.len() {
        return Err(WalkError::NotInitial(format!("{} walks for {} edges", walks.len(), es.len())));
    }
    let mut seen = BTreeSet::new();
    for w in walks {
        if w.len() != 1 {
            return Err(WalkError::NotInitial(format!("{w} is not a single edge")));
        }
        let e = edge(w.start(), w.end());
        if !es.contains(&e) || !seen.insert(e) {
            return Err(WalkError::NotInitial(format!("{w} does not match a distinct edge of E")));
        }
    }
    Ok(())
}

/// Greedy depth-first traversal of G[V] from 0 over ascending neighbours. Backtracking steps
/// are part of the walk; it stops as soon as every vertex of V has been visited.
pub fn greedy_route(g: &MarkedGraph) -> Result<Walk, WalkError> {
    let inner = inner_vertices(g);
    if !inner.contains(&0) {
        return Err(WalkError::NoRoute);
    }
    let adj = g.adjacency();
    let mut seen: BTreeSet<Vertex> = BTreeSet::from([0]);
    let mut stack = vec![0];
    let mut route = vec![0];
    while seen.len() < inner.len() {
        let Some(&top) = stack.last() else {
            return Err(WalkError::NoRoute);
        };
        let next = adj[&top].iter().copied().find(|w| inner.contains(w) && !seen.contains(w));
        match next {
            Some(w) => {
                seen.insert(w);
                stack.push(w);
                route.push(w);
            }
            None => {
                stack.pop();
                if let Some(&back) = stack.last() {
                    route.push(back);
                }
            }
        }
    }
    Ok(Walk(route))
}

/// Checks "{ρ_0,…,ρ_r} = V and start(ρ) = 0".
pub fn is_route(g: &MarkedGraph, route: &Walk) -> bool {
    route.start() == 0 && route.0.iter().copied().collect::<BTreeSet<_>>() == inner_vertices(g)
}

/// Route vertices in order of first visit.
pub fn route_order(route: &Walk) -> Vec<Vertex> {
    let mut seen = BTreeSet::new();
    route.0.iter().copied().filter(|v| seen.insert(*v)).collect()
}

/// Initial walk set orienting each edge from the vertex visited first along `order`
/// (1 and 2 come after every route vertex).
pub fn initial_walks(g: &MarkedGraph, order: &[Vertex]) -> BTreeSet<Walk> {
    let rank = |v: Vertex| order.iter().position(|&u| u == v).unwrap_or(order.len() + v as usize);
    walk_edges(g)
        .into_iter()
        .map(|(a, b)| if rank(a) <= rank(b) { Walk(vec![a, b]) } else { Walk(vec![b, a]) })
        .collect()
}

/// Λ⁰ followed by Δ_v for every route vertex v ≠ 0 in first-visit order.
pub fn delta_chain(initial: &BTreeSet<Walk>, route: &Walk) -> Result<Vec<(Option<Vertex>, BTreeSet<Walk>)>, WalkError> {
    let mut chain = vec![(None, initial.clone())];
    for v in route_order(route).into_iter().filter(|&v| v != 0) {
        let next = delta_v(&chain.last().expect("nonempty").1, v)?;
        chain.push((Some(v), next));
    }
    Ok(chain)
}

/// Shortest walk in E from `from` to `to` (breadth first, ascending neighbours).
pub fn shortest_walk(g: &MarkedGraph, from: Vertex, to: Vertex) -> Option<Walk> {
    let es = walk_edges(g);
    let adj = g.adjacency();
    let mut parent = std::collections::BTreeMap::from([(from, from)]);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut x = to;
            while x != from {
                x = parent[&x];
                path.push(x);
            }
            path.reverse();
            return Some(Walk(path));
        }
        for &w in adj.get(&u)? {
            if es.contains(&edge(u, w)) && !parent.contains_key(&w) {
                parent.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    None
}
