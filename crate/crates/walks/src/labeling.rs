use std::collections::BTreeMap;

use rand::Rng;
use rigidcount::graph::{edge, Edge, MarkedGraph};

use crate::walk::walk_edges;
use crate::WalkError;

/// τ: E → {+1,−1} with τ(e) = +1 on every edge at vertex 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignLabeling(BTreeMap<Edge, i8>);

impl SignLabeling {
    pub fn new(g: &MarkedGraph, signs: BTreeMap<Edge, i8>) -> Result<Self, WalkError> {
        let es = walk_edges(g);
        let keys: Vec<Edge> = signs.keys().copied().collect();
        if keys != es.iter().copied().collect::<Vec<_>>() {
            return Err(WalkError::Labeling("labeling must cover exactly the edges of E".into()));
        }
        for (&(a, b), &s) in &signs {
            if s != 1 && s != -1 {
                return Err(WalkError::Labeling(format!("sign {s} on {{{a},{b}}}")));
            }
            if (a == 0 || b == 0) && s != 1 {
                return Err(WalkError::Labeling(format!("edge {{{a},{b}}} at 0 must be positive")));
            }
        }
        Ok(SignLabeling(signs))
    }

    /// Signs given as (u, v, ±1); edges at 0 may be omitted.
    pub fn from_signs(g: &MarkedGraph, signs: &[(u32, u32, i8)]) -> Result<Self, WalkError> {
        let mut map: BTreeMap<Edge, i8> =
            walk_edges(g).into_iter().filter(|(a, b)| *a == 0 || *b == 0).map(|e| (e, 1)).collect();
        for &(u, v, s) in signs {
            map.insert(edge(u, v), s);
        }
        Self::new(g, map)
    }

    pub fn all_positive(g: &MarkedGraph) -> Self {
        SignLabeling(walk_edges(g).into_iter().map(|e| (e, 1)).collect())
    }

    pub fn random(g: &MarkedGraph, rng: &mut impl Rng) -> Self {
        SignLabeling(
            walk_edges(g)
                .into_iter()
                .map(|e| (e, if e.0 == 0 || rng.gen_bool(0.5) { 1 } else { -1 }))
                .collect(),
        )
    }

    /// Lines "u v s" with s one of +, -, 1, -1; '#' starts a comment.
    pub fn parse_text(g: &MarkedGraph, src: &str) -> Result<Self, WalkError> {
        let mut signs = Vec::new();
        for (k, raw) in src.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let bad = || WalkError::Labeling(format!("line {}: expected \"u v sign\", got {line:?}", k + 1));
            if parts.len() != 3 {
                return Err(bad());
            }
            let u = parts[0].parse().map_err(|_| bad())?;
            let v = parts[1].parse().map_err(|_| bad())?;
            let s = match parts[2] {
                "+" | "1" | "+1" => 1,
                "-" | "-1" => -1,
                _ => return Err(bad()),
            };
            signs.push((u, v, s));
        }
        Self::from_signs(g, &signs)
    }

    pub fn sign(&self, u: u32, v: u32) -> i8 {
        self.0[&edge(u, v)]
    }

    pub fn signs(&self) -> &BTreeMap<Edge, i8> {
        &self.0
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.0.iter().map(|(&(a, b), &s)| serde_json::json!([a, b, s])).collect())
    }
}
