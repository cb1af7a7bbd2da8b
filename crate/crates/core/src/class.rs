//! Class arithmetic and the mutually recursive class / count algorithms.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::calligraph::{find_split_from, glue, Calligraph, GlueKind};
use crate::canonical::{canonical_form, CanonicalKey, KeyMode};
use crate::graph::{remark_image, GraphError, MarkedGraph};
use crate::oracle::{count_realizations_oracle, OracleConfig, OracleError};
use crate::par;
use crate::rigidity::{is_minimally_rigid, laman_violation, LamanViolation};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassVector {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl ClassVector {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        ClassVector { a: a.into(), b: b.into(), c: c.into() }
    }

    pub fn from_big(a: BigInt, b: BigInt, c: BigInt) -> Self {
        ClassVector { a, b, c }
    }

    /// The class of the mirrored calligraph (labels 1 and 2 exchanged).
    pub fn mirrored(&self) -> Self {
        ClassVector { a: self.a.clone(), b: self.c.clone(), c: self.b.clone() }
    }

    /// a ≥ b ≥ 0 and a ≥ c ≥ 0.
    pub fn satisfies_p1(&self) -> bool {
        self.a >= self.b && !self.b.is_negative() && self.a >= self.c && !self.c.is_negative()
    }

    pub fn to_i64s(&self) -> Option<(i64, i64, i64)> {
        Some((self.a.to_i64()?, self.b.to_i64()?, self.c.to_i64()?))
    }

    pub fn to_json(&self) -> Value {
        json!([big_to_json(&self.a), big_to_json(&self.b), big_to_json(&self.c)])
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let arr = v.as_array()?;
        if arr.len() != 3 {
            return None;
        }
        Some(ClassVector { a: big_from_json(&arr[0])?, b: big_from_json(&arr[1])?, c: big_from_json(&arr[2])? })
    }
}

impl fmt::Debug for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// 2(aa′ − bb′ − cc′).
pub fn class_product(u: &ClassVector, v: &ClassVector) -> BigInt {
    BigInt::from(2) * (&u.a * &v.a - &u.b * &v.b - &u.c * &v.c)
}

pub fn base_class(kind: GlueKind) -> ClassVector {
    match kind {
        GlueKind::L => ClassVector::new(1, 1, 0),
        GlueKind::R => ClassVector::new(1, 0, 1),
        GlueKind::C => ClassVector::new(2, 0, 0),
    }
}

pub fn big_to_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

pub fn big_from_json(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("not minimally rigid: {0}")]
    NotMinimallyRigid(LamanViolation),
    #[error("input is not a calligraph")]
    NotCalligraph,
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Degree2,
    Split,
    Oracle,
    Class,
    /// Value read from a persisted cache without its subtree.
    Cache,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceValue {
    Count(BigInt),
    Class(ClassVector),
}

/// One node of the execution tree.
#[derive(Clone, Debug)]
pub struct TraceNode {
    pub graph: MarkedGraph,
    pub method: Method,
    pub value: TraceValue,
    pub children: Vec<Arc<TraceNode>>,
}

impl TraceNode {
    pub fn to_json(&self) -> Value {
        let value = match &self.value {
            TraceValue::Count(c) => big_to_json(c),
            TraceValue::Class(c) => c.to_json(),
        };
        json!({
            "graph": self.graph.to_json_value(),
            "method": self.method,
            "value": value,
            "children": self.children.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }

    /// Depth-first iterator over all nodes.
    pub fn walk(&self) -> Vec<&TraceNode> {
        let mut out = vec![self];
        let mut k = 0;
        while k < out.len() {
            let node = out[k];
            out.extend(node.children.iter().map(|c| c.as_ref()));
            k += 1;
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct CountResult {
    pub count: BigInt,
    pub trace: Option<Arc<TraceNode>>,
}

#[derive(Clone, Debug)]
pub struct ClassResult {
    pub class: ClassVector,
    pub trace: Option<Arc<TraceNode>>,
}

#[derive(Clone, Debug)]
pub struct EngineConfig {
    pub oracle: OracleConfig,
    pub seed: u64,
    pub trace: bool,
    pub memo: bool,
    /// Pivot offset handed to the split search at every level.
    pub split_offset: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { oracle: OracleConfig::default(), seed: 0x5eed, trace: false, memo: true, split_offset: 0 }
    }
}

#[derive(Debug, Default)]
pub struct EngineStats {
    pub oracle_calls: AtomicU64,
    pub count_hits: AtomicU64,
    pub class_hits: AtomicU64,
    pub splits: AtomicU64,
}

#[derive(Clone)]
struct CountEntry {
    count: BigInt,
    trace: Option<Arc<TraceNode>>,
}

#[derive(Clone)]
struct ClassEntry {
    /// Class in canonical orientation.
    class: ClassVector,
    trace: Option<Arc<TraceNode>>,
    /// Orientation of the graph whose trace is stored.
    swapped: bool,
}

pub const CACHE_VERSION: u64 = 1;

/// Runs the class and count recursions with a shared memo table.
pub struct Engine {
    cfg: EngineConfig,
    counts: RwLock<HashMap<CanonicalKey, CountEntry>>,
    classes: RwLock<HashMap<CanonicalKey, ClassEntry>>,
    pub stats: EngineStats,
}

impl Engine {
    pub fn new(cfg: EngineConfig) -> Self {
        Engine { cfg, counts: RwLock::default(), classes: RwLock::default(), stats: EngineStats::default() }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.cfg
    }

    /// Number of complex realizations of a minimally rigid graph.
    pub fn get_nor(&self, g: &MarkedGraph) -> Result<CountResult, EngineError> {
        if let Some(v) = laman_violation(g) {
            return Err(EngineError::NotMinimallyRigid(v));
        }
        self.count_rigid(g)
    }

    fn count_rigid(&self, g: &MarkedGraph) -> Result<CountResult, EngineError> {
        let key = canonical_form(g, KeyMode::Unmarked)?.key;
        if self.cfg.memo {
            let hit = self.counts.read().unwrap().get(&key).cloned();
            if let Some(e) = hit {
                if !self.cfg.trace || e.trace.is_some() {
                    self.stats.count_hits.fetch_add(1, Ordering::Relaxed);
                    return Ok(CountResult { count: e.count, trace: e.trace });
                }
                if self.cfg.trace {
                    let node = Arc::new(TraceNode { graph: g.clone(), method: Method::Cache, value: TraceValue::Count(e.count.clone()), children: vec![] });
                    return Ok(CountResult { count: e.count, trace: Some(node) });
                }
            }
        }
        let (count, method, children) = self.count_fresh(g)?;
        if g.vertex_count() >= 3 && count.is_odd() {
            return Err(EngineError::Inconsistent(format!("odd count {count} for {g:?}")));
        }
        let trace = self.cfg.trace.then(|| Arc::new(TraceNode { graph: g.clone(), method, value: TraceValue::Count(count.clone()), children }));
        if self.cfg.memo {
            self.counts.write().unwrap().insert(key, CountEntry { count: count.clone(), trace: trace.clone() });
        }
        Ok(CountResult { count, trace })
    }

    fn count_fresh(&self, g: &MarkedGraph) -> Result<(BigInt, Method, Vec<Arc<TraceNode>>), EngineError> {
        let halve = |h: MarkedGraph| -> Result<(BigInt, Method, Vec<Arc<TraceNode>>), EngineError> {
            let sub = self.count_rigid(&h)?;
            Ok((sub.count * 2, Method::Degree2, sub.trace.into_iter().collect()))
        };
        if g.vertex_count() > 3 {
            if let Some(h) = drop_degree2(g, false) {
                return halve(h);
            }
        }
        let split = if g.vertex_count() >= 7 { find_split_from(g, self.cfg.split_offset)? } else { None };
        if split.is_none() && g.vertex_count() > 3 {
            if let Some(h) = drop_degree2(g, true) {
                return halve(h);
            }
        }
        if let Some(split) = split {
            self.stats.splits.fetch_add(1, Ordering::Relaxed);
            let (l, r) = par::join(|| self.class_of(&split.left), || self.class_of(&split.right));
            let (l, r) = (l?, r?);
            let count = class_product(&l.class, &r.class);
            let children = l.trace.into_iter().chain(r.trace).collect();
            return Ok((count, Method::Split, children));
        }
        self.stats.oracle_calls.fetch_add(1, Ordering::Relaxed);
        let c = count_realizations_oracle(g, self.cfg.seed, &self.cfg.oracle)?;
        Ok((BigInt::from(c), Method::Oracle, Vec::new()))
    }

    /// Class of a calligraph.
    pub fn get_class(&self, c: &Calligraph) -> Result<ClassResult, EngineError> {
        self.class_of(c)
    }

    /// Class of a marked graph after checking the calligraph predicate.
    pub fn get_class_of_graph(&self, g: &MarkedGraph) -> Result<ClassResult, EngineError> {
        let c = Calligraph::new(g.clone()).map_err(|_| EngineError::NotCalligraph)?;
        self.class_of(&c)
    }

    fn class_of(&self, c: &Calligraph) -> Result<ClassResult, EngineError> {
        let g = c.graph();
        let form = canonical_form(g, KeyMode::Marked)?;
        if self.cfg.memo {
            let hit = self.classes.read().unwrap().get(&form.key).cloned();
            if let Some(e) = hit {
                let class = if form.swapped { e.class.mirrored() } else { e.class.clone() };
                if !self.cfg.trace || e.trace.is_some() {
                    self.stats.class_hits.fetch_add(1, Ordering::Relaxed);
                    let trace = match e.trace {
                        Some(t) if e.swapped == form.swapped => Some(t),
                        Some(t) => Some(Arc::new(TraceNode { graph: g.clone(), method: Method::Class, value: TraceValue::Class(class.clone()), children: t.children.clone() })),
                        None => None,
                    };
                    return Ok(ClassResult { class, trace });
                }
                let node = Arc::new(TraceNode { graph: g.clone(), method: Method::Cache, value: TraceValue::Class(class.clone()), children: vec![] });
                return Ok(ClassResult { class, trace: Some(node) });
            }
        }
        let (class, children) = self.class_fresh(g)?;
        if !class.satisfies_p1() {
            return Err(EngineError::Inconsistent(format!("class {class} of {g:?} violates a>=b>=0, a>=c>=0")));
        }
        let trace = self.cfg.trace.then(|| Arc::new(TraceNode { graph: g.clone(), method: Method::Class, value: TraceValue::Class(class.clone()), children }));
        if self.cfg.memo {
            let stored = if form.swapped { class.mirrored() } else { class.clone() };
            self.classes.write().unwrap().insert(form.key, ClassEntry { class: stored, trace: trace.clone(), swapped: form.swapped });
        }
        Ok(ClassResult { class, trace })
    }

    fn class_fresh(&self, g: &MarkedGraph) -> Result<(ClassVector, Vec<Arc<TraceNode>>), EngineError> {
        let gl = glue(g, GlueKind::L);
        let gr = glue(g, GlueKind::R);
        let (l_rigid, r_rigid) = (is_minimally_rigid(&gl), is_minimally_rigid(&gr));
        let half = |x: BigInt, what: &str| -> Result<BigInt, EngineError> {
            let (q, r) = x.div_rem(&BigInt::from(2));
            if r.is_zero() {
                Ok(q)
            } else {
                Err(EngineError::Inconsistent(format!("{what} = {x} is odd")))
            }
        };
        match (l_rigid, r_rigid) {
            (false, false) => Err(EngineError::Inconsistent(format!("neither G∪L nor G∪R is minimally rigid for {g:?}"))),
            (false, true) => {
                let r = self.count_rigid(&gr)?;
                let m = half(r.count, "c(G∪R)")?;
                Ok((ClassVector::from_big(m.clone(), m, BigInt::zero()), r.trace.into_iter().collect()))
            }
            (true, false) => {
                let l = self.count_rigid(&gl)?;
                let m = half(l.count, "c(G∪L)")?;
                Ok((ClassVector::from_big(m.clone(), BigInt::zero(), m), l.trace.into_iter().collect()))
            }
            (true, true) => {
                let gc = glue(g, GlueKind::C);
                let ((l, r), c) = par::join(
                    || par::join(|| self.count_rigid(&gl), || self.count_rigid(&gr)),
                    || self.count_rigid(&gc),
                );
                let (l, r, c) = (l?, r?, c?);
                let (a, rem) = c.count.div_rem(&BigInt::from(4));
                if !rem.is_zero() {
                    return Err(EngineError::Inconsistent(format!("c(G∪C) = {} not divisible by 4", c.count)));
                }
                let b = &a - half(l.count, "c(G∪L)")?;
                let cc = &a - half(r.count, "c(G∪R)")?;
                let children = [l.trace, r.trace, c.trace].into_iter().flatten().collect();
                Ok((ClassVector::from_big(a, b, cc), children))
            }
        }
    }

    pub fn cache_len(&self) -> (usize, usize) {
        (self.counts.read().unwrap().len(), self.classes.read().unwrap().len())
    }

    pub fn cache_to_json(&self) -> Value {
        let counts: BTreeMap<String, Value> =
            self.counts.read().unwrap().iter().map(|(k, e)| (k.to_hex(), big_to_json(&e.count))).collect();
        let classes: BTreeMap<String, Value> =
            self.classes.read().unwrap().iter().map(|(k, e)| (k.to_hex(), e.class.to_json())).collect();
        json!({ "version": CACHE_VERSION, "counts": counts, "classes": classes })
    }

    /// Merges a persisted cache. Returns the number of entries read.
    pub fn load_cache_json(&self, v: &Value) -> Result<usize, String> {
        if v.get("version").and_then(Value::as_u64) != Some(CACHE_VERSION) {
            return Err("cache version mismatch".into());
        }
        let counts = v.get("counts").and_then(Value::as_object).ok_or("missing counts")?;
        let classes = v.get("classes").and_then(Value::as_object).ok_or("missing classes")?;
        let mut parsed_counts = Vec::new();
        for (k, val) in counts {
            let key = CanonicalKey::from_hex(k).ok_or("bad key")?;
            let count = big_from_json(val).ok_or("bad count")?;
            parsed_counts.push((key, count));
        }
        let mut parsed_classes = Vec::new();
        for (k, val) in classes {
            let key = CanonicalKey::from_hex(k).ok_or("bad key")?;
            let class = ClassVector::from_json(val).ok_or("bad class")?;
            parsed_classes.push((key, class));
        }
        let n = parsed_counts.len() + parsed_classes.len();
        let mut cw = self.counts.write().unwrap();
        for (k, count) in parsed_counts {
            cw.entry(k).or_insert(CountEntry { count, trace: None });
        }
        let mut kw = self.classes.write().unwrap();
        for (k, class) in parsed_classes {
            kw.entry(k).or_insert(ClassEntry { class, trace: None, swapped: false });
        }
        Ok(n)
    }

    pub fn load_cache_file(&self, path: &Path) -> Result<usize, String> {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        let v: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        self.load_cache_json(&v)
    }

    pub fn save_cache_file(&self, path: &Path) -> std::io::Result<()> {
        let text = serde_json::to_string_pretty(&self.cache_to_json()).expect("serializable");
        std::fs::write(path, text)
    }
}

/// Removes one degree-2 vertex. Vertices 1 and 2 are only considered when `marked` is set, in
/// which case another edge is re-marked first.
pub fn drop_degree2(g: &MarkedGraph, marked: bool) -> Option<MarkedGraph> {
    let degrees = g.degrees();
    let v = degrees
        .iter()
        .filter(|&(&v, &d)| d == 2 && (marked || (v != 1 && v != 2)))
        .map(|(&v, _)| v)
        .min_by_key(|&v| (v == 1 || v == 2, v))?;
    if v != 1 && v != 2 {
        return Some(g.remove_vertex(v));
    }
    let e = *g.edges().iter().find(|&&(a, b)| a != v && b != v)?;
    Some(g.remarked(e).remove_vertex(remark_image(e, v)))
}
