use std::collections::BTreeSet;

use num_bigint::BigInt;
use rigidcount::calligraph::{find_split, is_thin, strip_degree2, Calligraph};
use rigidcount::canonical::canonical_key;
use rigidcount::class::{base_class, class_product, Method, TraceValue};
use rigidcount::{glue, is_calligraph, ClassVector, Engine, EngineConfig, GlueKind, MarkedGraph};

fn graph(name: &str) -> MarkedGraph {
    let path = format!("{}/../../data/graphs/{name}.txt", env!("CARGO_MANIFEST_DIR"));
    MarkedGraph::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn calligraph(name: &str) -> Calligraph {
    Calligraph::new(graph(name)).unwrap()
}

fn engine_with_bound(max_vertices: usize, trace: bool) -> Engine {
    let mut cfg = EngineConfig { trace, ..EngineConfig::default() };
    cfg.oracle.max_vertices = max_vertices;
    Engine::new(cfg)
}

#[test]
fn calligraph_recognition() {
    assert!(is_calligraph(Calligraph::l().graph()));
    assert!(is_calligraph(&graph("C3")));
    assert!(!is_calligraph(&MarkedGraph::triangle()));
    assert!(is_calligraph(&graph("H")) && is_calligraph(&graph("F")));
}

#[test]
fn degree2_reduction_of_u_gives_v() {
    let (u, v) = (graph("U"), graph("V"));
    let (reduced, k) = strip_degree2(&u, true);
    assert_eq!(k, 1);
    assert_eq!(canonical_key(&reduced).unwrap(), canonical_key(&v).unwrap());
    assert_eq!(strip_degree2(&MarkedGraph::triangle(), false), (MarkedGraph::triangle(), 0));
}

#[test]
fn v_splits_into_h_and_i() {
    let split = find_split(&graph("V")).unwrap().expect("V has a non-trivial split");
    let h = canonical_key(&graph("H")).unwrap();
    assert_eq!(canonical_key(&graph("I")).unwrap(), h);
    assert_eq!(canonical_key(split.left.graph()).unwrap(), h);
    assert_eq!(canonical_key(split.right.graph()).unwrap(), h);
    assert!(find_split(&MarkedGraph::triangle()).unwrap().is_none());
}

#[test]
fn appendix_graph_split_sizes() {
    let g = graph("G");
    assert_eq!(g.vertex_count(), 17);
    let split = find_split(&g).unwrap().unwrap();
    assert_eq!((split.left.graph().vertex_count(), split.right.graph().vertex_count()), (10, 10));
    assert!(split.satisfies_axioms());
}

#[test]
fn thinness() {
    assert!(is_thin(&calligraph("H")));
    assert!(!is_thin(&Calligraph::l()));
    assert!(is_thin(&calligraph("F")));
}

#[test]
fn class_arithmetic() {
    let (l, r, c) = (base_class(GlueKind::L), base_class(GlueKind::R), base_class(GlueKind::C));
    assert_eq!((l.clone(), r.clone(), c.clone()), (ClassVector::new(1, 1, 0), ClassVector::new(1, 0, 1), ClassVector::new(2, 0, 0)));
    assert_eq!(class_product(&l, &r), BigInt::from(2));
    assert_eq!(class_product(&c, &l), BigInt::from(4));
    assert_eq!(glue(Calligraph::l().graph(), GlueKind::R), MarkedGraph::triangle());
}

#[test]
fn section_three_worked_example() {
    let engine = Engine::new(EngineConfig::default());
    assert_eq!(engine.get_nor(&graph("U")).unwrap().count, BigInt::from(112));
    assert_eq!(engine.get_nor(&graph("V")).unwrap().count, BigInt::from(56));
    assert_eq!(engine.get_nor(&MarkedGraph::triangle()).unwrap().count, BigInt::from(2));
    let h = calligraph("H");
    assert_eq!(engine.get_class(&h).unwrap().class, ClassVector::new(6, 2, 2));
    assert_eq!(engine.get_class(&calligraph("I")).unwrap().class, ClassVector::new(6, 2, 2));
    let counts: Vec<BigInt> = GlueKind::ALL.iter().map(|&k| engine.get_nor(&h.glue(k)).unwrap().count).collect();
    assert_eq!(counts, [8, 8, 24].map(BigInt::from));
}

fn count_at(node: &rigidcount::TraceNode) -> BigInt {
    match &node.value {
        TraceValue::Count(c) => c.clone(),
        TraceValue::Class(_) => panic!("count expected"),
    }
}

#[test]
fn appendix_graph_count_and_tree() {
    let engine = engine_with_bound(10, true);
    let res = engine.get_nor(&graph("G")).unwrap();
    assert_eq!(res.count, BigInt::from(200192));
    let root = res.trace.unwrap();
    assert_eq!(root.method, Method::Split);
    let classes: Vec<(ClassVector, Vec<BigInt>)> = root
        .children
        .iter()
        .map(|child| match &child.value {
            TraceValue::Class(c) => (c.clone(), child.children.iter().map(|n| count_at(n)).collect()),
            TraceValue::Count(_) => panic!("class node expected"),
        })
        .collect();
    assert_eq!(classes[0], (ClassVector::new(368, 96, 176), [544, 384, 1472].map(BigInt::from).to_vec()));
    assert_eq!(classes[1], (ClassVector::new(272, 0, 0), [544, 544, 1088].map(BigInt::from).to_vec()));
    let leaves: BTreeSet<usize> =
        root.walk().iter().filter(|n| n.method == Method::Oracle).map(|n| n.graph.vertex_count()).collect();
    assert!(leaves.iter().all(|&n| n <= 10));
}

#[test]
fn class_of_f() {
    let engine = engine_with_bound(10, false);
    assert_eq!(engine.get_class(&calligraph("F")).unwrap().class, ClassVector::new(272, 0, 0));
}

#[test]
fn oversized_leaf_reports_the_subgraph() {
    let err = engine_with_bound(7, false).get_nor(&graph("G")).unwrap_err();
    match err {
        rigidcount::EngineError::Oracle(rigidcount::OracleError::TooLarge { vertices, bound, graph }) => {
            assert!(vertices > bound && bound == 7);
            assert_eq!(graph.vertex_count(), vertices);
        }
        other => panic!("unexpected {other:?}"),
    }
}
