use rigidcount::*;

#[test]
fn small_cases() {
    assert!(is_minimally_rigid(&MarkedGraph::triangle()));
    assert!(is_minimally_rigid(&MarkedGraph::single_edge()));
    let k4 = MarkedGraph::from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert!(!is_minimally_rigid(&k4));
    match laman_violation(&k4) {
        Some(LamanViolation::Overbraced { vertices, edges }) => {
            assert_eq!(vertices.len(), 4);
            assert_eq!(edges, 6);
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn edge_count_diagnostic() {
    let path = MarkedGraph::from_edges([(0, 1), (1, 2)]).unwrap();
    assert_eq!(laman_violation(&path), Some(LamanViolation::EdgeCount { vertices: 3, edges: 2 }));
}
