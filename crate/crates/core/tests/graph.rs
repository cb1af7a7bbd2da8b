use rigidcount::*;

#[test]
fn parses_text_with_comments() {
    let g = MarkedGraph::parse("# triangle\n0 1\n0 2 # leg\n\n1 2\n").unwrap();
    assert_eq!(g, MarkedGraph::triangle());
    assert!(matches!(MarkedGraph::parse("0 1\n0 2\n"), Err(GraphError::MissingMarkedEdge)));
    assert!(matches!(MarkedGraph::parse("0 x\n"), Err(GraphError::Parse { line: 1, .. })));
}

#[test]
fn json_roundtrip() {
    let g = MarkedGraph::triangle();
    let back = MarkedGraph::parse(&g.to_json_value().to_string()).unwrap();
    assert_eq!(g, back);
    let with_isolated = MarkedGraph::parse(r#"{"vertices":[0,1,2],"edges":[[1,2]]}"#).unwrap();
    assert_eq!(with_isolated.vertex_count(), 3);
}
