use num_bigint::BigInt;
use num_traits::Zero;
use rigidcount::*;
use rigidcount::class::*;

#[test]
fn products_of_base_classes() {
    let (l, r, c) = (base_class(GlueKind::L), base_class(GlueKind::R), base_class(GlueKind::C));
    assert_eq!(class_product(&l, &r), BigInt::from(2));
    assert_eq!(class_product(&c, &l), BigInt::from(4));
    assert_eq!(class_product(&ClassVector::new(0, 0, 0), &c), BigInt::zero());
}

#[test]
fn remark_keeps_structure() {
    // only vertex 1 has degree 2
    let g = MarkedGraph::from_edges([(1, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]).unwrap();
    assert!(drop_degree2(&g, false).is_none());
    let h = drop_degree2(&g, true).unwrap();
    assert_eq!(h.vertex_count(), 4);
    assert_eq!(h.edge_count(), 5);
    assert!(h.has_edge(1, 2) && is_minimally_rigid(&h));
}
