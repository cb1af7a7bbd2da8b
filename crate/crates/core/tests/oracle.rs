use std::collections::BTreeMap;
use rigid_algebra::{MonomialOrder, Poly, Rational};
use rigidcount::graph::Edge;
use rigidcount::calligraph::Calligraph;
use rigidcount::*;
use rigidcount::oracle::*;

#[test]
fn triangle_system_and_count() {
    let g = MarkedGraph::triangle();
    let two = Rational::from_integer(2.into());
    let lengths: BTreeMap<Edge, Rational> = [((0, 1), two.clone()), ((0, 2), two), ((1, 2), Rational::from_integer(1.into()))].into();
    let sys: Vec<Poly<Rational>> = realization_system(&g, &lengths, MonomialOrder::GrevLex).unwrap();
    let names = ["x0", "y0"];
    let want: Vec<Poly<Rational>> = ["x0^2 + y0^2 - 2", "(x0 - 1)^2 + y0^2 - 2"]
        .iter()
        .map(|s| Poly::parse(s, &names, MonomialOrder::GrevLex).unwrap())
        .collect();
    assert_eq!(sys, want);
    assert_eq!(count_realizations_oracle(&g, 1, &OracleConfig::default()), Ok(2));
}

#[test]
fn single_edge_has_one_realization() {
    assert_eq!(count_realizations_oracle(&MarkedGraph::single_edge(), 3, &OracleConfig::default()), Ok(1));
}

fn c3_with_l() -> MarkedGraph {
    Calligraph::c3().glue(GlueKind::L)
}

#[test]
fn c3_union_l_has_four_realizations() {
    let g = c3_with_l();
    assert_eq!(count_realizations_oracle(&g, 7, &OracleConfig::default()), Ok(4));
    let exact = OracleConfig { field: OracleField::Rational, ..OracleConfig::default() };
    assert_eq!(count_realizations_oracle(&g, 7, &exact), Ok(4));
    let lengths = sample_lengths(&g, 7, 0);
    let sys: Vec<Poly<Rational>> = realization_system(&g, &lengths, MonomialOrder::GrevLex).unwrap();
    let gb = rigid_algebra::buchberger(&sys, &rigid_algebra::Budget::default()).unwrap();
    assert_eq!(gb.quotient_dimension(), Some(4));
}

#[test]
fn single_edge_system_is_empty() {
    let sys: Vec<Poly<Rational>> =
        realization_system(&MarkedGraph::single_edge(), &BTreeMap::from([((1, 2), Rational::from_integer(1.into()))]), MonomialOrder::GrevLex)
            .unwrap();
    assert!(sys.is_empty());
    assert_eq!(coordinate_names(&Calligraph::c3().into_graph()), ["x0", "y0", "x3", "y3"]);
}

#[test]
fn triangle_solutions_are_simple() {
    let g = MarkedGraph::triangle();
    let sys: Vec<Poly<Rational>> = realization_system(&g, &sample_lengths(&g, 5, 0), MonomialOrder::GrevLex).unwrap();
    let gb = rigid_algebra::buchberger(&sys, &rigid_algebra::Budget::default()).unwrap();
    let y0 = Poly::var(2, MonomialOrder::GrevLex, 1);
    let mp = gb.minimal_polynomial(&y0).unwrap();
    assert_eq!(mp.len() - 1, gb.quotient_dimension().unwrap());
    assert!(rigid_algebra::univariate::is_squarefree(&mp));
}

#[test]
fn rejects_flexible_and_oversized_graphs() {
    let path = MarkedGraph::from_edges([(0, 1), (1, 2)]).unwrap();
    assert_eq!(count_realizations_oracle(&path, 1, &OracleConfig::default()), Err(OracleError::NotMinimallyRigid));
    let small = OracleConfig { max_vertices: 5, ..OracleConfig::default() };
    let prism = rigidcount::henneberg::corpus(6)[&6]
        .iter()
        .find(|g| g.degrees().values().all(|&d| d >= 3))
        .cloned()
        .unwrap();
    assert!(matches!(count_realizations_oracle(&prism, 1, &small), Err(OracleError::TooLarge { bound: 5, vertices: 6, .. })));
}

#[test]
fn seed_independent_on_small_corpus() {
    let cfg = OracleConfig::default();
    for g in rigidcount::henneberg::corpus(6).values().flatten() {
        let counts: Vec<u64> = (0..5).map(|s| count_realizations_oracle(g, 1000 + s, &cfg).unwrap()).collect();
        assert!(counts.windows(2).all(|w| w[0] == w[1]), "{g:?}: {counts:?}");
    }
}

#[test]
fn henneberg_one_doubles() {
    let cfg = OracleConfig::default();
    for g in rigidcount::henneberg::corpus(5).values().flatten() {
        let base = count_realizations_oracle(g, 3, &cfg).unwrap();
        for (u, v) in g.edges().iter().copied().take(3) {
            let ext = rigidcount::henneberg::henneberg_one(g, u, v);
            assert_eq!(count_realizations_oracle(&ext, 3, &cfg).unwrap(), 2 * base);
        }
    }
}

#[test]
fn exact_and_modular_fields_agree() {
    let exact = OracleConfig { field: OracleField::Rational, ..OracleConfig::default() };
    for g in rigidcount::henneberg::corpus(5).values().flatten() {
        assert_eq!(count_realizations_oracle(g, 9, &OracleConfig::default()), count_realizations_oracle(g, 9, &exact));
    }
}
