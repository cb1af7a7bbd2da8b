use std::collections::BTreeSet;

use rigid_algebra::Budget;
use rigidcount::graph::MarkedGraph;
use rigidcount::Calligraph;
use rigid_walks::ideal::{LinearIdealBasis, LinearPoly, Var};
use rigid_walks::{
    chi, cross_check_delta, delta_chain, delta_v, eliminate_b0, eliminate_b0_groebner, flip_epsilon, greedy_route,
    initial_walks, is_route, round_decomposition, route_order, tau_ideal, tau_poly, variable_order, walk_max,
    walk_plus, walk_report, B0Ideal, SignLabeling, Walk, WalkError,
};

fn fig_c() -> MarkedGraph {
    MarkedGraph::parse_text(include_str!("../../../data/graphs/FigC.txt")).unwrap()
}

fn fig_c_tau(g: &MarkedGraph) -> SignLabeling {
    SignLabeling::parse_text(g, include_str!("../../../data/labelings/FigC.txt")).unwrap()
}

fn w(g: &MarkedGraph, s: &str) -> Walk {
    Walk::parse(g, s).unwrap()
}

fn set(g: &MarkedGraph, items: &[&str]) -> BTreeSet<Walk> {
    items.iter().map(|s| w(g, s)).collect()
}

fn lin(terms: &[(Var, i64)], c: i64) -> LinearPoly {
    LinearPoly::from_terms(terms, c)
}

use Var::{A, B};

#[test]
fn plus_tries_the_four_orientations() {
    let g = fig_c();
    for (a, b) in [("034", "45"), ("034", "54"), ("430", "45"), ("430", "54")] {
        assert_eq!(walk_plus(&w(&g, a), &w(&g, b)).unwrap(), w(&g, "0345"));
    }
    assert_eq!(w(&g, "034").reversed(), w(&g, "430"));
    assert!(matches!(walk_plus(&w(&g, "03"), &w(&g, "45")), Err(WalkError::PlusUndefined(..))));
}

#[test]
fn walks_must_follow_edges_of_e() {
    let g = fig_c();
    assert!(Walk::parse(&g, "035").is_err());
    assert!(Walk::parse(&g, "12").is_err());
    assert_eq!(Walk::parse(&g, "0,3,4").unwrap(), w(&g, "034"));
}

#[test]
fn max_is_length_then_lex() {
    let g = fig_c();
    let l = set(&g, &["06", "032", "036", "0341", "0346", "03456"]);
    assert_eq!(walk_max(&l).unwrap(), &w(&g, "03456"));
    let l = set(&g, &["0341", "0346", "0345"]);
    assert_eq!(walk_max(&l).unwrap(), &w(&g, "0346"));
}

#[test]
fn delta_six_example() {
    let g = fig_c();
    let l = set(&g, &["06", "032", "036", "0341", "0346", "03456"]);
    let out = delta_v(&l, 6).unwrap();
    assert_eq!(out, set(&g, &["032", "0341", "034560", "0345630", "03456430"]));
}

#[test]
fn delta_without_walks_at_v_is_identity() {
    let g = fig_c();
    let l = set(&g, &["032", "0341"]);
    assert_eq!(delta_v(&l, 6).unwrap(), l);
}

#[test]
fn delta_needs_a_walk_from_zero() {
    let g = fig_c();
    let l = set(&g, &["45", "56"]);
    assert_eq!(delta_v(&l, 5), Err(WalkError::NoMax(5)));
}

#[test]
fn route_and_chain_of_the_figure() {
    let g = fig_c();
    let route = greedy_route(&g).unwrap();
    assert_eq!(route, w(&g, "03456"));
    assert!(is_route(&g, &w(&g, "065463")));
    assert!(!is_route(&g, &w(&g, "0345")));

    let l0 = initial_walks(&g, &route_order(&route));
    assert_eq!(l0, set(&g, &["03", "06", "32", "34", "36", "41", "45", "46", "56"]));
    let chain = delta_chain(&l0, &route).unwrap();
    let expected = [
        (None, vec!["03", "06", "32", "34", "36", "41", "45", "46", "56"]),
        (Some(3), vec!["06", "41", "45", "46", "56", "032", "034", "036"]),
        (Some(4), vec!["06", "56", "032", "036", "0341", "0345", "0346"]),
        (Some(5), vec!["06", "032", "036", "0341", "0346", "03456"]),
        (Some(6), vec!["032", "0341", "034560", "0345630", "03456430"]),
    ];
    assert_eq!(chain.len(), expected.len());
    for ((v, s), (ev, es)) in chain.iter().zip(expected) {
        assert_eq!(*v, ev);
        assert_eq!(*s, set(&g, &es));
    }
    assert!(chain.last().unwrap().1.iter().all(|w| w.kind().is_some()));
}

#[test]
fn revisiting_route_gives_the_same_final_set() {
    let g = fig_c();
    let l0 = initial_walks(&g, &[0, 3, 4, 5, 6]);
    let a = delta_chain(&l0, &w(&g, "065463")).unwrap();
    let last = &a.last().unwrap().1;
    assert!(last.iter().all(|w| w.kind_unoriented().is_some()));
    let tau = fig_c_tau(&g);
    assert!(cross_check_delta(&g, &l0, &tau, &w(&g, "065463")).unwrap());
}

#[test]
fn tau_polynomials_of_the_figure() {
    let g = fig_c();
    let tau = fig_c_tau(&g);
    let t = |s: &str| tau_poly(&w(&g, s), &tau);
    assert_eq!(t("06"), lin(&[(A(6), -1), (B(0), 1), (B(6), -1)], 0));
    assert_eq!(t("41"), lin(&[(A(4), 1), (B(4), -1)], 0));
    assert_eq!(t("45"), lin(&[(A(4), 1), (A(5), -1), (B(4), 1), (B(5), -1)], 0));
    assert_eq!(t("46"), lin(&[(A(4), 1), (A(6), -1), (B(4), -1), (B(6), 1)], 0));
    assert_eq!(t("032"), lin(&[(B(0), 1), (B(3), -2)], 1));
    assert_eq!(t("034"), lin(&[(A(4), -1), (B(0), 1), (B(3), -2), (B(4), 1)], 0));
    assert_eq!(t("036"), lin(&[(A(6), -1), (B(0), 1), (B(6), -1)], 0));
    assert_eq!(t("0346"), lin(&[(A(6), -1), (B(0), 1), (B(3), -2), (B(6), 1)], 0));
    assert_eq!(t("03456"), lin(&[(A(6), -1), (B(0), 1), (B(3), -2), (B(4), 2), (B(6), -1)], 0));
    assert_eq!(t("03456430"), lin(&[(B(4), 2), (B(6), -2)], 0));
    assert_eq!(t("03456430"), t("03456").sub(&t("0346")));
    assert_eq!(t("03456430").to_string(), "2*b4 - 2*b6");
    assert_eq!(t("032").to_string(), "b0 - 2*b3 + 1");
}

#[test]
fn single_zero_edge_walk_to_one() {
    let l = Calligraph::l().into_graph();
    let tau = SignLabeling::all_positive(&l);
    assert_eq!(tau_poly(&w(&l, "01"), &tau), lin(&[(B(0), 1)], 0));
}

#[test]
fn eliminating_a4_from_lambda3() {
    let g = fig_c();
    let tau = fig_c_tau(&g);
    let order = variable_order(&[0, 3, 4, 5, 6]);
    let l3 = set(&g, &["06", "41", "45", "46", "56", "032", "034", "036"]);
    let lhs = tau_ideal(&l3, &tau, &order).eliminate(&[A(4)]);
    let rhs = tau_ideal(&set(&g, &["06", "56", "032", "036", "0341", "0345", "0346"]), &tau, &order);
    assert!(lhs.same_ideal(&rhs));
    let t = |s: &str| tau_poly(&w(&g, s), &tau);
    assert_eq!(t("0341"), t("034").add(&t("41")));
}

#[test]
fn round_polynomials_as_western_differences() {
    let g = fig_c();
    let tau = fig_c_tau(&g);
    let t = |s: &str| tau_poly(&w(&g, s), &tau);
    let via = |a: &str| walk_plus(&w(&g, a), &w(&g, "641")).unwrap();
    assert_eq!(via("03456"), w(&g, "0345641"));
    assert_eq!(via("0346"), w(&g, "034641"));
    assert_eq!(t("03456430"), t("0345641").sub(&t("034641")));
    assert_eq!(t("034560"), tau_poly(&via("03456"), &tau).sub(&tau_poly(&via("06"), &tau)));
    assert_eq!(t("0345630"), tau_poly(&via("03456"), &tau).sub(&tau_poly(&via("036"), &tau)));

    for r in ["034560", "0345630", "03456430"] {
        let (a, b) = round_decomposition(&g, &w(&g, r)).unwrap();
        assert_eq!((a.start(), a.end(), b.start(), b.end()), (0, 1, 0, 1));
        assert_eq!(tau_poly(&a, &tau).sub(&tau_poly(&b, &tau)), t(r));
    }

    let order = variable_order(&[0, 3, 4, 5, 6]);
    let l6 = set(&g, &["032", "0341", "034560", "0345630", "03456430"]);
    let gens: Vec<LinearPoly> = ["06", "036", "0346", "03456"]
        .iter()
        .map(|s| tau_poly(&via(s), &tau))
        .chain([t("032"), t("0341")])
        .collect();
    assert!(tau_ideal(&l6, &tau, &order).same_ideal(&LinearIdealBasis::new(&gens, &order)));
}

#[test]
fn flip_coefficients_follow_chi() {
    let g = fig_c();
    let tau = fig_c_tau(&g);
    let rho = w(&g, "03645641");
    assert_eq!(tau_poly(&rho, &tau), lin(&[(B(0), 1), (B(4), 2), (B(6), -4)], 0));
    assert_eq!(chi(&rho, &tau), vec![0, 0, -2, 2, 0, -2, 0, 0]);
    assert_eq!(flip_epsilon(&rho, &tau).map(|e| e.to_string()), Some("0".into()));
    assert_eq!(flip_epsilon(&w(&g, "032"), &tau).map(|e| e.to_string()), Some("1".into()));
}

#[test]
fn lambda_chain_is_cross_checked() {
    let g = fig_c();
    let tau = fig_c_tau(&g);
    let l0 = initial_walks(&g, &[0, 3, 4, 5, 6]);
    assert!(cross_check_delta(&g, &l0, &tau, &w(&g, "03456")).unwrap());
    let l = Calligraph::l().into_graph();
    let single = set(&l, &["01"]);
    assert!(cross_check_delta(&l, &single, &SignLabeling::all_positive(&l), &w(&l, "0")).unwrap());
}

#[test]
fn b0_ideal_of_the_figure_is_unit() {
    // No all-positive western or eastern walk exists, yet τ_032 − τ_0341 = 1.
    let g = fig_c();
    let tau = fig_c_tau(&g);
    let t = |s: &str| tau_poly(&w(&g, s), &tau);
    assert_eq!(t("032").sub(&t("0341")), LinearPoly::constant(1));
    let l0 = initial_walks(&g, &[0, 3, 4, 5, 6]);
    assert_eq!(eliminate_b0(&g, &l0, &tau).unwrap(), B0Ideal::One);
    assert_eq!(eliminate_b0_groebner(&g, &l0, &tau, &Budget::default()).unwrap(), B0Ideal::One);
}

#[test]
fn b0_ideal_zero_without_positive_exit() {
    // Hand elimination: I ∩ B = <b0 − 2b3, b0 − 2b4 + 1>, which leaves b0 free.
    let g = MarkedGraph::from_edges([(0, 3), (0, 4), (3, 4), (1, 3), (2, 4), (1, 2)]).unwrap();
    let tau = SignLabeling::from_signs(&g, &[(3, 4, 1), (1, 3, -1), (2, 4, -1)]).unwrap();
    let t = |s: &str| tau_poly(&w(&g, s), &tau);
    assert_eq!(t("031"), lin(&[(B(0), 1), (B(3), -2)], 0));
    assert_eq!(t("042"), lin(&[(B(0), 1), (B(4), -2)], 1));
    assert_eq!(t("0340"), LinearPoly::zero());
    let l0 = initial_walks(&g, &[0, 3, 4]);
    assert_eq!(eliminate_b0(&g, &l0, &tau).unwrap(), B0Ideal::Zero);
    assert_eq!(eliminate_b0_groebner(&g, &l0, &tau, &Budget::default()).unwrap(), B0Ideal::Zero);
}

#[test]
fn b0_ideals_of_small_calligraphs() {
    let cases = [
        (Calligraph::l().into_graph(), B0Ideal::B0),
        (Calligraph::r().into_graph(), B0Ideal::B0Plus1),
        (Calligraph::c3().into_graph(), B0Ideal::One),
    ];
    for (g, want) in cases {
        let tau = SignLabeling::all_positive(&g);
        let l0 = initial_walks(&g, &[0]);
        assert_eq!(eliminate_b0(&g, &l0, &tau).unwrap(), want);
        assert_eq!(eliminate_b0_groebner(&g, &l0, &tau, &Budget::default()).unwrap(), want);
    }
    let g = fig_c();
    let l0 = initial_walks(&g, &[0, 3, 4, 5, 6]);
    assert_eq!(eliminate_b0(&g, &l0, &SignLabeling::all_positive(&g)).unwrap(), B0Ideal::One);
}

#[test]
fn non_initial_sets_are_rejected() {
    let g = fig_c();
    let tau = fig_c_tau(&g);
    let short = set(&g, &["03", "06"]);
    assert!(matches!(eliminate_b0(&g, &short, &tau), Err(WalkError::NotInitial(_))));
    let doubled = set(&g, &["03", "30", "32", "34", "36", "41", "45", "46", "56"]);
    assert!(matches!(eliminate_b0(&g, &doubled, &tau), Err(WalkError::NotInitial(_))));
    let long = set(&g, &["034", "06", "32", "34", "36", "41", "45", "46", "56"]);
    assert!(matches!(eliminate_b0(&g, &long, &tau), Err(WalkError::NotInitial(_))));
}

#[test]
fn labelings_keep_zero_edges_positive() {
    let g = fig_c();
    assert!(SignLabeling::parse_text(&g, "0 3 -\n").is_err());
    assert!(SignLabeling::parse_text(&g, "3 4 x\n").is_err());
    assert!(SignLabeling::from_signs(&g, &[(3, 4, -1)]).is_err());
}

#[test]
fn report_for_the_figure() {
    let g = fig_c();
    let tau = fig_c_tau(&g);
    let r = walk_report(&g, &tau).unwrap();
    assert_eq!(r["route"], serde_json::json!([0, 3, 4, 5, 6]));
    assert_eq!(r["chain"][4]["walks"], serde_json::json!(["032", "0341", "034560", "0345630", "03456430"]));
    assert_eq!(r["b0_ideal"], "<1>");
    for (k, v) in r["checks"].as_object().unwrap() {
        assert_eq!(v, true, "check {k}");
    }
    assert_eq!(serde_json::to_string(&r).unwrap(), serde_json::to_string(&walk_report(&g, &tau).unwrap()).unwrap());
}
