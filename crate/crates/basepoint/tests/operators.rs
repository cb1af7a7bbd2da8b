use rigid_algebra::{Budget, Field, GaussianRational, Monomial, MonomialOrder, Poly};
use rigid_basepoint::centric::eliminant;
use rigid_basepoint::ops::Coord;
use rigid_basepoint::points::{Locus, Point, PointSet};
use rigid_basepoint::spaces::{check_vertical_pieces, linear_factors, vertical_pieces, Projection};
use rigid_basepoint::{EdgeRing, GPoly};
use rigidcount::calligraph::Calligraph;
use rigidcount::graph::MarkedGraph;

fn h_calligraph() -> MarkedGraph {
    MarkedGraph::from_edges([(0, 3), (0, 4), (3, 4), (1, 3), (2, 4), (1, 2)]).unwrap()
}

#[test]
fn hatted_operators_on_the_r_circle() {
    let r = EdgeRing::new(Calligraph::r().graph(), &[]).unwrap();
    let f0 = r.mu((0, 2));
    assert_eq!(f0, r.parse("(x0-1)^2+y0^2-l20^2").unwrap());
    assert_eq!(r.hat_h(&f0, Coord::X0), r.parse("(1-x0)^2+y0^2-l20^2*x0^2").unwrap());
    // the chart at y0 carries l^2*y0^2, not l^2*x0^2
    assert_eq!(r.hat_h(&f0, Coord::Y0), r.parse("(y0-x0)^2+1-l20^2*y0^2").unwrap());
    let i = r.i_const();
    let g = r.hat_f(&r.hat_m(&r.hat_h(&f0, Coord::X0), &i), Coord::X0);
    assert_eq!(g, r.parse("-2 + x0 + 2*i*y0 + x0*y0^2 - l20^2*x0").unwrap());
    let h = r.hat_f(&r.hat_n(&r.hat_h(&f0, Coord::X0), &i), Coord::Y0);
    assert_eq!(h, r.parse("2*i - 2*x0 + y0 + x0^2*y0 - l20^2*x0^2*y0").unwrap());
}

#[test]
fn monomial_factor_removal_and_empty_t() {
    let r = EdgeRing::new(Calligraph::r().graph(), &[]).unwrap();
    let u = r.parse("y0^2 + l20 + 1").unwrap();
    let x3u = r.var(r.x0()).pow(3).mul(&u);
    assert_eq!(r.hat_f(&x3u, Coord::X0), u);
    assert_eq!(r.hat_f(&u, Coord::X0), u);
    let s = r.s_poly(&[]);
    assert_eq!(s, r.var(r.x0()));
    let f = r.mu((0, 2));
    assert_eq!(r.t_with(&f, &s), r.parse("(x0^2-1)^2+y0^2-l20^2*x0^2").unwrap());
}

#[test]
fn first_edge_of_h_after_m_and_h() {
    let g = h_calligraph();
    let r = EdgeRing::new(&g, &[]).unwrap();
    let i = r.i_const();
    let mh = |e| r.m(&r.h(&r.mu(e), Coord::X0), &i);
    assert_eq!(mh((0, 3)), r.parse("(x3-i*y0+i*y3)*(-2+x0*(x3+i*y0-i*y3))-x0*l30^2").unwrap());
    assert_eq!(mh((0, 4)), r.parse("(x4-i*y0+i*y4)*(-2+x0*(x4+i*y0-i*y4))-x0*l40^2").unwrap());
    for e in [(3, 4), (1, 3), (2, 4)] {
        assert_eq!(mh(e), r.mu(e));
    }
}

fn half(p: GPoly) -> GPoly {
    p.scale(&GaussianRational::from_ints(2, 0).inv())
}

/// c_x = (l31² − l32² + 1)/2 and c_y² = l31² − c_x².
fn circle_centers(r: &EdgeRing) -> (GPoly, GPoly) {
    let cx = half(r.parse("l31^2-l32^2+1").unwrap());
    let cy2 = r.parse("l31^2").unwrap().sub(&cx.mul(&cx));
    (cx, cy2)
}

#[test]
fn triangle_eliminant_is_a_pair_of_circles() {
    let g = Calligraph::c3();
    let r = EdgeRing::new(g.graph(), &["cy"]).unwrap();
    let f = eliminant(&r, &r.mu_all(), &Budget::default()).unwrap();
    let (cx, cy2) = circle_centers(&r);
    let x0 = r.var(r.x0());
    let y0 = r.var(r.y0());
    let cy = r.var(r.param("cy").unwrap());
    let sq = |p: &GPoly| p.mul(p);
    let l30 = r.parse("l30^2").unwrap();
    let c1 = sq(&x0.sub(&cx)).add(&sq(&y0.sub(&cy))).sub(&l30);
    let c2 = sq(&x0.sub(&cx)).add(&sq(&y0.add(&cy))).sub(&l30);
    // the product is even in cy; replace cy² by its value
    let prod = c1.mul(&c2);
    let cyv = r.param("cy").unwrap();
    let mut expanded = r.zero();
    for (e, coeff) in prod.coefficients_in(&[cyv]) {
        assert_eq!(e[0] % 2, 0);
        expanded = expanded.add(&coeff.mul(&cy2.pow(e[0] as u32 / 2)));
    }
    assert_eq!(f, expanded.monic());
    let a = sq(&x0.sub(&cx)).add(&sq(&y0)).add(&cy2).sub(&l30);
    let four = r.int(4);
    assert_eq!(f, sq(&a).sub(&four.mul(&sq(&y0)).mul(&cy2)).monic());
}

#[test]
fn triangle_relations_on_the_eliminant() {
    let g = Calligraph::c3();
    let r = EdgeRing::new(g.graph(), &[]).unwrap();
    let b = Budget::default();
    let f = eliminant(&r, &r.mu_all(), &b).unwrap();
    let zero = GaussianRational::zero();
    let i = r.i_const();
    let f1 = r.hat_h(&f, Coord::X0);
    // the restriction is (1 + y0²)²: its zero set is V(1 + y0²)
    let one_plus = r.parse("1+y0^2").unwrap();
    assert_eq!(f1.eval_var(r.x0(), &zero).monic(), one_plus.pow(2));
    assert!(r.b(&[f.clone()], Locus::Plane, &b).unwrap().is_empty());
    let cyclic = PointSet::Finite(vec![Point::ints(0, 0, 0, -1), Point::ints(0, 0, 0, 1)]);
    assert_eq!(r.b(&[f1.clone()], Locus::XAxisZero, &b).unwrap(), cyclic);
    assert!(!r.b(&[r.hat_h(&f, Coord::Y0)], Locus::XAxisZero, &b).unwrap().contains(&Point::origin()));
    let alpha = r.hat_f(&r.hat_m(&f1, &i), Coord::X0);
    assert!(r.b(&[alpha], Locus::XAxisZero, &b).unwrap().is_empty());
    let beta = r.hat_f(&r.hat_n(&f1, &i), Coord::Y0);
    assert!(!r.b(&[beta], Locus::XAxisZero, &b).unwrap().contains(&Point::origin()));
}

#[test]
fn base_points_of_linear_coefficients() {
    let names = ["x0", "y0", "l"];
    let r = EdgeRing::new(Calligraph::l().graph(), &[]).unwrap();
    let p = r.parse("l10*x0 + y0").unwrap();
    let b = Budget::default();
    assert_eq!(r.b(&[p.clone()], Locus::XAxisZero, &b).unwrap(), PointSet::Finite(vec![Point::origin()]));
    assert_eq!(r.b(&[p], Locus::Plane, &b).unwrap(), PointSet::Finite(vec![Point::origin()]));
    let q: GPoly = Poly::parse("x0*l + y0*l", &names, MonomialOrder::Lex).unwrap();
    assert_eq!(q.coefficients_in(&[2]).len(), 1);
}

#[test]
fn quadratic_splitting() {
    let names = ["a", "b", "c"];
    let p = |s: &str| -> GPoly { Poly::parse(s, &names, MonomialOrder::Lex).unwrap() };
    for src in ["a^2+b^2", "(a-b)^2+(c-1)^2", "(a-1)^2+b^2", "a*b", "(a+2*b)*(c-3)"] {
        let fs = linear_factors(&p(src)).unwrap();
        assert_eq!(fs.len(), 2, "{src}");
        let prod = fs[0].mul(&fs[1]);
        let lc = p(src).leading_coeff().unwrap().div(prod.leading_coeff().unwrap());
        assert_eq!(prod.scale(&lc), p(src), "{src}");
        assert!(fs.iter().all(|f| f.total_degree() == Some(1)));
    }
    assert!(linear_factors(&p("a^2+b^2+c^2")).is_none());
    assert!(linear_factors(&p("a^2+b")).is_none());
    assert_eq!(linear_factors(&p("a-1")).unwrap().len(), 1);
}

#[test]
fn vertical_pieces_project_to_allowed_sets() {
    for g in [Calligraph::c3().into_graph(), h_calligraph(), Calligraph::r().into_graph()] {
        let (ok, shown) = check_vertical_pieces(&g).unwrap();
        assert!(ok, "{shown}");
    }
    let pieces = vertical_pieces(&h_calligraph()).unwrap();
    assert!(!pieces.is_empty() && pieces.len() <= 8);
    let c3 = vertical_pieces(Calligraph::c3().graph()).unwrap();
    let mut pts: Vec<String> = c3
        .iter()
        .map(|p| match p {
            Projection::Line => "line".to_string(),
            Projection::Point(u) => u.to_string(),
        })
        .collect();
    pts.sort();
    pts.dedup();
    assert_eq!(pts, vec!["-1i".to_string(), "0".to_string()]);
}

#[test]
fn monomial_helper_is_exact() {
    let r = EdgeRing::new(Calligraph::r().graph(), &[]).unwrap();
    let f = r.parse("x0^2*y0 + x0^3").unwrap();
    let m = Monomial::var(r.nvars(), r.x0(), 2);
    assert_eq!(f.div_monomial(&m).unwrap(), r.parse("y0 + x0").unwrap());
}
