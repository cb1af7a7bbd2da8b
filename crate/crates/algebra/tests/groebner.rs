use rigid_algebra::*;
use rigid_algebra::field::{FpA, Rational};

fn parse(s: &str, names: &[&str], order: MonomialOrder) -> Poly<Rational> {
    Poly::parse(s, names, order).unwrap()
}

#[test]
fn hand_computed_basis() {
    let names = ["x", "y"];
    let o = MonomialOrder::GrevLex;
    let gb = buchberger(&[parse("x^2 - 1", &names, o), parse("x*y", &names, o)], &Budget::default()).unwrap();
    assert_eq!(gb.polys, vec![parse("y", &names, o), parse("x^2 - 1", &names, o)]);
    assert!(gb.verify());
    assert_eq!(gb.quotient_dimension(), Some(2));
}

#[test]
fn single_generator_is_made_monic() {
    let names = ["x"];
    let o = MonomialOrder::Lex;
    let gb = buchberger(&[parse("3*x", &names, o)], &Budget::default()).unwrap();
    assert_eq!(gb.polys, vec![parse("x", &names, o)]);
}

#[test]
fn unit_ideal_and_positive_dimension() {
    let names = ["x", "y"];
    let o = MonomialOrder::GrevLex;
    let gb = buchberger(&[parse("x - 1", &names, o), parse("x - 2", &names, o)], &Budget::default()).unwrap();
    assert!(gb.is_unit_ideal());
    let gb = buchberger(&[parse("x*y - 1", &names, o)], &Budget::default()).unwrap();
    assert_eq!(gb.quotient_dimension(), None);
}

#[test]
fn minimal_polynomial_detects_double_root() {
    let names = ["x"];
    let o = MonomialOrder::GrevLex;
    let gb = buchberger(&[parse("x^2", &names, o)], &Budget::default()).unwrap();
    let mp = gb.minimal_polynomial(&parse("x", &names, o)).unwrap();
    assert_eq!(mp.len(), 3);
    let gb = buchberger(&[parse("x^2 - 4", &names, o)], &Budget::default()).unwrap();
    let mp = gb.minimal_polynomial(&parse("x", &names, o)).unwrap();
    assert_eq!(mp, vec![Rational::from_integer((-4).into()), Rational::from_integer(0.into()), Rational::from_integer(1.into())]);
}

#[test]
fn budget_is_enforced() {
    let names = ["x", "y", "z"];
    let o = MonomialOrder::GrevLex;
    let gens: Vec<Poly<FpA>> = ["x*y - z - 1", "y*z - x - 2", "x*z - y - 3"]
        .iter()
        .map(|s| Poly::parse(s, &names, o).unwrap())
        .collect();
    let tiny = Budget { max_reductions: 3, max_basis: 100 };
    assert!(matches!(buchberger(&gens, &tiny), Err(AlgebraError::Budget(_))));
    let gb = buchberger(&gens, &Budget::default()).unwrap();
    assert!(gb.verify());
    // Bezout bound for three quadrics
    assert!(gb.quotient_dimension().unwrap() <= 8);
}
