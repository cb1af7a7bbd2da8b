use rigid_algebra::*;
use rigid_algebra::f4::*;
use rigid_algebra::groebner::buchberger;

const P: u64 = PRIME_31A;

#[test]
fn packed_order_is_grevlex() {
    let a = PackedMonomial::from_exps(&[1, 0, 1]).unwrap();
    let b = PackedMonomial::from_exps(&[0, 2, 0]).unwrap();
    let c = PackedMonomial::from_exps(&[2, 0, 0]).unwrap();
    // x*z < y^2 < x^2 in grevlex with x > y > z
    assert!(a < b && b < c);
    let x = PackedMonomial::var(0);
    assert!(x.divides(a) && !x.divides(b));
    assert_eq!(x.quotient_of(a), PackedMonomial::var(2));
    assert_eq!(a.lcm(b), PackedMonomial::from_exps(&[1, 2, 1]).unwrap());
    assert_eq!(a.mul(b).degree(), 4);
    assert_eq!(a.exps(3), vec![1, 0, 1]);
}

#[test]
fn agrees_with_buchberger() {
    let names = ["x", "y", "z"];
    let src = ["x^2 + y^2 + z^2 - 3", "x*y - z + 1/2", "x - y*z + 2"];
    let gens: Vec<Poly<Rational>> = src.iter().map(|s| Poly::parse(s, &names, MonomialOrder::GrevLex).unwrap()).collect();
    let modgens: Vec<ModPoly<P>> = gens.iter().map(|g| ModPoly::from_poly(g).unwrap()).collect();
    let gb = f4::<P>(&modgens, &Budget::default()).unwrap();
    let exact = buchberger(&gens, &Budget::default()).unwrap();
    assert_eq!(gb.len(), exact.polys.len());
    for (a, b) in gb.iter().zip(&exact.polys) {
        assert_eq!(Some(a.clone()), ModPoly::from_poly(b));
    }
    let leads: Vec<PackedMonomial> = gb.iter().map(|g| g.terms[0].0).collect();
    assert_eq!(quotient_dimension(&leads, 3), exact.quotient_dimension());
}

#[test]
fn unit_ideal() {
    let names = ["x", "y"];
    let gens: Vec<ModPoly<P>> = ["x*y - 1", "x"]
        .iter()
        .map(|s| ModPoly::from_poly(&Poly::parse(s, &names, MonomialOrder::GrevLex).unwrap()).unwrap())
        .collect();
    let gb = f4::<P>(&gens, &Budget::default()).unwrap();
    assert_eq!(gb, vec![ModPoly { terms: vec![(PackedMonomial::ONE, 1)] }]);
}
