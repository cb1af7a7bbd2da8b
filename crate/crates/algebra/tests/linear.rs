use rigid_algebra::linear::*;
use rigid_algebra::field::Rational;

fn r(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

#[test]
fn reduces_dependent_rows() {
    let rows = vec![vec![r(2), r(4), r(6)], vec![r(1), r(2), r(3)], vec![r(0), r(1), r(1)]];
    let e = rref(&rows);
    assert_eq!(e, vec![vec![r(1), r(0), r(1)], vec![r(0), r(1), r(1)]]);
}
