use rigid_algebra::field::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[test]
fn gaussian_inverse_and_sqrt() {
    let z = GaussianRational::new(q(3, 2), q(-1, 3));
    assert!(z.mul(&z.inv()).is_one());
    // (1+i)^2 = 2i
    let two_i = GaussianRational::from_ints(0, 2);
    let r = two_i.sqrt().unwrap();
    assert_eq!(r.mul(&r), two_i);
    assert_eq!(GaussianRational::from_ints(-1, 0).sqrt().unwrap().norm(), q(1, 1));
    assert!(GaussianRational::from_ints(2, 0).sqrt().is_none());
}

#[test]
fn prime_field_roundtrip() {
    let a = FpA::from_rational(&q(5, 7));
    assert_eq!(a.mul(&FpA::from_i64(7)), FpA::from_i64(5));
    assert_eq!(FpB::from_i64(-3).add(&FpB::from_i64(3)), FpB::zero());
    assert!(FpA::from_i64(12345).mul(&FpA::from_i64(12345).inv()).is_one());
}
