use proptest::prelude::*;
use rigid_algebra::univariate::{derivative, div_rem, gcd, trim};
use rigid_algebra::*;

fn rat(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

fn upoly() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(-9i64..=9, 1..6).prop_map(|v| trim(v.into_iter().map(rat).collect()))
}

fn mpoly(n: usize) -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec((prop::collection::vec(0u32..3, n), -5i64..=5), 0..5).prop_map(move |ts| {
        let mut p = Poly::zero(n, MonomialOrder::GrevLex);
        for (exps, c) in ts {
            let m = Monomial::from_exps(&exps.iter().map(|&e| e as Exp).collect::<Vec<_>>());
            p = p.add(&Poly::term(n, MonomialOrder::GrevLex, m, rat(c)));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_reconstructs(a in upoly(), b in upoly()) {
        prop_assume!(!b.is_empty());
        let (q, r) = div_rem(&a, &b);
        let mut back = vec![Rational::zero(); q.len() + b.len()];
        for (i, x) in q.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                back[i + j] = back[i + j].add(&x.mul(y));
            }
        }
        for (i, x) in r.iter().enumerate() {
            back[i] = back[i].add(x);
        }
        prop_assert_eq!(trim(back), a);
        prop_assert!(r.len() < b.len());
    }

    #[test]
    fn gcd_divides_both(a in upoly(), b in upoly()) {
        prop_assume!(!a.is_empty() && !b.is_empty());
        let g = gcd(&a, &b);
        prop_assert!(div_rem(&a, &g).1.is_empty());
        prop_assert!(div_rem(&b, &g).1.is_empty());
    }

    #[test]
    fn derivative_lowers_degree(a in upoly()) {
        prop_assume!(a.len() > 1);
        prop_assert_eq!(derivative(&a).len(), a.len() - 1);
    }

    #[test]
    fn multiplication_commutes(p in mpoly(3), q in mpoly(3)) {
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert!(p.add(&q).sub(&q) == p);
    }

    #[test]
    fn groebner_basis_is_reduced_and_contains_generators(p in mpoly(2), q in mpoly(2)) {
        let gb = buchberger(&[p.clone(), q.clone()], &Budget::default()).unwrap();
        prop_assert!(gb.verify());
        prop_assert!(gb.reduce(&p).is_zero());
        prop_assert!(gb.reduce(&q).is_zero());
        prop_assert!(gb.reduce(&p.mul(&q)).is_zero());
    }
}
