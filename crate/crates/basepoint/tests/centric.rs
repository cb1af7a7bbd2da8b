use proptest::prelude::*;
use rigid_algebra::{Budget, GaussianRational, MonomialOrder, Poly};
use rigid_basepoint::centric::Status;
use rigid_basepoint::family::Family;
use rigid_basepoint::points::{Locus, Point};
use rigid_basepoint::{check_centric, pseudo_class_small, Certificate, CentricVerdict, GPoly};
use rigidcount::calligraph::Calligraph;
use rigidcount::class::{ClassVector, Engine, EngineConfig};

fn certificate(v: &CentricVerdict) -> Option<Certificate> {
    match v {
        CentricVerdict::Centric { certificate, .. } => Some(*certificate),
        _ => None,
    }
}

#[test]
fn triangle_passes_all_eight_conditions() {
    let v = check_centric(&Calligraph::c3(), &Budget::default()).unwrap();
    assert_eq!(certificate(&v), Some(Certificate::Conditions));
    assert!(v.all_conditions_hold());
    let idx: Vec<u8> = v.conditions().iter().map(|c| c.index).collect();
    assert_eq!(idx, vec![1, 2, 3, 4, 5, 6, 7, 7, 8, 8]);
    let json = v.to_json();
    assert_eq!(json["verdict"], "centric");
    assert_eq!(json["conditions"].as_array().unwrap().len(), 10);
    let series = v.series().unwrap();
    assert!(series.is_centric() && series.conjugate_closed());
}

#[test]
fn r_passes_all_eight_conditions() {
    let v = check_centric(&Calligraph::r(), &Budget::default()).unwrap();
    assert_eq!(certificate(&v), Some(Certificate::Conditions));
}

#[test]
fn l_is_centric_through_its_series() {
    // the edge {0,1} makes the c = 0 instance of condition 7 pick up (0,0) after T
    let v = check_centric(&Calligraph::l(), &Budget::default()).unwrap();
    assert_eq!(certificate(&v), Some(Certificate::Series));
    let seven: Vec<&Status> = v.conditions().iter().filter(|c| c.index == 7).map(|c| &c.status).collect();
    assert_eq!(seven, vec![&Status::Fails, &Status::Holds]);
    assert!(v.conditions().iter().filter(|c| c.index != 7).all(|c| c.status == Status::Holds));
}

#[test]
fn product_part_of_s_divides_after_t() {
    for g in [Calligraph::l(), Calligraph::r(), Calligraph::c3()] {
        let v = check_centric(&g, &Budget::default()).unwrap();
        for c in v.conditions().iter().filter(|c| c.index >= 5) {
            assert_eq!(c.s_divides.map(|d| d.1), Some(true), "condition {}", c.index);
        }
    }
}

#[test]
fn tiny_budget_is_inconclusive_not_centric() {
    let budget = Budget { max_reductions: 3, max_basis: 4 };
    let v = check_centric(&Calligraph::c3(), &budget).unwrap();
    assert!(!v.is_centric());
    assert!(matches!(v, CentricVerdict::Inconclusive { step: 2, .. }));
}

#[test]
fn pseudo_classes_agree_with_the_class_engine() {
    let engine = Engine::new(EngineConfig::default());
    let b = Budget::default();
    for (g, want) in [(Calligraph::r(), (1, 0, 1)), (Calligraph::c3(), (2, 0, 0)), (Calligraph::l(), (1, 1, 0))] {
        let pc = pseudo_class_small(&g, 1, &b).unwrap();
        assert_eq!(pc, ClassVector::new(want.0, want.1, want.2));
        assert_eq!(pc, engine.get_class(&g).unwrap().class);
    }
    assert_eq!(pseudo_class_small(&Calligraph::r(), 3, &b).unwrap(), ClassVector::new(3, 0, 3));
    assert!(pseudo_class_small(&Calligraph::r(), 0, &b).is_err());
}

const NAMES: [&str; 3] = ["x", "y", "l"];

fn gauss() -> impl Strategy<Value = GaussianRational> {
    (-2i64..=2, -2i64..=2).prop_map(|(a, b)| GaussianRational::from_ints(a, b))
}

fn family() -> impl Strategy<Value = Family> {
    (gauss(), gauss(), gauss(), gauss(), 0usize..3).prop_map(|(a, b, c, d, k)| {
        let src = ["(x-a)^2+(y-b)^2-l^2", "(x-a)*(y-b)+c*l", "x*(y-a)^2 + (x-b)*l + c*x^2*y"][k];
        let p: GPoly = Poly::parse(src, &["x", "y", "l", "a", "b", "c"], MonomialOrder::Lex).unwrap();
        let p = p.eval_var(3, &a).eval_var(4, &b).eval_var(5, &c).remap(3, MonomialOrder::Lex, &[0, 1, 2, 0, 0, 0]);
        let _ = d;
        Family::new(p, 0, 1)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_equivariant(f in family()) {
        let b = Budget::default();
        let pts = f.base_points(Locus::Plane, &b);
        let conj = f.conj().base_points(Locus::Plane, &b);
        prop_assert_eq!(pts.is_ok(), conj.is_ok());
        prop_assume!(pts.is_ok());
        let (pts, conj) = (pts.unwrap(), conj.unwrap());
        let mut mapped: Vec<Point> = pts.points().iter().map(Point::conj).collect();
        mapped.sort();
        prop_assert_eq!(conj.points(), mapped.as_slice());
        for p in pts.points() {
            prop_assert_eq!(f.multiplicity_at(p), f.conj().multiplicity_at(&p.conj()));
        }
    }

    #[test]
    fn blowups_divide_exactly_at_the_true_multiplicity(f in family(), p in (gauss(), gauss())) {
        let pt = Point::new(p.0, p.1);
        let m = f.multiplicity_at(&pt);
        prop_assert!(f.alpha(&pt, m).is_ok());
        prop_assert!(f.beta(&pt, m).is_ok());
        prop_assert!(f.alpha(&pt, m + 1).is_err());
        prop_assert!(f.beta(&pt, m + 1).is_err());
        let _ = NAMES;
    }
}
