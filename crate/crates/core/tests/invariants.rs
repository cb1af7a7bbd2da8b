use num_bigint::BigInt;
use proptest::prelude::*;
use rigidcount::calligraph::{is_thin, Calligraph};
use rigidcount::invariants::*;
use rigidcount::{ClassVector, Engine, EngineConfig, MarkedGraph};

fn load(name: &str) -> Calligraph {
    let path = format!("{}/../../data/graphs/{name}.txt", env!("CARGO_MANIFEST_DIR"));
    Calligraph::new(MarkedGraph::parse(&std::fs::read_to_string(path).unwrap()).unwrap()).unwrap()
}

#[test]
fn multiplicities_of_small_calligraphs() {
    let engine = Engine::new(EngineConfig::default());
    let h = load("H");
    let ch = engine.get_class(&h).unwrap().class;
    assert_eq!(multiplicity_status(&h, &ch).unwrap(), MultiplicityStatus::Known { m: 1, reason: MultiplicityReason::Thin });
    let l = Calligraph::l();
    assert_eq!(
        multiplicity_status(&l, &ClassVector::new(1, 1, 0)).unwrap(),
        MultiplicityStatus::Known { m: 1, reason: MultiplicityReason::P3Left }
    );
    let m = load("M");
    let cm = engine.get_class(&m).unwrap().class;
    assert_eq!(cm, ClassVector::new(2, 2, 0));
    assert_eq!(multiplicity_status(&m, &cm).unwrap(), MultiplicityStatus::Known { m: 2, reason: MultiplicityReason::P3Left });
    assert!(multiplicity_status(&m, &ClassVector::new(2, 1, 0)).is_err());
}

#[test]
fn coupler_degrees() {
    assert_eq!(coupler_degree(&ClassVector::new(6, 2, 2), 1).unwrap(), BigInt::from(12));
    assert_eq!(coupler_degree(&ClassVector::new(272, 0, 0), 1).unwrap(), BigInt::from(544));
    assert_eq!(coupler_degree(&ClassVector::new(1, 1, 0), 1).unwrap(), BigInt::from(2));
}

#[test]
fn h_partitions_and_genus_filter() {
    let all = enumerate_partitions(&ClassVector::new(6, 2, 2), 1, 2, Some(&[6, 6])).unwrap();
    let listed = [
        vec![(3, 2, 2), (3, 0, 0)],
        vec![(3, 2, 0), (3, 0, 2)],
        vec![(3, 1, 2), (3, 1, 0)],
        vec![(3, 1, 1), (3, 1, 1)],
    ];
    for parts in &listed {
        assert!(all.contains(&ClassPartition { parts: parts.clone() }), "{parts:?}");
    }
    // the only other candidate is the mirror of a listed one
    assert_eq!(all.len(), 5);
    let extra: Vec<_> = all.iter().filter(|p| !listed.contains(&p.parts)).collect();
    assert_eq!(extra[0].mirrored().parts, vec![(3, 1, 2), (3, 1, 0)]);

    let kept = filter_by_genus(all, 3);
    assert_eq!(kept, vec![ClassPartition { parts: vec![(3, 1, 1), (3, 1, 1)] }]);
    assert_eq!(kept[0].genus_bounds(3), vec![1, 1]);
}

#[test]
fn sixteen_equal_components_of_f() {
    let f = load("F");
    assert!(is_thin(&f));
    let cls = ClassVector::new(272, 0, 0);
    let parts = enumerate_partitions(&cls, 1, 16, Some(&[34; 16])).unwrap();
    assert_eq!(parts.len(), 1);
    assert_eq!(parts[0].parts, vec![(17, 0, 0); 16]);
    assert_eq!(genus_bound((17, 0, 0), 0), 256);
}

#[test]
fn intersections() {
    let h = ClassVector::new(6, 2, 2);
    let c8 = ClassVector::new(2, 0, 0);
    assert_eq!(intersection_count(&h, 1, &c8, 1).unwrap(), IntersectionCount::Exact(24.into()));
    let (l, r) = (ClassVector::new(1, 1, 0), ClassVector::new(1, 0, 1));
    assert_eq!(intersection_count(&l, 1, &r, 1).unwrap(), IntersectionCount::Exact(2.into()));
    assert_eq!(intersection_count(&h, 1, &ClassVector::new(0, 0, 0), 1).unwrap(), IntersectionCount::Exact(0.into()));
    assert!(intersection_count(&l, 3, &r, 1).unwrap().exact().is_none());
}

#[test]
fn report_json_shape() {
    let h = load("H");
    let cls = ClassVector::new(6, 2, 2);
    let req = PartitionRequest { n: 2, degrees: Some(vec![6, 6]), min_sing: 3, discard_negative: true };
    let others = [("C8".to_string(), ClassVector::new(2, 0, 0), 1)];
    let rep = CouplerReport::build(&h, &cls, Some(&req), &others).unwrap();
    let v = rep.to_json();
    assert_eq!(v["degree"], 12);
    assert_eq!(v["multiplicity"]["status"], "known");
    assert_eq!(v["partitions"][0]["parts"], serde_json::json!([[3, 1, 1], [3, 1, 1]]));
    assert_eq!(v["partitions"][0]["degrees"], serde_json::json!([6, 6]));
    assert_eq!(v["intersections"][0]["value"], 24);
}

fn class_strategy() -> impl Strategy<Value = (i64, i64, i64)> {
    (0i64..9).prop_flat_map(|a| (Just(a), 0..=a, 0..=a))
}

proptest! {
    #[test]
    fn partitions_sum_and_respect_inequalities((a, b, c) in class_strategy(), n in 1usize..4) {
        let cls = ClassVector::new(a, b, c);
        let parts = enumerate_partitions(&cls, 1, n, None).unwrap();
        for p in &parts {
            prop_assert_eq!(p.parts.len(), n);
            prop_assert_eq!(p.sum(), (a, b, c));
            prop_assert!(p.parts.iter().all(|&q| ClassPartition::is_valid_part(q)));
        }
        let mut sorted = parts.clone();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), parts.len());
    }

    #[test]
    fn degree_with_unit_multiplicity_is_even((a, b, c) in class_strategy()) {
        let d = coupler_degree(&ClassVector::new(a, b, c), 1).unwrap();
        prop_assert_eq!(d % 2, BigInt::from(0));
    }
}

#[test]
fn genus_examples() {
    assert_eq!(genus_bound((3, 1, 1), 3), 1);
    assert_eq!(genus_bound((17, 0, 0), 0), 256);
    assert_eq!(genus_bound((1, 0, 0), 0), 0);
}

#[test]
fn small_partitions() {
    let one = enumerate_partitions(&ClassVector::new(2, 0, 0), 2, 1, None).unwrap();
    assert_eq!(one, vec![ClassPartition { parts: vec![(1, 0, 0)] }]);
    let two = enumerate_partitions(&ClassVector::new(4, 0, 0), 1, 2, Some(&[4, 4])).unwrap();
    assert_eq!(two, vec![ClassPartition { parts: vec![(2, 0, 0), (2, 0, 0)] }]);
}

#[test]
fn degree_needs_divisibility() {
    assert_eq!(coupler_degree(&ClassVector::new(6, 2, 2), 1).unwrap(), BigInt::from(12));
    assert!(coupler_degree(&ClassVector::new(3, 1, 1), 4).is_err());
}
