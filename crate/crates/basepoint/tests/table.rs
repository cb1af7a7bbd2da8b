use rigid_algebra::GaussianRational;
use rigid_basepoint::table::{check_table1, CValue, EdgeKind};

#[test]
fn every_row_for_every_edge_kind_symbolic_c() {
    for kind in EdgeKind::ALL {
        for row in 1..=7 {
            let r = check_table1(kind, row, &CValue::Symbol).unwrap();
            assert!(r.is_ok(), "{kind:?} row {row}: difference {}", r.unwrap_err());
        }
    }
}

#[test]
fn rows_with_c_specialized_to_zero_and_i() {
    for c in [GaussianRational::from_ints(0, 0), GaussianRational::i()] {
        for kind in EdgeKind::ALL {
            for row in [6, 7] {
                assert!(check_table1(kind, row, &CValue::Const(c.clone())).unwrap().is_ok());
            }
        }
    }
}

#[test]
fn mismatched_row_reports_difference() {
    let t = rigid_basepoint::table::Table::new();
    let got = t.apply(EdgeKind::Contains0, 2, &CValue::Symbol).unwrap();
    let other = t.expected(EdgeKind::Contains0, 3, &CValue::Symbol).unwrap();
    assert_ne!(got, other);
    assert!(check_table1(EdgeKind::Contains1, 8, &CValue::Symbol).is_err());
}
