use rigidcount::*;
use rigidcount::canonical::*;
use std::collections::BTreeMap;

#[test]
fn relabel_invariance() {
    let h = MarkedGraph::from_edges([(1, 2), (1, 3), (3, 4), (3, 0), (4, 0), (4, 2)]).unwrap();
    let map: BTreeMap<Vertex, Vertex> = [(3, 9), (4, 7)].into();
    assert_eq!(canonical_key(&h).unwrap(), canonical_key(&h.relabel(&map).unwrap()).unwrap());
}

#[test]
fn swap_closure_identifies_mirrors() {
    let l = MarkedGraph::from_edges([(1, 2), (0, 1)]).unwrap();
    let r = MarkedGraph::from_edges([(1, 2), (0, 2)]).unwrap();
    let (fl, fr) = (canonical_form(&l, KeyMode::Marked).unwrap(), canonical_form(&r, KeyMode::Marked).unwrap());
    assert_eq!(fl.key, fr.key);
    assert_ne!(fl.swapped, fr.swapped);
    let key = canonical_key(&MarkedGraph::triangle()).unwrap();
    assert_eq!(CanonicalKey::from_hex(&key.to_hex()), Some(key));
}
