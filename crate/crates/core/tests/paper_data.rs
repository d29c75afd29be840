//! Golden values for the worked examples and the degree-4 exception.

use std::collections::BTreeSet;

use hurwitz_core::{
    brute_force_counts, count, emit_dot, emit_json, enumerate_rigid_classes, parse_json, to_map,
    BranchDatum,
};

fn datum(s: &str) -> BranchDatum {
    s.parse().unwrap()
}

#[test]
fn worked_examples() {
    for (text, expected) in [
        ("7; 3,2,1,1; 3,2,1,1; 7", (9, 6, 4)),
        ("7; 7; 4,1,1,1; 3,2,1,1", (3, 3, 2)),
        ("7; 3,3,1; 3,3,1; 4,2,1", (4, 2, 2)),
        ("8; 4,2,2; 2,2,1,1,1,1; 8", (3, 3, 3)),
    ] {
        assert_eq!(count(&datum(text), 1).unwrap().triple(), expected, "{text}");
    }
}

#[test]
fn counts_do_not_depend_on_triple_order() {
    let a = count(&datum("7; 3,2,1,1; 3,2,1,1; 7"), 1).unwrap();
    let b = count(&datum("7; 7; 3,2,1,1; 3,2,1,1"), 1).unwrap();
    let c = count(&datum("7; 3,2,1,1; 7; 3,2,1,1"), 1).unwrap();
    assert_eq!(a.triple(), b.triple());
    assert_eq!(a.triple(), c.triple());
}

#[test]
fn nine_distinct_dot_files_for_the_figure() {
    let d = datum("7; 3,2,1,1; 3,2,1,1; 7");
    let dots: BTreeSet<String> = enumerate_rigid_classes(&d)
        .unwrap()
        .iter()
        .map(|r| emit_dot(&to_map(r, &d).unwrap()))
        .collect();
    assert_eq!(dots.len(), 9);
}

#[test]
fn json_round_trip_on_all_worked_examples() {
    for text in [
        "7; 3,2,1,1; 3,2,1,1; 7",
        "7; 7; 4,1,1,1; 3,2,1,1",
        "7; 3,3,1; 3,3,1; 4,2,1",
        "8; 4,2,2; 2,2,1,1,1,1; 8",
    ] {
        let d = datum(text);
        let [_, _, p3] = d.triple().unwrap();
        for r in enumerate_rigid_classes(&d).unwrap() {
            let map = to_map(&r, &d).unwrap();
            let json = emit_json(&map);
            let back = parse_json(&json).unwrap();
            assert_eq!(back, map);
            assert_eq!(emit_json(&back), json);
            assert_eq!(back.face_lengths().unwrap(), *p3);
            assert_eq!(back.to_pair().unwrap(), r);
        }
    }
}

#[test]
fn degree_four_exception_agrees_with_oracle() {
    let d = datum("4; 2,2; 2,2; 3,1");
    assert_eq!(count(&d, 1).unwrap().triple(), (0, 0, 0));
    assert_eq!(brute_force_counts(&d).unwrap(), (0, 0, 0));
}
