//! File format round trips for every kind, path-referenced group files,
//! and rejection of malformed input.

mod common;

use std::fs;

use ch2rep::io::{
    intertwiner_to_value, load_file, representation_to_value, save_value, two_group_to_value,
    LoadedFile,
};
use ch2rep::rep2::strictify;
use ch2rep::sample::{build_inventory, random_one_cell, random_two_cell, random_two_vect};
use ch2rep::{Error, Rat};

#[test]
fn two_group_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (i, tg) in common::standard_two_groups().into_iter().enumerate() {
        let path = dir.path().join(format!("tg{i}.json"));
        save_value(&path, &two_group_to_value(&tg)).unwrap();
        let LoadedFile::TwoGroup(back) = load_file(&path).unwrap() else {
            panic!("wrong kind");
        };
        assert_eq!(back, tg);
        assert!(back.validate().is_empty());
    }
}

#[test]
fn representation_and_intertwiner_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = common::rng(41);
    let tg = common::z2_z2(true);
    let inventory = build_inventory::<Rat>(&tg, 2, 4, &mut rng).unwrap();
    for (i, rep) in inventory.iter().enumerate() {
        let path = dir.path().join(format!("rep{i}.json"));
        save_value(&path, &representation_to_value(rep)).unwrap();
        let LoadedFile::Representation(back) = load_file(&path).unwrap() else {
            panic!("wrong kind");
        };
        assert_eq!(&back, rep);
    }
    let s = strictify(&inventory[1]).unwrap();
    let path = dir.path().join("intertwiner.json");
    save_value(&path, &intertwiner_to_value(&s.to_strict)).unwrap();
    let LoadedFile::Intertwiner(back) = load_file(&path).unwrap() else {
        panic!("wrong kind");
    };
    assert_eq!(back, s.to_strict);
}

#[test]
fn representation_group_may_be_a_relative_path() {
    let dir = tempfile::tempdir().unwrap();
    let tg = common::z3_z3();
    save_value(&dir.path().join("group.json"), &two_group_to_value(&tg)).unwrap();

    let rep_json = r#"{
        "kind": "representation",
        "group": "group.json",
        "dims": [1, 1],
        "rho1": [[["1"]], [["1"]], [["1"]]],
        "rho0": [[["1"]], [["1"]], [["1"]]],
        "beta": [{"rows": 1, "cols": 1, "entries": ["0"]}],
        "c": [
            [[["0"]], [["0"]], [["0"]]],
            [[["0"]], [["0"]], [["0"]]],
            [[["0"]], [["0"]], [["0"]]]
        ]
    }"#;
    let path = dir.path().join("rep.json");
    fs::write(&path, rep_json).unwrap();
    let LoadedFile::Representation(rep) = load_file(&path).unwrap() else {
        panic!("wrong kind");
    };
    assert_eq!(rep.tg(), &tg);
    assert!(rep.validate().is_empty());
    assert!(rep.is_strict());
}

#[test]
fn cell_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = common::rng(42);
    for i in 0..5 {
        let src = random_two_vect::<Rat>(&mut rng, 3);
        let dst = random_two_vect::<Rat>(&mut rng, 3);
        let f = random_one_cell(&mut rng, &src, &dst);
        let s = random_two_cell(&mut rng, &f);

        let complex_path = dir.path().join(format!("complex{i}.json"));
        let mut complex_value = ch2rep::io::two_vect_to_value(&src);
        complex_value
            .as_object_mut()
            .unwrap()
            .insert("kind".into(), "complex".into());
        save_value(&complex_path, &complex_value).unwrap();
        let LoadedFile::Complex(back) = load_file(&complex_path).unwrap() else {
            panic!("wrong kind");
        };
        assert_eq!(back, src);

        let cell_path = dir.path().join(format!("cell{i}.json"));
        let mut cell_value = ch2rep::io::one_cell_to_value(&f);
        cell_value
            .as_object_mut()
            .unwrap()
            .insert("kind".into(), "one_cell".into());
        save_value(&cell_path, &cell_value).unwrap();
        let LoadedFile::OneCell(back) = load_file(&cell_path).unwrap() else {
            panic!("wrong kind");
        };
        assert_eq!(back, f);

        let two_path = dir.path().join(format!("two{i}.json"));
        let mut two_value = ch2rep::io::two_cell_to_value(&s);
        two_value
            .as_object_mut()
            .unwrap()
            .insert("kind".into(), "two_cell".into());
        save_value(&two_path, &two_value).unwrap();
        let LoadedFile::TwoCell(back) = load_file(&two_path).unwrap() else {
            panic!("wrong kind");
        };
        assert_eq!(back, s);
    }
}

#[test]
fn cochain_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = common::rng(43);
    let tg = common::s3_z2();
    let pool = ch2rep::sample::level_pool::<Rat>(tg.pi0(), 2);
    let rep = ch2rep::sample::random_coboundary_rep(&tg, &pool[1], &pool[0], &mut rng).unwrap();
    let c = rep.c_cochain().unwrap();
    let path = dir.path().join("cochain.json");
    save_value(&path, &ch2rep::io::cochain_to_value(&c, &tg)).unwrap();
    let LoadedFile::Cochain(back, tg_back) = load_file(&path).unwrap() else {
        panic!("wrong kind");
    };
    assert_eq!(back, c);
    assert_eq!(tg_back, tg);

    // Degree 0: the table is a bare matrix.
    let zero = ch2rep::cohom::Cochain::zero(c.bimodule().clone(), 0);
    let path0 = dir.path().join("cochain0.json");
    save_value(&path0, &ch2rep::io::cochain_to_value(&zero, &tg)).unwrap();
    let LoadedFile::Cochain(back0, _) = load_file(&path0).unwrap() else {
        panic!("wrong kind");
    };
    assert_eq!(back0, zero);
}

#[test]
fn malformed_input_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("not json at all", "syntax"),
        (r#"{"kind": "widget"}"#, "unknown kind"),
        (r#"{"d": [["1"]]}"#, "missing kind"),
        (r#"{"kind": "complex", "d": [["1/0"]]}"#, "zero denominator"),
        (
            r#"{"kind": "complex", "d": [["1/-2"]]}"#,
            "negative denominator",
        ),
        (r#"{"kind": "complex", "d": [["1"], ["2", "3"]]}"#, "ragged"),
    ];
    for (i, (text, label)) in cases.iter().enumerate() {
        let path = dir.path().join(format!("bad{i}.json"));
        fs::write(&path, text).unwrap();
        match load_file(&path) {
            Err(Error::Parse(_)) => {}
            other => panic!("case {label}: expected parse error, got {other:?}"),
        }
    }
    assert!(matches!(
        load_file(dir.path().join("missing.json").as_path()),
        Err(Error::Parse(_))
    ));
}

#[test]
fn invalid_but_well_formed_cells_are_semantic_errors() {
    let dir = tempfile::tempdir().unwrap();
    // f0∘d ≠ d∘f1: structurally fine, semantically broken.
    let text = r#"{
        "kind": "one_cell",
        "src": {"d": [["1"]]},
        "dst": {"d": [["1"]]},
        "f1": [["1"]],
        "f0": [["2"]]
    }"#;
    let path = dir.path().join("bad_cell.json");
    fs::write(&path, text).unwrap();
    match load_file(&path) {
        Err(Error::Invariant(_)) => {}
        other => panic!("expected invariant error, got {other:?}"),
    }
}
