//! Regenerates the JSON fixtures bundled under `fixtures/` at the repository
//! root: the sample 2-groups (including deliberately corrupted ones used as
//! negative controls), complexes, representations, and cochains referenced
//! by the documentation and the integration tests.
//!
//! Run with `cargo run -p ch2rep-cli --example gen_fixtures`.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use ch2rep::grp::{ActionTable, Cocycle3, FinAbGroup, FinGroup, TwoGroupData};
use ch2rep::io::{representation_to_value, save_value, two_group_to_value};
use ch2rep::linalg::Matrix;
use ch2rep::rep1::Rep1;
use ch2rep::rep2::RepReduced;
use ch2rep::{rati, Rat};

fn fixtures_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn save(path: &Path, v: &Value) {
    fs::create_dir_all(path.parent().expect("fixture paths have parents")).unwrap();
    save_value(path, v).unwrap();
    println!("wrote {}", path.display());
}

/// A 2-group with trivial action and trivial associator.
fn plain_two_group(pi0: FinGroup, factors: Vec<usize>) -> TwoGroupData {
    let pi1 = if factors.is_empty() {
        FinAbGroup::trivial()
    } else {
        FinAbGroup::new(factors).unwrap()
    };
    let action = ActionTable::trivial(&pi0, &pi1);
    let z = Cocycle3::trivial(&pi0, &pi1);
    TwoGroupData::new(pi0, pi1, action, z).unwrap()
}

/// `pi0 = pi1 = Z/2` with trivial action and the nontrivial associator
/// class `z(1,1,1) = 1`.
fn z2_z2_nontrivial() -> TwoGroupData {
    let pi0 = FinGroup::cyclic(2);
    let pi1 = FinAbGroup::new(vec![2]).unwrap();
    let action = ActionTable::trivial(&pi0, &pi1);
    let mut z = vec![vec![vec![0usize; 2]; 2]; 2];
    z[1][1][1] = 1;
    TwoGroupData::new(pi0, pi1, action, Cocycle3::new(z)).unwrap()
}

/// One-dimensional trivial levels with the coboundary cochain
/// `c(1,1) = 1`; strictification contracts it to `mu(1) = 1/2`.
fn halfway_rep(tg: &TwoGroupData) -> RepReduced<Rat> {
    let rho = Rep1::trivial(tg.pi0().clone(), 1);
    let zero = Matrix::<Rat>::zeros(1, 1);
    let one = Matrix::from_rows(vec![vec![rati(1)]]).unwrap();
    let c = vec![vec![zero.clone(), zero.clone()], vec![zero.clone(), one]];
    RepReduced::new(tg.clone(), rho.clone(), rho, vec![zero], c).unwrap()
}

fn main() {
    let root = fixtures_root();

    let z2n = z2_z2_nontrivial();
    let z2t = plain_two_group(FinGroup::cyclic(2), vec![2]);
    let z3t = plain_two_group(FinGroup::cyclic(3), vec![3]);
    let s3t = plain_two_group(FinGroup::symmetric3(), vec![2]);
    let trivial = plain_two_group(FinGroup::trivial(), vec![]);
    save(
        &root.join("two_groups/z2_z2_nontrivial.json"),
        &two_group_to_value(&z2n),
    );
    save(
        &root.join("two_groups/z2_z2_trivial.json"),
        &two_group_to_value(&z2t),
    );
    save(
        &root.join("two_groups/z3_z3_trivial.json"),
        &two_group_to_value(&z3t),
    );
    save(
        &root.join("two_groups/s3_z2_trivial.json"),
        &two_group_to_value(&s3t),
    );
    save(
        &root.join("two_groups/trivial.json"),
        &two_group_to_value(&trivial),
    );

    // Negative controls: valid files with a single table entry broken, so
    // they parse cleanly and fail exactly one family of axioms.
    let mut corrupt_mult = two_group_to_value(&z2t);
    corrupt_mult["pi0"]["mult"][1][1] = json!(1);
    save(&root.join("two_groups/corrupt_mult.json"), &corrupt_mult);

    let mut corrupt_action = two_group_to_value(&z2n);
    corrupt_action["action"][1][1] = json!([0]);
    save(
        &root.join("two_groups/corrupt_action.json"),
        &corrupt_action,
    );

    let mut corrupt_z = two_group_to_value(&z2n);
    corrupt_z["z"][0][1][1] = json!([1]);
    save(&root.join("two_groups/corrupt_z.json"), &corrupt_z);

    save(
        &root.join("complexes/rank_one.json"),
        &json!({ "kind": "complex", "d": [["1", "0"], ["0", "0"]] }),
    );
    save(
        &root.join("complexes/invertible.json"),
        &json!({ "kind": "complex", "d": [["2"]] }),
    );
    save(
        &root.join("complexes/zero_map.json"),
        &json!({ "kind": "complex", "d": [["0", "0"], ["0", "0"]] }),
    );

    // Representations reference their 2-group by relative path.
    let trivial_rep = RepReduced::trivial(z2n.clone());
    let group_ref = json!("../two_groups/z2_z2_nontrivial.json");
    let mut v = representation_to_value(&trivial_rep);
    v["group"] = group_ref.clone();
    save(&root.join("representations/trivial_z2.json"), &v);

    let mut v = representation_to_value(&halfway_rep(&z2n));
    v["group"] = group_ref.clone();
    save(&root.join("representations/halfway_z2.json"), &v);

    let mut corrupt_rho = representation_to_value(&trivial_rep);
    corrupt_rho["group"] = group_ref;
    corrupt_rho["rho0"][1] = json!([["2"]]);
    save(&root.join("representations/corrupt_rho.json"), &corrupt_rho);

    // Degree-2 cochain over the trivial 1-dimensional bimodule with the
    // single nonzero value z(1,1) = 1; its primitive has c(1) = 1/2.
    save(
        &root.join("cochains/z2_hand.json"),
        &json!({
            "kind": "cochain",
            "group": "../two_groups/z2_z2_trivial.json",
            "degree": 2,
            "shape": [1, 1],
            "table": [[[["0"]], [["0"]]], [[["0"]], [["1"]]]],
        }),
    );

    // Not even parsable: a zero denominator.
    save(
        &root.join("bad/zero_denominator.json"),
        &json!({ "kind": "complex", "d": [["1/0"]] }),
    );
}
