//! Shared fixtures for the integration tests: the four standard 2-groups
//! and a seeded generator.

// Each test target compiles its own copy; not all of them use every helper.
#![allow(dead_code)]

use ch2rep::grp::{ActionTable, Cocycle3, FinAbGroup, FinGroup, TwoGroupData};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// (Z/2, Z/2) with the trivial action; `z(1,1,1) = 1` when `nontrivial`.
pub fn z2_z2(nontrivial_z: bool) -> TwoGroupData {
    let pi0 = FinGroup::cyclic(2);
    let pi1 = FinAbGroup::new(vec![2]).unwrap();
    let action = ActionTable::trivial(&pi0, &pi1);
    let mut z = vec![vec![vec![0; 2]; 2]; 2];
    if nontrivial_z {
        z[1][1][1] = 1;
    }
    TwoGroupData::new(pi0, pi1, action, Cocycle3::new(z)).unwrap()
}

/// (Z/3, Z/3) with the trivial action and trivial cocycle.
pub fn z3_z3() -> TwoGroupData {
    let pi0 = FinGroup::cyclic(3);
    let pi1 = FinAbGroup::new(vec![3]).unwrap();
    let action = ActionTable::trivial(&pi0, &pi1);
    let z = Cocycle3::trivial(&pi0, &pi1);
    TwoGroupData::new(pi0, pi1, action, z).unwrap()
}

/// (S3, Z/2) with the trivial action and trivial cocycle.
pub fn s3_z2() -> TwoGroupData {
    let pi0 = FinGroup::symmetric3();
    let pi1 = FinAbGroup::new(vec![2]).unwrap();
    let action = ActionTable::trivial(&pi0, &pi1);
    let z = Cocycle3::trivial(&pi0, &pi1);
    TwoGroupData::new(pi0, pi1, action, z).unwrap()
}

/// All four standard fixtures.
pub fn standard_two_groups() -> Vec<TwoGroupData> {
    vec![z2_z2(true), z2_z2(false), z3_z3(), s3_z2()]
}
