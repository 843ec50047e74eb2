//! Bar-complex properties over nontrivial bimodules: the differential
//! squares to zero, the averaging contraction inverts it on cocycles, and
//! the coboundary solver finds primitives exactly when they exist.

mod common;

use std::sync::Arc;

use ch2rep::cohom::{
    averaging_contraction, coboundary, cohomologous, is_cocycle, Bimodule, Cochain,
};
use ch2rep::grp::FinGroup;
use ch2rep::sample::{level_pool, random_matrix};
use ch2rep::Rat;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn test_groups() -> Vec<FinGroup> {
    vec![
        FinGroup::cyclic(2),
        FinGroup::cyclic(3),
        FinGroup::cyclic(4),
        FinGroup::symmetric3(),
    ]
}

/// A bimodule with actions drawn from the standard representation pool.
fn sample_bimodule(group: &FinGroup, rng: &mut ChaCha8Rng) -> Arc<Bimodule<Rat>> {
    let pool = level_pool::<Rat>(group, 2);
    let left = &pool[rng.gen_range(0..pool.len())];
    let right = &pool[rng.gen_range(0..pool.len())];
    Arc::new(
        Bimodule::new(
            group.clone(),
            left.mats().to_vec(),
            right.mats().to_vec(),
            left.dim(),
            right.dim(),
        )
        .unwrap(),
    )
}

fn random_cochain(bim: Arc<Bimodule<Rat>>, degree: usize, rng: &mut ChaCha8Rng) -> Cochain<Rat> {
    let (rows, cols) = (bim.rows(), bim.cols());
    Cochain::from_fn(bim, degree, |_| random_matrix(rng, rows, cols)).unwrap()
}

#[test]
fn coboundary_squares_to_zero() {
    let mut rng = common::rng(21);
    for group in test_groups() {
        for degree in 0..=2 {
            for _ in 0..10 {
                let bim = sample_bimodule(&group, &mut rng);
                let c = random_cochain(bim, degree, &mut rng);
                assert!(
                    coboundary(&coboundary(&c)).is_zero(),
                    "group order {} degree {degree}",
                    group.order()
                );
            }
        }
    }
}

#[test]
fn averaging_contraction_inverts_coboundary_on_cocycles() {
    let mut rng = common::rng(22);
    for group in test_groups() {
        for degree in 1..=3 {
            for _ in 0..10 {
                let bim = sample_bimodule(&group, &mut rng);
                let z = coboundary(&random_cochain(bim, degree - 1, &mut rng));
                assert!(is_cocycle(&z));
                let c = averaging_contraction(&z).unwrap();
                assert_eq!(c.degree(), degree - 1);
                assert_eq!(coboundary(&c), z);
            }
        }
    }
}

#[test]
fn contraction_rejects_non_cocycles() {
    let mut rng = common::rng(23);
    let group = FinGroup::cyclic(3);
    // A random degree-1 cochain over a nontrivial bimodule is almost never
    // a cocycle; find one that is not and check the error.
    for _ in 0..20 {
        let bim = sample_bimodule(&group, &mut rng);
        let c = random_cochain(bim, 1, &mut rng);
        if !is_cocycle(&c) {
            assert!(averaging_contraction(&c).is_err());
            return;
        }
    }
    panic!("never sampled a non-cocycle");
}

#[test]
fn cohomologous_finds_primitives_exactly_when_they_exist() {
    let mut rng = common::rng(24);
    for group in test_groups() {
        for degree in 1..=2 {
            let bim = sample_bimodule(&group, &mut rng);
            let c1 = random_cochain(bim.clone(), degree, &mut rng);
            let shift = coboundary(&random_cochain(bim, degree - 1, &mut rng));
            let c2 = c1.add(&shift).unwrap();
            let x = cohomologous(&c2, &c1)
                .unwrap()
                .expect("difference is a coboundary by construction");
            assert_eq!(coboundary(&x), shift);
        }
    }
    // If c2 − c1 is not a cocycle it cannot be a coboundary, so the solver
    // must report that no primitive exists.
    let group = FinGroup::cyclic(2);
    let bim = sample_bimodule(&group, &mut rng);
    loop {
        let c1 = random_cochain(bim.clone(), 2, &mut rng);
        if !is_cocycle(&c1) {
            let zero = Cochain::zero(bim.clone(), 2);
            assert!(cohomologous(&c1, &zero).unwrap().is_none());
            break;
        }
    }
}
