//! Seeded random generators for cells, matrices, and representations.
//!
//! Everything draws from a caller-supplied [`ChaCha8Rng`] so that runs are
//! reproducible from a single seed.  Constrained objects (commuting
//! squares, reduced representations) are sampled by solving the constraint
//! exactly and picking random coordinates in the solution space, never by
//! rejection.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::ch2::{OneCell, TwoCell, TwoVect};
use crate::cohom::{coboundary, Cochain};
use crate::error::Result;
use crate::grp::{enumerate_homs, FinGroup, TwoGroupData};
use crate::linalg::Matrix;
use crate::rep1::Rep1;
use crate::rep2::RepReduced;
use crate::scalar::{from_i64, Scalar};

/// A small rational scalar: numerator in `-4..=4`, denominator in `1..=3`.
pub fn random_scalar<T: Scalar>(rng: &mut ChaCha8Rng) -> T {
    let num = from_i64::<T>(rng.gen_range(-4..=4));
    let den = from_i64::<T>(rng.gen_range(1..=3));
    num / den
}

pub fn random_matrix<T: Scalar>(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<T> {
    let data: Vec<T> = (0..rows * cols).map(|_| random_scalar(rng)).collect();
    Matrix::from_flat(rows, cols, data)
}

/// Product of elementary shears, swaps, and a possible sign flip; always
/// invertible (determinant ±1).
pub fn random_unimodular<T: Scalar>(rng: &mut ChaCha8Rng, n: usize) -> Matrix<T> {
    let mut m = Matrix::<T>::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            m[(0, 0)] = -m[(0, 0)].clone();
        }
        return m;
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        match rng.gen_range(0..3) {
            0 => {
                // row_i += k · row_j
                let k = from_i64::<T>(rng.gen_range(-2..=2));
                for col in 0..n {
                    let add = k.clone() * m[(j, col)].clone();
                    m[(i, col)] = m[(i, col)].clone() + add;
                }
            }
            1 => m.swap_rows(i, j),
            _ => {
                for col in 0..n {
                    m[(i, col)] = -m[(i, col)].clone();
                }
            }
        }
    }
    m
}

/// `P·(I_r ⊕ 0)·Q` with `P, Q` unimodular: exact rank `r`.
pub fn random_matrix_of_rank<T: Scalar>(
    rng: &mut ChaCha8Rng,
    rows: usize,
    cols: usize,
    rank: usize,
) -> Matrix<T> {
    assert!(rank <= rows.min(cols), "rank exceeds matrix dimensions");
    let core = Matrix::from_fn(rows, cols, |i, j| {
        if i == j && i < rank {
            T::one()
        } else {
            T::zero()
        }
    });
    let p = random_unimodular::<T>(rng, rows);
    let q = random_unimodular::<T>(rng, cols);
    &(&p * &core) * &q
}

/// A complex with both dimensions in `0..=dim_max` and random differential.
pub fn random_two_vect<T: Scalar>(rng: &mut ChaCha8Rng, dim_max: usize) -> TwoVect<T> {
    let n1 = rng.gen_range(0..=dim_max);
    let n0 = rng.gen_range(0..=dim_max);
    TwoVect::new(random_matrix(rng, n0, n1))
}

/// A uniform-ish point of the space of 1-cells `src → dst`: solve the
/// commuting-square constraint exactly and take a random kernel combination.
pub fn random_one_cell<T: Scalar>(
    rng: &mut ChaCha8Rng,
    src: &TwoVect<T>,
    dst: &TwoVect<T>,
) -> OneCell<T> {
    let (s1, s0) = (src.dim1(), src.dim0());
    let (d1, d0) = (dst.dim1(), dst.dim0());
    let n_f1 = d1 * s1;
    let n_f0 = d0 * s0;
    // Constraint rows: (f0 ∘ d_src − d_dst ∘ f1)[a][b] = 0 for the
    // d0 × s1 positions, unknowns ordered f1-block then f0-block.
    let mut system = Matrix::<T>::zeros(d0 * s1, n_f1 + n_f0);
    for a in 0..d0 {
        for b in 0..s1 {
            let row = a * s1 + b;
            for y in 0..s0 {
                let cur = system[(row, n_f1 + a * s0 + y)].clone();
                system[(row, n_f1 + a * s0 + y)] = cur + src.d()[(y, b)].clone();
            }
            for x in 0..d1 {
                let cur = system[(row, x * s1 + b)].clone();
                system[(row, x * s1 + b)] = cur - dst.d()[(a, x)].clone();
            }
        }
    }
    let kernel = system.kernel_basis();
    let mut flat = vec![T::zero(); n_f1 + n_f0];
    for j in 0..kernel.cols() {
        let coeff: T = random_scalar(rng);
        for (i, slot) in flat.iter_mut().enumerate() {
            *slot = slot.clone() + coeff.clone() * kernel[(i, j)].clone();
        }
    }
    let f1 = Matrix::from_flat(d1, s1, flat[..n_f1].to_vec());
    let f0 = Matrix::from_flat(d0, s0, flat[n_f1..].to_vec());
    OneCell::new(src.clone(), dst.clone(), f1, f0)
        .expect("kernel combinations satisfy the commuting square")
}

/// A 2-cell out of `f`: the homotopy `σ` is free, the target 1-cell is
/// derived as `(f₁ + σ∘d, f₀ + d∘σ)`.
pub fn random_two_cell<T: Scalar>(rng: &mut ChaCha8Rng, f: &OneCell<T>) -> TwoCell<T> {
    let sigma = random_matrix(rng, f.dst().dim1(), f.src().dim0());
    let g1 = f.f1() + &(&sigma * f.src().d());
    let g0 = f.f0() + &(f.dst().d() * &sigma);
    let g = OneCell::new(f.src().clone(), f.dst().clone(), g1, g0)
        .expect("derived target satisfies the commuting square");
    TwoCell::new(f.clone(), g, sigma).expect("homotopy equations hold by construction")
}

/// Standard small representations of `pi0`: trivial ones in every
/// dimension up to `dim_max`, sign characters, 2-dimensional rotation
/// images, and 3-dimensional permutation images, without duplicates.
pub fn level_pool<T: Scalar>(pi0: &FinGroup, dim_max: usize) -> Vec<Rep1<T>> {
    let mut pool: Vec<Rep1<T>> = Vec::new();
    let push = |r: Rep1<T>, pool: &mut Vec<Rep1<T>>| {
        if !pool.contains(&r) {
            pool.push(r);
        }
    };
    for dim in 1..=dim_max.max(1) {
        push(Rep1::trivial(pi0.clone(), dim), &mut pool);
    }
    let z2 = FinGroup::cyclic(2);
    for hom in enumerate_homs(pi0, &z2) {
        let mats = hom
            .iter()
            .map(|&x| {
                let mut m = Matrix::<T>::identity(1);
                if x == 1 {
                    m[(0, 0)] = -T::one();
                }
                m
            })
            .collect();
        push(Rep1::new(pi0.clone(), mats).expect("character"), &mut pool);
    }
    if dim_max >= 2 {
        let z4 = FinGroup::cyclic(4);
        let rot =
            Matrix::from_rows(vec![vec![T::zero(), -T::one()], vec![T::one(), T::zero()]]).unwrap();
        let mut powers = vec![Matrix::<T>::identity(2)];
        for k in 1..4 {
            powers.push(&powers[k - 1] * &rot);
        }
        for hom in enumerate_homs(pi0, &z4) {
            let mats = hom.iter().map(|&k| powers[k].clone()).collect();
            push(
                Rep1::new(pi0.clone(), mats).expect("rotation image"),
                &mut pool,
            );
        }
    }
    if dim_max >= 3 {
        let (s3, perms) = FinGroup::symmetric3_with_perms();
        for hom in enumerate_homs(pi0, &s3) {
            let mats = hom
                .iter()
                .map(|&p| {
                    Matrix::from_fn(3, 3, |i, j| {
                        if perms[p][j] == i {
                            T::one()
                        } else {
                            T::zero()
                        }
                    })
                })
                .collect();
            push(
                Rep1::new(pi0.clone(), mats).expect("permutation image"),
                &mut pool,
            );
        }
    }
    pool
}

/// A valid non-strict representation on the given levels: `β = 0` and
/// `c = ∂x` for a random normalized 1-cochain `x`.
pub fn random_coboundary_rep<T: Scalar>(
    tg: &TwoGroupData,
    rho1: &Rep1<T>,
    rho0: &Rep1<T>,
    rng: &mut ChaCha8Rng,
) -> Result<RepReduced<T>> {
    let strict = RepReduced::strict(tg.clone(), rho1.clone(), rho0.clone())?;
    let bim = strict.bimodule()?;
    let e = tg.pi0().identity();
    let (n1, n0) = (rho1.dim(), rho0.dim());
    let x = Cochain::from_fn(bim, 1, |t| {
        if t[0] == e {
            Matrix::zeros(n1, n0)
        } else {
            random_matrix(rng, n1, n0)
        }
    })?;
    let c = coboundary(&x);
    let order = tg.pi0().order();
    let table: Vec<Vec<Matrix<T>>> = (0..order)
        .map(|g| (0..order).map(|h| c.eval(&[g, h]).clone()).collect())
        .collect();
    RepReduced::new(
        tg.clone(),
        rho1.clone(),
        rho0.clone(),
        vec![Matrix::zeros(n1, n0); tg.pi1().rank()],
        table,
    )
}

/// An inventory that covers the whole level pool: the trivial
/// representation, one strict representation per cyclically adjacent pool
/// pair (so every pool member occurs at both levels), and a handful of
/// coboundary-twisted representations over random pool pairs.
pub fn covering_inventory<T: Scalar>(
    tg: &TwoGroupData,
    dim_max: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<RepReduced<T>>> {
    let pool = level_pool::<T>(tg.pi0(), dim_max);
    let mut inventory = vec![RepReduced::trivial(tg.clone())];
    for (i, rho1) in pool.iter().enumerate() {
        let rho0 = &pool[(i + 1) % pool.len()];
        inventory.push(RepReduced::strict(tg.clone(), rho1.clone(), rho0.clone())?);
    }
    for _ in 0..pool.len().min(6) {
        let rho1 = &pool[rng.gen_range(0..pool.len())];
        let rho0 = &pool[rng.gen_range(0..pool.len())];
        inventory.push(random_coboundary_rep(tg, rho1, rho0, rng)?);
    }
    Ok(inventory)
}

/// An inventory for equivalence verification: the trivial representation,
/// then `count` random ones over level pairs from [`level_pool`], half
/// strict and half carrying a random coboundary cochain, with occasional
/// basis changes.
pub fn build_inventory<T: Scalar>(
    tg: &TwoGroupData,
    dim_max: usize,
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<RepReduced<T>>> {
    let pool = level_pool::<T>(tg.pi0(), dim_max);
    let mut inventory = vec![RepReduced::trivial(tg.clone())];
    for _ in 0..count {
        let mut rho1 = pool[rng.gen_range(0..pool.len())].clone();
        let mut rho0 = pool[rng.gen_range(0..pool.len())].clone();
        if rng.gen_bool(0.25) {
            rho1 = rho1.conjugate(&random_unimodular(rng, rho1.dim()))?;
        }
        if rng.gen_bool(0.25) {
            rho0 = rho0.conjugate(&random_unimodular(rng, rho0.dim()))?;
        }
        let rep = if rng.gen_bool(0.5) {
            RepReduced::strict(tg.clone(), rho1, rho0)?
        } else {
            random_coboundary_rep(tg, &rho1, &rho0, rng)?
        };
        inventory.push(rep);
    }
    Ok(inventory)
}
