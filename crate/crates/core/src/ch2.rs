//! The strict 2-category of 2-term chain complexes.
//!
//! A 0-cell is a linear map `d: V1 → V0` (the differential).  A 1-cell
//! `(f1, f0)` is a commuting square, and a 2-cell from `(f1, f0)` to
//! `(g1, g0)` is a single map `σ: V0 → W1` with `d_W σ = g0 − f0` and
//! `σ d_V = g1 − f1`.  Vertical composition is addition of components,
//! horizontal composition is `f'1∘σ + σ'∘g0`, and every 2-cell is invertible
//! with inverse `−σ`.  Cells carry their endpoints and check the defining
//! equations when constructed.

use crate::error::{Error, Result};
use crate::linalg::{split_complex, Matrix};
use crate::scalar::Scalar;

/// 2-term chain complex, i.e. a differential `d: V1 → V0`.
///
/// `d` has `dim0` rows and `dim1` columns; zero-dimensional sides are fine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoVect<T> {
    d: Matrix<T>,
}

impl<T: Scalar> TwoVect<T> {
    pub fn new(d: Matrix<T>) -> Self {
        TwoVect { d }
    }

    /// Complex with zero differential of the given dimensions.
    pub fn zero_complex(dim1: usize, dim0: usize) -> Self {
        TwoVect {
            d: Matrix::zeros(dim0, dim1),
        }
    }

    pub fn d(&self) -> &Matrix<T> {
        &self.d
    }

    pub fn dim1(&self) -> usize {
        self.d.cols()
    }

    pub fn dim0(&self) -> usize {
        self.d.rows()
    }

    pub fn has_zero_differential(&self) -> bool {
        self.d.is_zero()
    }

    /// Direct sum with the complex `1: W → W`.
    pub fn pad(&self, w_dim: usize) -> Self {
        TwoVect {
            d: self.d.block_diag(&Matrix::identity(w_dim)),
        }
    }
}

/// 1-cell: a commuting square `(f1, f0)` between two complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneCell<T> {
    src: TwoVect<T>,
    dst: TwoVect<T>,
    f1: Matrix<T>,
    f0: Matrix<T>,
}

impl<T: Scalar> OneCell<T> {
    pub fn new(src: TwoVect<T>, dst: TwoVect<T>, f1: Matrix<T>, f0: Matrix<T>) -> Result<Self> {
        if f1.rows() != dst.dim1() || f1.cols() != src.dim1() {
            return Err(Error::Shape(format!(
                "f1 is {}x{}, expected {}x{}",
                f1.rows(),
                f1.cols(),
                dst.dim1(),
                src.dim1()
            )));
        }
        if f0.rows() != dst.dim0() || f0.cols() != src.dim0() {
            return Err(Error::Shape(format!(
                "f0 is {}x{}, expected {}x{}",
                f0.rows(),
                f0.cols(),
                dst.dim0(),
                src.dim0()
            )));
        }
        if &f0 * src.d() != dst.d() * &f1 {
            return Err(Error::Invariant(
                "square does not commute: f0∘d ≠ d∘f1".into(),
            ));
        }
        Ok(OneCell { src, dst, f1, f0 })
    }

    pub fn identity(v: &TwoVect<T>) -> Self {
        OneCell {
            src: v.clone(),
            dst: v.clone(),
            f1: Matrix::identity(v.dim1()),
            f0: Matrix::identity(v.dim0()),
        }
    }

    pub fn zero(src: &TwoVect<T>, dst: &TwoVect<T>) -> Self {
        OneCell {
            src: src.clone(),
            dst: dst.clone(),
            f1: Matrix::zeros(dst.dim1(), src.dim1()),
            f0: Matrix::zeros(dst.dim0(), src.dim0()),
        }
    }

    pub fn src(&self) -> &TwoVect<T> {
        &self.src
    }

    pub fn dst(&self) -> &TwoVect<T> {
        &self.dst
    }

    pub fn f1(&self) -> &Matrix<T> {
        &self.f1
    }

    pub fn f0(&self) -> &Matrix<T> {
        &self.f0
    }
}

/// 2-cell: a homotopy `σ: V0 → W1` between parallel 1-cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCell<T> {
    src: OneCell<T>,
    dst: OneCell<T>,
    sigma: Matrix<T>,
}

impl<T: Scalar> TwoCell<T> {
    pub fn new(src: OneCell<T>, dst: OneCell<T>, sigma: Matrix<T>) -> Result<Self> {
        if src.src != dst.src || src.dst != dst.dst {
            return Err(Error::Composition(
                "2-cell endpoints are not parallel".into(),
            ));
        }
        let v = &src.src;
        let w = &src.dst;
        if sigma.rows() != w.dim1() || sigma.cols() != v.dim0() {
            return Err(Error::Shape(format!(
                "sigma is {}x{}, expected {}x{}",
                sigma.rows(),
                sigma.cols(),
                w.dim1(),
                v.dim0()
            )));
        }
        if w.d() * &sigma != &dst.f0 - &src.f0 {
            return Err(Error::Invariant("d∘σ ≠ g0 − f0".into()));
        }
        if &sigma * v.d() != &dst.f1 - &src.f1 {
            return Err(Error::Invariant("σ∘d ≠ g1 − f1".into()));
        }
        Ok(TwoCell { src, dst, sigma })
    }

    pub fn identity(f: &OneCell<T>) -> Self {
        TwoCell {
            src: f.clone(),
            dst: f.clone(),
            sigma: Matrix::zeros(f.dst.dim1(), f.src.dim0()),
        }
    }

    pub fn src(&self) -> &OneCell<T> {
        &self.src
    }

    pub fn dst(&self) -> &OneCell<T> {
        &self.dst
    }

    pub fn sigma(&self) -> &Matrix<T> {
        &self.sigma
    }
}

/// Composite 1-cell `g ∘ f` (apply `f` first).
pub fn compose1<T: Scalar>(g: &OneCell<T>, f: &OneCell<T>) -> Result<OneCell<T>> {
    if f.dst != g.src {
        return Err(Error::Composition("1-cells are not composable".into()));
    }
    OneCell::new(f.src.clone(), g.dst.clone(), &g.f1 * &f.f1, &g.f0 * &f.f0)
}

/// Vertical composite `τ ∙ σ` (apply `σ` first); components add.
pub fn vcomp<T: Scalar>(tau: &TwoCell<T>, sigma: &TwoCell<T>) -> Result<TwoCell<T>> {
    if sigma.dst != tau.src {
        return Err(Error::Composition(
            "2-cells are not vertically composable".into(),
        ));
    }
    TwoCell::new(
        sigma.src.clone(),
        tau.dst.clone(),
        &tau.sigma + &sigma.sigma,
    )
}

/// Horizontal composite `σ' ∘ σ` of `σ: f ⇒ g` (inner) and `σ': f' ⇒ g'` (outer).
///
/// The two defining formulas `f'1∘σ + σ'∘g0` and `g'1∘σ + σ'∘f0` must agree;
/// disagreement means the inputs were not valid 2-cells.
pub fn hcomp<T: Scalar>(outer: &TwoCell<T>, inner: &TwoCell<T>) -> Result<TwoCell<T>> {
    if inner.src.dst != outer.src.src {
        return Err(Error::Composition(
            "2-cells are not horizontally composable".into(),
        ));
    }
    let first = &(&outer.src.f1 * &inner.sigma) + &(&outer.sigma * &inner.dst.f0);
    let second = &(&outer.dst.f1 * &inner.sigma) + &(&outer.sigma * &inner.src.f0);
    if first != second {
        return Err(Error::Invariant(
            "horizontal composition formulas disagree; inputs are not valid 2-cells".into(),
        ));
    }
    TwoCell::new(
        compose1(&outer.src, &inner.src)?,
        compose1(&outer.dst, &inner.dst)?,
        first,
    )
}

/// Inverse 2-cell: endpoints swapped, component negated.
pub fn inv2<T: Scalar>(cell: &TwoCell<T>) -> TwoCell<T> {
    TwoCell {
        src: cell.dst.clone(),
        dst: cell.src.clone(),
        sigma: -&cell.sigma,
    }
}

/// 2-cell from the identity 1-cell to the zero 1-cell, when one exists.
///
/// Such a cell exists iff the differential is invertible, and then its
/// component is `−d⁻¹` (so `d·σ = −1` and `σ·d = −1`).
pub fn is_equiv_to_zero<T: Scalar>(v: &TwoVect<T>) -> Option<TwoCell<T>> {
    let inv = v.d().inverse()?;
    let cell = TwoCell::new(OneCell::identity(v), OneCell::zero(v, v), -&inv)
        .expect("−d⁻¹ is a valid homotopy from the identity to zero");
    Some(cell)
}

/// Witnesses of the equivalence `V ≃ V ⊕ (1: W → W)`.
pub struct PadEquivalence<T> {
    pub padded: TwoVect<T>,
    pub iota: OneCell<T>,
    pub pi: OneCell<T>,
    /// 2-cell `0 ⊕ 1_W` from `iota ∘ pi` to the identity of the padded complex.
    pub eta: TwoCell<T>,
}

/// Pad a complex by the contractible summand `1: W → W` of dimension `w_dim`.
///
/// `pi ∘ iota` is exactly the identity of `v`; `eta` witnesses the other
/// composite being isomorphic to the identity.
pub fn pad_equivalence<T: Scalar>(v: &TwoVect<T>, w_dim: usize) -> PadEquivalence<T> {
    let padded = v.pad(w_dim);
    let inj = |n: usize| Matrix::<T>::identity(n).vstack(&Matrix::zeros(w_dim, n));
    let proj = |n: usize| Matrix::<T>::identity(n).hstack(&Matrix::zeros(n, w_dim));
    let iota = OneCell::new(v.clone(), padded.clone(), inj(v.dim1()), inj(v.dim0()))
        .expect("inclusion commutes with the padded differential");
    let pi = OneCell::new(padded.clone(), v.clone(), proj(v.dim1()), proj(v.dim0()))
        .expect("projection commutes with the padded differential");
    let eta_component = Matrix::zeros(v.dim1(), v.dim0()).block_diag(&Matrix::identity(w_dim));
    let composite = compose1(&iota, &pi).expect("iota and pi are composable");
    let eta = TwoCell::new(composite, OneCell::identity(&padded), eta_component)
        .expect("0 ⊕ 1 is a valid homotopy for the padding equivalence");
    PadEquivalence {
        padded,
        iota,
        pi,
        eta,
    }
}

/// Normal form of a complex and the equivalence witnessing it.
pub struct Normalization<T> {
    /// Zero complex `0: ker d → coker d`.
    pub n: TwoVect<T>,
    pub to_n: OneCell<T>,
    pub from_n: OneCell<T>,
    /// 2-cell from `from_n ∘ to_n` to the identity of the original complex.
    pub unit: TwoCell<T>,
    /// 2-cell from `to_n ∘ from_n` (exactly the identity of `n`) to itself.
    pub counit: TwoCell<T>,
    pub kernel_dim: usize,
    pub coker_dim: usize,
}

/// Replace a complex by the zero complex on its kernel and cokernel.
///
/// Splits the differential into `0 ⊕ 1` coordinates and discards the
/// contractible `1` summand; all four witnesses are validated cells.
pub fn normalize<T: Scalar>(v: &TwoVect<T>) -> Normalization<T> {
    let s = split_complex(v.d());
    let (k, r) = (s.kernel_dim, s.rank);
    let coker = v.dim0() - r;
    let n = TwoVect::zero_complex(k, coker);

    let proj =
        |take: usize, drop: usize| Matrix::<T>::identity(take).hstack(&Matrix::zeros(take, drop));
    let to_n = OneCell::new(
        v.clone(),
        n.clone(),
        &proj(k, r) * &s.p1,
        &proj(coker, r) * &s.p0,
    )
    .expect("projection to the normal form is a chain map");

    // First k columns of p1⁻¹ (a kernel basis) and first coker columns of p0⁻¹.
    let take_cols = |m: &Matrix<T>, count: usize| m.select_cols(&(0..count).collect::<Vec<_>>());
    let from_n = OneCell::new(
        n.clone(),
        v.clone(),
        take_cols(&s.p1_inv, k),
        take_cols(&s.p0_inv, coker),
    )
    .expect("inclusion of the normal form is a chain map");

    // Transport of the padding homotopy 0 ⊕ 1 through the splitting bases.
    let eta_split = Matrix::from_fn(k + r, coker + r, |i, j| {
        if i >= k && j >= coker && i - k == j - coker {
            T::one()
        } else {
            T::zero()
        }
    });
    let unit_component = &(&s.p1_inv * &eta_split) * &s.p0;
    let round_trip = compose1(&from_n, &to_n).expect("to_n and from_n are composable");
    let unit = TwoCell::new(round_trip, OneCell::identity(v), unit_component)
        .expect("transported homotopy witnesses from_n∘to_n ≅ 1");

    let back_trip = compose1(&to_n, &from_n).expect("from_n and to_n are composable");
    debug_assert_eq!(back_trip, OneCell::identity(&n));
    let counit = TwoCell::new(back_trip, OneCell::identity(&n), Matrix::zeros(k, coker))
        .expect("to_n∘from_n is exactly the identity");

    Normalization {
        n,
        to_n,
        from_n,
        unit,
        counit,
        kernel_dim: k,
        coker_dim: coker,
    }
}

/// Morphism `(σ, f1, f0)` in the 2-group of self-equivalences of a
/// zero-differential complex: an endomorphism of the object `(f1, f0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqMorphism<T> {
    pub sigma: Matrix<T>,
    pub f1: Matrix<T>,
    pub f0: Matrix<T>,
}

impl<T: Scalar> EqMorphism<T> {
    pub fn new(sigma: Matrix<T>, f1: Matrix<T>, f0: Matrix<T>) -> Result<Self> {
        if !f1.is_square() || !f0.is_square() {
            return Err(Error::Shape("f components must be square".into()));
        }
        if sigma.rows() != f1.rows() || sigma.cols() != f0.rows() {
            return Err(Error::Shape(format!(
                "sigma is {}x{}, expected {}x{}",
                sigma.rows(),
                sigma.cols(),
                f1.rows(),
                f0.rows()
            )));
        }
        if !f1.is_invertible() || !f0.is_invertible() {
            return Err(Error::NotEquivalence(
                "f component is not invertible".into(),
            ));
        }
        Ok(EqMorphism { sigma, f1, f0 })
    }

    pub fn identity(dim1: usize, dim0: usize) -> Self {
        EqMorphism {
            sigma: Matrix::zeros(dim1, dim0),
            f1: Matrix::identity(dim1),
            f0: Matrix::identity(dim0),
        }
    }
}

/// Monoidal product of self-equivalence morphisms:
/// `(σ', f'1, f'0) ⊗ (σ, f1, f0) = (σ'∘f0 + f'1∘σ, f'1∘f1, f'0∘f0)`.
pub fn eq_tensor<T: Scalar>(lhs: &EqMorphism<T>, rhs: &EqMorphism<T>) -> Result<EqMorphism<T>> {
    if lhs.f1.cols() != rhs.f1.rows() || lhs.f0.cols() != rhs.f0.rows() {
        return Err(Error::Shape(
            "tensor factors live on different complexes".into(),
        ));
    }
    EqMorphism::new(
        &(&lhs.sigma * &rhs.f0) + &(&lhs.f1 * &rhs.sigma),
        &lhs.f1 * &rhs.f1,
        &lhs.f0 * &rhs.f0,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rati, Rat, RatMatrix, RatOneCell, RatTwoCell, RatTwoVect};

    fn m(rows: Vec<Vec<i64>>) -> RatMatrix {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rati).collect())
                .collect(),
        )
        .unwrap()
    }

    fn scalar_complex(d: i64) -> RatTwoVect {
        TwoVect::new(m(vec![vec![d]]))
    }

    // 2-cell σ: f ⇒ (f1 + σd, f0 + dσ) built from any starting 1-cell.
    fn cell_from(f: &RatOneCell, sigma: RatMatrix) -> RatTwoCell {
        let g = OneCell::new(
            f.src().clone(),
            f.dst().clone(),
            &(&sigma * f.src().d()) + f.f1(),
            &(f.dst().d() * &sigma) + f.f0(),
        )
        .unwrap();
        TwoCell::new(f.clone(), g, sigma).unwrap()
    }

    #[test]
    fn compose1_scalars_multiply() {
        let v = scalar_complex(1);
        let f = OneCell::new(v.clone(), v.clone(), m(vec![vec![2]]), m(vec![vec![2]])).unwrap();
        let g = OneCell::new(v.clone(), v.clone(), m(vec![vec![3]]), m(vec![vec![3]])).unwrap();
        let gf = compose1(&g, &f).unwrap();
        assert_eq!(gf.f1(), &m(vec![vec![6]]));
        assert_eq!(gf.f0(), &m(vec![vec![6]]));
    }

    #[test]
    fn compose1_rejects_mismatched_endpoints() {
        let v = scalar_complex(1);
        let w = scalar_complex(2);
        let f = OneCell::identity(&v);
        let g = OneCell::identity(&w);
        assert!(matches!(compose1(&g, &f), Err(Error::Composition(_))));
    }

    #[test]
    fn one_cell_requires_commuting_square() {
        let v = scalar_complex(1);
        let w = scalar_complex(2);
        // f0·1 = 1 but 2·f1 = 2: square fails for f1 = f0 = 1.
        assert!(OneCell::new(v, w, m(vec![vec![1]]), m(vec![vec![1]])).is_err());
    }

    #[test]
    fn vcomp_adds_components() {
        let v = scalar_complex(1);
        let f = OneCell::identity(&v);
        let s = cell_from(&f, m(vec![vec![3]]));
        let t = cell_from(s.dst(), m(vec![vec![5]]));
        let ts = vcomp(&t, &s).unwrap();
        assert_eq!(ts.sigma(), &m(vec![vec![8]]));
        assert_eq!(ts.src(), &f);
        assert_eq!(ts.dst(), t.dst());
    }

    #[test]
    fn vcomp_with_inverse_is_identity() {
        let v = TwoVect::new(m(vec![vec![1, 2], vec![0, 1]]));
        let f = OneCell::identity(&v);
        let s = cell_from(&f, m(vec![vec![1, 0], vec![2, 1]]));
        let id = vcomp(&inv2(&s), &s).unwrap();
        assert_eq!(id, TwoCell::identity(&f));
    }

    #[test]
    fn vcomp_rejects_non_matching_middle() {
        let v = scalar_complex(1);
        let f = OneCell::identity(&v);
        let s = cell_from(&f, m(vec![vec![3]]));
        assert!(matches!(vcomp(&s, &s), Err(Error::Composition(_))));
    }

    #[test]
    fn hcomp_of_identity_cells_is_identity() {
        let v = scalar_complex(2);
        let f = OneCell::identity(&v);
        let id = TwoCell::identity(&f);
        let h = hcomp(&id, &id).unwrap();
        assert_eq!(h, TwoCell::identity(&f));
    }

    #[test]
    fn hcomp_whiskers_with_identities() {
        // Whiskering σ∘1_f = σ∘f0 and 1_f'∘σ = f'1∘σ.
        let u = scalar_complex(0);
        let v = scalar_complex(0);
        let w = scalar_complex(0);
        let f = OneCell::new(u.clone(), v.clone(), m(vec![vec![2]]), m(vec![vec![3]])).unwrap();
        let fp = OneCell::new(v.clone(), w.clone(), m(vec![vec![5]]), m(vec![vec![7]])).unwrap();
        let sigma = cell_from(&OneCell::identity(&v), m(vec![vec![11]]));

        let right = hcomp(&sigma, &TwoCell::identity(&f)).unwrap();
        assert_eq!(right.sigma(), &m(vec![vec![33]])); // σ·f0

        let left = hcomp(&TwoCell::identity(&fp), &sigma).unwrap();
        assert_eq!(left.sigma(), &m(vec![vec![55]])); // f'1·σ
    }

    #[test]
    fn hcomp_two_formulas_agree_on_valid_cells() {
        let u = TwoVect::new(m(vec![vec![1, 1], vec![0, 2]]));
        let v = TwoVect::new(m(vec![vec![2, 0], vec![1, 1]]));
        let w = TwoVect::new(m(vec![vec![1]]));
        let f = OneCell::zero(&u, &v);
        let fp = OneCell::zero(&v, &w);
        let s = cell_from(&f, m(vec![vec![1, 2], vec![3, 4]]));
        let sp = cell_from(&fp, m(vec![vec![5, 6]]));
        let h = hcomp(&sp, &s).unwrap();
        // Cross-check against the second formula by hand.
        let alt = &(sp.dst().f1() * s.sigma()) + &(sp.sigma() * s.src().f0());
        assert_eq!(h.sigma(), &alt);
    }

    #[test]
    fn inv2_swaps_endpoints_and_negates() {
        let v = scalar_complex(1);
        let s = cell_from(&OneCell::identity(&v), m(vec![vec![4]]));
        let inv = inv2(&s);
        assert_eq!(inv.src(), s.dst());
        assert_eq!(inv.dst(), s.src());
        assert_eq!(inv.sigma(), &m(vec![vec![-4]]));
    }

    #[test]
    fn equiv_to_zero_iff_invertible() {
        let v = TwoVect::new(m(vec![vec![2, 1], vec![1, 1]]));
        let cell = is_equiv_to_zero(&v).unwrap();
        assert_eq!(v.d() * cell.sigma(), -&RatMatrix::identity(2));
        assert_eq!(cell.sigma() * v.d(), -&RatMatrix::identity(2));

        assert!(is_equiv_to_zero(&TwoVect::new(m(vec![vec![1, 2], vec![2, 4]]))).is_none());
        assert!(is_equiv_to_zero(&TwoVect::<Rat>::zero_complex(1, 0)).is_none());
    }

    #[test]
    fn empty_complex_is_equivalent_to_zero() {
        let v = TwoVect::<Rat>::zero_complex(0, 0);
        let cell = is_equiv_to_zero(&v).unwrap();
        assert_eq!(cell.sigma(), &RatMatrix::zeros(0, 0));
    }

    #[test]
    fn pad_equivalence_on_zero_complex() {
        let v = TwoVect::<Rat>::zero_complex(0, 0);
        let pad = pad_equivalence(&v, 1);
        assert_eq!(pad.padded.d(), &RatMatrix::identity(1));
        assert_eq!(pad.eta.sigma(), &RatMatrix::identity(1));
        let round = compose1(&pad.pi, &pad.iota).unwrap();
        assert_eq!(round, OneCell::identity(&v));
    }

    #[test]
    fn pad_equivalence_zero_padding_is_trivial() {
        let v = TwoVect::new(m(vec![vec![3]]));
        let pad = pad_equivalence(&v, 0);
        assert_eq!(pad.iota, OneCell::identity(&v));
        assert_eq!(pad.pi, OneCell::identity(&v));
        assert!(pad.eta.sigma().is_zero());
    }

    #[test]
    fn normalize_projection_example() {
        let v = TwoVect::new(m(vec![vec![1, 0], vec![0, 0]]));
        let n = normalize(&v);
        assert_eq!((n.kernel_dim, n.coker_dim), (1, 1));
        assert!(n.n.has_zero_differential());
        assert_eq!(
            compose1(&n.to_n, &n.from_n).unwrap(),
            OneCell::identity(&n.n)
        );
    }

    #[test]
    fn normalize_zero_differential_is_identity() {
        let v = TwoVect::<Rat>::zero_complex(2, 3);
        let n = normalize(&v);
        assert_eq!(n.n, v);
        assert_eq!(n.to_n, OneCell::identity(&v));
        assert_eq!(n.from_n, OneCell::identity(&v));
        assert!(n.unit.sigma().is_zero());
    }

    #[test]
    fn normalize_invertible_differential_gives_empty() {
        let v = TwoVect::new(m(vec![vec![2, 1], vec![1, 1]]));
        let n = normalize(&v);
        assert_eq!((n.n.dim1(), n.n.dim0()), (0, 0));
        // The unit recovers the homotopy contracting the complex.
        assert_eq!(n.unit.sigma(), &v.d().inverse().unwrap());
    }

    #[test]
    fn eq_tensor_scalar_example() {
        let a = EqMorphism::new(m(vec![vec![5]]), m(vec![vec![2]]), m(vec![vec![2]])).unwrap();
        let b = EqMorphism::new(m(vec![vec![3]]), m(vec![vec![1]]), m(vec![vec![1]])).unwrap();
        let t = eq_tensor(&a, &b).unwrap();
        assert_eq!(t.sigma, m(vec![vec![11]]));
        assert_eq!(t.f1, m(vec![vec![2]]));
        assert_eq!(t.f0, m(vec![vec![2]]));
    }

    #[test]
    fn eq_tensor_with_inverse_object_is_identity() {
        let f1 = m(vec![vec![2, 1], vec![1, 1]]);
        let f0 = m(vec![vec![3]]);
        let a = EqMorphism::new(RatMatrix::zeros(2, 1), f1.clone(), f0.clone()).unwrap();
        let b = EqMorphism::new(
            RatMatrix::zeros(2, 1),
            f1.inverse().unwrap(),
            f0.inverse().unwrap(),
        )
        .unwrap();
        let t = eq_tensor(&a, &b).unwrap();
        assert_eq!(t, EqMorphism::identity(2, 1));
    }

    #[test]
    fn eq_morphism_rejects_non_invertible() {
        let err = EqMorphism::new(m(vec![vec![0]]), m(vec![vec![0]]), m(vec![vec![1]]));
        assert!(matches!(err, Err(Error::NotEquivalence(_))));
    }

    #[test]
    fn eq_tensor_matches_hcomp_on_zero_differential() {
        let v = RatTwoVect::zero_complex(2, 2);
        let f1 = m(vec![vec![1, 1], vec![0, 1]]);
        let f0 = m(vec![vec![1, 0], vec![2, 1]]);
        let f = OneCell::new(v.clone(), v.clone(), f1.clone(), f0.clone()).unwrap();
        let g = OneCell::identity(&v);
        let s = TwoCell::new(f.clone(), f.clone(), m(vec![vec![1, 2], vec![3, 4]])).unwrap();
        let t = TwoCell::new(g.clone(), g.clone(), m(vec![vec![0, 1], vec![1, 0]])).unwrap();
        let h = hcomp(&t, &s).unwrap();

        let em_s = EqMorphism::new(s.sigma().clone(), f1, f0).unwrap();
        let em_t = EqMorphism::new(
            t.sigma().clone(),
            RatMatrix::identity(2),
            RatMatrix::identity(2),
        )
        .unwrap();
        let tensored = eq_tensor(&em_t, &em_s).unwrap();
        assert_eq!(h.sigma(), &tensored.sigma);
    }
}
