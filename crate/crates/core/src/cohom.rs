//! Group cohomology of a finite group with matrix bimodule coefficients.
//!
//! Coefficients are matrices of a fixed shape acted on by a group `G` on both
//! sides: a left action by invertible `rows × rows` matrices composing on the
//! left, and a right action by invertible `cols × cols` matrices composing on
//! the right.  An n-cochain is a function `Gⁿ → matrices`, stored as a dense
//! table in lexicographic tuple order (first coordinate most significant).
//!
//! The differential is the bar-complex one:
//!
//! ```text
//! (∂c)(g1,…,g_{n+1}) = L_{g1}·c(g2,…,g_{n+1})
//!                    + Σ_{i=1}^{n} (−1)^i c(g1,…,g_i·g_{i+1},…,g_{n+1})
//!                    + (−1)^{n+1} c(g1,…,g_n)·R_{g_{n+1}}
//! ```
//!
//! Over the rationals every cocycle of positive degree is a coboundary; an
//! explicit primitive comes from averaging over the last argument
//! ([`averaging_contraction`]).  [`cohomologous`] instead solves the linear
//! system `∂x = c1 − c2` directly, so the two routes stay independent checks
//! of one another.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grp::FinGroup;
use crate::linalg::Matrix;
use crate::scalar::{from_usize, Scalar};

/// Two-sided matrix action of a finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule<T> {
    group: FinGroup,
    left: Vec<Matrix<T>>,
    right: Vec<Matrix<T>>,
    rows: usize,
    cols: usize,
}

impl<T: Scalar> Bimodule<T> {
    /// Validates that both tables are homomorphisms into invertible matrices
    /// of the right shapes.
    pub fn new(
        group: FinGroup,
        left: Vec<Matrix<T>>,
        right: Vec<Matrix<T>>,
        rows: usize,
        cols: usize,
    ) -> Result<Self> {
        let n = group.order();
        if left.len() != n || right.len() != n {
            return Err(Error::Shape(format!(
                "action tables have {} / {} entries for a group of order {n}",
                left.len(),
                right.len()
            )));
        }
        for (name, table, dim) in [("left", &left, rows), ("right", &right, cols)] {
            for (g, m) in table.iter().enumerate() {
                if m.rows() != dim || m.cols() != dim {
                    return Err(Error::Shape(format!(
                        "{name} action at g={g} is {}x{}, expected {dim}x{dim}",
                        m.rows(),
                        m.cols()
                    )));
                }
            }
            if !table[group.identity()].is_identity() {
                return Err(Error::Invariant(format!(
                    "{name} action at identity is not 1"
                )));
            }
            for g in group.elements() {
                if !table[g].is_invertible() {
                    return Err(Error::Invariant(format!(
                        "{name} action at g={g} is not invertible"
                    )));
                }
                for h in group.elements() {
                    if (&table[g] * &table[h]) != table[group.mul(g, h)] {
                        return Err(Error::Invariant(format!(
                            "{name} action is not multiplicative at (g,h)=({g},{h})"
                        )));
                    }
                }
            }
        }
        Ok(Bimodule {
            group,
            left,
            right,
            rows,
            cols,
        })
    }

    /// Both actions trivial (identity matrices).
    pub fn trivial(group: FinGroup, rows: usize, cols: usize) -> Self {
        let n = group.order();
        Bimodule {
            group,
            left: vec![Matrix::identity(rows); n],
            right: vec![Matrix::identity(cols); n],
            rows,
            cols,
        }
    }

    pub fn group(&self) -> &FinGroup {
        &self.group
    }

    pub fn left(&self, g: usize) -> &Matrix<T> {
        &self.left[g]
    }

    pub fn right(&self, g: usize) -> &Matrix<T> {
        &self.right[g]
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }
}

/// Dense n-cochain over a [`Bimodule`].
#[derive(Clone, Debug)]
pub struct Cochain<T> {
    bimodule: Arc<Bimodule<T>>,
    degree: usize,
    table: Vec<Matrix<T>>,
}

/// All tuples of `degree` group elements in lexicographic order.
pub fn tuples(order: usize, degree: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..degree {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..order).map(move |g| {
                    let mut s = t.clone();
                    s.push(g);
                    s
                })
            })
            .collect();
    }
    out
}

/// Flat index of a tuple, first coordinate most significant.
pub fn tuple_index(order: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &g| acc * order + g)
}

impl<T: Scalar> Cochain<T> {
    pub fn zero(bimodule: Arc<Bimodule<T>>, degree: usize) -> Self {
        let len = bimodule.group().order().pow(degree as u32);
        let table = vec![Matrix::zeros(bimodule.rows(), bimodule.cols()); len];
        Cochain {
            bimodule,
            degree,
            table,
        }
    }

    pub fn from_table(
        bimodule: Arc<Bimodule<T>>,
        degree: usize,
        table: Vec<Matrix<T>>,
    ) -> Result<Self> {
        let len = bimodule.group().order().pow(degree as u32);
        if table.len() != len {
            return Err(Error::Shape(format!(
                "cochain table has {} entries, expected {len}",
                table.len()
            )));
        }
        for (i, m) in table.iter().enumerate() {
            if m.rows() != bimodule.rows() || m.cols() != bimodule.cols() {
                return Err(Error::Shape(format!(
                    "cochain entry {i} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    bimodule.rows(),
                    bimodule.cols()
                )));
            }
        }
        Ok(Cochain {
            bimodule,
            degree,
            table,
        })
    }

    pub fn from_fn(
        bimodule: Arc<Bimodule<T>>,
        degree: usize,
        mut f: impl FnMut(&[usize]) -> Matrix<T>,
    ) -> Result<Self> {
        let order = bimodule.group().order();
        let table = tuples(order, degree).iter().map(|t| f(t)).collect();
        Self::from_table(bimodule, degree, table)
    }

    pub fn bimodule(&self) -> &Arc<Bimodule<T>> {
        &self.bimodule
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn table(&self) -> &[Matrix<T>] {
        &self.table
    }

    pub fn eval(&self, tuple: &[usize]) -> &Matrix<T> {
        assert_eq!(tuple.len(), self.degree, "tuple length vs cochain degree");
        &self.table[tuple_index(self.bimodule.group().order(), tuple)]
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Matrix::is_zero)
    }

    /// Vanishes whenever some argument is the group identity.
    pub fn is_normalized(&self) -> bool {
        let e = self.bimodule.group().identity();
        let order = self.bimodule.group().order();
        tuples(order, self.degree)
            .iter()
            .all(|t| !t.contains(&e) || self.eval(t).is_zero())
    }

    fn same_space(&self, other: &Self) -> bool {
        self.degree == other.degree
            && (Arc::ptr_eq(&self.bimodule, &other.bimodule) || self.bimodule == other.bimodule)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !self.same_space(other) {
            return Err(Error::Shape("cochain spaces differ".into()));
        }
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cochain {
            bimodule: self.bimodule.clone(),
            degree: self.degree,
            table,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let table = self.table.iter().map(|m| -m).collect();
        Cochain {
            bimodule: self.bimodule.clone(),
            degree: self.degree,
            table,
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        let table = self.table.iter().map(|m| m.scale(s)).collect();
        Cochain {
            bimodule: self.bimodule.clone(),
            degree: self.degree,
            table,
        }
    }

    /// Apply a matrix map entrywise, landing in another bimodule.
    pub fn map_entries(
        &self,
        bimodule: Arc<Bimodule<T>>,
        f: impl Fn(&Matrix<T>) -> Matrix<T>,
    ) -> Result<Self> {
        let table = self.table.iter().map(f).collect();
        Cochain::from_table(bimodule, self.degree, table)
    }
}

impl<T: Scalar> PartialEq for Cochain<T> {
    fn eq(&self, other: &Self) -> bool {
        self.same_space(other) && self.table == other.table
    }
}

/// Bar-complex differential.
pub fn coboundary<T: Scalar>(c: &Cochain<T>) -> Cochain<T> {
    let bim = c.bimodule().clone();
    let group = bim.group().clone();
    let order = group.order();
    let n = c.degree();
    let table = tuples(order, n + 1)
        .iter()
        .map(|t| {
            let mut acc = bim.left(t[0]) * c.eval(&t[1..]);
            let mut sign_neg = true;
            for i in 0..n {
                let mut merged = Vec::with_capacity(n);
                merged.extend_from_slice(&t[..i]);
                merged.push(group.mul(t[i], t[i + 1]));
                merged.extend_from_slice(&t[i + 2..]);
                let term = c.eval(&merged);
                acc = if sign_neg { &acc - term } else { &acc + term };
                sign_neg = !sign_neg;
            }
            let last = c.eval(&t[..n]) * bim.right(t[n]);
            if sign_neg {
                &acc - &last
            } else {
                &acc + &last
            }
        })
        .collect();
    Cochain::from_table(bim, n + 1, table).expect("coboundary table is well shaped")
}

pub fn is_cocycle<T: Scalar>(c: &Cochain<T>) -> bool {
    coboundary(c).is_zero()
}

/// Explicit primitive of a positive-degree cocycle by averaging over the last
/// argument:
///
/// ```text
/// c(g1,…,g_{n−1}) = ((−1)^n / |G|) Σ_k z(g1,…,g_{n−1},k) · R_{k⁻¹}
/// ```
///
/// Returns `Error::NotCocycle` if `∂z ≠ 0` and `Error::Degree` at degree 0.
/// The postcondition `∂c = z` is checked before returning.
pub fn averaging_contraction<T: Scalar>(z: &Cochain<T>) -> Result<Cochain<T>> {
    let n = z.degree();
    if n == 0 {
        return Err(Error::Degree("averaging needs degree at least 1".into()));
    }
    if !is_cocycle(z) {
        return Err(Error::NotCocycle);
    }
    let bim = z.bimodule().clone();
    let group = bim.group().clone();
    let order = group.order();
    let inv_order = T::one() / from_usize::<T>(order);
    let scale = if n.is_multiple_of(2) {
        inv_order
    } else {
        -inv_order
    };
    let table = tuples(order, n - 1)
        .iter()
        .map(|t| {
            let mut acc = Matrix::zeros(bim.rows(), bim.cols());
            for k in group.elements() {
                let mut full = t.clone();
                full.push(k);
                acc = &acc + &(z.eval(&full) * bim.right(group.inv(k)));
            }
            acc.scale(&scale)
        })
        .collect();
    let c = Cochain::from_table(bim, n - 1, table)?;
    if &coboundary(&c) != z {
        return Err(Error::Invariant(
            "averaging contraction failed to produce a primitive".into(),
        ));
    }
    Ok(c)
}

/// Solve `∂x = c1 − c2` for `x` of degree one lower, by direct linear algebra
/// over the cochain entries.  Returns `Ok(None)` when no solution exists.
///
/// Degree 0 cochains are never coboundaries in this complex, so the input
/// degree must be at least 1.
pub fn cohomologous<T: Scalar>(c1: &Cochain<T>, c2: &Cochain<T>) -> Result<Option<Cochain<T>>> {
    if !c1.same_space(c2) {
        return Err(Error::Shape("cochain spaces differ".into()));
    }
    let n = c1.degree();
    if n == 0 {
        return Err(Error::Degree("degree-0 cochains have no primitives".into()));
    }
    let diff = c1.sub(c2)?;
    let bim = c1.bimodule().clone();
    let order = bim.group().order();
    let (r, c) = (bim.rows(), bim.cols());
    let slots = order.pow((n - 1) as u32);
    let unknowns = slots * r * c;
    let eq_slots = order.pow(n as u32);
    let equations = eq_slots * r * c;

    // Column j of the system matrix is ∂(basis cochain j), flattened.
    let mut system = Matrix::zeros(equations, unknowns);
    for slot in 0..slots {
        for i in 0..r {
            for j in 0..c {
                let mut basis = Cochain::zero(bim.clone(), n - 1);
                basis.table[slot][(i, j)] = T::one();
                let image = coboundary(&basis);
                let col = (slot * r + i) * c + j;
                for (es, m) in image.table().iter().enumerate() {
                    for a in 0..r {
                        for b in 0..c {
                            system[((es * r + a) * c + b, col)] = m[(a, b)].clone();
                        }
                    }
                }
            }
        }
    }
    let mut rhs = Matrix::zeros(equations, 1);
    for (es, m) in diff.table().iter().enumerate() {
        for a in 0..r {
            for b in 0..c {
                rhs[((es * r + a) * c + b, 0)] = m[(a, b)].clone();
            }
        }
    }
    let Some(solution) = system.solve(&rhs)? else {
        return Ok(None);
    };
    let mut x = Cochain::zero(bim, n - 1);
    for slot in 0..slots {
        for i in 0..r {
            for j in 0..c {
                x.table[slot][(i, j)] = solution[((slot * r + i) * c + j, 0)].clone();
            }
        }
    }
    debug_assert!(coboundary(&x) == diff);
    Ok(Some(x))
}
