//! Ordinary matrix representations of a finite group, their intertwiner
//! spaces, and the verifier comparing the homotopy category of 2-group
//! representations against the product category `Rep(π₀) × Rep(π₀)`.
//!
//! [`verify_equivalence`] checks, at the scale of a supplied inventory,
//! the three ingredients of an equivalence of categories: essential
//! surjectivity (clause `a`), fullness (clause `b`), faithfulness
//! (clause `c`), plus the vanishing of the β-space that the comparison
//! relies on (clause `d`).  All randomness is drawn from one seeded
//! generator, and reports render byte-identically for equal seeds and
//! inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohom::cohomologous;
use crate::error::{Error, Result, Violation};
use crate::grp::{FinGroup, TwoGroupData};
use crate::linalg::Matrix;
use crate::rep2::{
    beta_space, compose_inter1, identity_inter1, push_left, push_right, strictify, two_iso,
    validate_inter1, validate_inter2, Inter1, RepReduced,
};
use crate::scalar::{from_i64, Scalar};

/// Representation of a finite group by invertible matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep1<T> {
    group: FinGroup,
    dim: usize,
    mats: Vec<Matrix<T>>,
}

impl<T: Scalar> Rep1<T> {
    /// Structural constructor: checks the table length and matrix shapes.
    /// Use [`Rep1::validate`] for the algebraic laws.
    pub fn new(group: FinGroup, mats: Vec<Matrix<T>>) -> Result<Self> {
        if mats.len() != group.order() {
            return Err(Error::Shape(format!(
                "{} matrices for a group of order {}",
                mats.len(),
                group.order()
            )));
        }
        let dim = mats.first().map_or(0, Matrix::rows);
        for (g, m) in mats.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Shape(format!(
                    "matrix at g={g} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Rep1 { group, dim, mats })
    }

    pub fn trivial(group: FinGroup, dim: usize) -> Self {
        let mats = vec![Matrix::identity(dim); group.order()];
        Rep1 { group, dim, mats }
    }

    pub fn group(&self) -> &FinGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mat(&self, g: usize) -> &Matrix<T> {
        &self.mats[g]
    }

    pub fn mats(&self) -> &[Matrix<T>] {
        &self.mats
    }

    /// Identity at the unit and multiplicativity over all pairs.
    pub fn validate(&self) -> Vec<Violation> {
        let mut v = Vec::new();
        if !self.mats[self.group.identity()].is_identity() {
            v.push(Violation::new("rep.identity", String::new()));
        }
        for g in self.group.elements() {
            for h in self.group.elements() {
                if (&self.mats[g] * &self.mats[h]) != self.mats[self.group.mul(g, h)] {
                    v.push(Violation::new("rep.hom", format!("(g,h)=({g},{h})")));
                }
            }
        }
        v
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(
                "direct sum over different groups".into(),
            ));
        }
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Ok(Rep1 {
            group: self.group.clone(),
            dim: self.dim + other.dim,
            mats,
        })
    }

    /// Base change `g ↦ p·ρ(g)·p⁻¹`.
    pub fn conjugate(&self, p: &Matrix<T>) -> Result<Self> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::Shape("conjugator has wrong shape".into()));
        }
        let p_inv = p
            .inverse()
            .ok_or_else(|| Error::NotEquivalence("conjugator is singular".into()))?;
        let mats = self.mats.iter().map(|m| &(p * m) * &p_inv).collect();
        Ok(Rep1 {
            group: self.group.clone(),
            dim: self.dim,
            mats,
        })
    }
}

/// Basis of `{r : r·ρ_src(g) = ρ_dst(g)·r for all g}` by one exact kernel
/// computation.  Deterministic: reduced-echelon kernel of the stacked
/// constraint system, unknowns ordered row-major.
pub fn intertwiner_space<T: Scalar>(src: &Rep1<T>, dst: &Rep1<T>) -> Result<Vec<Matrix<T>>> {
    if src.group() != dst.group() {
        return Err(Error::GroupMismatch(
            "intertwiners need a common group".into(),
        ));
    }
    let (n_d, n_s) = (dst.dim(), src.dim());
    let unknowns = n_d * n_s;
    let order = src.group().order();
    let mut system = Matrix::<T>::zeros(order * unknowns, unknowns);
    for g in src.group().elements() {
        let (rs, rd) = (src.mat(g), dst.mat(g));
        for a in 0..n_d {
            for b in 0..n_s {
                let row = (g * n_d + a) * n_s + b;
                // entry (a,b) of r·ρ_src(g) − ρ_dst(g)·r
                for y in 0..n_s {
                    system[(row, a * n_s + y)] =
                        system[(row, a * n_s + y)].clone() + rs[(y, b)].clone();
                }
                for x in 0..n_d {
                    system[(row, x * n_s + b)] =
                        system[(row, x * n_s + b)].clone() - rd[(a, x)].clone();
                }
            }
        }
    }
    let kernel = system.kernel_basis();
    let mut basis = Vec::with_capacity(kernel.cols());
    for j in 0..kernel.cols() {
        let m = Matrix::from_fn(n_d, n_s, |a, b| kernel[(a * n_s + b, j)].clone());
        basis.push(m);
    }
    Ok(basis)
}

/// Underlying pair of ordinary representations of a strict 2-group
/// representation: the object map of the comparison functor whose
/// equivalence [`verify_equivalence`] samples.
pub fn theorem_functor<T: Scalar>(r: &RepReduced<T>) -> Result<(Rep1<T>, Rep1<T>)> {
    if !r.is_strict() {
        return Err(Error::StrictifyFirst(
            "the comparison functor is defined on strict representations".into(),
        ));
    }
    Ok((r.rho1().clone(), r.rho0().clone()))
}

/// One check in a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportLine {
    pub clause: String,
    pub instance: String,
    pub pass: bool,
    pub witness: String,
}

/// Outcome of [`verify_equivalence`]: one line per check, framed by the
/// seed and trial count that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub seed: u64,
    pub trials: usize,
    pub lines: Vec<ReportLine>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| !l.pass).count()
    }

    /// Stable text rendering: byte-identical for equal seed and inputs.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("equivalence verification report\n");
        out.push_str(&format!("seed = {}\n", self.seed));
        out.push_str(&format!("trials = {}\n", self.trials));
        for l in &self.lines {
            out.push_str(&format!(
                "{} | {} | {} | {}\n",
                l.clause,
                l.instance,
                if l.pass { "PASS" } else { "FAIL" },
                l.witness
            ));
        }
        if self.passed() {
            out.push_str(&format!("result: PASS ({} checks)\n", self.lines.len()));
        } else {
            out.push_str(&format!(
                "result: FAIL ({} of {} checks failed)\n",
                self.failures(),
                self.lines.len()
            ));
        }
        out
    }
}

fn line(clause: &str, instance: String, pass: bool, witness: String) -> ReportLine {
    ReportLine {
        clause: clause.into(),
        instance,
        pass,
        witness,
    }
}

fn first_violation(violations: &[Violation]) -> String {
    violations
        .first()
        .map(|v| v.to_string())
        .unwrap_or_else(|| "ok".into())
}

fn combine<T: Scalar>(basis: &[Matrix<T>], coeffs: &[T], rows: usize, cols: usize) -> Matrix<T> {
    let mut acc = Matrix::zeros(rows, cols);
    for (b, c) in basis.iter().zip(coeffs) {
        acc = &acc + &b.scale(c);
    }
    acc
}

fn small_coeffs<T: Scalar>(rng: &mut ChaCha8Rng, n: usize) -> Vec<T> {
    (0..n)
        .map(|_| from_i64::<T>(rng.gen_range(-2..=2)))
        .collect()
}

/// Build the lift `(r1, r0, μ)` of an intertwiner pair between two valid
/// reduced representations, solving `∂μ = r₁∗c_src − r₀∗c_dst`.  For valid
/// endpoints the right-hand side is a cocycle and the averaging contraction
/// produces μ directly; the general linear solve is the fallback.
fn lift_pair<T: Scalar>(
    src: &RepReduced<T>,
    dst: &RepReduced<T>,
    r1: Matrix<T>,
    r0: Matrix<T>,
) -> Result<Option<Inter1<T>>> {
    let mixed = Inter1::mixed_bimodule(src, dst)?;
    let lhs = push_left(&r1, &src.c_cochain()?, mixed.clone())?;
    let rhs = push_right(&r0, &dst.c_cochain()?, mixed.clone())?;
    let diff = lhs.sub(&rhs)?;
    let mu = if crate::cohom::is_cocycle(&diff) {
        crate::cohom::averaging_contraction(&diff)?
    } else {
        let Some(mu) = cohomologous(&lhs, &rhs)? else {
            return Ok(None);
        };
        mu
    };
    let inter = Inter1::new(src.clone(), dst.clone(), r1, r0, mu.table().to_vec())?;
    Ok(Some(inter))
}

/// Check the equivalence between the homotopy category of the inventory's
/// representations and the product of two ordinary representation
/// categories, by explicit witnesses:
///
/// * clause `a`: every inventory representation is valid and equivalent to a
///   strict one that the comparison functor hits;
/// * clause `b`: random intertwiner pairs between images lift to valid
///   1-intertwiners;
/// * clause `c`: lifts with equal pairs are 2-isomorphic, lifts with
///   distinct pairs are not;
/// * clause `d`: the β-space of every inventory representation is zero.
pub fn verify_equivalence<T: Scalar>(
    tg: &TwoGroupData,
    inventory: &[RepReduced<T>],
    trials: usize,
    seed: u64,
) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines = Vec::new();

    let tg_violations = tg.validate();
    lines.push(line(
        "input",
        "two-group".into(),
        tg_violations.is_empty(),
        if tg_violations.is_empty() {
            "axioms hold".into()
        } else {
            first_violation(&tg_violations)
        },
    ));

    // Clause a: validity and essential surjectivity witness per item.
    let mut all_valid = tg_violations.is_empty();
    for (i, r) in inventory.iter().enumerate() {
        let instance = format!("rep[{i}]");
        if r.tg() != tg {
            lines.push(line(
                "a",
                instance,
                false,
                "representation references a different two-group".into(),
            ));
            all_valid = false;
            continue;
        }
        let violations = r.validate();
        if !violations.is_empty() {
            lines.push(line("a", instance, false, first_violation(&violations)));
            all_valid = false;
            continue;
        }
        let outcome = (|| -> Result<String> {
            let s = strictify(r)?;
            let strict_violations = s.strict.validate();
            if !strict_violations.is_empty() {
                return Ok(format!(
                    "strict model invalid: {}",
                    first_violation(&strict_violations)
                ));
            }
            let (a_lvl, b_lvl) = theorem_functor(&s.strict)?;
            if &a_lvl != r.rho1() || &b_lvl != r.rho0() {
                return Ok("functor image differs from the representation levels".into());
            }
            let e_violations = validate_inter1(&s.to_strict);
            let f_violations = validate_inter1(&s.from_strict);
            if !e_violations.is_empty() || !f_violations.is_empty() {
                return Ok(format!(
                    "equivalence witness invalid: {}",
                    first_violation(if e_violations.is_empty() {
                        &f_violations
                    } else {
                        &e_violations
                    })
                ));
            }
            let back = compose_inter1(&s.from_strict, &s.to_strict)?;
            let fwd = compose_inter1(&s.to_strict, &s.from_strict)?;
            let back_iso = two_iso(&back, &identity_inter1(r))?;
            let fwd_iso = two_iso(&fwd, &identity_inter1(&s.strict))?;
            if back_iso.is_none() || fwd_iso.is_none() {
                return Ok("strictification composites are not 2-isomorphic to identities".into());
            }
            Ok(format!(
                "OK: strict model of dims ({},{}) hit by the functor",
                r.dim1(),
                r.dim0()
            ))
        })();
        match outcome {
            Ok(witness) if witness.starts_with("OK") => {
                lines.push(line("a", instance, true, witness[4..].to_string()));
            }
            Ok(witness) => {
                lines.push(line("a", instance, false, witness));
                all_valid = false;
            }
            Err(e) => {
                lines.push(line("a", instance, false, e.to_string()));
                all_valid = false;
            }
        }
    }

    if inventory.is_empty() {
        for clause in ["b", "c", "d"] {
            lines.push(line(
                clause,
                "inventory".into(),
                true,
                "no instances".into(),
            ));
        }
        return Report {
            seed,
            trials,
            lines,
        };
    }
    if !all_valid {
        for clause in ["b", "c"] {
            lines.push(line(
                clause,
                "inventory".into(),
                false,
                "skipped: invalid input reported under clause a".into(),
            ));
        }
    }

    // Clause b: fullness on random intertwiner pairs.
    if all_valid {
        for t in 0..trials {
            let i = rng.gen_range(0..inventory.len());
            let j = rng.gen_range(0..inventory.len());
            let instance = format!("trial[{t}] rep[{i}]->rep[{j}]");
            let (src, dst) = (&inventory[i], &inventory[j]);
            let outcome = (|| -> Result<(bool, String)> {
                let b1 = intertwiner_space(src.rho1(), dst.rho1())?;
                let b0 = intertwiner_space(src.rho0(), dst.rho0())?;
                let trivial_space = b1.is_empty() && b0.is_empty();
                let r1 = combine(
                    &b1,
                    &small_coeffs(&mut rng, b1.len()),
                    dst.dim1(),
                    src.dim1(),
                );
                let r0 = combine(
                    &b0,
                    &small_coeffs(&mut rng, b0.len()),
                    dst.dim0(),
                    src.dim0(),
                );
                let Some(lift) = lift_pair(src, dst, r1, r0)? else {
                    return Ok((false, "no lift: coboundary equation inconsistent".into()));
                };
                let violations = validate_inter1(&lift);
                if !violations.is_empty() {
                    return Ok((
                        false,
                        format!("lift invalid: {}", first_violation(&violations)),
                    ));
                }
                Ok((
                    true,
                    if trivial_space {
                        "hom spaces trivial; zero pair lifts".into()
                    } else {
                        format!("pair lifted; hom space dims ({},{})", b1.len(), b0.len())
                    },
                ))
            })();
            match outcome {
                Ok((pass, witness)) => lines.push(line("b", instance, pass, witness)),
                Err(e) => lines.push(line("b", instance, false, e.to_string())),
            }
        }
    }

    // Clause c: faithfulness.
    if all_valid {
        for t in 0..trials {
            let i = rng.gen_range(0..inventory.len());
            let j = rng.gen_range(0..inventory.len());
            let instance = format!("trial[{t}] rep[{i}]->rep[{j}]");
            let (src, dst) = (&inventory[i], &inventory[j]);
            let outcome = (|| -> Result<(bool, String)> {
                let b1 = intertwiner_space(src.rho1(), dst.rho1())?;
                let b0 = intertwiner_space(src.rho0(), dst.rho0())?;
                let r1 = combine(
                    &b1,
                    &small_coeffs(&mut rng, b1.len()),
                    dst.dim1(),
                    src.dim1(),
                );
                let r0 = combine(
                    &b0,
                    &small_coeffs(&mut rng, b0.len()),
                    dst.dim0(),
                    src.dim0(),
                );
                let Some(first) = lift_pair(src, dst, r1.clone(), r0.clone())? else {
                    return Ok((false, "no lift for base pair".into()));
                };
                // Same pair, different μ: shift by the coboundary of a random
                // 0-cochain, which must stay 2-isomorphic.
                let mixed = Inter1::mixed_bimodule(src, dst)?;
                let omega = Matrix::from_fn(dst.dim1(), src.dim0(), |_, _| {
                    from_i64::<T>(rng.gen_range(-2..=2))
                });
                let shift = crate::cohom::coboundary(&crate::cohom::Cochain::from_table(
                    mixed,
                    0,
                    vec![omega],
                )?);
                let shifted_mu: Vec<Matrix<T>> = first
                    .mu()
                    .iter()
                    .zip(shift.table())
                    .map(|(m, s)| m + s)
                    .collect();
                let second =
                    Inter1::new(src.clone(), dst.clone(), r1.clone(), r0.clone(), shifted_mu)?;
                match two_iso(&first, &second)? {
                    Some(w) => {
                        let violations = validate_inter2(&w);
                        if !violations.is_empty() {
                            return Ok((
                                false,
                                format!("2-isomorphism invalid: {}", first_violation(&violations)),
                            ));
                        }
                    }
                    None => {
                        return Ok((false, "equal pairs not 2-isomorphic".into()));
                    }
                }
                // Distinct pair: perturb one level by a basis vector.
                if b1.is_empty() && b0.is_empty() {
                    return Ok((
                        true,
                        "equal pairs 2-isomorphic; distinct check vacuous".into(),
                    ));
                }
                let (p1, p0) = if !b1.is_empty() {
                    (&r1 + &b1[0], r0.clone())
                } else {
                    (r1.clone(), &r0 + &b0[0])
                };
                let Some(distinct) = lift_pair(src, dst, p1, p0)? else {
                    return Ok((false, "no lift for perturbed pair".into()));
                };
                if two_iso(&first, &distinct)?.is_some() {
                    return Ok((false, "distinct pairs reported 2-isomorphic".into()));
                }
                Ok((
                    true,
                    "equal pairs 2-isomorphic; distinct pairs separated".into(),
                ))
            })();
            match outcome {
                Ok((pass, witness)) => lines.push(line("c", instance, pass, witness)),
                Err(e) => lines.push(line("c", instance, false, e.to_string())),
            }
        }
    }

    // Clause d: β-vanishing across the inventory.
    for (i, r) in inventory.iter().enumerate() {
        let instance = format!("rep[{i}]");
        let basis = beta_space(tg, r.rho1(), r.rho0());
        if basis.is_empty() {
            let witness = if tg.pi1().rank() == 0 {
                "pi1 trivial; beta space zero".into()
            } else {
                "beta space dimension 0".into()
            };
            lines.push(line("d", instance, true, witness));
        } else {
            lines.push(line(
                "d",
                instance,
                false,
                format!("beta space has dimension {}", basis.len()),
            ));
        }
    }

    Report {
        seed,
        trials,
        lines,
    }
}
