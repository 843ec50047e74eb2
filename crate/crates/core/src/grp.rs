//! Finite groups by multiplication table and skeletal 2-group data.
//!
//! A 2-group here is the data `(π0, π1, ▷, z)`: a finite group π0, a finite
//! abelian group π1 in invariant-factor form, an action of π0 on π1 by
//! automorphisms, and a normalized 3-cocycle `z: π0³ → π1`.  Morphisms of the
//! associated one-object 2-category are pairs `(a, g)` with tensor
//! `(a, g) ⊗ (a', g') = (a + g▷a', g·g')` and associator `(z(g,g',g''), g g' g'')`.
//!
//! Validation is exhaustive over the tables; groups at this scale are tiny.

use crate::error::{Error, Result, Violation};

/// Finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGroup {
    order: usize,
    mult: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FinGroup {
    /// Validate a multiplication table without constructing a group.
    pub fn validate_table(mult: &[Vec<usize>]) -> Vec<Violation> {
        let n = mult.len();
        let mut v = Vec::new();
        if n == 0 {
            v.push(Violation::new("group.order", "empty table"));
            return v;
        }
        for (i, row) in mult.iter().enumerate() {
            if row.len() != n {
                v.push(Violation::new(
                    "group.table",
                    format!("row {i} has length {}", row.len()),
                ));
                return v;
            }
            for (j, &x) in row.iter().enumerate() {
                if x >= n {
                    v.push(Violation::new("group.range", format!("({i},{j}) -> {x}")));
                }
            }
        }
        if !v.is_empty() {
            return v;
        }
        let identity = (0..n).find(|&e| (0..n).all(|g| mult[e][g] == g && mult[g][e] == g));
        let Some(e) = identity else {
            v.push(Violation::new("group.identity", "no two-sided identity"));
            return v;
        };
        for (g, row) in mult.iter().enumerate() {
            if !(0..n).any(|h| row[h] == e && mult[h][g] == e) {
                v.push(Violation::new("group.inverse", format!("g={g}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        v.push(Violation::new(
                            "group.assoc",
                            format!("(a,b,c)=({a},{b},{c})"),
                        ));
                    }
                }
            }
        }
        v
    }

    pub fn from_table(mult: Vec<Vec<usize>>) -> Result<Self> {
        let violations = Self::validate_table(&mult);
        crate::error::violations_to_error(&violations)?;
        let n = mult.len();
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mult[e][g] == g && mult[g][e] == g))
            .expect("validated table has an identity");
        let inverse = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| mult[g][h] == identity)
                    .expect("validated inverses")
            })
            .collect();
        Ok(FinGroup {
            order: n,
            mult,
            identity,
            inverse,
        })
    }

    /// Assemble without validating, with identity pinned to index 0 and
    /// best-effort inverses; used to load possibly corrupted tables whose
    /// violations are then reported by a validator instead of a parser.
    pub fn from_table_unchecked(mult: Vec<Vec<usize>>) -> Self {
        let n = mult.len();
        let inverse = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| {
                        mult[g].get(h).copied() == Some(0) && mult[h].get(g).copied() == Some(0)
                    })
                    .unwrap_or(0)
            })
            .collect();
        FinGroup {
            order: n,
            mult,
            identity: 0,
            inverse,
        }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group needs positive order");
        let mult = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        Self::from_table(mult).expect("cyclic table is a group")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// Symmetric group on three letters; elements are the six permutations in
    /// lexicographic one-line order, so the identity is index 0.
    pub fn symmetric3() -> Self {
        let (group, _) = Self::symmetric3_with_perms();
        group
    }

    /// `symmetric3` together with the permutation realizing each element.
    pub fn symmetric3_with_perms() -> (Self, Vec<[usize; 3]>) {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
        let mult = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        // (p·q)(i) = p[q[i]]: apply q first.
                        index(&[p[q[0]], p[q[1]], p[q[2]]])
                    })
                    .collect()
            })
            .collect();
        (
            Self::from_table(mult).expect("permutation table is a group"),
            perms,
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn mult_table(&self) -> &[Vec<usize>] {
        &self.mult
    }

    /// Deterministic small generating set (greedy by element index).
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut closure = vec![false; self.order];
        closure[self.identity] = true;
        let mut size = 1;
        for candidate in self.elements() {
            if closure[candidate] {
                continue;
            }
            gens.push(candidate);
            // Close under multiplication.
            loop {
                let mut grew = false;
                for a in self.elements() {
                    if !closure[a] {
                        continue;
                    }
                    for &g in &gens {
                        for x in [self.mul(a, g), self.mul(g, a)] {
                            if !closure[x] {
                                closure[x] = true;
                                size += 1;
                                grew = true;
                            }
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
            if size == self.order {
                break;
            }
        }
        gens
    }
}

/// Enumerate all group homomorphisms `src → dst` as element maps.
///
/// Assignments are chosen on a generating set and extended through words;
/// candidates are kept when the extended map is multiplicative everywhere.
pub fn enumerate_homs(src: &FinGroup, dst: &FinGroup) -> Vec<Vec<usize>> {
    let gens = src.generating_set();
    // Express every element as a word in the generators (BFS from identity).
    let mut word: Vec<Option<Vec<usize>>> = vec![None; src.order()];
    word[src.identity()] = Some(vec![]);
    let mut queue = std::collections::VecDeque::from([src.identity()]);
    while let Some(x) = queue.pop_front() {
        for (gi, &g) in gens.iter().enumerate() {
            let y = src.mul(x, g);
            if word[y].is_none() {
                let mut w = word[x].clone().unwrap();
                w.push(gi);
                word[y] = Some(w);
                queue.push_back(y);
            }
        }
    }
    let words: Vec<Vec<usize>> = word
        .into_iter()
        .map(|w| w.expect("generators generate"))
        .collect();

    let k = gens.len();
    let mut out = Vec::new();
    let mut assignment = vec![0usize; k];
    loop {
        let map: Vec<usize> = words
            .iter()
            .map(|w| {
                w.iter()
                    .fold(dst.identity(), |acc, &gi| dst.mul(acc, assignment[gi]))
            })
            .collect();
        let is_hom = (0..src.order())
            .all(|a| (0..src.order()).all(|b| map[src.mul(a, b)] == dst.mul(map[a], map[b])));
        if is_hom {
            out.push(map);
        }
        // Next assignment in mixed radix.
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            assignment[i] += 1;
            if assignment[i] < dst.order() {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
        if k == 0 {
            return out;
        }
    }
}

/// Finite abelian group in invariant-factor form `Z/m1 × ... × Z/mt`.
///
/// Elements are flat indices with the first factor most significant; the
/// trivial group is the empty factor list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAbGroup {
    invariant_factors: Vec<usize>,
    order: usize,
}

impl FinAbGroup {
    pub fn new(invariant_factors: Vec<usize>) -> Result<Self> {
        if invariant_factors.iter().any(|&m| m < 2) {
            return Err(Error::Invalid(
                "invariant factors must be at least 2".into(),
            ));
        }
        let order = invariant_factors.iter().product();
        Ok(FinAbGroup {
            invariant_factors,
            order,
        })
    }

    pub fn trivial() -> Self {
        FinAbGroup {
            invariant_factors: vec![],
            order: 1,
        }
    }

    pub fn invariant_factors(&self) -> &[usize] {
        &self.invariant_factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn decompose(&self, a: usize) -> Vec<usize> {
        debug_assert!(a < self.order);
        let mut rest = a;
        let mut tuple = vec![0; self.rank()];
        for i in (0..self.rank()).rev() {
            tuple[i] = rest % self.invariant_factors[i];
            rest /= self.invariant_factors[i];
        }
        tuple
    }

    pub fn compose(&self, tuple: &[usize]) -> Result<usize> {
        if tuple.len() != self.rank() {
            return Err(Error::Shape(format!(
                "tuple length {} vs rank {}",
                tuple.len(),
                self.rank()
            )));
        }
        let mut acc = 0;
        for (i, &r) in tuple.iter().enumerate() {
            if r >= self.invariant_factors[i] {
                return Err(Error::Invalid(format!(
                    "residue {r} out of range for factor {}",
                    self.invariant_factors[i]
                )));
            }
            acc = acc * self.invariant_factors[i] + r;
        }
        Ok(acc)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ta, tb) = (self.decompose(a), self.decompose(b));
        let sum: Vec<usize> = ta
            .iter()
            .zip(&tb)
            .zip(&self.invariant_factors)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect();
        self.compose(&sum).expect("sum of valid tuples is valid")
    }

    pub fn neg(&self, a: usize) -> usize {
        let t: Vec<usize> = self
            .decompose(a)
            .iter()
            .zip(&self.invariant_factors)
            .map(|(&x, &m)| (m - x) % m)
            .collect();
        self.compose(&t).expect("negation of valid tuple is valid")
    }

    /// Integer multiple `k·a`.
    pub fn scale(&self, k: usize, a: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.add(acc, a);
        }
        acc
    }

    /// Standard generators, one per invariant factor.
    pub fn generators(&self) -> Vec<usize> {
        (0..self.rank())
            .map(|i| {
                let mut t = vec![0; self.rank()];
                t[i] = 1;
                self.compose(&t).expect("standard generator")
            })
            .collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }
}

/// Action of π0 on π1: `table[g][a]` is `g ▷ a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionTable {
    table: Vec<Vec<usize>>,
}

impl ActionTable {
    pub fn new(table: Vec<Vec<usize>>) -> Self {
        ActionTable { table }
    }

    pub fn trivial(pi0: &FinGroup, pi1: &FinAbGroup) -> Self {
        ActionTable {
            table: vec![(0..pi1.order()).collect(); pi0.order()],
        }
    }

    pub fn act(&self, g: usize, a: usize) -> usize {
        self.table[g][a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn validate(&self, pi0: &FinGroup, pi1: &FinAbGroup) -> Vec<Violation> {
        let mut v = Vec::new();
        if self.table.len() != pi0.order() {
            v.push(Violation::new(
                "action.shape",
                format!("{} rows vs |pi0| = {}", self.table.len(), pi0.order()),
            ));
            return v;
        }
        for (g, row) in self.table.iter().enumerate() {
            if row.len() != pi1.order() {
                v.push(Violation::new(
                    "action.shape",
                    format!(
                        "row g={g} has {} entries vs |pi1| = {}",
                        row.len(),
                        pi1.order()
                    ),
                ));
                return v;
            }
            for (a, &x) in row.iter().enumerate() {
                if x >= pi1.order() {
                    v.push(Violation::new("action.range", format!("(g,a)=({g},{a})")));
                }
            }
        }
        if !v.is_empty() {
            return v;
        }
        for a in pi1.elements() {
            if self.act(pi0.identity(), a) != a {
                v.push(Violation::new("action.identity", format!("a={a}")));
            }
        }
        for g in pi0.elements() {
            for a in pi1.elements() {
                for b in pi1.elements() {
                    if self.act(g, pi1.add(a, b)) != pi1.add(self.act(g, a), self.act(g, b)) {
                        v.push(Violation::new(
                            "action.additive",
                            format!("(g,a,b)=({g},{a},{b})"),
                        ));
                    }
                }
            }
        }
        for g in pi0.elements() {
            for h in pi0.elements() {
                for a in pi1.elements() {
                    if self.act(pi0.mul(g, h), a) != self.act(g, self.act(h, a)) {
                        v.push(Violation::new(
                            "action.hom",
                            format!("(g,h,a)=({g},{h},{a})"),
                        ));
                    }
                }
            }
        }
        for g in pi0.elements() {
            let mut seen = vec![false; pi1.order()];
            for a in pi1.elements() {
                seen[self.act(g, a)] = true;
            }
            if seen.iter().any(|s| !s) {
                v.push(Violation::new("action.bijective", format!("g={g}")));
            }
        }
        v
    }
}

/// Normalized 3-cocycle `z: π0³ → π1` as a table of π1 element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle3 {
    table: Vec<Vec<Vec<usize>>>,
}

impl Cocycle3 {
    pub fn new(table: Vec<Vec<Vec<usize>>>) -> Self {
        Cocycle3 { table }
    }

    pub fn trivial(pi0: &FinGroup, pi1: &FinAbGroup) -> Self {
        let _ = pi1;
        Cocycle3 {
            table: vec![vec![vec![0; pi0.order()]; pi0.order()]; pi0.order()],
        }
    }

    pub fn eval(&self, g1: usize, g2: usize, g3: usize) -> usize {
        self.table[g1][g2][g3]
    }

    pub fn table(&self) -> &[Vec<Vec<usize>>] {
        &self.table
    }

    pub fn validate(
        &self,
        pi0: &FinGroup,
        pi1: &FinAbGroup,
        action: &ActionTable,
    ) -> Vec<Violation> {
        let n = pi0.order();
        let mut v = Vec::new();
        if self.table.len() != n
            || self
                .table
                .iter()
                .any(|t| t.len() != n || t.iter().any(|r| r.len() != n))
        {
            v.push(Violation::new("z.shape", format!("expected {n}x{n}x{n}")));
            return v;
        }
        for g1 in 0..n {
            for g2 in 0..n {
                for g3 in 0..n {
                    if self.eval(g1, g2, g3) >= pi1.order() {
                        v.push(Violation::new(
                            "z.range",
                            format!("(g1,g2,g3)=({g1},{g2},{g3})"),
                        ));
                    }
                }
            }
        }
        if !v.is_empty() {
            return v;
        }
        let e = pi0.identity();
        for g in 0..n {
            for h in 0..n {
                for (label, val) in [
                    ("z(e,g,h)", self.eval(e, g, h)),
                    ("z(g,e,h)", self.eval(g, e, h)),
                    ("z(g,h,e)", self.eval(g, h, e)),
                ] {
                    if val != pi1.zero() {
                        v.push(Violation::new(
                            "z.normalized",
                            format!("{label} with (g,h)=({g},{h})"),
                        ));
                    }
                }
            }
        }
        for g1 in 0..n {
            for g2 in 0..n {
                for g3 in 0..n {
                    for g4 in 0..n {
                        // g1▷z(g2,g3,g4) − z(g1g2,g3,g4) + z(g1,g2g3,g4)
                        //   − z(g1,g2,g3g4) + z(g1,g2,g3) = 0
                        let mut acc = action.act(g1, self.eval(g2, g3, g4));
                        acc = pi1.add(acc, pi1.neg(self.eval(pi0.mul(g1, g2), g3, g4)));
                        acc = pi1.add(acc, self.eval(g1, pi0.mul(g2, g3), g4));
                        acc = pi1.add(acc, pi1.neg(self.eval(g1, g2, pi0.mul(g3, g4))));
                        acc = pi1.add(acc, self.eval(g1, g2, g3));
                        if acc != pi1.zero() {
                            v.push(Violation::new(
                                "z.cocycle",
                                format!("(g1,g2,g3,g4)=({g1},{g2},{g3},{g4})"),
                            ));
                        }
                    }
                }
            }
        }
        v
    }
}

/// Free-function form of [`TwoGroupData::tensor_mor`].
pub fn tg_tensor_mor(g: &TwoGroupData, m: TgMorphism, m2: TgMorphism) -> TgMorphism {
    g.tensor_mor(m, m2)
}

/// Free-function form of [`TwoGroupData::associator`].
pub fn tg_associator(g: &TwoGroupData, g1: usize, g2: usize, g3: usize) -> TgMorphism {
    g.associator(g1, g2, g3)
}

/// Whether the table is a normalized 3-cocycle for the given action.
pub fn check_cocycle3(
    pi0: &FinGroup,
    pi1: &FinAbGroup,
    action: &ActionTable,
    z: &Cocycle3,
) -> bool {
    z.validate(pi0, pi1, action).is_empty()
}

/// Skeletal 2-group data `(π0, π1, ▷, z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoGroupData {
    pi0: FinGroup,
    pi1: FinAbGroup,
    action: ActionTable,
    z: Cocycle3,
}

/// Morphism `(a, g): g → g` of the skeletal 2-group.
pub type TgMorphism = (usize, usize);

impl TwoGroupData {
    pub fn new(pi0: FinGroup, pi1: FinAbGroup, action: ActionTable, z: Cocycle3) -> Result<Self> {
        let data = TwoGroupData {
            pi0,
            pi1,
            action,
            z,
        };
        crate::error::violations_to_error(&data.validate())?;
        Ok(data)
    }

    /// Assemble without validating; used to surface violations for reporting.
    pub fn new_unchecked(pi0: FinGroup, pi1: FinAbGroup, action: ActionTable, z: Cocycle3) -> Self {
        TwoGroupData {
            pi0,
            pi1,
            action,
            z,
        }
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut v = FinGroup::validate_table(self.pi0.mult_table());
        if v.is_empty() {
            // The data convention pins the identity to the stored index
            // (index 0 for loaded tables); a relabeled table is a valid
            // group but invalid data.
            let e = self.pi0.identity();
            if self
                .pi0
                .elements()
                .any(|g| self.pi0.mul(e, g) != g || self.pi0.mul(g, e) != g)
            {
                v.push(Violation::new(
                    "group.identity",
                    format!("index {e} is not the identity"),
                ));
            }
        }
        if v.is_empty() {
            v.extend(self.action.validate(&self.pi0, &self.pi1));
        }
        if v.is_empty() {
            v.extend(self.z.validate(&self.pi0, &self.pi1, &self.action));
        }
        v
    }

    pub fn pi0(&self) -> &FinGroup {
        &self.pi0
    }

    pub fn pi1(&self) -> &FinAbGroup {
        &self.pi1
    }

    pub fn action(&self) -> &ActionTable {
        &self.action
    }

    pub fn z(&self) -> &Cocycle3 {
        &self.z
    }

    /// Tensor of morphisms: `(a, g) ⊗ (a', g') = (a + g▷a', g·g')`.
    pub fn tensor_mor(&self, m: TgMorphism, m2: TgMorphism) -> TgMorphism {
        let (a, g) = m;
        let (a2, g2) = m2;
        (self.pi1.add(a, self.action.act(g, a2)), self.pi0.mul(g, g2))
    }

    /// Associator morphism `(z(g1,g2,g3), g1·g2·g3)`.
    pub fn associator(&self, g1: usize, g2: usize, g3: usize) -> TgMorphism {
        (
            self.z.eval(g1, g2, g3),
            self.pi0.mul(self.pi0.mul(g1, g2), g3),
        )
    }

    /// Vertical composite of morphisms over the same object: π1 parts add.
    pub fn vcomp_mor(&self, m2: TgMorphism, m: TgMorphism) -> Result<TgMorphism> {
        if m2.1 != m.1 {
            return Err(Error::Composition(
                "morphisms sit over different objects".into(),
            ));
        }
        Ok((self.pi1.add(m2.0, m.0), m.1))
    }

    /// Pentagon identity for the associator, evaluated through the tensor;
    /// this is the coherence that `check_cocycle3` encodes.
    pub fn pentagon_holds(&self) -> bool {
        let n = self.pi0.order();
        for g1 in 0..n {
            for g2 in 0..n {
                for g3 in 0..n {
                    for g4 in 0..n {
                        let id = |g: usize| (self.pi1.zero(), g);
                        // (1_{g1} ⊗ α_{g2,g3,g4}) ∙ α_{g1,g2g3,g4} ∙ (α_{g1,g2,g3} ⊗ 1_{g4})
                        let lhs1 = self.tensor_mor(id(g1), self.associator(g2, g3, g4));
                        let lhs2 = self.associator(g1, self.pi0.mul(g2, g3), g4);
                        let lhs3 = self.tensor_mor(self.associator(g1, g2, g3), id(g4));
                        let lhs = self
                            .vcomp_mor(lhs1, self.vcomp_mor(lhs2, lhs3).unwrap())
                            .unwrap();
                        // α_{g1,g2,g3g4} ∙ α_{g1g2,g3,g4}
                        let rhs = self
                            .vcomp_mor(
                                self.associator(g1, g2, self.pi0.mul(g3, g4)),
                                self.associator(self.pi0.mul(g1, g2), g3, g4),
                            )
                            .unwrap();
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_z2_nontrivial() -> TwoGroupData {
        let pi0 = FinGroup::cyclic(2);
        let pi1 = FinAbGroup::new(vec![2]).unwrap();
        let action = ActionTable::trivial(&pi0, &pi1);
        let mut table = vec![vec![vec![0; 2]; 2]; 2];
        table[1][1][1] = 1;
        let z = Cocycle3::new(table);
        TwoGroupData::new(pi0, pi1, action, z).unwrap()
    }

    #[test]
    fn cyclic_groups_validate() {
        for n in 1..=6 {
            let g = FinGroup::cyclic(n);
            assert_eq!(g.order(), n);
            assert_eq!(g.identity(), 0);
        }
    }

    #[test]
    fn symmetric3_is_a_nonabelian_group_of_order_six() {
        let g = FinGroup::symmetric3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity(), 0);
        assert!(g
            .elements()
            .any(|a| g.elements().any(|b| g.mul(a, b) != g.mul(b, a))));
    }

    #[test]
    fn validate_table_flags_broken_associativity() {
        // Swap one entry of Z/3's table.
        let mut t = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        t[1][1] = 1;
        let violations = FinGroup::validate_table(&t);
        assert!(violations.iter().any(|v| v.rule == "group.assoc"));
    }

    #[test]
    fn validate_table_flags_missing_identity() {
        let t = vec![vec![0, 0], vec![0, 0]];
        let violations = FinGroup::validate_table(&t);
        assert!(violations.iter().any(|v| v.rule == "group.identity"));
    }

    #[test]
    fn two_group_requires_identity_at_index_zero() {
        // A relabeled Z/2 whose identity sits at index 1: a fine group, but
        // the data convention pins the identity to index 0.
        let pi0 = FinGroup::from_table_unchecked(vec![vec![1, 0], vec![0, 1]]);
        let pi1 = FinAbGroup::trivial();
        let action = ActionTable::trivial(&pi0, &pi1);
        let z = Cocycle3::trivial(&pi0, &pi1);
        let tg = TwoGroupData::new_unchecked(pi0, pi1, action, z);
        let violations = tg.validate();
        assert!(violations.iter().any(|v| v.rule == "group.identity"));
    }

    #[test]
    fn ab_group_arithmetic() {
        let a = FinAbGroup::new(vec![2, 4]).unwrap();
        assert_eq!(a.order(), 8);
        assert_eq!(a.decompose(5), vec![1, 1]);
        assert_eq!(a.compose(&[1, 1]).unwrap(), 5);
        assert_eq!(a.add(5, 7), a.compose(&[0, 0]).unwrap());
        assert_eq!(a.neg(5), a.compose(&[1, 3]).unwrap());
        assert_eq!(a.generators(), vec![4, 1]);
        assert!(FinAbGroup::new(vec![1]).is_err());
        assert_eq!(FinAbGroup::trivial().order(), 1);
    }

    #[test]
    fn inversion_action_on_z3_validates() {
        let pi0 = FinGroup::cyclic(2);
        let pi1 = FinAbGroup::new(vec![3]).unwrap();
        let action = ActionTable::new(vec![vec![0, 1, 2], vec![0, 2, 1]]);
        assert!(action.validate(&pi0, &pi1).is_empty());
    }

    #[test]
    fn non_additive_action_is_flagged() {
        let pi0 = FinGroup::cyclic(2);
        let pi1 = FinAbGroup::new(vec![3]).unwrap();
        let action = ActionTable::new(vec![vec![0, 1, 2], vec![0, 0, 1]]);
        let violations = action.validate(&pi0, &pi1);
        assert!(!violations.is_empty());
    }

    #[test]
    fn nontrivial_z2_cocycle_checks() {
        let g = z2_z2_nontrivial();
        assert!(check_cocycle3(g.pi0(), g.pi1(), g.action(), g.z()));
    }

    #[test]
    fn perturbed_cocycle_fails_normalization() {
        let pi0 = FinGroup::cyclic(2);
        let pi1 = FinAbGroup::new(vec![2]).unwrap();
        let action = ActionTable::trivial(&pi0, &pi1);
        let mut table = vec![vec![vec![0; 2]; 2]; 2];
        table[0][1][1] = 1;
        assert!(!check_cocycle3(&pi0, &pi1, &action, &Cocycle3::new(table)));
    }

    #[test]
    fn tensor_mor_trivial_action_example() {
        let g = z2_z2_nontrivial();
        assert_eq!(g.tensor_mor((1, 1), (1, 1)), (0, 0));
    }

    #[test]
    fn tensor_mor_twists_by_the_action() {
        let pi0 = FinGroup::cyclic(2);
        let pi1 = FinAbGroup::new(vec![3]).unwrap();
        let action = ActionTable::new(vec![vec![0, 1, 2], vec![0, 2, 1]]);
        let z = Cocycle3::trivial(&pi0, &pi1);
        let g = TwoGroupData::new(pi0, pi1, action, z).unwrap();
        // (0,1) ⊗ (1,0) = (1▷1, 1) = (2, 1)
        assert_eq!(g.tensor_mor((0, 1), (1, 0)), (2, 1));
    }

    #[test]
    fn associator_reads_the_cocycle() {
        let g = z2_z2_nontrivial();
        assert_eq!(g.associator(1, 1, 1), (1, 1));
        assert_eq!(g.associator(0, 1, 1), (0, 0));
    }

    #[test]
    fn tensor_is_strictly_associative_on_pi1_parts() {
        let g = z2_z2_nontrivial();
        for a1 in 0..2 {
            for g1 in 0..2 {
                for a2 in 0..2 {
                    for g2 in 0..2 {
                        for a3 in 0..2 {
                            for g3 in 0..2 {
                                let left = g.tensor_mor(g.tensor_mor((a1, g1), (a2, g2)), (a3, g3));
                                let right =
                                    g.tensor_mor((a1, g1), g.tensor_mor((a2, g2), (a3, g3)));
                                assert_eq!(left, right);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pentagon_agrees_with_cocycle_check() {
        let good = z2_z2_nontrivial();
        assert!(good.pentagon_holds());
        assert!(check_cocycle3(
            good.pi0(),
            good.pi1(),
            good.action(),
            good.z()
        ));

        // Perturb z away from a cocycle: both checks must reject.
        let pi0 = FinGroup::cyclic(2);
        let pi1 = FinAbGroup::new(vec![2]).unwrap();
        let action = ActionTable::trivial(&pi0, &pi1);
        let mut table = vec![vec![vec![0; 2]; 2]; 2];
        table[1][1][1] = 1;
        table[1][1][0] = 1; // breaks normalization and the identity
        let bad = TwoGroupData::new_unchecked(pi0, pi1, action, Cocycle3::new(table));
        assert!(!check_cocycle3(bad.pi0(), bad.pi1(), bad.action(), bad.z()));
    }

    #[test]
    fn generating_set_and_hom_enumeration() {
        let s3 = FinGroup::symmetric3();
        let gens = s3.generating_set();
        assert!(gens.len() <= 2);

        let z2 = FinGroup::cyclic(2);
        let homs = enumerate_homs(&s3, &z2);
        // Trivial map and the sign map.
        assert_eq!(homs.len(), 2);
        assert!(homs.iter().any(|h| h.iter().all(|&x| x == 0)));
        assert!(homs.iter().any(|h| h.contains(&1)));

        let z3 = FinGroup::cyclic(3);
        assert_eq!(enumerate_homs(&z3, &z2).len(), 1);
        assert_eq!(enumerate_homs(&z2, &z3).len(), 1);
        assert_eq!(enumerate_homs(&z3, &z3).len(), 3);
    }

    #[test]
    fn two_group_validation_rejects_bad_action() {
        let pi0 = FinGroup::cyclic(2);
        let pi1 = FinAbGroup::new(vec![3]).unwrap();
        let action = ActionTable::new(vec![vec![0, 1, 2], vec![0, 0, 1]]);
        let z = Cocycle3::trivial(&pi0, &pi1);
        assert!(TwoGroupData::new(pi0, pi1, action, z).is_err());
    }
}
