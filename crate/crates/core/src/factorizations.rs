//! Factorization sets `φ_A^{-1}(a)` and their R-class partitions.
//!
//! Atoms are vectors of a common dimension `d`; numerical semigroups are the
//! `d = 1` case. Factorizations come out sorted lexicographically
//! descending, which downstream code relies on when picking
//! representatives.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::dsu::DisjointSet;
use crate::error::{Error, Result};

/// An exponent vector `u` with `Σ u_i·a_i` equal to some target.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factorization {
    exponents: Vec<i64>,
}

impl Factorization {
    /// Checks `Σ exponents[i]·atoms[i] == target` before accepting.
    pub fn new(atoms: &[Vec<i64>], exponents: Vec<i64>, target: &[i64]) -> Result<Self> {
        if exponents.len() != atoms.len() {
            return Err(Error::DimensionMismatch {
                expected: atoms.len(),
                found: exponents.len(),
            });
        }
        if exponents.iter().any(|&u| u < 0) {
            return Err(Error::NegativeCoordinate);
        }
        let image = arith::combine(atoms, &exponents, target.len())?;
        if image != target {
            return Err(Error::InvalidParams(
                "exponents do not evaluate to the target",
            ));
        }
        Ok(Self { exponents })
    }

    /// Skips the image check; callers must already know the sum is right.
    pub(crate) fn from_exponents(exponents: Vec<i64>) -> Self {
        Self { exponents }
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn into_exponents(self) -> Vec<i64> {
        self.exponents
    }

    /// `u · v ≠ 0`, i.e. the supports intersect.
    pub fn shares_support(&self, other: &Factorization) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .any(|(&a, &b)| a > 0 && b > 0)
    }

    /// Indices of the nonzero exponents.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|&(_, &u)| u > 0)
            .map(|(i, _)| i)
    }

    /// Componentwise `self ≥ other`.
    pub fn dominates(&self, other: &Factorization) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| a >= b)
    }

    /// Total number of atoms used.
    pub fn length(&self) -> i64 {
        self.exponents.iter().sum()
    }
}

/// The complete fiber over one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationSet {
    element: Vec<i64>,
    atoms: Vec<Vec<i64>>,
    factorizations: Vec<Factorization>,
}

impl FactorizationSet {
    pub fn element(&self) -> &[i64] {
        &self.element
    }

    pub fn atoms(&self) -> &[Vec<i64>] {
        &self.atoms
    }

    /// Lexicographically descending.
    pub fn factorizations(&self) -> &[Factorization] {
        &self.factorizations
    }

    pub fn len(&self) -> usize {
        self.factorizations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factorizations.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Factorization> {
        self.factorizations.iter()
    }

    pub fn position(&self, f: &Factorization) -> Option<usize> {
        // Descending order, so compare reversed.
        self.factorizations
            .binary_search_by(|probe| f.cmp(probe))
            .ok()
    }
}

pub(crate) fn validate_atoms(atoms: &[Vec<i64>], dim: usize) -> Result<()> {
    for a in atoms {
        if a.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: a.len(),
            });
        }
        if a.iter().any(|&x| x < 0) {
            return Err(Error::NegativeCoordinate);
        }
        if a.iter().all(|&x| x == 0) {
            return Err(Error::ZeroVectorGenerator);
        }
    }
    Ok(())
}

/// Calls `visit` with every nonnegative `u` such that `Σ u_i·atoms[i] ==
/// target`, in lexicographically descending order.
pub(crate) fn for_each_factorization<F>(
    atoms: &[Vec<i64>],
    target: &[i64],
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&[i64]) -> Result<()>,
{
    validate_atoms(atoms, target.len())?;
    if target.iter().any(|&x| x < 0) {
        return Ok(());
    }
    if atoms.is_empty() {
        if target.iter().all(|&x| x == 0) {
            visit(&[])?;
        }
        return Ok(());
    }
    let dim = target.len();
    let mut reach = vec![vec![false; dim]; atoms.len() + 1];
    for i in (0..atoms.len()).rev() {
        for j in 0..dim {
            reach[i][j] = reach[i + 1][j] || atoms[i][j] > 0;
        }
    }
    let mut exps = vec![0i64; atoms.len()];
    let mut rem = target.to_vec();
    descend(atoms, &reach, 0, &mut rem, &mut exps, &mut visit)
}

fn descend<F>(
    atoms: &[Vec<i64>],
    reach: &[Vec<bool>],
    index: usize,
    rem: &mut Vec<i64>,
    exps: &mut Vec<i64>,
    visit: &mut F,
) -> Result<()>
where
    F: FnMut(&[i64]) -> Result<()>,
{
    if index == atoms.len() {
        if rem.iter().all(|&x| x == 0) {
            visit(exps)?;
        }
        return Ok(());
    }
    if rem.iter().zip(&reach[index]).any(|(&x, &r)| x > 0 && !r) {
        return Ok(());
    }
    let a = &atoms[index];
    let bound = rem
        .iter()
        .zip(a)
        .filter(|&(_, &c)| c > 0)
        .map(|(&x, &c)| x / c)
        .min()
        .unwrap_or(0);
    if index + 1 == atoms.len() {
        // The last atom must finish the job exactly.
        if rem.iter().zip(a).all(|(&x, &c)| x == bound * c) {
            exps[index] = bound;
            visit(exps)?;
            exps[index] = 0;
        }
        return Ok(());
    }
    for (x, &c) in rem.iter_mut().zip(a) {
        *x -= bound * c;
    }
    let mut k = bound;
    loop {
        exps[index] = k;
        descend(atoms, reach, index + 1, rem, exps, visit)?;
        if k == 0 {
            break;
        }
        for (x, &c) in rem.iter_mut().zip(a) {
            *x += c;
        }
        k -= 1;
    }
    exps[index] = 0;
    Ok(())
}

/// Every factorization of `target` over `atoms`.
pub fn enumerate_factorizations(atoms: &[Vec<i64>], target: &[i64]) -> Result<FactorizationSet> {
    let mut factorizations = Vec::new();
    for_each_factorization(atoms, target, |u| {
        factorizations.push(Factorization::from_exponents(u.to_vec()));
        Ok(())
    })?;
    Ok(FactorizationSet {
        element: target.to_vec(),
        atoms: atoms.to_vec(),
        factorizations,
    })
}

/// Scalar convenience wrapper around [`enumerate_factorizations`].
pub fn enumerate_numerical(atoms: &[i64], target: i64) -> Result<FactorizationSet> {
    let atoms: Vec<Vec<i64>> = atoms.iter().map(|&a| vec![a]).collect();
    enumerate_factorizations(&atoms, &[target])
}

pub fn count_factorizations(atoms: &[Vec<i64>], target: &[i64]) -> Result<u64> {
    let mut count = 0u64;
    for_each_factorization(atoms, target, |_| {
        count = count.checked_add(1).ok_or(Error::ArithmeticOverflow)?;
        Ok(())
    })?;
    Ok(count)
}

pub fn count_numerical(atoms: &[i64], target: i64) -> Result<u64> {
    let atoms: Vec<Vec<i64>> = atoms.iter().map(|&a| vec![a]).collect();
    count_factorizations(&atoms, &[target])
}

/// One connected component of the "supports intersect" graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RClass {
    members: Vec<usize>,
    tree: Vec<(usize, usize)>,
}

impl RClass {
    /// Indices into the factorization set, ascending (so the first member
    /// is the lexicographically largest factorization).
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Spanning tree of the class: each edge joins two members whose
    /// supports intersect.
    pub fn spanning_tree(&self) -> &[(usize, usize)] {
        &self.tree
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.members.len() == 1
    }

    /// Index of the lexicographically largest member.
    pub fn representative(&self) -> usize {
        self.members[0]
    }
}

/// Partition of a factorization set into R-classes, ordered by their
/// lexicographically largest member (descending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RClassPartition {
    classes: Vec<RClass>,
}

impl RClassPartition {
    pub fn classes(&self) -> &[RClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn all_singletons(&self) -> bool {
        self.classes.iter().all(RClass::is_singleton)
    }

    pub fn has_singleton(&self) -> bool {
        self.classes.iter().any(RClass::is_singleton)
    }
}

/// Above this many factorizations the pairwise pass is replaced by a
/// generator-support index.
const PAIRWISE_LIMIT: usize = 10_000;

pub fn r_classes(fs: &FactorizationSet) -> RClassPartition {
    let n = fs.len();
    let mut dsu = DisjointSet::new(n);
    let mut edges = Vec::new();
    if n <= PAIRWISE_LIMIT {
        for i in 0..n {
            for j in (i + 1)..n {
                if fs.factorizations[i].shares_support(&fs.factorizations[j]) && dsu.union(i, j) {
                    edges.push((i, j));
                }
            }
        }
    } else {
        // Factorizations sharing generator k are chained together; any two
        // consecutive ones in a chain share support.
        let mut last_with: Vec<Option<usize>> = vec![None; fs.atoms.len()];
        for (i, f) in fs.factorizations.iter().enumerate() {
            for k in f.support() {
                if let Some(j) = last_with[k] {
                    if dsu.union(j, i) {
                        edges.push((j, i));
                    }
                }
                last_with[k] = Some(i);
            }
        }
    }

    let mut class_of_root: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<RClass> = Vec::new();
    for i in 0..n {
        let root = dsu.find(i);
        let c = *class_of_root[root].get_or_insert_with(|| {
            classes.push(RClass {
                members: Vec::new(),
                tree: Vec::new(),
            });
            classes.len() - 1
        });
        classes[c].members.push(i);
    }
    for (i, j) in edges {
        let c = class_of_root[dsu.find(i)].expect("edge endpoints are classified");
        classes[c].tree.push((i, j));
    }
    RClassPartition { classes }
}
