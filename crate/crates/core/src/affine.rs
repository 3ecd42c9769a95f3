//! Affine semigroups: finitely generated submonoids of `N^d`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Submonoid of `N^d` given by a list of nonzero, pairwise distinct
/// generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineSemigroup {
    dimension: usize,
    generators: Vec<Vec<i64>>,
    minimal: bool,
}

impl AffineSemigroup {
    pub fn from_generators(dimension: usize, gens: &[Vec<i64>]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        for g in gens {
            if g.len() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    found: g.len(),
                });
            }
            if g.iter().any(|&x| x < 0) {
                return Err(Error::NegativeCoordinate);
            }
            if g.iter().all(|&x| x == 0) {
                return Err(Error::ZeroVectorGenerator);
            }
        }
        for (i, g) in gens.iter().enumerate() {
            if gens[..i].contains(g) {
                return Err(Error::DuplicateGenerator);
            }
        }
        let generators = gens.to_vec();
        let minimal = (0..generators.len()).all(|i| !redundant(&generators, i));
        Ok(Self {
            dimension,
            generators,
            minimal,
        })
    }

    /// One-dimensional atoms `[a_1], …, [a_r]` (gcd need not be 1).
    pub fn from_scalars(atoms: &[i64]) -> Result<Self> {
        let gens: Vec<Vec<i64>> = atoms.iter().map(|&a| alloc::vec![a]).collect();
        Self::from_generators(1, &gens)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// Whether no generator lies in the monoid spanned by the others.
    pub fn is_minimally_generated(&self) -> bool {
        self.minimal
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        if v.len() != self.dimension {
            return false;
        }
        let gens: Vec<&[i64]> = self.generators.iter().map(Vec::as_slice).collect();
        contains_in(&gens, v)
    }

    /// The same monoid on its atoms, in the original order. A generator is
    /// dropped iff it lies in the span of the others; in `N^d` those are
    /// exactly the non-atoms, so they can all go at once.
    pub fn minimized(&self) -> Self {
        if self.minimal {
            return self.clone();
        }
        let generators: Vec<Vec<i64>> = (0..self.generators.len())
            .filter(|&i| !redundant(&self.generators, i))
            .map(|i| self.generators[i].clone())
            .collect();
        Self {
            dimension: self.dimension,
            generators,
            minimal: true,
        }
    }

    /// The submonoid generated by the generators at `indices`.
    pub fn subsemigroup(&self, indices: &[usize]) -> Result<Self> {
        let gens: Vec<Vec<i64>> = indices
            .iter()
            .map(|&i| self.generators[i].clone())
            .collect();
        Self::from_generators(self.dimension, &gens)
    }
}

fn redundant(gens: &[Vec<i64>], i: usize) -> bool {
    let others: Vec<&[i64]> = gens
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, g)| g.as_slice())
        .collect();
    contains_in(&others, &gens[i])
}

/// Depth-first search over generators in order; the coefficient of each
/// generator is bounded coordinatewise by the remainder. Failed
/// `(index, remainder)` states are remembered.
pub(crate) fn contains_in(gens: &[&[i64]], v: &[i64]) -> bool {
    if v.iter().any(|&x| x < 0) {
        return false;
    }
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    let dim = v.len();
    // Coordinates that generators from index i onwards can still cover.
    let mut reach = alloc::vec![alloc::vec![false; dim]; gens.len() + 1];
    for i in (0..gens.len()).rev() {
        for j in 0..dim {
            reach[i][j] = reach[i + 1][j] || gens[i][j] > 0;
        }
    }
    let mut failed = BTreeSet::new();
    let mut rem = v.to_vec();
    search(gens, &reach, 0, &mut rem, &mut failed)
}

fn search(
    gens: &[&[i64]],
    reach: &[Vec<bool>],
    index: usize,
    rem: &mut Vec<i64>,
    failed: &mut BTreeSet<(usize, Vec<i64>)>,
) -> bool {
    if rem.iter().all(|&x| x == 0) {
        return true;
    }
    if index == gens.len() {
        return false;
    }
    if rem.iter().zip(&reach[index]).any(|(&x, &r)| x > 0 && !r) {
        return false;
    }
    if failed.contains(&(index, rem.clone())) {
        return false;
    }
    let g = gens[index];
    let bound = rem
        .iter()
        .zip(g)
        .filter(|&(_, &a)| a > 0)
        .map(|(&x, &a)| x / a)
        .min()
        .unwrap_or(0);
    // Take as many copies as possible first, then back off one at a time.
    for (x, &a) in rem.iter_mut().zip(g) {
        *x -= bound * a;
    }
    let mut k = bound;
    loop {
        if search(gens, reach, index + 1, rem, failed) {
            return true;
        }
        if k == 0 {
            break;
        }
        for (x, &a) in rem.iter_mut().zip(g) {
            *x += a;
        }
        k -= 1;
    }
    failed.insert((index, rem.clone()));
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn paper_example() -> AffineSemigroup {
        AffineSemigroup::from_generators(2, &[vec![2, 0], vec![0, 3], vec![2, 1], vec![1, 2]])
            .unwrap()
    }

    #[test]
    fn minimality_flag() {
        assert!(paper_example().is_minimally_generated());
        let s = AffineSemigroup::from_generators(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert!(!s.is_minimally_generated());
        let m = s.minimized();
        assert_eq!(m.generators(), &[vec![1, 0], vec![0, 1]]);
        assert!(m.is_minimally_generated());
        let s = AffineSemigroup::from_generators(2, &[vec![2, 0], vec![0, 3]]).unwrap();
        assert!(s.is_minimally_generated());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            AffineSemigroup::from_generators(2, &[]),
            Err(Error::EmptyInput)
        );
        assert_eq!(
            AffineSemigroup::from_generators(2, &[vec![0, 0], vec![1, 0]]),
            Err(Error::ZeroVectorGenerator)
        );
        assert_eq!(
            AffineSemigroup::from_generators(2, &[vec![1, 0], vec![1, 0]]),
            Err(Error::DuplicateGenerator)
        );
        assert!(matches!(
            AffineSemigroup::from_generators(2, &[vec![1, 0, 0]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn membership() {
        let s = paper_example();
        assert!(s.contains(&[2, 4]));
        assert!(s.contains(&[0, 0]));
        assert!(s.contains(&[6, 3]));
        assert!(!s.contains(&[1, 0]));
        assert!(!s.contains(&[-4, 1]));
        assert!(!s.contains(&[4, -1]));
        assert!(!s.contains(&[1, 1]));
    }

    #[test]
    fn scalar_atoms_need_not_be_coprime() {
        let s = AffineSemigroup::from_scalars(&[8, 12, 42]).unwrap();
        assert!(s.contains(&[20]));
        assert!(s.contains(&[50]));
        assert!(!s.contains(&[22]));
        assert!(!s.contains(&[45]));
    }
}
