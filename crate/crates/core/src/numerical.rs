//! Numerical semigroups: membership, Apéry sets and classical invariants.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::error::{Error, Result};

/// A co-finite submonoid of the nonnegative integers.
///
/// Held by its minimal generators (strictly increasing, gcd 1) and the
/// Apéry set of the multiplicity, which is computed when the value is built
/// and never changes afterwards.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    frobenius: i64,
    apery: Vec<i64>,
}

/// Multiplicity, embedding dimension, Frobenius number and genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub multiplicity: i64,
    pub embedding_dimension: usize,
    pub frobenius: i64,
    pub genus: i64,
}

const UNREACHED: i64 = i64::MAX;

/// Extends a residue table modulo `modulus` with a new generator using the
/// round-robin walk over each residue cycle of `generator`.
///
/// `table[r]` holds the least element of the monoid seen so far that is
/// congruent to `r`, or `UNREACHED`.
fn absorb_generator(table: &mut [i64], generator: i64) -> Result<()> {
    let modulus = table.len() as i64;
    let step = generator % modulus;
    let cycles = arith::gcd(step, modulus);
    let cycle_len = modulus / cycles;
    for start in 0..cycles {
        // The least entry on the cycle cannot improve; start the walk there.
        let mut best = start;
        let mut r = start;
        for _ in 0..cycle_len {
            if table[r as usize] < table[best as usize] {
                best = r;
            }
            r = (r + step) % modulus;
        }
        if table[best as usize] == UNREACHED {
            continue;
        }
        let mut r = best;
        for _ in 0..cycle_len {
            let next = (r + step) % modulus;
            let current = table[r as usize];
            if current != UNREACHED {
                let candidate = arith::add(current, generator)?;
                if candidate < table[next as usize] {
                    table[next as usize] = candidate;
                }
            }
            r = next;
        }
    }
    Ok(())
}

/// Residue table of the monoid generated by `generators` modulo `modulus`.
fn residue_table(generators: &[i64], modulus: i64) -> Result<Vec<i64>> {
    let mut table = vec![UNREACHED; modulus as usize];
    table[0] = 0;
    for &g in generators {
        absorb_generator(&mut table, g)?;
    }
    Ok(table)
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, reducing the list to the
    /// minimal system of generators.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if gens.iter().any(|&g| g < 0) {
            return Err(Error::NegativeCoordinate);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let g = arith::gcd_all(gens);
        if g != 1 {
            return Err(Error::NonCoprimeGenerators { gcd: g });
        }

        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        // Ascending sweep: a candidate is redundant iff the generators kept
        // so far (all smaller) already reach it.
        let multiplicity = sorted[0];
        let mut table = vec![UNREACHED; multiplicity as usize];
        table[0] = 0;
        let mut generators = vec![multiplicity];
        for &candidate in &sorted[1..] {
            if candidate >= table[(candidate % multiplicity) as usize] {
                continue;
            }
            absorb_generator(&mut table, candidate)?;
            generators.push(candidate);
        }
        debug_assert!(table.iter().all(|&w| w != UNREACHED));

        let frobenius = table.iter().copied().max().unwrap_or(0) - multiplicity;
        Ok(Self {
            generators,
            frobenius,
            apery: table,
        })
    }

    /// The semigroup of all nonnegative integers.
    pub fn naturals() -> Self {
        Self {
            generators: vec![1],
            frobenius: -1,
            apery: vec![0],
        }
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn max_generator(&self) -> i64 {
        *self.generators.last().expect("nonempty generator list")
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Largest integer not in the semigroup, `-1` for `N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Number of gaps.
    pub fn genus(&self) -> i64 {
        let m = self.multiplicity();
        self.apery.iter().map(|w| w / m).sum()
    }

    /// Apéry set of the multiplicity, indexed by residue.
    pub fn multiplicity_apery(&self) -> &[i64] {
        &self.apery
    }

    /// Membership test: `n ∈ S` iff `n` is at least the Apéry element of its
    /// residue class modulo the multiplicity.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let m = self.multiplicity();
        n >= self.apery[(n % m) as usize]
    }

    /// The least element of `S` in each residue class modulo `m`.
    pub fn apery_set(&self, m: i64) -> Result<Vec<i64>> {
        if m < 1 || !self.contains(m) {
            return Err(Error::NotAMember { element: m });
        }
        if m == self.multiplicity() {
            return Ok(self.apery.clone());
        }
        residue_table(&self.generators, m)
    }

    pub fn invariants(&self) -> Invariants {
        Invariants {
            multiplicity: self.multiplicity(),
            embedding_dimension: self.embedding_dimension(),
            frobenius: self.frobenius,
            genus: self.genus(),
        }
    }

    /// Gaps of the semigroup in increasing order.
    pub fn gaps(&self) -> impl Iterator<Item = i64> + '_ {
        (1..=self.frobenius.max(0)).filter(move |&n| !self.contains(n))
    }

    /// Elements of the semigroup in `[0, bound]`, increasing.
    pub fn elements_up_to(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (0..=bound).filter(move |&n| self.contains(n))
    }

    /// `f - x ∈ S` for every gap `x`.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        self.gaps().all(|x| self.contains(f - x))
    }

    /// Maximal embedding dimension: multiplicity equals embedding dimension.
    pub fn is_med(&self) -> bool {
        self.multiplicity() == self.embedding_dimension() as i64
    }

    /// Generators as one-dimensional atoms, for the vector code paths.
    pub fn atoms(&self) -> Vec<Vec<i64>> {
        self.generators.iter().map(|&g| vec![g]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn reduces_to_minimal_generators() {
        assert_eq!(ns(&[6, 10, 15]).minimal_generators(), &[6, 10, 15]);
        assert_eq!(ns(&[2, 3, 4]).minimal_generators(), &[2, 3]);
        let s = ns(&[21, 4, 6, 6]);
        assert_eq!(s.minimal_generators(), &[4, 6, 21]);
        assert_eq!(s.frobenius(), 23);
    }

    #[test]
    fn rejects_bad_generator_lists() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyInput)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NonCoprimeGenerators { gcd: 2 })
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 3, 4]),
            Err(Error::ZeroGenerator)
        );
    }

    #[test]
    fn naturals() {
        let n = ns(&[1, 5, 7]);
        assert_eq!(n, NumericalSemigroup::naturals());
        assert_eq!(n.frobenius(), -1);
        assert_eq!(n.genus(), 0);
        assert!(n.contains(0) && n.contains(1));
        assert!(n.is_symmetric());
    }

    #[test]
    fn membership() {
        assert!(!ns(&[2, 3]).contains(1));
        let s = ns(&[4, 6, 21]);
        assert!(!s.contains(23));
        assert!(s.contains(12));
        assert!(s.contains(24));
        assert!(!s.contains(-4));
    }

    #[test]
    fn apery_sets() {
        assert_eq!(ns(&[2, 3]).apery_set(2).unwrap(), vec![0, 3]);
        assert_eq!(ns(&[4, 6, 21]).apery_set(4).unwrap(), vec![0, 21, 6, 27]);
        assert_eq!(ns(&[3, 4, 5]).apery_set(3).unwrap(), vec![0, 4, 5]);
        assert_eq!(
            ns(&[4, 6, 21]).apery_set(6).unwrap(),
            vec![0, 25, 8, 21, 4, 29]
        );
        assert_eq!(
            ns(&[4, 6, 21]).apery_set(5),
            Err(Error::NotAMember { element: 5 })
        );
    }

    #[test]
    fn invariants() {
        let inv = |g: &[i64]| {
            let i = ns(g).invariants();
            (i.multiplicity, i.embedding_dimension, i.frobenius, i.genus)
        };
        assert_eq!(inv(&[2, 3]), (2, 2, 1, 1));
        assert_eq!(inv(&[4, 6, 21]), (4, 3, 23, 12));
        assert_eq!(inv(&[3, 4, 5]), (3, 3, 2, 2));
    }

    #[test]
    fn symmetry_and_med() {
        assert!(ns(&[2, 3]).is_symmetric());
        assert!(!ns(&[3, 4, 5]).is_symmetric());
        assert!(ns(&[4, 6, 21]).is_symmetric());
        assert!(ns(&[3, 4, 5]).is_med());
        assert!(ns(&[2, 3]).is_med());
        assert!(!ns(&[4, 6, 21]).is_med());
    }

    #[test]
    fn overflow_is_reported() {
        let big = i64::MAX / 2 + 1;
        assert_eq!(
            NumericalSemigroup::from_generators(&[3, big]),
            Err(Error::ArithmeticOverflow)
        );
    }
}
