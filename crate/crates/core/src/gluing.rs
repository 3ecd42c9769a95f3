//! Gluings of affine semigroups.
//!
//! `S = ⟨A⟩` is the gluing of `S_1 = ⟨A_1⟩` and `S_2 = ⟨A_2⟩` (a partition
//! of `A`) when `G(S_1) ∩ G(S_2) = dZ` for some nonzero `d ∈ S_1 ∩ S_2`.
//! Then `Betti(S) = Betti(S_1) ∪ Betti(S_2) ∪ {d}`, and `S` is uniquely
//! presented iff both parts are and `±(d - a) ∉ S` for every Betti element
//! `a` of the parts.
//!
//! Numerical semigroups go through here as one-dimensional atom lists.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::affine::AffineSemigroup;
use crate::arith;
use crate::error::{Error, Result};
use crate::factorizations::{enumerate_factorizations, Factorization};
use crate::lattice::{hnf, IntegerLattice};
use crate::numerical::NumericalSemigroup;

/// Partition searches refuse semigroups with more generators than this.
pub const MAX_GLUING_GENERATORS: usize = 14;

/// A witnessed gluing `A = A_1 ⊔ A_2` glued at `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingDecomposition {
    /// Generator indices of `A_1`, ascending.
    pub part1: Vec<usize>,
    /// Generator indices of `A_2`, ascending.
    pub part2: Vec<usize>,
    pub d: Vec<i64>,
    /// Factorization of `d` over `A_1` (lexicographically largest).
    pub u: Factorization,
    /// Factorization of `d` over `A_2` (lexicographically largest).
    pub v: Factorization,
    /// `G(S_1) ∩ G(S_2)`, of rank one with basis `{d}`.
    pub intersection: IntegerLattice,
}

/// The group generated by `gens`, as a lattice.
pub fn group_lattice(gens: &[Vec<i64>], dimension: usize) -> Result<IntegerLattice> {
    hnf(gens, dimension)
}

fn pick(gens: &[Vec<i64>], indices: &[usize]) -> Vec<Vec<i64>> {
    indices.iter().map(|&i| gens[i].clone()).collect()
}

/// Tests whether the generators at `part1` and the remaining ones form a
/// gluing. `Ok(None)` is the negative answer.
pub fn check_gluing(s: &AffineSemigroup, part1: &[usize]) -> Result<Option<GluingDecomposition>> {
    let r = s.generators().len();
    let set: BTreeSet<usize> = part1.iter().copied().collect();
    if set.is_empty() || set.len() >= r || set.len() != part1.len() || set.iter().any(|&i| i >= r) {
        return Err(Error::InvalidPartition);
    }
    let part1: Vec<usize> = set.iter().copied().collect();
    let part2: Vec<usize> = (0..r).filter(|i| !set.contains(i)).collect();
    let dim = s.dimension();
    let a1 = pick(s.generators(), &part1);
    let a2 = pick(s.generators(), &part2);

    let intersection = group_lattice(&a1, dim)?.intersection(&group_lattice(&a2, dim)?)?;
    if intersection.rank() != 1 {
        return Ok(None);
    }
    let g = &intersection.basis()[0];
    let d: Vec<i64> = if g.iter().all(|&x| x >= 0) {
        g.clone()
    } else if g.iter().all(|&x| x <= 0) {
        g.iter().map(|&x| -x).collect()
    } else {
        return Ok(None);
    };

    let fs1 = enumerate_factorizations(&a1, &d)?;
    let fs2 = enumerate_factorizations(&a2, &d)?;
    let (Some(u), Some(v)) = (fs1.factorizations().first(), fs2.factorizations().first()) else {
        return Ok(None);
    };
    Ok(Some(GluingDecomposition {
        part1,
        part2,
        d,
        u: u.clone(),
        v: v.clone(),
        intersection,
    }))
}

fn guard(s: &AffineSemigroup) -> Result<()> {
    let count = s.generators().len();
    if count > MAX_GLUING_GENERATORS {
        return Err(Error::TooManyGenerators {
            count,
            limit: MAX_GLUING_GENERATORS,
        });
    }
    Ok(())
}

/// Index sets of `A_1` for the `2^{r-1} - 1` unordered proper partitions;
/// generator 0 always sits in `A_1`.
pub fn partitions(r: usize) -> impl Iterator<Item = Vec<usize>> {
    let half = if r == 0 { 0u64 } else { 1u64 << (r - 1) };
    (0..half.saturating_sub(1)).map(move |mask| {
        // Bits select which of generators 1..r join generator 0.
        let mut part = vec![0usize];
        part.extend((1..r).filter(|&i| mask & (1 << (i - 1)) != 0));
        part
    })
}

/// Every gluing decomposition of `s`.
pub fn find_gluings(s: &AffineSemigroup) -> Result<Vec<GluingDecomposition>> {
    guard(s)?;
    let mut found = Vec::new();
    for part in partitions(s.generators().len()) {
        if let Some(g) = check_gluing(s, &part)? {
            found.push(g);
        }
    }
    Ok(found)
}

/// `Betti(S_1) ∪ Betti(S_2) ∪ {d}`, sorted and deduplicated.
pub fn betti_via_gluing(
    g: &GluingDecomposition,
    betti1: &[Vec<i64>],
    betti2: &[Vec<i64>],
) -> Vec<Vec<i64>> {
    let set: BTreeSet<Vec<i64>> = betti1
        .iter()
        .chain(betti2)
        .chain(core::iter::once(&g.d))
        .cloned()
        .collect();
    set.into_iter().collect()
}

fn difference(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

/// `d` has exactly two factorizations in `S` iff `d - a ∉ S` for every
/// Betti element `a` of the parts.
pub fn d_has_unique_presentation(
    s: &AffineSemigroup,
    g: &GluingDecomposition,
    betti1: &[Vec<i64>],
    betti2: &[Vec<i64>],
) -> bool {
    betti1
        .iter()
        .chain(betti2)
        .all(|a| !s.contains(&difference(&g.d, a)))
}

/// What is known about one side of a gluing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartReport {
    pub uniquely_presented: bool,
    /// Complete Betti set, in the ambient space.
    pub betti: Vec<Vec<i64>>,
}

/// Both parts uniquely presented and `±(d - a) ∉ S` for every Betti element
/// `a` of the parts.
pub fn uniquely_presented_via_gluing(
    s: &AffineSemigroup,
    g: &GluingDecomposition,
    part1: &PartReport,
    part2: &PartReport,
) -> bool {
    part1.uniquely_presented
        && part2.uniquely_presented
        && part1.betti.iter().chain(&part2.betti).all(|a| {
            let forward = difference(&g.d, a);
            let backward = difference(a, &g.d);
            !s.contains(&forward) && !s.contains(&backward)
        })
}

/// `⟨λ·A_1⟩` glued to `⟨μ⟩` at `d = λμ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalGluing {
    pub semigroup: NumericalSemigroup,
    /// Atoms `λa_1, …, λa_e, μ` in that order; the decomposition's indices
    /// refer to this list.
    pub atoms: AffineSemigroup,
    pub gluing: GluingDecomposition,
    pub lambda: i64,
    pub mu: i64,
}

/// Glues `λ·S1` with `⟨μ⟩`. Requires `λ ≥ 2`, `gcd(λ, μ) = 1`, and `μ ∈ S1`
/// not a minimal generator of `S1`.
pub fn glue_numerical(s1: &NumericalSemigroup, lambda: i64, mu: i64) -> Result<NumericalGluing> {
    if lambda < 2 {
        return Err(Error::InvalidGluing("lambda must be at least 2"));
    }
    if arith::gcd(lambda, mu) != 1 {
        return Err(Error::InvalidGluing("lambda and mu must be coprime"));
    }
    if !s1.contains(mu) || mu == 0 {
        return Err(Error::InvalidGluing(
            "mu must be a nonzero element of the semigroup",
        ));
    }
    if s1.minimal_generators().contains(&mu) {
        return Err(Error::InvalidGluing("mu must not be a minimal generator"));
    }
    let mut scalars = Vec::with_capacity(s1.embedding_dimension() + 1);
    for &a in s1.minimal_generators() {
        scalars.push(arith::mul(lambda, a)?);
    }
    scalars.push(mu);
    let atoms = AffineSemigroup::from_scalars(&scalars)?;
    let part1: Vec<usize> = (0..s1.embedding_dimension()).collect();
    let gluing = check_gluing(&atoms, &part1)?.ok_or(Error::InvalidGluing(
        "lattice check rejected the decomposition",
    ))?;
    if gluing.d != [arith::mul(lambda, mu)?] {
        return Err(Error::InvalidGluing("unexpected gluing element"));
    }
    let semigroup = NumericalSemigroup::from_generators(&scalars)?;
    if semigroup.embedding_dimension() != scalars.len() {
        return Err(Error::InvalidGluing("glued generators are not minimal"));
    }
    Ok(NumericalGluing {
        semigroup,
        atoms,
        gluing,
        lambda,
        mu,
    })
}

/// Complete Betti set and uniqueness of an affine semigroup obtained by
/// splitting it recursively into gluings down to free pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingAnalysis {
    pub betti: Vec<Vec<i64>>,
    pub uniquely_presented: bool,
    /// Gluing elements used along the way, outermost first.
    pub gluing_elements: Vec<Vec<i64>>,
}

/// `None` when some piece is neither free (linearly independent
/// generators) nor a gluing of smaller pieces.
pub fn analyze_by_gluing(s: &AffineSemigroup) -> Result<Option<GluingAnalysis>> {
    guard(s)?;
    let gens = s.generators();
    if group_lattice(gens, s.dimension())?.rank() == gens.len() {
        return Ok(Some(GluingAnalysis {
            betti: Vec::new(),
            uniquely_presented: true,
            gluing_elements: Vec::new(),
        }));
    }
    for part in partitions(gens.len()) {
        let Some(g) = check_gluing(s, &part)? else {
            continue;
        };
        let Some(left) = analyze_by_gluing(&s.subsemigroup(&g.part1)?)? else {
            continue;
        };
        let Some(right) = analyze_by_gluing(&s.subsemigroup(&g.part2)?)? else {
            continue;
        };
        let r1 = PartReport {
            uniquely_presented: left.uniquely_presented,
            betti: left.betti,
        };
        let r2 = PartReport {
            uniquely_presented: right.uniquely_presented,
            betti: right.betti,
        };
        let mut gluing_elements = vec![g.d.clone()];
        gluing_elements.extend(left.gluing_elements);
        gluing_elements.extend(right.gluing_elements);
        return Ok(Some(GluingAnalysis {
            betti: betti_via_gluing(&g, &r1.betti, &r2.betti),
            uniquely_presented: uniquely_presented_via_gluing(s, &g, &r1, &r2),
            gluing_elements,
        }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paper_affine() -> AffineSemigroup {
        AffineSemigroup::from_generators(2, &[vec![2, 0], vec![0, 3], vec![2, 1], vec![1, 2]])
            .unwrap()
    }

    fn ns(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn paper_affine_gluing() {
        let s = paper_affine();
        let g = check_gluing(&s, &[0, 1, 2]).unwrap().unwrap();
        assert_eq!(g.d, vec![2, 4]);
        assert_eq!(g.part2, vec![3]);
        assert_eq!(g.u.exponents(), &[0, 1, 1]);
        assert_eq!(g.v.exponents(), &[2]);

        let all = find_gluings(&s).unwrap();
        assert!(all.iter().any(|g| g.part1 == [0, 1, 2] && g.d == [2, 4]));
    }

    #[test]
    fn numerical_gluings() {
        let s = AffineSemigroup::from_scalars(&[4, 6, 21]).unwrap();
        let g = check_gluing(&s, &[0, 1]).unwrap().unwrap();
        assert_eq!(g.d, vec![42]);

        let found = find_gluings(&AffineSemigroup::from_scalars(&[2, 3]).unwrap()).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(
            (found[0].part1.as_slice(), found[0].d.as_slice()),
            (&[0][..], &[6][..])
        );

        // Each single generator of <6,10,15> glues onto the other two at 30.
        let found = find_gluings(&AffineSemigroup::from_scalars(&[6, 10, 15]).unwrap()).unwrap();
        assert_eq!(found.len(), 3);
        assert!(found.iter().all(|g| g.d == [30]));
    }

    #[test]
    fn free_monoid_has_no_gluing() {
        let s = AffineSemigroup::from_generators(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(check_gluing(&s, &[0]).unwrap(), None);
    }

    #[test]
    fn invalid_partitions() {
        let s = paper_affine();
        assert_eq!(check_gluing(&s, &[]), Err(Error::InvalidPartition));
        assert_eq!(
            check_gluing(&s, &[0, 1, 2, 3]),
            Err(Error::InvalidPartition)
        );
        assert_eq!(check_gluing(&s, &[0, 7]), Err(Error::InvalidPartition));
    }

    #[test]
    fn too_many_generators() {
        let gens: Vec<i64> = (20..35).collect();
        let s = AffineSemigroup::from_scalars(&gens).unwrap();
        assert_eq!(
            find_gluings(&s),
            Err(Error::TooManyGenerators {
                count: 15,
                limit: 14
            })
        );
    }

    #[test]
    fn partition_enumeration() {
        let parts: Vec<Vec<usize>> = partitions(3).collect();
        assert_eq!(parts, vec![vec![0], vec![0, 1], vec![0, 2]]);
        assert_eq!(partitions(4).count(), 7);
        assert_eq!(partitions(1).count(), 0);
    }

    #[test]
    fn betti_union() {
        let s = AffineSemigroup::from_scalars(&[4, 6, 21]).unwrap();
        let g = check_gluing(&s, &[0, 1]).unwrap().unwrap();
        assert_eq!(
            betti_via_gluing(&g, &[vec![12]], &[]),
            vec![vec![12], vec![42]]
        );
        assert_eq!(betti_via_gluing(&g, &[], &[]), vec![vec![42]]);
        assert!(!d_has_unique_presentation(&s, &g, &[vec![12]], &[]));
        assert!(d_has_unique_presentation(&s, &g, &[], &[]));

        let r1 = PartReport {
            uniquely_presented: true,
            betti: vec![vec![12]],
        };
        let r2 = PartReport {
            uniquely_presented: true,
            betti: vec![],
        };
        assert!(!uniquely_presented_via_gluing(&s, &g, &r1, &r2));

        let a = paper_affine();
        let g = check_gluing(&a, &[0, 1, 2]).unwrap().unwrap();
        assert_eq!(
            betti_via_gluing(&g, &[vec![6, 3]], &[]),
            vec![vec![2, 4], vec![6, 3]]
        );
        assert!(d_has_unique_presentation(&a, &g, &[vec![6, 3]], &[]));
    }

    #[test]
    fn ed2_via_gluing() {
        let s = AffineSemigroup::from_scalars(&[2, 3]).unwrap();
        let g = check_gluing(&s, &[0]).unwrap().unwrap();
        let free = PartReport {
            uniquely_presented: true,
            betti: vec![],
        };
        assert!(uniquely_presented_via_gluing(&s, &g, &free, &free));
    }

    #[test]
    fn nested_analysis_of_paper_affine() {
        let analysis = analyze_by_gluing(&paper_affine()).unwrap().unwrap();
        assert_eq!(analysis.betti, vec![vec![2, 4], vec![6, 3]]);
        assert!(analysis.uniquely_presented);
    }

    #[test]
    fn glue_numerical_examples() {
        let glued = glue_numerical(&ns(&[2, 3]), 2, 5).unwrap();
        assert_eq!(glued.semigroup.minimal_generators(), &[4, 5, 6]);
        assert_eq!(glued.gluing.d, vec![10]);
        assert_eq!(
            glue_numerical(&ns(&[2, 3]), 2, 2).unwrap_err(),
            Error::InvalidGluing("lambda and mu must be coprime")
        );
        assert!(glue_numerical(&ns(&[2, 3]), 3, 3).is_err());
        assert!(glue_numerical(&ns(&[2, 3]), 1, 5).is_err());
        assert!(glue_numerical(&ns(&[4, 6, 21]), 5, 1).is_err());
    }
}
