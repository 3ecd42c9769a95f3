//! Betti elements, minimal presentations and unique-presentation checks.
//!
//! # Finding Betti elements
//!
//! The R-classes of `s` correspond one-to-one with the connected components
//! of the graph whose vertices are the generators `a_i` with `s - a_i ∈ S`
//! and whose edges join `a_i, a_j` when `s - a_i - a_j ∈ S`. A factorization
//! makes its support a clique, and an edge `{i, j}` is realised by some
//! factorization `w + e_i + e_j` of `s`, so supports of distinct R-classes
//! are disjoint and never adjacent. The scans below use this graph (only
//! membership queries) and fall back to enumerating factorizations for the
//! few elements that turn out to be Betti.
//!
//! # Search bound for numerical semigroups
//!
//! Every Betti element `b` satisfies `b ≤ F + 2·max_generator`. Take `u`, `v`
//! in distinct R-classes of `b`, `i ∈ supp(u)`, `j ∈ supp(v)`. If
//! `b - a_i - a_j ∈ S` with factorization `w`, then `w + e_i + e_j` is a
//! factorization of `b` sharing support with both `u` and `v`, which merges
//! their classes. Hence `b - a_i - a_j ∉ S`, so `b - a_i - a_j ≤ F`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::affine::AffineSemigroup;
use crate::arith;
use crate::dsu::DisjointSet;
use crate::error::{Error, Result};
use crate::factorizations::{
    enumerate_factorizations, enumerate_numerical, r_classes, Factorization, FactorizationSet,
};
use crate::numerical::NumericalSemigroup;

/// What the factorizations of a Betti element look like.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiReport {
    pub element: Vec<i64>,
    pub factorization_count: usize,
    pub r_class_count: usize,
    /// Every R-class is a singleton.
    pub is_betti_minimal: bool,
    /// Exactly two factorizations.
    pub has_unique_presentation: bool,
}

impl BettiReport {
    /// `None` when the element has fewer than two R-classes.
    pub fn from_factorizations(fs: &FactorizationSet) -> Option<Self> {
        let classes = r_classes(fs);
        if classes.len() < 2 {
            return None;
        }
        Some(Self {
            element: fs.element().to_vec(),
            factorization_count: fs.len(),
            r_class_count: classes.len(),
            is_betti_minimal: classes.all_singletons(),
            has_unique_presentation: fs.len() == 2,
        })
    }

    /// The element of a numerical semigroup report.
    pub fn scalar(&self) -> i64 {
        self.element[0]
    }
}

/// How the chosen R-class representatives of one Betti element are linked.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Topology {
    /// `(v_1, v_2), (v_1, v_3), …, (v_1, v_k)`
    #[default]
    Star,
    /// `(v_1, v_2), (v_2, v_3), …, (v_{k-1}, v_k)`
    Path,
}

/// One relation of a presentation, stored with the lexicographically larger
/// factorization on the left.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PresentationPair {
    pub element: Vec<i64>,
    pub left: Factorization,
    pub right: Factorization,
    pub indispensable: bool,
}

impl PresentationPair {
    /// Orients the pair; `indispensable` is left false.
    pub fn new(element: Vec<i64>, a: Factorization, b: Factorization) -> Self {
        let (left, right) = if a >= b { (a, b) } else { (b, a) };
        Self {
            element,
            left,
            right,
            indispensable: false,
        }
    }

    /// Same relation up to orientation.
    pub fn same_relation(&self, other: &PresentationPair) -> bool {
        (self.left == other.left && self.right == other.right)
            || (self.left == other.right && self.right == other.left)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Presentation {
    pairs: Vec<PresentationPair>,
}

impl Presentation {
    pub fn new(pairs: Vec<PresentationPair>) -> Self {
        Self { pairs }
    }

    pub fn pairs(&self) -> &[PresentationPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn indispensable(&self) -> impl Iterator<Item = &PresentationPair> {
        self.pairs.iter().filter(|p| p.indispensable)
    }

    /// Distinct elements carrying at least one pair, sorted.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let set: BTreeSet<Vec<i64>> = self.pairs.iter().map(|p| p.element.clone()).collect();
        set.into_iter().collect()
    }
}

/// Result of [`is_uniquely_presented`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Uniqueness {
    pub answer: bool,
    /// Smallest Betti element with more than two factorizations.
    pub witness: Option<BettiReport>,
}

/// `F + 2·max_generator`: no Betti element lies above it.
pub fn betti_search_bound(s: &NumericalSemigroup) -> Result<i64> {
    arith::add(s.frobenius(), arith::mul(2, s.max_generator())?)
}

/// Number of R-classes of `n ∈ S` from the generator graph.
fn class_count_numerical(s: &NumericalSemigroup, n: i64) -> usize {
    if n == 0 {
        return 1;
    }
    let gens = s.minimal_generators();
    let vertices: Vec<usize> = (0..gens.len())
        .filter(|&i| s.contains(n - gens[i]))
        .collect();
    if vertices.len() < 2 {
        return vertices.len();
    }
    let mut dsu = DisjointSet::new(vertices.len());
    let mut components = vertices.len();
    for x in 0..vertices.len() {
        for y in (x + 1)..vertices.len() {
            if s.contains(n - gens[vertices[x]] - gens[vertices[y]]) && dsu.union(x, y) {
                components -= 1;
            }
        }
    }
    components
}

/// All Betti elements, ascending.
pub fn betti_elements(s: &NumericalSemigroup) -> Result<Vec<i64>> {
    let bound = betti_search_bound(s)?;
    Ok(s.elements_up_to(bound)
        .filter(|&n| class_count_numerical(s, n) >= 2)
        .collect())
}

/// Report for `a`, or `None` if `a` is not a Betti element.
pub fn betti_report(s: &NumericalSemigroup, a: i64) -> Result<Option<BettiReport>> {
    if !s.contains(a) {
        return Err(Error::NotAMember { element: a });
    }
    let fs = enumerate_numerical(s.minimal_generators(), a)?;
    Ok(BettiReport::from_factorizations(&fs))
}

/// Betti elements `b` with no other Betti element `b'` such that
/// `b - b' ∈ S`.
pub fn betti_minimal_elements(s: &NumericalSemigroup) -> Result<Vec<i64>> {
    let betti = betti_elements(s)?;
    Ok(minimal_under_semigroup_order(&betti, |x| s.contains(x)))
}

fn minimal_under_semigroup_order<F: Fn(i64) -> bool>(betti: &[i64], contains: F) -> Vec<i64> {
    betti
        .iter()
        .copied()
        .filter(|&b| {
            betti
                .iter()
                .all(|&other| other == b || !contains(b - other))
        })
        .collect()
}

/// At least two R-classes, all of them singletons.
pub fn is_betti_minimal_by_classes(s: &NumericalSemigroup, a: i64) -> Result<bool> {
    Ok(betti_report(s, a)?.is_some_and(|r| r.is_betti_minimal))
}

/// At least two R-classes, at least one of them a singleton.
pub fn is_minimal_multi_element(s: &NumericalSemigroup, a: i64) -> Result<bool> {
    if !s.contains(a) {
        return Err(Error::NotAMember { element: a });
    }
    let fs = enumerate_numerical(s.minimal_generators(), a)?;
    let classes = r_classes(&fs);
    Ok(classes.len() >= 2 && classes.has_singleton())
}

/// Betti with exactly two factorizations.
pub fn element_has_unique_presentation(s: &NumericalSemigroup, a: i64) -> Result<bool> {
    Ok(betti_report(s, a)?.is_some_and(|r| r.has_unique_presentation))
}

/// Pairs for one element: representatives are the lexicographically largest
/// member of each R-class, linked according to `topology`.
fn pairs_for_element(fs: &FactorizationSet, topology: Topology) -> Vec<PresentationPair> {
    let classes = r_classes(fs);
    if classes.len() < 2 {
        return Vec::new();
    }
    let reps: Vec<&Factorization> = classes
        .classes()
        .iter()
        .map(|c| &fs.factorizations()[c.representative()])
        .collect();
    let indispensable = fs.len() == 2;
    let element = fs.element().to_vec();
    let link = |a: &Factorization, b: &Factorization| {
        let mut p = PresentationPair::new(element.clone(), a.clone(), b.clone());
        p.indispensable = indispensable;
        p
    };
    match topology {
        Topology::Star => reps[1..].iter().map(|v| link(reps[0], v)).collect(),
        Topology::Path => reps.windows(2).map(|w| link(w[0], w[1])).collect(),
    }
}

/// Minimal presentation assembled from the given Betti elements.
pub fn presentation_from_betti(
    atoms: &[Vec<i64>],
    betti: &[Vec<i64>],
    topology: Topology,
) -> Result<Presentation> {
    let mut pairs = Vec::new();
    for b in betti {
        let fs = enumerate_factorizations(atoms, b)?;
        pairs.extend(pairs_for_element(&fs, topology));
    }
    Ok(Presentation { pairs })
}

pub fn minimal_presentation(s: &NumericalSemigroup, topology: Topology) -> Result<Presentation> {
    let betti: Vec<Vec<i64>> = betti_elements(s)?.into_iter().map(|b| vec![b]).collect();
    presentation_from_betti(&s.atoms(), &betti, topology)
}

/// Uniquely presented iff every Betti element has exactly two
/// factorizations.
pub fn is_uniquely_presented(s: &NumericalSemigroup) -> Result<Uniqueness> {
    for b in betti_elements(s)? {
        let fs = enumerate_numerical(s.minimal_generators(), b)?;
        if fs.len() != 2 {
            return Ok(Uniqueness {
                answer: false,
                witness: BettiReport::from_factorizations(&fs),
            });
        }
    }
    Ok(Uniqueness {
        answer: true,
        witness: None,
    })
}

/// Minimal presentation of size `embedding_dimension - 1`.
pub fn is_complete_intersection_cardinality(s: &NumericalSemigroup) -> Result<bool> {
    let p = minimal_presentation(s, Topology::Star)?;
    Ok(p.len() + 1 == s.embedding_dimension())
}

/// Whether `pres` connects every fiber of the given elements under the
/// rewriting `u → u - p + q` (for each pair `(p, q)` and its reverse,
/// whenever `u ≥ p`).
pub fn connects_fibers<I>(atoms: &[Vec<i64>], pres: &Presentation, elements: I) -> Result<bool>
where
    I: IntoIterator<Item = Vec<i64>>,
{
    let mut moves: Vec<(&Factorization, &Factorization)> = Vec::new();
    for p in pres.pairs() {
        if p.left.exponents().len() != atoms.len() || p.right.exponents().len() != atoms.len() {
            return Err(Error::DimensionMismatch {
                expected: atoms.len(),
                found: p.left.exponents().len().max(p.right.exponents().len()),
            });
        }
        moves.push((&p.left, &p.right));
        moves.push((&p.right, &p.left));
    }
    for element in elements {
        let fs = enumerate_factorizations(atoms, &element)?;
        if fs.len() < 2 {
            continue;
        }
        let mut dsu = DisjointSet::new(fs.len());
        let mut components = fs.len();
        for (i, u) in fs.iter().enumerate() {
            for &(from, to) in &moves {
                if !u.dominates(from) {
                    continue;
                }
                let w: Vec<i64> = u
                    .exponents()
                    .iter()
                    .zip(from.exponents())
                    .zip(to.exponents())
                    .map(|((&x, &p), &q)| x - p + q)
                    .collect();
                if let Some(j) = fs.position(&Factorization::from_exponents(w)) {
                    if dsu.union(i, j) {
                        components -= 1;
                    }
                }
            }
        }
        if components != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that `pres` generates the kernel congruence on every element up
/// to `bound`. The bound must cover all Betti elements.
pub fn verify_presentation(
    s: &NumericalSemigroup,
    pres: &Presentation,
    bound: i64,
) -> Result<bool> {
    let required = betti_search_bound(s)?;
    if bound < required {
        return Err(Error::BoundTooSmall { bound, required });
    }
    connects_fibers(&s.atoms(), pres, s.elements_up_to(bound).map(|n| vec![n]))
}

fn degree(v: &[i64]) -> i64 {
    v.iter().sum()
}

/// Elements of `S` whose coordinate sum is at most `degree_bound`, sorted.
pub fn affine_elements_up_to(s: &AffineSemigroup, degree_bound: i64) -> Result<BTreeSet<Vec<i64>>> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![vec![0i64; s.dimension()]];
    seen.insert(stack[0].clone());
    while let Some(e) = stack.pop() {
        for g in s.generators() {
            let mut next = Vec::with_capacity(e.len());
            for (&x, &y) in e.iter().zip(g) {
                next.push(arith::add(x, y)?);
            }
            if degree(&next) <= degree_bound && !seen.contains(&next) {
                seen.insert(next.clone());
                stack.push(next);
            }
        }
    }
    Ok(seen)
}

/// Betti elements of degree at most `degree_bound`. This is a truncation:
/// nothing is claimed about elements above the bound.
pub fn affine_betti_up_to(s: &AffineSemigroup, degree_bound: i64) -> Result<Vec<Vec<i64>>> {
    if degree_bound < 0 {
        return Ok(Vec::new());
    }
    let elements = affine_elements_up_to(s, degree_bound)?;
    let gens = s.generators();
    let minus =
        |v: &[i64], g: &[i64]| -> Vec<i64> { v.iter().zip(g).map(|(&x, &y)| x - y).collect() };
    let mut betti = Vec::new();
    for e in &elements {
        let vertices: Vec<usize> = (0..gens.len())
            .filter(|&i| elements.contains(&minus(e, &gens[i])))
            .collect();
        if vertices.len() < 2 {
            continue;
        }
        let mut dsu = DisjointSet::new(vertices.len());
        let mut components = vertices.len();
        for x in 0..vertices.len() {
            let rest = minus(e, &gens[vertices[x]]);
            for y in (x + 1)..vertices.len() {
                if elements.contains(&minus(&rest, &gens[vertices[y]])) && dsu.union(x, y) {
                    components -= 1;
                }
            }
        }
        if components >= 2 {
            betti.push(e.clone());
        }
    }
    Ok(betti)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn exps(f: &Factorization) -> Vec<i64> {
        f.exponents().to_vec()
    }

    fn paper_affine() -> AffineSemigroup {
        AffineSemigroup::from_generators(2, &[vec![2, 0], vec![0, 3], vec![2, 1], vec![1, 2]])
            .unwrap()
    }

    #[test]
    fn betti_elements_of_examples() {
        assert_eq!(betti_elements(&ns(&[4, 6, 21])).unwrap(), vec![12, 42]);
        assert_eq!(betti_elements(&ns(&[6, 10, 15])).unwrap(), vec![30]);
        assert_eq!(betti_elements(&ns(&[1])).unwrap(), Vec::<i64>::new());
        assert_eq!(betti_elements(&ns(&[2, 3])).unwrap(), vec![6]);
        assert_eq!(betti_elements(&ns(&[3, 4, 5])).unwrap(), vec![8, 9, 10]);
    }

    #[test]
    fn betti_minimal() {
        assert_eq!(betti_minimal_elements(&ns(&[4, 6, 21])).unwrap(), vec![12]);
        assert_eq!(betti_minimal_elements(&ns(&[6, 10, 15])).unwrap(), vec![30]);
        assert_eq!(betti_minimal_elements(&ns(&[2, 3])).unwrap(), vec![6]);
    }

    #[test]
    fn class_predicates() {
        let s = ns(&[4, 6, 21]);
        assert!(is_betti_minimal_by_classes(&s, 12).unwrap());
        assert!(!is_betti_minimal_by_classes(&s, 42).unwrap());
        assert!(is_betti_minimal_by_classes(&ns(&[6, 10, 15]), 30).unwrap());
        assert!(is_minimal_multi_element(&s, 42).unwrap());
        assert!(is_minimal_multi_element(&s, 12).unwrap());
        assert!(!is_minimal_multi_element(&s, 16).unwrap());
        assert_eq!(
            is_minimal_multi_element(&s, 23),
            Err(Error::NotAMember { element: 23 })
        );
    }

    #[test]
    fn presentations_of_examples() {
        let p = minimal_presentation(&ns(&[2, 3]), Topology::Star).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.pairs()[0].element, vec![6]);
        assert_eq!(exps(&p.pairs()[0].left), vec![3, 0]);
        assert_eq!(exps(&p.pairs()[0].right), vec![0, 2]);
        assert!(p.pairs()[0].indispensable);

        let p = minimal_presentation(&ns(&[4, 6, 21]), Topology::Star).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.elements(), vec![vec![12], vec![42]]);
        assert!(p.pairs()[0].indispensable && !p.pairs()[1].indispensable);
        assert_eq!(exps(&p.pairs()[1].left), vec![9, 1, 0]);
        assert_eq!(exps(&p.pairs()[1].right), vec![0, 0, 2]);

        let star = minimal_presentation(&ns(&[6, 10, 15]), Topology::Star).unwrap();
        let path = minimal_presentation(&ns(&[6, 10, 15]), Topology::Path).unwrap();
        assert_eq!(star.len(), 2);
        assert_eq!(path.len(), 2);
        assert_eq!(exps(&star.pairs()[1].left), vec![5, 0, 0]);
        assert_eq!(exps(&star.pairs()[1].right), vec![0, 0, 2]);
        assert_eq!(exps(&path.pairs()[1].left), vec![0, 3, 0]);
        assert_eq!(exps(&path.pairs()[1].right), vec![0, 0, 2]);
    }

    #[test]
    fn uniqueness() {
        let u = is_uniquely_presented(&ns(&[4, 6, 21])).unwrap();
        assert!(!u.answer);
        let w = u.witness.unwrap();
        assert_eq!((w.scalar(), w.factorization_count), (42, 5));

        let u = is_uniquely_presented(&ns(&[6, 10, 15])).unwrap();
        assert!(!u.answer);
        let w = u.witness.unwrap();
        assert_eq!(
            (w.scalar(), w.factorization_count, w.r_class_count),
            (30, 3, 3)
        );

        assert!(is_uniquely_presented(&ns(&[2, 3])).unwrap().answer);
        assert!(is_uniquely_presented(&ns(&[1])).unwrap().answer);

        assert!(element_has_unique_presentation(&ns(&[4, 6, 21]), 12).unwrap());
        assert!(!element_has_unique_presentation(&ns(&[4, 6, 21]), 42).unwrap());
        assert!(!element_has_unique_presentation(&ns(&[2, 3]), 5).unwrap());
    }

    #[test]
    fn verification() {
        let s = ns(&[2, 3]);
        let p = minimal_presentation(&s, Topology::Star).unwrap();
        assert!(verify_presentation(&s, &p, 20).unwrap());

        let s = ns(&[6, 10, 15]);
        let p = minimal_presentation(&s, Topology::Path).unwrap();
        assert!(verify_presentation(&s, &p, 60).unwrap());
        assert!(!verify_presentation(&s, &Presentation::default(), 60).unwrap());
        assert_eq!(
            verify_presentation(&s, &p, 30),
            Err(Error::BoundTooSmall {
                bound: 30,
                required: 59
            })
        );
    }

    #[test]
    fn complete_intersection_cardinality() {
        assert!(is_complete_intersection_cardinality(&ns(&[2, 3])).unwrap());
        assert!(is_complete_intersection_cardinality(&ns(&[4, 6, 21])).unwrap());
        assert!(!is_complete_intersection_cardinality(&ns(&[3, 4, 5])).unwrap());
    }

    #[test]
    fn affine_truncated_betti() {
        let s1 =
            AffineSemigroup::from_generators(2, &[vec![2, 0], vec![0, 3], vec![2, 1]]).unwrap();
        assert_eq!(affine_betti_up_to(&s1, 12).unwrap(), vec![vec![6, 3]]);
        assert_eq!(
            affine_betti_up_to(&paper_affine(), 12).unwrap(),
            vec![vec![2, 4], vec![6, 3]]
        );
        let free = AffineSemigroup::from_generators(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(affine_betti_up_to(&free, 30).unwrap().is_empty());
    }

    #[test]
    fn affine_presentation_pairs() {
        let s = paper_affine();
        let betti = affine_betti_up_to(&s, 12).unwrap();
        let p = presentation_from_betti(s.generators(), &betti, Topology::Star).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(exps(&p.pairs()[0].left), vec![0, 1, 1, 0]);
        assert_eq!(exps(&p.pairs()[0].right), vec![0, 0, 0, 2]);
        assert_eq!(exps(&p.pairs()[1].left), vec![3, 1, 0, 0]);
        assert_eq!(exps(&p.pairs()[1].right), vec![0, 0, 3, 0]);
        assert!(p.pairs().iter().all(|x| x.indispensable));
        let window = affine_elements_up_to(&s, 20).unwrap();
        assert!(connects_fibers(s.generators(), &p, window).unwrap());
    }
}
