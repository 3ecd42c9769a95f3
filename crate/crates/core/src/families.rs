//! Closed forms for classical families of numerical semigroups: intervals
//! `⟨a, …, a+x⟩`, symmetric semigroups of embedding dimension three,
//! maximal embedding dimension, and the telescopic doubling sequence.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::error::{Error, Result};
use crate::factorizations::Factorization;
use crate::numerical::NumericalSemigroup;
use crate::presentations::{Presentation, PresentationPair};

/// `⟨a, a+1, …, a+x⟩` with `a ≥ 2`, `1 ≤ x < a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntervalParams {
    a: i64,
    x: i64,
}

impl IntervalParams {
    pub fn new(a: i64, x: i64) -> Result<Self> {
        if a < 2 {
            return Err(Error::InvalidParams("interval start must be at least 2"));
        }
        if x < 1 || x >= a {
            return Err(Error::InvalidParams(
                "interval length must satisfy 1 <= x < a",
            ));
        }
        Ok(Self { a, x })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn x(&self) -> i64 {
        self.x
    }

    /// Quotient of `a - 1` by `x`.
    pub fn q(&self) -> i64 {
        (self.a - 1) / self.x
    }

    /// Remainder of `a - 1` by `x`.
    pub fn r(&self) -> i64 {
        (self.a - 1) % self.x
    }
}

pub fn interval_semigroup(p: IntervalParams) -> Result<NumericalSemigroup> {
    let end = arith::add(p.a, p.x)?;
    let gens: Vec<i64> = (p.a..=end).collect();
    NumericalSemigroup::from_generators(&gens)
}

/// `x ∈ {1, 2}`, or `x = 3` with `(a - 1) mod 3 ≠ 0`.
pub fn interval_uniquely_presented(p: IntervalParams) -> bool {
    match p.x {
        1 | 2 => true,
        3 => (p.a - 1) % 3 != 0,
        _ => false,
    }
}

/// Betti elements of an interval semigroup, or a subset of them when
/// `lower_bound_only` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalBetti {
    pub elements: Vec<i64>,
    pub lower_bound_only: bool,
}

/// Closed-form Betti set for `x ∈ {2, 3}`.
///
/// With `p = q + 1` the large Betti elements are `p·a + x(p - 1) + j`:
/// `j ∈ {1, 2}` for `x = 2, r = 0`; `j = 2` for `x = 2, r = 1`; `j ∈ {2, 3}`
/// for `x = 3, r = 1`; `j = 3` for `x = 3, r = 2`. For `x = 3` the sums
/// `2(a+1), 2a+3, 2(a+2)` are Betti as well, and for `x = 2` only `2(a+1)`.
/// The case `x = 3, r = 0` only yields `2(a+1)` and `(q+1)(a+3)`.
pub fn interval_betti_closed_form(p: IntervalParams) -> Result<IntervalBetti> {
    let (a, x, q, r) = (p.a, p.x, p.q(), p.r());
    let big = |j: i64| -> Result<i64> {
        let k = q + 1;
        arith::add(arith::add(arith::mul(k, a)?, arith::mul(x, k - 1)?)?, j)
    };
    let two_a1 = arith::mul(2, a + 1)?;
    let mut elements = match (x, r) {
        (2, 0) => vec![two_a1, big(1)?, big(2)?],
        (2, _) => vec![two_a1, big(2)?],
        (3, 0) => {
            let top = arith::mul(q + 1, a + 3)?;
            return Ok(IntervalBetti {
                elements: sorted(vec![two_a1, top]),
                lower_bound_only: true,
            });
        }
        (3, 1) => vec![two_a1, 2 * a + 3, 2 * (a + 2), big(2)?, big(3)?],
        (3, _) => vec![two_a1, 2 * a + 3, 2 * (a + 2), big(3)?],
        _ => return Err(Error::UnsupportedX { x }),
    };
    elements = sorted(elements);
    Ok(IntervalBetti {
        elements,
        lower_bound_only: false,
    })
}

fn sorted(v: Vec<i64>) -> Vec<i64> {
    let set: BTreeSet<i64> = v.into_iter().collect();
    set.into_iter().collect()
}

/// `S = ⟨a·m1, a·m2, b·m1 + c·m2⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ed3SymmetricParams {
    pub m1: i64,
    pub m2: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Ed3SymmetricParams {
    pub fn new(m1: i64, m2: i64, a: i64, b: i64, c: i64) -> Self {
        Self { m1, m2, a, b, c }
    }

    fn check_ranges(&self) -> Result<()> {
        if self.m1 <= 1 || self.m2 <= 1 {
            return Err(Error::InvalidParams("m1 and m2 must exceed 1"));
        }
        if arith::gcd(self.m1, self.m2) != 1 {
            return Err(Error::InvalidParams("m1 and m2 must be coprime"));
        }
        if self.a < 2 {
            return Err(Error::InvalidParams("a must be at least 2"));
        }
        if self.b < 0 || self.c < 0 || self.b + self.c < 2 {
            return Err(Error::InvalidParams(
                "b, c must be nonnegative with b + c >= 2",
            ));
        }
        Ok(())
    }

    /// `b·m1 + c·m2`.
    pub fn third_generator(&self) -> Result<i64> {
        arith::add(arith::mul(self.b, self.m1)?, arith::mul(self.c, self.m2)?)
    }

    pub fn generators(&self) -> Result<[i64; 3]> {
        Ok([
            arith::mul(self.a, self.m1)?,
            arith::mul(self.a, self.m2)?,
            self.third_generator()?,
        ])
    }

    pub fn validate(&self) -> Result<()> {
        self.check_ranges()?;
        if arith::gcd(self.a, self.third_generator()?) != 1 {
            return Err(Error::InvalidParams("gcd(a, b*m1 + c*m2) must be 1"));
        }
        Ok(())
    }
}

/// Builds the semigroup and checks that it really is symmetric with three
/// minimal generators.
pub fn ed3_symmetric(p: Ed3SymmetricParams) -> Result<NumericalSemigroup> {
    p.check_ranges()?;
    let gens = p.generators()?;
    if gens[0] == gens[2] || gens[1] == gens[2] {
        return Err(Error::NotEmbeddingDimension3);
    }
    p.validate()?;
    let s = NumericalSemigroup::from_generators(&gens)?;
    if s.embedding_dimension() != 3 {
        return Err(Error::NotEmbeddingDimension3);
    }
    if !s.is_symmetric() {
        return Err(Error::InvalidParams(
            "constructed semigroup is not symmetric",
        ));
    }
    Ok(s)
}

/// `0 < b < m2` and `0 < c < m1`.
pub fn ed3_symmetric_uniquely_presented(p: Ed3SymmetricParams) -> Result<bool> {
    p.validate()?;
    Ok(0 < p.b && p.b < p.m2 && 0 < p.c && p.c < p.m1)
}

/// `{a·m1·m2, a·(b·m1 + c·m2)}`, sorted.
pub fn ed3_symmetric_betti(p: Ed3SymmetricParams) -> Result<Vec<i64>> {
    p.validate()?;
    let first = arith::mul(arith::mul(p.a, p.m1)?, p.m2)?;
    let second = arith::mul(p.a, p.third_generator()?)?;
    Ok(sorted(vec![first, second]))
}

fn med_scope(s: &NumericalSemigroup) -> Result<()> {
    if !s.is_med() {
        return Err(Error::NotMed);
    }
    if s.multiplicity() < 3 {
        return Err(Error::NotInTheoremScope("multiplicity below 3"));
    }
    Ok(())
}

/// For maximal embedding dimension: uniquely presented iff the
/// multiplicity is 3.
pub fn med_uniquely_presented(s: &NumericalSemigroup) -> Result<bool> {
    med_scope(s)?;
    Ok(s.multiplicity() == 3)
}

/// `{a_i + a_j : 2 ≤ i ≤ j ≤ r}` for maximal embedding dimension.
pub fn med_betti_closed_form(s: &NumericalSemigroup) -> Result<Vec<i64>> {
    med_scope(s)?;
    let rest = &s.minimal_generators()[1..];
    let mut out = BTreeSet::new();
    for (i, &x) in rest.iter().enumerate() {
        for &y in &rest[i..] {
            out.insert(arith::add(x, y)?);
        }
    }
    Ok(out.into_iter().collect())
}

/// One term of the doubling sequence `S_1 = ⟨2, 3⟩`,
/// `S_{i+1} = ⟨2a_1, a_1 + a_2, 2a_2, …, 2a_{i+1}⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TelescopicStep {
    pub index: usize,
    pub semigroup: NumericalSemigroup,
    /// `{2a_1 + 2a_2, 2(2a_2), …, 2(2a_{i+1})}` over the previous term's
    /// generators (`{6}` for `S_1`).
    pub predicted_betti: Vec<i64>,
    /// The previous term's presentation (doubled, reindexed) plus the
    /// gluing relation `(e_1 + e_3, 2e_2)`; every pair indispensable.
    pub predicted_presentation: Presentation,
}

pub fn telescopic_sequence(i: usize) -> Result<TelescopicStep> {
    if i == 0 {
        return Err(Error::InvalidParams("sequence index starts at 1"));
    }
    let mut gens = vec![2i64, 3];
    let mut betti = vec![6i64];
    let mut pairs = vec![pair(vec![6], vec![3, 0], vec![0, 2])];
    for _ in 1..i {
        let (a1, a2) = (gens[0], gens[1]);
        let d = arith::mul(2, arith::add(a1, a2)?)?;
        let mut next = vec![arith::mul(2, a1)?, arith::add(a1, a2)?];
        for &g in &gens[1..] {
            next.push(arith::mul(2, g)?);
        }

        let mut next_betti = vec![d];
        for &g in &gens[1..] {
            next_betti.push(arith::mul(4, g)?);
        }

        // The new generator a_1 + a_2 is inserted at position 1.
        let widen = |f: &Factorization| {
            let e = f.exponents();
            let mut out = vec![e[0], 0];
            out.extend_from_slice(&e[1..]);
            out
        };
        let mut next_pairs: Vec<PresentationPair> = pairs
            .iter()
            .map(|p| {
                pair(
                    vec![arith::mul(2, p.element[0]).unwrap_or(i64::MAX)],
                    widen(&p.left),
                    widen(&p.right),
                )
            })
            .collect();
        let mut glue_left = vec![0i64; next.len()];
        glue_left[0] = 1;
        glue_left[2] = 1;
        let mut glue_right = vec![0i64; next.len()];
        glue_right[1] = 2;
        next_pairs.insert(0, pair(vec![d], glue_left, glue_right));

        gens = next;
        betti = next_betti;
        pairs = next_pairs;
    }
    pairs.sort_by(|x, y| x.element.cmp(&y.element));
    let semigroup = NumericalSemigroup::from_generators(&gens)?;
    Ok(TelescopicStep {
        index: i,
        semigroup,
        predicted_betti: sorted(betti),
        predicted_presentation: Presentation::new(pairs),
    })
}

fn pair(element: Vec<i64>, a: Vec<i64>, b: Vec<i64>) -> PresentationPair {
    let mut p = PresentationPair::new(
        element,
        Factorization::from_exponents(a),
        Factorization::from_exponents(b),
    );
    p.indispensable = true;
    p
}
