//! The semigroup tree: the root is `N`, and the children of `S` are the
//! semigroups `S ∖ {g}` for the minimal generators `g > F(S)`. Every
//! numerical semigroup appears exactly once. A child's Frobenius number is
//! the removed generator, hence strictly larger than its parent's, so a
//! search for Frobenius number `f` can stop descending at `F ≥ f`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Result;
use crate::numerical::NumericalSemigroup;
use crate::presentations::is_uniquely_presented;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub semigroup: NumericalSemigroup,
    /// Minimal generators strictly above the Frobenius number.
    pub removable: Vec<i64>,
}

impl TreeNode {
    pub fn new(semigroup: NumericalSemigroup) -> Self {
        let f = semigroup.frobenius();
        let removable = semigroup
            .minimal_generators()
            .iter()
            .copied()
            .filter(|&g| g > f)
            .collect();
        Self {
            semigroup,
            removable,
        }
    }

    pub fn root() -> Self {
        Self::new(NumericalSemigroup::naturals())
    }

    /// `S ∖ {g}`. Every integer above `g` stays in, so the new semigroup is
    /// generated by the old generators other than `g` and `g+1, …, 2g+1`.
    pub fn child(&self, g: i64) -> Result<TreeNode> {
        debug_assert!(self.removable.contains(&g));
        let mut gens: Vec<i64> = self
            .semigroup
            .minimal_generators()
            .iter()
            .copied()
            .filter(|&x| x != g)
            .collect();
        gens.extend((g + 1)..=(2 * g + 1));
        let child = NumericalSemigroup::from_generators(&gens)?;
        debug_assert_eq!(child.frobenius(), g);
        debug_assert!(child.frobenius() > self.semigroup.frobenius());
        Ok(TreeNode::new(child))
    }

    pub fn children(&self) -> Result<Vec<TreeNode>> {
        self.removable.iter().map(|&g| self.child(g)).collect()
    }

    /// Children whose Frobenius number is at most `f_max`.
    pub fn children_up_to(&self, f_max: i64) -> Result<Vec<TreeNode>> {
        self.removable
            .iter()
            .filter(|&&g| g <= f_max)
            .map(|&g| self.child(g))
            .collect()
    }
}

/// Depth-first walk of the subtree under `node`, calling `visit` on every
/// node with Frobenius number in `1..=f_max` (the node itself included).
pub fn walk_from<F>(node: &TreeNode, f_max: i64, visit: &mut F) -> Result<()>
where
    F: FnMut(&NumericalSemigroup) -> Result<()>,
{
    let mut stack = alloc::vec![node.clone()];
    while let Some(n) = stack.pop() {
        let f = n.semigroup.frobenius();
        if f >= 1 && f <= f_max {
            visit(&n.semigroup)?;
        }
        if f < f_max {
            stack.extend(n.children_up_to(f_max)?);
        }
    }
    Ok(())
}

/// All numerical semigroups with Frobenius number `f`, sorted by minimal
/// generator tuple.
pub fn semigroups_with_frobenius(f: i64) -> Result<Vec<NumericalSemigroup>> {
    let mut out = Vec::new();
    walk_from(&TreeNode::root(), f, &mut |s| {
        if s.frobenius() == f {
            out.push(s.clone());
        }
        Ok(())
    })?;
    out.sort_by(|a, b| a.minimal_generators().cmp(b.minimal_generators()));
    Ok(out)
}

/// Per Frobenius number `1..=f_max`: how many semigroups there are, and how
/// many of them are uniquely presented.
pub fn count_by_frobenius(f_max: i64) -> Result<(Vec<u64>, Vec<u64>)> {
    let mut counter = FrobeniusCounter::new(f_max);
    walk_from(&TreeNode::root(), f_max, &mut |s| counter.record(s))?;
    Ok(counter.finish())
}

/// Accumulates the two counts; split runs over disjoint subtrees can be
/// combined with [`FrobeniusCounter::merge`].
#[derive(Clone, Debug)]
pub struct FrobeniusCounter {
    totals: Vec<u64>,
    unique: Vec<u64>,
    memo: BTreeMap<Vec<i64>, bool>,
}

impl FrobeniusCounter {
    pub fn new(f_max: i64) -> Self {
        let n = f_max.max(0) as usize;
        Self {
            totals: alloc::vec![0; n],
            unique: alloc::vec![0; n],
            memo: BTreeMap::new(),
        }
    }

    pub fn record(&mut self, s: &NumericalSemigroup) -> Result<()> {
        let f = s.frobenius();
        if f < 1 || f as usize > self.totals.len() {
            return Ok(());
        }
        let key = s.minimal_generators().to_vec();
        let up = match self.memo.get(&key) {
            Some(&b) => b,
            None => {
                let b = is_uniquely_presented(s)?.answer;
                self.memo.insert(key, b);
                b
            }
        };
        let i = (f - 1) as usize;
        self.totals[i] += 1;
        if up {
            self.unique[i] += 1;
        }
        Ok(())
    }

    pub fn merge(&mut self, other: FrobeniusCounter) {
        for (a, b) in self.totals.iter_mut().zip(other.totals) {
            *a += b;
        }
        for (a, b) in self.unique.iter_mut().zip(other.unique) {
            *a += b;
        }
    }

    pub fn finish(self) -> (Vec<u64>, Vec<u64>) {
        (self.totals, self.unique)
    }
}
