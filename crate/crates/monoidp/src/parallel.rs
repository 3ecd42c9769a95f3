//! Semigroup-tree enumeration spread over worker threads. The top of the
//! tree is expanded breadth-first into a frontier of independent subtrees;
//! workers pull subtrees from a shared counter. Results are merged and
//! sorted, so the output does not depend on scheduling.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use monoidp_core::enumeration::{walk_from, FrobeniusCounter, TreeNode};
use monoidp_core::presentations::is_uniquely_presented;
use monoidp_core::{NumericalSemigroup, Result};

use crate::error::{CliError, CliResult};

pub const THREADS_VAR: &str = "MONOIDP_THREADS";

/// Worker count from `MONOIDP_THREADS`, or the available parallelism.
pub fn thread_count() -> CliResult<usize> {
    match std::env::var(THREADS_VAR) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::Usage(format!(
                "{THREADS_VAR} must be a positive integer, got {v:?}"
            ))),
        },
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

/// Splits the tree below Frobenius `f_max` into the nodes handled
/// up front and a frontier of subtree roots.
fn split(f_max: i64, want: usize) -> Result<(Vec<NumericalSemigroup>, Vec<TreeNode>)> {
    let mut head = Vec::new();
    let mut frontier = vec![TreeNode::root()];
    while frontier.len() < want {
        let expandable = frontier
            .iter()
            .any(|n| n.semigroup.frobenius() < f_max && n.removable.iter().any(|&g| g <= f_max));
        if !expandable {
            break;
        }
        let mut next = Vec::new();
        for node in frontier {
            next.extend(node.children_up_to(f_max)?);
            head.push(node.semigroup);
        }
        frontier = next;
    }
    head.retain(|s| s.frobenius() >= 1 && s.frobenius() <= f_max);
    Ok((head, frontier))
}

fn run<T, W, M>(f_max: i64, threads: usize, make: M, mut work: W) -> Result<Vec<T>>
where
    T: Send,
    M: Fn() -> T + Sync,
    W: FnMut(&mut T, &NumericalSemigroup) -> Result<()> + Clone + Send,
{
    let (head, frontier) = split(f_max, threads.max(1) * 8)?;
    let mut first = make();
    for s in &head {
        work(&mut first, s)?;
    }
    let next = AtomicUsize::new(0);
    let results = Mutex::new(vec![first]);
    let failure: Mutex<Option<monoidp_core::Error>> = Mutex::new(None);
    std::thread::scope(|scope| {
        for _ in 0..threads.max(1) {
            let mut work = work.clone();
            let (next, frontier, results, failure, make) =
                (&next, &frontier, &results, &failure, &make);
            scope.spawn(move || {
                let mut acc = make();
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(node) = frontier.get(i) else { break };
                    if let Err(e) = walk_from(node, f_max, &mut |s| work(&mut acc, s)) {
                        failure.lock().unwrap().get_or_insert(e);
                        break;
                    }
                }
                results.lock().unwrap().push(acc);
            });
        }
    });
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    Ok(results.into_inner().unwrap())
}

/// Same answer as `count_by_frobenius`, computed on `threads` workers.
pub fn count_by_frobenius(f_max: i64, threads: usize) -> Result<(Vec<u64>, Vec<u64>)> {
    let parts = run(
        f_max,
        threads,
        || FrobeniusCounter::new(f_max),
        |c, s| c.record(s),
    )?;
    let mut total = FrobeniusCounter::new(f_max);
    for p in parts {
        total.merge(p);
    }
    Ok(total.finish())
}

/// Semigroups with Frobenius number `f`, sorted by generators, each with
/// its uniqueness flag when `with_uniqueness` is set.
pub fn semigroups_with_frobenius(
    f: i64,
    threads: usize,
    with_uniqueness: bool,
) -> Result<Vec<(NumericalSemigroup, Option<bool>)>> {
    let parts = run(
        f,
        threads,
        Vec::new,
        |acc: &mut Vec<_>, s: &NumericalSemigroup| {
            if s.frobenius() == f {
                let up = if with_uniqueness {
                    Some(is_uniquely_presented(s)?.answer)
                } else {
                    None
                };
                acc.push((s.clone(), up));
            }
            Ok(())
        },
    )?;
    let mut all: Vec<_> = parts.into_iter().flatten().collect();
    all.sort_by(|a, b| a.0.minimal_generators().cmp(b.0.minimal_generators()));
    Ok(all)
}
