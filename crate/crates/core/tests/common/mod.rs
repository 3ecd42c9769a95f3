//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library except to build inputs.

#![allow(dead_code)]

use monoidp_core::NumericalSemigroup;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// `table[n]` is true iff `n` is a nonnegative combination of `gens`.
pub fn membership_table(gens: &[i64], limit: i64) -> Vec<bool> {
    let mut t = vec![false; (limit + 1) as usize];
    t[0] = true;
    for n in 1..=limit {
        t[n as usize] = gens.iter().any(|&g| g <= n && t[(n - g) as usize]);
    }
    t
}

pub fn frobenius(gens: &[i64]) -> i64 {
    let m = *gens.iter().min().unwrap();
    let limit = gens.iter().max().unwrap() * m + m;
    let t = membership_table(gens, limit);
    (0..=limit).rev().find(|&n| !t[n as usize]).unwrap_or(-1)
}

/// Generators not expressible by the others.
pub fn minimal_generators(gens: &[i64]) -> Vec<i64> {
    let mut g: Vec<i64> = gens.to_vec();
    g.sort();
    g.dedup();
    let mut out = Vec::new();
    for &x in &g {
        let t = membership_table(&out, x);
        if !t[x as usize] {
            out.push(x);
        }
    }
    out
}

/// Every exponent vector `u` with `Σ u_i·atoms_i = target`, plain nested
/// recursion.
pub fn factorizations(atoms: &[i64], target: i64) -> Vec<Vec<i64>> {
    fn go(atoms: &[i64], i: usize, rest: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == atoms.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=rest / atoms[i] {
            cur.push(k);
            go(atoms, i + 1, rest - k * atoms[i], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if target >= 0 {
        go(atoms, 0, target, &mut Vec::new(), &mut out);
    }
    out
}

/// Component labels of the "share a generator" graph, by repeated
/// relabelling until stable.
pub fn r_class_labels(fs: &[Vec<i64>]) -> Vec<usize> {
    let mut label: Vec<usize> = (0..fs.len()).collect();
    loop {
        let mut changed = false;
        for i in 0..fs.len() {
            for j in 0..fs.len() {
                let share = fs[i].iter().zip(&fs[j]).any(|(&a, &b)| a > 0 && b > 0);
                if share && label[j] < label[i] {
                    label[i] = label[j];
                    changed = true;
                }
            }
        }
        if !changed {
            return label;
        }
    }
}

pub fn r_class_count(fs: &[Vec<i64>]) -> usize {
    let mut l = r_class_labels(fs);
    l.sort();
    l.dedup();
    l.len()
}

/// Elements `n ≤ limit` with at least two R-classes.
pub fn betti_scan(gens: &[i64], limit: i64) -> Vec<i64> {
    (1..=limit)
        .filter(|&n| r_class_count(&factorizations(gens, n)) >= 2)
        .collect()
}

/// A random numerical semigroup given by its minimal generators, with
/// `2 ≤ e ≤ max_e` and every generator at most `max_gen`.
pub fn random_semigroup(rng: &mut ChaCha8Rng, max_e: usize, max_gen: i64) -> Vec<i64> {
    loop {
        let e = rng.gen_range(2..=max_e);
        let gens: Vec<i64> = (0..e).map(|_| rng.gen_range(2..=max_gen)).collect();
        if gens.iter().fold(0, |g, &x| gcd(g, x)) != 1 {
            continue;
        }
        let min = minimal_generators(&gens);
        if min.len() >= 2 {
            return min;
        }
    }
}

pub fn ns(gens: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(gens).unwrap()
}

/// `(F, max generator)` from the oracle.
pub fn window(gens: &[i64]) -> (i64, i64) {
    (frobenius(gens), *gens.iter().max().unwrap())
}
