//! Integer lattices in Hermite normal form.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::arith;
use crate::error::{Error, Result};

/// Sublattice of `Z^d` held by a Hermite normal form basis: rows in echelon
/// form with strictly increasing pivot columns, positive pivots, and the
/// entries above each pivot reduced into `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    dimension: usize,
    basis: Vec<Vec<i64>>,
}

fn sub_multiple(target: &mut [i64], row: &[i64], q: i64) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    for (t, &r) in target.iter_mut().zip(row) {
        *t = arith::sub(*t, arith::mul(q, r)?)?;
    }
    Ok(())
}

/// Unimodular row reduction of `rows`, pivoting only on the first
/// `pivot_cols` columns. Returns the number of nonzero leading rows; the
/// remaining rows are zero on the pivot columns.
fn echelonize(rows: &mut [Vec<i64>], pivot_cols: usize) -> Result<usize> {
    let n = rows.len();
    let mut rank = 0;
    for col in 0..pivot_cols {
        if rank == n {
            break;
        }
        loop {
            // Smallest nonzero entry in this column becomes the pivot.
            let best = (rank..n)
                .filter(|&i| rows[i][col] != 0)
                .min_by_key(|&i| rows[i][col].unsigned_abs());
            let Some(best) = best else { break };
            rows.swap(rank, best);
            let mut done = true;
            for i in (rank + 1)..n {
                if rows[i][col] != 0 {
                    let q = Integer::div_floor(&rows[i][col], &rows[rank][col]);
                    let pivot_row = rows[rank].clone();
                    sub_multiple(&mut rows[i], &pivot_row, q)?;
                    if rows[i][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if rows[rank][col] == 0 {
            continue;
        }
        if rows[rank][col] < 0 {
            for x in rows[rank].iter_mut() {
                *x = x.checked_neg().ok_or(Error::ArithmeticOverflow)?;
            }
        }
        let pivot_row = rows[rank].clone();
        for row in rows[..rank].iter_mut() {
            let q = Integer::div_floor(&row[col], &pivot_row[col]);
            sub_multiple(row, &pivot_row, q)?;
        }
        rank += 1;
    }
    Ok(rank)
}

/// Hermite normal form of the lattice spanned by `rows` in `Z^dimension`.
pub fn hnf(rows: &[Vec<i64>], dimension: usize) -> Result<IntegerLattice> {
    for r in rows {
        if r.len() != dimension {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                found: r.len(),
            });
        }
    }
    let mut m: Vec<Vec<i64>> = rows
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .cloned()
        .collect();
    let rank = echelonize(&mut m, dimension)?;
    m.truncate(rank);
    Ok(IntegerLattice {
        dimension,
        basis: m,
    })
}

impl IntegerLattice {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Solves `v = Σ c_i·basis_i` over the integers.
    pub fn contains(&self, v: &[i64]) -> bool {
        if v.len() != self.dimension {
            return false;
        }
        let mut rest = v.to_vec();
        for row in &self.basis {
            let p = row
                .iter()
                .position(|&x| x != 0)
                .expect("basis rows are nonzero");
            if rest[p] % row[p] != 0 {
                return false;
            }
            let q = rest[p] / row[p];
            if sub_multiple(&mut rest, row, q).is_err() {
                return false;
            }
        }
        rest.iter().all(|&x| x == 0)
    }

    /// `{x : x ∈ self and x ∈ other}`, via the integer left kernel of the
    /// stacked bases `[B1; -B2]`.
    pub fn intersection(&self, other: &IntegerLattice) -> Result<IntegerLattice> {
        if self.dimension != other.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found: other.dimension,
            });
        }
        let d = self.dimension;
        let (k1, k2) = (self.rank(), other.rank());
        let width = d + k1 + k2;
        let mut rows = Vec::with_capacity(k1 + k2);
        for (i, b) in self.basis.iter().enumerate() {
            let mut row = vec![0i64; width];
            row[..d].copy_from_slice(b);
            row[d + i] = 1;
            rows.push(row);
        }
        for (j, b) in other.basis.iter().enumerate() {
            let mut row = vec![0i64; width];
            for (x, &y) in row[..d].iter_mut().zip(b) {
                *x = -y;
            }
            row[d + k1 + j] = 1;
            rows.push(row);
        }
        let rank = echelonize(&mut rows, d)?;
        let mut generators = Vec::new();
        for row in &rows[rank..] {
            generators.push(arith::combine(&self.basis, &row[d..d + k1], d)?);
        }
        hnf(&generators, d)
    }
}
