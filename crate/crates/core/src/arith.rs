use crate::error::{Error, Result};

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::ArithmeticOverflow)
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::ArithmeticOverflow)
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::ArithmeticOverflow)
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}

pub(crate) fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0, |g, &v| gcd(g, v))
}

/// `Σ coeffs[i] * rows[i]`, checked.
pub(crate) fn combine(
    rows: &[alloc::vec::Vec<i64>],
    coeffs: &[i64],
    dim: usize,
) -> Result<alloc::vec::Vec<i64>> {
    let mut out = alloc::vec![0i64; dim];
    for (row, &c) in rows.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(row) {
            *o = add(*o, mul(c, x)?)?;
        }
    }
    Ok(out)
}
