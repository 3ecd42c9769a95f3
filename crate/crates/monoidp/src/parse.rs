//! Shell-friendly input formats.
//!
//! Numerical generators are comma separated (`4,6,21`). Affine generators
//! are `;`-separated vectors of space-separated coordinates
//! (`2 0;0 3;2 1;1 2`).

use monoidp_core::factorizations::Factorization;
use monoidp_core::presentations::{Presentation, PresentationPair};
use monoidp_core::{AffineSemigroup, NumericalSemigroup};
use serde_json::Value;

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug)]
pub enum Monoid {
    Numerical(NumericalSemigroup),
    Affine(AffineSemigroup),
}

impl Monoid {
    pub fn atoms(&self) -> Vec<Vec<i64>> {
        match self {
            Monoid::Numerical(s) => s.atoms(),
            Monoid::Affine(a) => a.generators().to_vec(),
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            Monoid::Numerical(_) => 1,
            Monoid::Affine(a) => a.dimension(),
        }
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        match self {
            Monoid::Numerical(s) => v.len() == 1 && s.contains(v[0]),
            Monoid::Affine(a) => a.contains(v),
        }
    }
}

fn int(tok: &str) -> CliResult<i64> {
    tok.trim()
        .parse()
        .map_err(|_| CliError::Parse(format!("not an integer: {tok:?}")))
}

pub fn integer_list(s: &str) -> CliResult<Vec<i64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(int)
        .collect()
}

pub fn vector(s: &str) -> CliResult<Vec<i64>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(int)
        .collect()
}

pub fn matrix(s: &str) -> CliResult<Vec<Vec<i64>>> {
    s.split(';')
        .filter(|r| !r.trim().is_empty())
        .map(vector)
        .collect()
}

fn is_affine(s: &str) -> bool {
    s.contains(';') || (!s.contains(',') && s.trim().contains(char::is_whitespace))
}

pub fn monoid(s: &str) -> CliResult<Monoid> {
    if is_affine(s) {
        let rows = matrix(s)?;
        let dim = rows.first().map_or(0, Vec::len);
        Ok(Monoid::Affine(
            AffineSemigroup::from_generators(dim, &rows)?.minimized(),
        ))
    } else {
        Ok(Monoid::Numerical(NumericalSemigroup::from_generators(
            &integer_list(s)?,
        )?))
    }
}

pub fn numerical(s: &str) -> CliResult<NumericalSemigroup> {
    match monoid(s)? {
        Monoid::Numerical(n) => Ok(n),
        Monoid::Affine(_) => Err(CliError::Usage("expected comma-separated integers".into())),
    }
}

/// An element in the monoid's ambient space: `42` or `6 3`.
pub fn element(m: &Monoid, s: &str) -> CliResult<Vec<i64>> {
    let v = vector(s)?;
    if v.len() != m.dimension() {
        return Err(CliError::Parse(format!(
            "element {s:?} has {} coordinates, expected {}",
            v.len(),
            m.dimension()
        )));
    }
    Ok(v)
}

/// 1-based generator indices such as `1,2,3`, returned 0-based.
pub fn indices(s: &str) -> CliResult<Vec<usize>> {
    integer_list(s)?
        .into_iter()
        .map(|i| {
            if i < 1 {
                Err(CliError::Parse(format!(
                    "generator indices start at 1, got {i}"
                )))
            } else {
                Ok((i - 1) as usize)
            }
        })
        .collect()
}

fn pair(
    atoms: &[Vec<i64>],
    element: Vec<i64>,
    left: Vec<i64>,
    right: Vec<i64>,
) -> CliResult<PresentationPair> {
    let left = Factorization::new(atoms, left, &element)?;
    let right = Factorization::new(atoms, right, &element)?;
    Ok(PresentationPair::new(element, left, right))
}

/// Reads a presentation in the text form printed by `minpres`
/// (`30: (5,0,0) = (0,0,2)`, one pair per line) or in its JSON form.
pub fn presentation(m: &Monoid, text: &str) -> CliResult<Presentation> {
    let atoms = m.atoms();
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return presentation_json(&atoms, serde_json::from_str(trimmed)?);
    }
    let mut pairs = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (elem, rest) = line
            .split_once(':')
            .ok_or_else(|| CliError::Parse(format!("missing ':' in {line:?}")))?;
        let (l, r) = rest
            .split_once('=')
            .ok_or_else(|| CliError::Parse(format!("missing '=' in {line:?}")))?;
        let r = r.split('[').next().unwrap_or("");
        pairs.push(pair(&atoms, element(m, elem)?, vector(l)?, vector(r)?)?);
    }
    Ok(Presentation::new(pairs))
}

fn ints(v: &Value) -> CliResult<Vec<i64>> {
    match v {
        Value::Number(n) => Ok(vec![n
            .as_i64()
            .ok_or_else(|| CliError::Parse(format!("not an integer: {n}")))?]),
        Value::Array(a) => a
            .iter()
            .map(|x| {
                x.as_i64()
                    .ok_or_else(|| CliError::Parse(format!("not an integer: {x}")))
            })
            .collect(),
        other => Err(CliError::Parse(format!("expected integers, got {other}"))),
    }
}

fn presentation_json(atoms: &[Vec<i64>], v: Value) -> CliResult<Presentation> {
    // Accept a whole envelope, its result object, or a bare pair list.
    let list = match &v {
        Value::Array(_) => &v,
        Value::Object(o) => o
            .get("result")
            .and_then(|r| r.get("pairs"))
            .or_else(|| o.get("pairs"))
            .ok_or_else(|| CliError::Parse("no \"pairs\" in JSON presentation".into()))?,
        _ => return Err(CliError::Parse("unexpected JSON presentation".into())),
    };
    let Value::Array(items) = list else {
        return Err(CliError::Parse("\"pairs\" must be a list".into()));
    };
    let field = |item: &Value, k: &str| -> CliResult<Vec<i64>> {
        ints(
            item.get(k)
                .ok_or_else(|| CliError::Parse(format!("pair without {k:?}")))?,
        )
    };
    let mut pairs = Vec::new();
    for item in items {
        pairs.push(pair(
            atoms,
            field(item, "element")?,
            field(item, "left")?,
            field(item, "right")?,
        )?);
    }
    Ok(Presentation::new(pairs))
}
