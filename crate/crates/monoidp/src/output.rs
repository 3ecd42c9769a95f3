use serde::Serialize;
use serde_json::{json, Value};

use monoidp_core::presentations::{Presentation, PresentationPair};

/// The machine-readable document; one per invocation.
#[derive(Clone, Debug, Serialize)]
pub struct Envelope {
    pub command: String,
    pub input: Value,
    pub result: Value,
    pub truncated: bool,
}

/// Everything a command produces: the human-readable lines and the
/// envelope.
#[derive(Clone, Debug)]
pub struct Output {
    pub text: Vec<String>,
    pub envelope: Envelope,
}

impl Output {
    pub fn new(command: &str, input: Value) -> Self {
        Self {
            text: Vec::new(),
            envelope: Envelope {
                command: command.into(),
                input,
                result: Value::Null,
                truncated: false,
            },
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&self.envelope).expect("envelope serializes");
            s.push('\n');
            s
        } else {
            let mut s = String::new();
            for l in &self.text {
                s.push_str(l);
                s.push('\n');
            }
            s
        }
    }
}

pub fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

/// `30` for numerical elements, `(6,3)` otherwise.
pub fn element(v: &[i64]) -> String {
    if v.len() == 1 {
        v[0].to_string()
    } else {
        tuple(v)
    }
}

pub fn elements(vs: &[Vec<i64>]) -> String {
    vs.iter().map(|v| element(v)).collect::<Vec<_>>().join(" ")
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn pair_line(p: &PresentationPair) -> String {
    let mut s = format!(
        "{}: {} = {}",
        element(&p.element),
        tuple(p.left.exponents()),
        tuple(p.right.exponents())
    );
    if p.indispensable {
        s.push_str(" [indispensable]");
    }
    s
}

pub fn pair_json(p: &PresentationPair) -> Value {
    json!({
        "element": p.element,
        "left": p.left.exponents(),
        "right": p.right.exponents(),
        "indispensable": p.indispensable,
    })
}

/// Pairs sorted by element, then by the factorizations.
pub fn sorted_pairs(p: &Presentation) -> Vec<&PresentationPair> {
    let mut pairs: Vec<&PresentationPair> = p.pairs().iter().collect();
    pairs.sort_by(|a, b| (&a.element, &a.left, &a.right).cmp(&(&b.element, &b.left, &b.right)));
    pairs
}

pub fn presentation_json(p: &Presentation) -> Value {
    json!({ "pairs": sorted_pairs(p).into_iter().map(pair_json).collect::<Vec<_>>() })
}

/// 1-based index set `{1,2,3}`.
pub fn index_set(ix: &[usize]) -> String {
    let parts: Vec<String> = ix.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn one_based(ix: &[usize]) -> Vec<usize> {
    ix.iter().map(|i| i + 1).collect()
}
