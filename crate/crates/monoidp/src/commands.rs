use std::io::Read;

use serde_json::{json, Value};

use monoidp_core::factorizations::{enumerate_factorizations, r_classes, FactorizationSet};
use monoidp_core::families::{
    ed3_symmetric, ed3_symmetric_betti, ed3_symmetric_uniquely_presented,
    interval_betti_closed_form, interval_semigroup, interval_uniquely_presented,
    med_betti_closed_form, med_uniquely_presented, telescopic_sequence, Ed3SymmetricParams,
    IntervalParams,
};
use monoidp_core::gluing::{
    analyze_by_gluing, betti_via_gluing, check_gluing, find_gluings, glue_numerical,
    uniquely_presented_via_gluing, GluingDecomposition, PartReport,
};
use monoidp_core::presentations::{
    affine_betti_up_to, affine_elements_up_to, betti_elements, connects_fibers,
    is_uniquely_presented, presentation_from_betti, verify_presentation, Topology,
};
use monoidp_core::{AffineSemigroup, Error, NumericalSemigroup};

use crate::cli::{Cli, Command, Family, MonoidArgs, TopologyArg};
use crate::error::{CliError, CliResult};
use crate::output::{
    self, elements, pair_line, presentation_json, sorted_pairs, tuple, yes_no, Output,
};
use crate::parallel;
use crate::parse::{self, Monoid};

fn echo(m: &Monoid) -> Value {
    match m {
        Monoid::Numerical(s) => json!(s.minimal_generators()),
        Monoid::Affine(a) => json!(a.generators()),
    }
}

/// Betti elements, and whether they only cover the given bound.
fn betti(m: &Monoid, bound: Option<i64>) -> CliResult<(Vec<Vec<i64>>, bool)> {
    match m {
        Monoid::Numerical(s) => Ok((
            betti_elements(s)?.into_iter().map(|b| vec![b]).collect(),
            false,
        )),
        Monoid::Affine(a) => {
            let exact = match analyze_by_gluing(a) {
                Ok(found) => found,
                Err(Error::TooManyGenerators { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            if let Some(analysis) = exact {
                return Ok((analysis.betti, false));
            }
            let bound = bound.ok_or_else(|| {
                CliError::Usage(
                    "this affine semigroup does not split into gluings of free pieces; \
                     pass --bound to scan up to a degree"
                        .into(),
                )
            })?;
            Ok((affine_betti_up_to(a, bound)?, true))
        }
    }
}

fn load(args: &MonoidArgs) -> CliResult<(Monoid, Value)> {
    let m = parse::monoid(&args.gens)?;
    let input = json!({ "generators": echo(&m), "bound": args.bound });
    Ok((m, input))
}

fn fibers(m: &Monoid, betti: &[Vec<i64>]) -> CliResult<Vec<FactorizationSet>> {
    let atoms = m.atoms();
    betti
        .iter()
        .map(|b| Ok(enumerate_factorizations(&atoms, b)?))
        .collect()
}

fn topology(t: TopologyArg) -> Topology {
    match t {
        TopologyArg::Star => Topology::Star,
        TopologyArg::Path => Topology::Path,
    }
}

pub fn run(cli: &Cli, stdin: &mut dyn Read) -> CliResult<Output> {
    match &cli.command {
        Command::Betti(args) => {
            let (m, input) = load(args)?;
            let (b, truncated) = betti(&m, args.bound)?;
            let mut out = Output::new("betti", input);
            out.line(elements(&b));
            out.envelope.result = json!({ "betti": b });
            out.envelope.truncated = truncated;
            Ok(out)
        }
        Command::BettiMinimal(args) => {
            let (m, input) = load(args)?;
            let (b, truncated) = betti(&m, args.bound)?;
            let minimal: Vec<Vec<i64>> = b
                .iter()
                .filter(|x| {
                    b.iter().all(|y| {
                        y == *x || {
                            let diff: Vec<i64> = x.iter().zip(y).map(|(p, q)| p - q).collect();
                            !m.contains(&diff)
                        }
                    })
                })
                .cloned()
                .collect();
            let mut out = Output::new("betti-minimal", input);
            out.line(elements(&minimal));
            out.envelope.result = json!({ "betti_minimal": minimal });
            out.envelope.truncated = truncated;
            Ok(out)
        }
        Command::Factorizations { gens, element } => {
            let m = parse::monoid(gens)?;
            let e = parse::element(&m, element)?;
            let fs = enumerate_factorizations(&m.atoms(), &e)?;
            let list: Vec<&[i64]> = fs.iter().map(|f| f.exponents()).collect();
            let mut out = Output::new(
                "factorizations",
                json!({ "generators": echo(&m), "element": e }),
            );
            for f in &list {
                out.line(tuple(f));
            }
            out.envelope.result = json!({ "count": list.len(), "factorizations": list });
            Ok(out)
        }
        Command::Rclasses { gens, element } => {
            let m = parse::monoid(gens)?;
            let e = parse::element(&m, element)?;
            let fs = enumerate_factorizations(&m.atoms(), &e)?;
            let part = r_classes(&fs);
            let classes: Vec<Vec<&[i64]>> = part
                .classes()
                .iter()
                .map(|c| {
                    c.members()
                        .iter()
                        .map(|&i| fs.factorizations()[i].exponents())
                        .collect()
                })
                .collect();
            let mut out = Output::new("rclasses", json!({ "generators": echo(&m), "element": e }));
            for c in &classes {
                out.line(c.iter().map(|f| tuple(f)).collect::<Vec<_>>().join(" "));
            }
            out.envelope.result = json!({ "count": classes.len(), "classes": classes });
            Ok(out)
        }
        Command::Minpres {
            monoid,
            topology: t,
        } => {
            let (m, mut input) = load(monoid)?;
            input["topology"] = json!(format!("{t:?}").to_lowercase());
            let (b, truncated) = betti(&m, monoid.bound)?;
            let pres = presentation_from_betti(&m.atoms(), &b, topology(*t))?;
            let mut out = Output::new("minpres", input);
            for p in sorted_pairs(&pres) {
                out.line(pair_line(p));
            }
            out.envelope.result = presentation_json(&pres);
            out.envelope.truncated = truncated;
            Ok(out)
        }
        Command::Unique(args) => {
            let (m, input) = load(args)?;
            let mut out = Output::new("unique", input);
            let (answer, witness) = match &m {
                Monoid::Numerical(s) => {
                    let u = is_uniquely_presented(s)?;
                    (
                        u.answer,
                        u.witness.map(|w| (w.element, w.factorization_count)),
                    )
                }
                Monoid::Affine(_) => {
                    let (b, truncated) = betti(&m, args.bound)?;
                    out.envelope.truncated = truncated;
                    let witness = fibers(&m, &b)?
                        .into_iter()
                        .find(|fs| fs.len() != 2)
                        .map(|fs| (fs.element().to_vec(), fs.len()));
                    (witness.is_none(), witness)
                }
            };
            match &witness {
                None => out.line("yes"),
                Some((e, n)) => out.line(format!(
                    "no (witness: {} has {n} factorizations)",
                    output::element(e)
                )),
            }
            out.envelope.result = json!({
                "uniquely_presented": answer,
                "witness": witness.map(|(e, n)| json!({ "element": e, "factorizations": n })),
            });
            Ok(out)
        }
        Command::Indispensable(args) => {
            let (m, input) = load(args)?;
            let (b, truncated) = betti(&m, args.bound)?;
            let pres = presentation_from_betti(&m.atoms(), &b, Topology::Star)?;
            let kept: Vec<_> = sorted_pairs(&pres)
                .into_iter()
                .filter(|p| p.indispensable)
                .collect();
            let mut out = Output::new("indispensable", input);
            for p in &kept {
                out.line(pair_line(p));
            }
            out.envelope.result =
                json!({ "pairs": kept.iter().map(|p| output::pair_json(p)).collect::<Vec<_>>() });
            out.envelope.truncated = truncated;
            Ok(out)
        }
        Command::Verify {
            gens,
            bound,
            presentation,
        } => {
            let m = parse::monoid(gens)?;
            let mut text = String::new();
            match presentation.as_deref() {
                None | Some("-") => {
                    stdin.read_to_string(&mut text)?;
                }
                Some(path) => text = std::fs::read_to_string(path)?,
            }
            let pres = parse::presentation(&m, &text)?;
            let (ok, truncated) = match &m {
                Monoid::Numerical(s) => (verify_presentation(s, &pres, *bound)?, false),
                Monoid::Affine(a) => {
                    let elems = affine_elements_up_to(a, *bound)?;
                    (connects_fibers(a.generators(), &pres, elems)?, true)
                }
            };
            let mut out = Output::new(
                "verify",
                json!({ "generators": echo(&m), "bound": bound, "pairs": pres.len() }),
            );
            out.line(ok.to_string());
            out.envelope.result = json!({ "valid": ok });
            out.envelope.truncated = truncated;
            Ok(out)
        }
        Command::Enum {
            frobenius,
            count,
            unique,
            list,
        } => {
            if *frobenius < 1 {
                return Err(CliError::Usage("--frobenius must be at least 1".into()));
            }
            let threads = parallel::thread_count()?;
            let found = parallel::semigroups_with_frobenius(*frobenius, threads, *unique)?;
            let up = found.iter().filter(|x| x.1 == Some(true)).count();
            let mut out = Output::new(
                "enum",
                json!({ "frobenius": frobenius, "count": count, "unique": unique, "list": list }),
            );
            if *count || !*list {
                out.line(if *unique {
                    format!("{} {up}", found.len())
                } else {
                    found.len().to_string()
                });
            }
            let mut result = json!({ "count": found.len() });
            if *unique {
                result["uniquely_presented"] = json!(up);
            }
            if *list {
                let mut rows = Vec::new();
                for (s, flag) in &found {
                    let gens = s.minimal_generators();
                    let joined = gens
                        .iter()
                        .map(i64::to_string)
                        .collect::<Vec<_>>()
                        .join(",");
                    match flag {
                        Some(b) => out.line(format!("{joined} {}", yes_no(*b))),
                        None => out.line(joined),
                    }
                    rows.push(match flag {
                        Some(b) => json!({ "generators": gens, "uniquely_presented": b }),
                        None => json!({ "generators": gens }),
                    });
                }
                result["semigroups"] = json!(rows);
            }
            out.envelope.result = result;
            Ok(out)
        }
        Command::GlueCheck { gens, part } => {
            let a = affine(gens)?;
            let part = parse::indices(part)?;
            let g = check_gluing(&a, &part)?;
            let mut out = Output::new(
                "glue-check",
                json!({ "generators": a.generators(), "part": output::one_based(&part) }),
            );
            match &g {
                Some(g) => {
                    out.line(format!("gluing at d = {}", output::element(&g.d)));
                    out.line(format!(
                        "part 1 {} u = {}",
                        output::index_set(&g.part1),
                        tuple(g.u.exponents())
                    ));
                    out.line(format!(
                        "part 2 {} v = {}",
                        output::index_set(&g.part2),
                        tuple(g.v.exponents())
                    ));
                }
                None => out.line("not a gluing"),
            }
            out.envelope.result = json!({ "gluing": g.as_ref().map(gluing_json) });
            Ok(out)
        }
        Command::GlueFind { gens } => {
            let a = affine(gens)?;
            let found = find_gluings(&a)?;
            let mut out = Output::new("glue-find", json!({ "generators": a.generators() }));
            for g in &found {
                out.line(format!(
                    "{} | {} d = {}",
                    output::index_set(&g.part1),
                    output::index_set(&g.part2),
                    output::element(&g.d)
                ));
            }
            out.envelope.result =
                json!({ "gluings": found.iter().map(gluing_json).collect::<Vec<_>>() });
            Ok(out)
        }
        Command::GlueNum { gens, lambda, mu } => {
            let s1 = parse::numerical(gens)?;
            let g = glue_numerical(&s1, *lambda, *mu)?;
            let b1: Vec<Vec<i64>> = betti_elements(&s1)?
                .into_iter()
                .map(|b| {
                    b.checked_mul(*lambda)
                        .map(|x| vec![x])
                        .ok_or(Error::ArithmeticOverflow)
                })
                .collect::<Result<_, _>>()?;
            let part1 = PartReport {
                uniquely_presented: is_uniquely_presented(&s1)?.answer,
                betti: b1.clone(),
            };
            let part2 = PartReport {
                uniquely_presented: true,
                betti: Vec::new(),
            };
            let b = betti_via_gluing(&g.gluing, &b1, &[]);
            let up = uniquely_presented_via_gluing(&g.atoms, &g.gluing, &part1, &part2);
            let gens_out = g.semigroup.minimal_generators();
            let mut out = Output::new(
                "glue-num",
                json!({ "generators": s1.minimal_generators(), "lambda": lambda, "mu": mu }),
            );
            out.line(format!("semigroup {}", join(gens_out)));
            out.line(format!("d = {}", output::element(&g.gluing.d)));
            out.line(format!("betti {}", elements(&b)));
            out.line(format!("uniquely presented {}", yes_no(up)));
            out.envelope.result = json!({
                "generators": gens_out,
                "d": g.gluing.d,
                "betti": b,
                "uniquely_presented": up,
            });
            Ok(out)
        }
        Command::Family(f) => family(f),
        Command::Invariants { gens } => {
            let s = parse::numerical(gens)?;
            let inv = s.invariants();
            let mut out = Output::new(
                "invariants",
                json!({ "generators": s.minimal_generators() }),
            );
            out.line(format!("generators {}", join(s.minimal_generators())));
            out.line(format!("multiplicity {}", inv.multiplicity));
            out.line(format!("embedding dimension {}", inv.embedding_dimension));
            out.line(format!("frobenius {}", inv.frobenius));
            out.line(format!("genus {}", inv.genus));
            out.line(format!("symmetric {}", yes_no(s.is_symmetric())));
            out.envelope.result = json!({
                "generators": s.minimal_generators(),
                "multiplicity": inv.multiplicity,
                "embedding_dimension": inv.embedding_dimension,
                "frobenius": inv.frobenius,
                "genus": inv.genus,
                "symmetric": s.is_symmetric(),
                "med": s.is_med(),
            });
            Ok(out)
        }
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// Generators exactly as given (not reduced, gcd not required), so indices
/// refer to the list on the command line.
fn affine(gens: &str) -> CliResult<AffineSemigroup> {
    if gens.contains(';') || !gens.contains(',') && gens.trim().contains(char::is_whitespace) {
        let rows = parse::matrix(gens)?;
        let dim = rows.first().map_or(0, Vec::len);
        Ok(AffineSemigroup::from_generators(dim, &rows)?)
    } else {
        Ok(AffineSemigroup::from_scalars(&parse::integer_list(gens)?)?)
    }
}

fn gluing_json(g: &GluingDecomposition) -> Value {
    json!({
        "part1": output::one_based(&g.part1),
        "part2": output::one_based(&g.part2),
        "d": g.d,
        "u": g.u.exponents(),
        "v": g.v.exponents(),
    })
}

fn semigroup_lines(out: &mut Output, s: &NumericalSemigroup) {
    out.line(format!("semigroup {}", join(s.minimal_generators())));
}

fn family(f: &Family) -> CliResult<Output> {
    match f {
        Family::Interval { a, x } => {
            let p = IntervalParams::new(*a, *x)?;
            let s = interval_semigroup(p)?;
            let up = interval_uniquely_presented(p);
            let closed = match interval_betti_closed_form(p) {
                Ok(c) => Some(c),
                Err(Error::UnsupportedX { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let mut out = Output::new("family interval", json!({ "a": a, "x": x }));
            semigroup_lines(&mut out, &s);
            out.line(format!("uniquely presented {}", yes_no(up)));
            match &closed {
                Some(c) if c.lower_bound_only => out.line(format!(
                    "betti includes {}",
                    c.elements
                        .iter()
                        .map(i64::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                )),
                Some(c) => out.line(format!(
                    "betti {}",
                    c.elements
                        .iter()
                        .map(i64::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                )),
                None => out.line(format!("betti: no closed form for x = {x}")),
            }
            out.envelope.result = json!({
                "generators": s.minimal_generators(),
                "uniquely_presented": up,
                "betti": closed.as_ref().map(|c| c.elements.clone()),
                "betti_lower_bound_only": closed.as_ref().is_some_and(|c| c.lower_bound_only),
            });
            Ok(out)
        }
        Family::Ed3 { m1, m2, a, b, c } => {
            let p = Ed3SymmetricParams::new(*m1, *m2, *a, *b, *c);
            let s = ed3_symmetric(p)?;
            let up = ed3_symmetric_uniquely_presented(p)?;
            let betti = ed3_symmetric_betti(p)?;
            let mut out = Output::new(
                "family ed3",
                json!({ "m1": m1, "m2": m2, "a": a, "b": b, "c": c }),
            );
            semigroup_lines(&mut out, &s);
            out.line(format!("uniquely presented {}", yes_no(up)));
            out.line(format!(
                "betti {}",
                betti
                    .iter()
                    .map(i64::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            out.envelope.result = json!({
                "generators": s.minimal_generators(),
                "symmetric": true,
                "uniquely_presented": up,
                "betti": betti,
            });
            Ok(out)
        }
        Family::Med { gens } => {
            let s = parse::numerical(gens)?;
            let up = med_uniquely_presented(&s)?;
            let betti = med_betti_closed_form(&s)?;
            let mut out = Output::new(
                "family med",
                json!({ "generators": s.minimal_generators() }),
            );
            semigroup_lines(&mut out, &s);
            out.line(format!("uniquely presented {}", yes_no(up)));
            out.line(format!(
                "betti {}",
                betti
                    .iter()
                    .map(i64::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            out.envelope.result = json!({
                "generators": s.minimal_generators(),
                "uniquely_presented": up,
                "betti": betti,
            });
            Ok(out)
        }
        Family::Telescopic { i } => {
            let t = telescopic_sequence(*i)?;
            let mut out = Output::new("family telescopic", json!({ "i": i }));
            semigroup_lines(&mut out, &t.semigroup);
            out.line(format!(
                "betti {}",
                t.predicted_betti
                    .iter()
                    .map(i64::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            for p in sorted_pairs(&t.predicted_presentation) {
                out.line(pair_line(p));
            }
            out.envelope.result = json!({
                "generators": t.semigroup.minimal_generators(),
                "betti": t.predicted_betti,
                "presentation": presentation_json(&t.predicted_presentation),
            });
            Ok(out)
        }
    }
}
