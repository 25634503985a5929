//! Command-line front end: JSON in, JSON out, exact values only.
//!
//! Every document uses the same wire conventions: rationals are strings
//! like `"5"` or `"-3/4"`, the infinite element is `"inf"`, vectors are
//! arrays, matrices are arrays of arrays under a `"vectors"` key, and
//! Puiseux polynomials are arrays of `{"c": coefficient, "e": exponent}`
//! terms in ascending exponent order. Output keys are sorted and the
//! document is compact with a trailing newline, so identical jobs produce
//! identical bytes.
//!
//! Exit status: 0 for any computed answer (a negative or inconclusive
//! decision is an answer), 2 for I/O and input parse failures, 3 for
//! contract violations such as mismatched dimensions.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::corpus::{example_a0, example_countable_family, point_pj, CountableFamilySpec};
use crate::prevariety::{dimension, orthogonal_generators, prevariety_member};
use crate::puiseux::{PuiseuxPoly, PuiseuxVector};
use crate::rank::{is_tropically_singular, tropical_rank};
use crate::rat::{rational_to_string, ExtRat};
use crate::trop::{self, GeneratorSet, TropMatrix, TropVector};
use crate::variety::{
    decide_variety, lift_hull_point, plucker_coordinates, trop_generators_from_plucker,
    trop_space_member, Decision, SearchBudget,
};
use crate::{Error, Result};

/// One batch job: a subcommand plus the flags that make it reproducible.
#[derive(Parser, Clone, Debug, PartialEq, Eq)]
#[command(name = "troplin", version, about = "Exact min-plus linear algebra workbench")]
pub struct JobSpec {
    #[command(subcommand)]
    pub command: CommandName,
    /// Input JSON file; stdin when omitted.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Output file; stdout when omitted.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for the randomized lifting search in `decide`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Seeding rounds for the lifting search in `decide`.
    #[arg(long, global = true, default_value_t = 20)]
    pub budget_rounds: usize,
    /// Largest seed term count for the lifting search in `decide`.
    #[arg(long, global = true, default_value_t = 6)]
    pub budget_terms: usize,
    /// Which example to emit (`a0` or `countable`).
    #[arg(long, global = true)]
    pub name: Option<String>,
    /// Ambient dimension for `example --name a0`.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Family size for `example --name countable`.
    #[arg(long, global = true)]
    pub m: Option<usize>,
}

#[derive(Subcommand, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandName {
    /// Generators of the orthogonal prevariety of the input rows.
    Orth,
    /// Generators of the double orthogonal of the input rows.
    Dorth,
    /// Membership of a point, against rows (`"mode": "prevariety"`,
    /// the default) or against hull generators (`"mode": "hull"`).
    Member,
    /// Tropical rank of the input rows, plus singularity when square.
    Rank,
    /// Dimension of the hull of the input vectors.
    Dim,
    /// Decide whether the prevariety of the input rows is the valuation
    /// image of a linear subspace.
    Decide,
    /// Exact lift of a min-plus combination of Puiseux vectors.
    Lift,
    /// Minor valuations of a spanned subspace, its defining rows, and
    /// optional membership queries.
    Tropspace,
    /// Built-in example emitters.
    Example,
}

/// Runs one job end to end: reads the input (unless the command has none),
/// processes it, and writes the document. Returns the process exit status.
pub fn run_command(job: &JobSpec) -> i32 {
    let input = if matches!(job.command, CommandName::Example) {
        None
    } else {
        match read_input(job.input.as_deref()) {
            Ok(text) => Some(text),
            Err(e) => {
                eprintln!("error: {e}");
                return exit_code(&e);
            }
        }
    };
    match process(job, input.as_deref()) {
        Ok(doc) => match write_output(job.output.as_deref(), &doc) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                exit_code(&e)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Exit status class of an error: I/O and parse failures are 2, everything
/// else (contract violations) is 3.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Io(_) => 2,
        _ => 3,
    }
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Error::Io(format!("reading {}: {e}", p.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Io(format!("reading stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn write_output(path: Option<&Path>, doc: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, format!("{doc}\n"))
            .map_err(|e| Error::Io(format!("writing {}: {e}", p.display()))),
        None => {
            println!("{doc}");
            Ok(())
        }
    }
}

/// Computes the output document for a job; `input` is the raw input text
/// for the commands that take one.
pub(crate) fn process(job: &JobSpec, input: Option<&str>) -> Result<String> {
    let parsed = match input {
        Some(text) => Some(
            serde_json::from_str::<Value>(text).map_err(|e| Error::Parse(e.to_string()))?,
        ),
        None => None,
    };
    let need = |what: &str| -> Result<&Value> {
        parsed
            .as_ref()
            .ok_or_else(|| Error::Io(format!("the {what} command needs an input document")))
    };
    let doc = match job.command {
        CommandName::Orth => {
            let rows = matrix_field(need("orth")?)?;
            let gens = orthogonal_generators(&rows)?;
            json!({ "generators": rows_value(gens.gens()) })
        }
        CommandName::Dorth => {
            let rows = matrix_field(need("dorth")?)?;
            let first = orthogonal_generators(&rows)?;
            let gens = orthogonal_generators(&first.to_matrix())?;
            json!({ "generators": rows_value(gens.gens()) })
        }
        CommandName::Member => {
            let input = need("member")?;
            let rows = matrix_field(input)?;
            let point = trop_vector_from(field(input, "point")?)?;
            let mode = match opt_field(input, "mode") {
                None => "prevariety",
                Some(v) => v.as_str().ok_or_else(|| {
                    Error::Parse("\"mode\" must be \"prevariety\" or \"hull\"".into())
                })?,
            };
            match mode {
                "prevariety" => json!({ "member": prevariety_member(&rows, &point)? }),
                "hull" => {
                    let gens = GeneratorSet::from_matrix(&rows)?;
                    match gens.hull_member(&point)? {
                        Some(coeffs) => json!({
                            "coefficients": ext_slice_value(&coeffs),
                            "member": true,
                        }),
                        None => json!({ "member": false }),
                    }
                }
                other => {
                    return Err(Error::Parse(format!(
                        "unknown membership mode \"{other}\""
                    )))
                }
            }
        }
        CommandName::Rank => {
            let rows = matrix_field(need("rank")?)?;
            let mut doc = Map::new();
            doc.insert("rank".into(), json!(tropical_rank(&rows)));
            if rows.is_square() {
                doc.insert("singular".into(), json!(is_tropically_singular(&rows)?));
            }
            Value::Object(doc)
        }
        CommandName::Dim => {
            let rows = matrix_field(need("dim")?)?;
            let gens = GeneratorSet::from_matrix(&rows)?;
            json!({ "dimension": dimension(&gens) })
        }
        CommandName::Decide => {
            let rows = matrix_field(need("decide")?)?;
            let budget = SearchBudget {
                rounds: job.budget_rounds,
                max_terms: job.budget_terms,
            };
            match decide_variety(&rows, &budget, job.seed)? {
                Decision::NotVariety(obs) => json!({
                    "obstruction": {
                        "dim_perp": obs.dim_perp,
                        "dim_perp_perp": obs.dim_perp_perp,
                        "n": obs.ambient,
                    },
                    "status": "not_variety",
                }),
                Decision::Variety(cert) => {
                    let xs = orthogonal_generators(&rows)?;
                    let ys = orthogonal_generators(&xs.to_matrix())?;
                    json!({
                        "certificate": {
                            "p_basis": cert.p_basis(),
                            "q_basis": cert.q_basis(),
                            "v_lifts": pvec_slice_value(cert.v_lifts()),
                            "w_lifts": pvec_slice_value(cert.w_lifts()),
                        },
                        "perp_generators": rows_value(xs.gens()),
                        "perp_perp_generators": rows_value(ys.gens()),
                        "status": "variety",
                    })
                }
                Decision::Inconclusive(report) => {
                    let xs = orthogonal_generators(&rows)?;
                    let ys = orthogonal_generators(&xs.to_matrix())?;
                    json!({
                        "budget": {
                            "max_terms": report.max_terms,
                            "rounds": report.rounds,
                        },
                        "perp_generators": rows_value(xs.gens()),
                        "perp_perp_generators": rows_value(ys.gens()),
                        "status": "inconclusive",
                    })
                }
            }
        }
        CommandName::Lift => {
            let input = need("lift")?;
            let vectors = pvec_matrix_field(input)?;
            let coeffs = ext_slice_from(field(input, "coefficients")?)?;
            let target = match opt_field(input, "target") {
                Some(v) => trop_vector_from(v)?,
                None => {
                    let Some(first) = vectors.first() else {
                        return Err(Error::Shape(
                            "lifting needs at least one vector when no target is given".into(),
                        ));
                    };
                    let trop_rows: Vec<TropVector> =
                        vectors.iter().map(PuiseuxVector::tropicalize).collect();
                    trop::eval_rows(first.len(), &trop_rows, &coeffs)
                }
            };
            let lifted = lift_hull_point(&vectors, &coeffs, &target)?;
            json!({
                "lift": pvec_value(&lifted),
                "target": trop_vector_value(&target),
            })
        }
        CommandName::Tropspace => {
            let input = need("tropspace")?;
            let vectors = pvec_matrix_field(input)?;
            let plucker = plucker_coordinates(&vectors)?;
            let gens = trop_generators_from_plucker(&plucker);
            let mut valuations = Map::new();
            for (subset, val) in plucker.trop_coords() {
                let key = subset.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                valuations.insert(key, Value::String(val.to_string()));
            }
            let mut doc = Map::new();
            doc.insert("generators".into(), rows_value(gens.rows()));
            if let Some(points) = opt_field(input, "points") {
                let points = trop_rows_from(points)?;
                let members: Vec<Value> = points
                    .iter()
                    .map(|p| Ok(Value::Bool(trop_space_member(&plucker, p)?)))
                    .collect::<Result<_>>()?;
                doc.insert("members".into(), Value::Array(members));
            }
            doc.insert("valuations".into(), Value::Object(valuations));
            Value::Object(doc)
        }
        CommandName::Example => {
            let name = job
                .name
                .as_deref()
                .ok_or_else(|| Error::Domain("example needs --name (a0 or countable)".into()))?;
            match name {
                "a0" => {
                    let n = job.n.ok_or_else(|| {
                        Error::Domain("example --name a0 needs --n".into())
                    })?;
                    json!({ "vectors": rows_value(example_a0(n)?.rows()) })
                }
                "countable" => {
                    let m = job.m.ok_or_else(|| {
                        Error::Domain("example --name countable needs --m".into())
                    })?;
                    let spec = CountableFamilySpec::default_for(m);
                    let rows = example_countable_family(&spec)?;
                    let points: Vec<Value> = (1..=m)
                        .map(|j| Ok(trop_vector_value(&point_pj(j, &spec)?)))
                        .collect::<Result<_>>()?;
                    json!({
                        "points": points,
                        "vectors": rows_value(rows.rows()),
                    })
                }
                other => {
                    return Err(Error::Domain(format!(
                        "unknown example \"{other}\" (expected a0 or countable)"
                    )))
                }
            }
        }
    };
    Ok(doc.to_string())
}

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::Parse(format!("{what} must be a JSON object")))
}

fn field<'a>(input: &'a Value, name: &str) -> Result<&'a Value> {
    as_object(input, "the input document")?
        .get(name)
        .ok_or_else(|| Error::Parse(format!("missing \"{name}\" field")))
}

fn opt_field<'a>(input: &'a Value, name: &str) -> Option<&'a Value> {
    input.as_object().and_then(|o| o.get(name))
}

fn ext_from(v: &Value) -> Result<ExtRat> {
    let s = v
        .as_str()
        .ok_or_else(|| Error::Parse(format!("expected a rational string or \"inf\", got {v}")))?;
    s.parse()
}

fn trop_vector_from(v: &Value) -> Result<TropVector> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected a vector (JSON array), got {v}")))?;
    let coords: Vec<ExtRat> = arr.iter().map(ext_from).collect::<Result<_>>()?;
    TropVector::new(coords).map_err(|e| Error::Parse(e.to_string()))
}

fn trop_rows_from(v: &Value) -> Result<Vec<TropVector>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected an array of vectors, got {v}")))?;
    arr.iter().map(trop_vector_from).collect()
}

fn matrix_field(input: &Value) -> Result<TropMatrix> {
    let rows = trop_rows_from(field(input, "vectors")?)?;
    TropMatrix::from_rows(rows).map_err(|e| Error::Parse(e.to_string()))
}

fn ext_slice_from(v: &Value) -> Result<Vec<ExtRat>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected an array of rationals, got {v}")))?;
    arr.iter().map(ext_from).collect()
}

fn poly_from(v: &Value) -> Result<PuiseuxPoly> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected an array of terms, got {v}")))?;
    let mut terms = Vec::new();
    for term in arr {
        let c = field(term, "c").map_err(|_| Error::Parse(format!("term {term} needs \"c\"")))?;
        let e = field(term, "e").map_err(|_| Error::Parse(format!("term {term} needs \"e\"")))?;
        let c = c
            .as_str()
            .ok_or_else(|| Error::Parse("term coefficients must be rational strings".into()))?;
        let e = e
            .as_str()
            .ok_or_else(|| Error::Parse("term exponents must be rational strings".into()))?;
        terms.push((
            crate::rat::rational_from_string(e)?,
            crate::rat::rational_from_string(c)?,
        ));
    }
    Ok(PuiseuxPoly::from_terms(terms))
}

fn pvec_from(v: &Value) -> Result<PuiseuxVector> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected a vector of polynomials, got {v}")))?;
    let coords: Vec<PuiseuxPoly> = arr.iter().map(poly_from).collect::<Result<_>>()?;
    PuiseuxVector::new(coords).map_err(|e| Error::Parse(e.to_string()))
}

fn pvec_matrix_field(input: &Value) -> Result<Vec<PuiseuxVector>> {
    let arr = field(input, "vectors")?
        .as_array()
        .ok_or_else(|| Error::Parse("\"vectors\" must be an array".into()))?;
    arr.iter().map(pvec_from).collect()
}

fn ext_value(e: &ExtRat) -> Value {
    Value::String(e.to_string())
}

fn ext_slice_value(coords: &[ExtRat]) -> Value {
    Value::Array(coords.iter().map(ext_value).collect())
}

fn trop_vector_value(v: &TropVector) -> Value {
    Value::Array(v.iter().map(ext_value).collect())
}

fn rows_value(rows: &[TropVector]) -> Value {
    Value::Array(rows.iter().map(trop_vector_value).collect())
}

fn poly_value(p: &PuiseuxPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| {
                json!({
                    "c": rational_to_string(c),
                    "e": rational_to_string(e),
                })
            })
            .collect(),
    )
}

fn pvec_value(v: &PuiseuxVector) -> Value {
    Value::Array(v.iter().map(poly_value).collect())
}

fn pvec_slice_value(vs: &[PuiseuxVector]) -> Value {
    Value::Array(vs.iter().map(pvec_value).collect())
}
