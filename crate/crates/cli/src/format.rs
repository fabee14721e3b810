//! JSON forms of elements and certificates.
//!
//! Words are strings of digits (`"0110"`, `""` for the root) for Higman
//! signatures and arrays of such strings for Brin signatures. Elements are
//! `{"family": "Vn" | "VnPrime" | "mV", "arity": k, "rules": [[d, r], …]}`.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use thompson_core::text::{format_coord, parse_word};
use thompson_core::witness::{Certificate, Citation, Membership, Source, Step, Term};
use thompson_core::{Element, Family, Signature, Word};

#[derive(thiserror::Error, Debug)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] thompson_core::Error),
    #[error("{0}")]
    Schema(String),
}

pub type Result<T, E = FormatError> = std::result::Result<T, E>;

fn schema(msg: impl Into<String>) -> FormatError {
    FormatError::Schema(msg.into())
}

pub fn family_from_name(name: &str) -> Result<Family> {
    match name {
        "Vn" | "V" => Ok(Family::Higman),
        "VnPrime" | "Vprime" => Ok(Family::HigmanDerived),
        "mV" => Ok(Family::Brin),
        other => Err(schema(format!("unknown family {other:?}"))),
    }
}

pub fn word_to_json(sig: &Signature, w: &Word) -> Value {
    if sig.is_higman() {
        Value::String(format_coord(sig, w.coord(0)))
    } else {
        Value::Array(w.coords().iter().map(|c| Value::String(format_coord(sig, c))).collect())
    }
}

pub fn word_from_json(sig: &Signature, v: &Value) -> Result<Word> {
    let text = match v {
        Value::String(s) if sig.is_higman() => s.clone(),
        Value::Array(items) if sig.is_brin() => {
            let parts: Vec<&str> = items
                .iter()
                .map(|c| c.as_str().ok_or_else(|| schema("word coordinates must be strings")))
                .collect::<Result<_>>()?;
            format!("[{}]", parts.join(","))
        }
        other => return Err(schema(format!("malformed word {other}"))),
    };
    Ok(parse_word(sig, &text)?)
}

#[derive(Serialize, Deserialize)]
struct ElementFile {
    family: String,
    arity: u32,
    rules: Vec<(Value, Value)>,
}

/// The reduced pair for Higman signatures; Brin elements have no unique
/// reduced pair, so only sibling merges are applied.
pub fn normalized(g: &Element) -> Element {
    g.reduce().unwrap_or_else(|_| g.simplify())
}

pub fn element_to_json(g: &Element) -> Value {
    let sig = g.signature();
    let file = ElementFile {
        family: sig.family().name().to_string(),
        arity: sig.arity(),
        rules: g
            .rules()
            .iter()
            .map(|(d, r)| (word_to_json(&sig, d), word_to_json(&sig, r)))
            .collect(),
    };
    serde_json::to_value(file).expect("plain data serializes")
}

pub fn signature_from_json(v: &Value) -> Result<Signature> {
    let family = v
        .get("family")
        .and_then(Value::as_str)
        .ok_or_else(|| schema("missing family"))?;
    let arity = v
        .get("arity")
        .and_then(Value::as_u64)
        .ok_or_else(|| schema("missing arity"))?;
    Ok(Signature::new(family_from_name(family)?, arity as u32)?)
}

pub fn element_from_json(v: &Value) -> Result<Element> {
    let file: ElementFile = serde_json::from_value(v.clone())?;
    let sig = Signature::new(family_from_name(&file.family)?, file.arity)?;
    let rules = file
        .rules
        .iter()
        .map(|(d, r)| Ok((word_from_json(&sig, d)?, word_from_json(&sig, r)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Element::new(sig, rules)?)
}

/// `"g"`, `"h"`, `"#3"`, with a `"^-1"` suffix for inverses.
pub fn term_to_json(t: &Term) -> Value {
    let base = match t.source {
        Source::G => "g".to_string(),
        Source::H => "h".to_string(),
        Source::Step(i) => format!("#{i}"),
    };
    Value::String(if t.inverse { format!("{base}^-1") } else { base })
}

pub fn term_from_json(v: &Value) -> Result<Term> {
    let s = v.as_str().ok_or_else(|| schema("term must be a string"))?;
    let (base, inverse) = match s.strip_suffix("^-1") {
        Some(b) => (b, true),
        None => (s, false),
    };
    let source = match base {
        "g" => Source::G,
        "h" => Source::H,
        _ => Source::Step(
            base.strip_prefix('#')
                .and_then(|i| i.parse().ok())
                .ok_or_else(|| schema(format!("bad term {s:?}")))?,
        ),
    };
    Ok(Term { source, inverse })
}

fn terms_to_json(ts: &[Term]) -> Value {
    Value::Array(ts.iter().map(term_to_json).collect())
}

fn terms_from_json(v: &Value) -> Result<Vec<Term>> {
    v.as_array()
        .ok_or_else(|| schema("expected a list of terms"))?
        .iter()
        .map(term_from_json)
        .collect()
}

fn citation_from_json(v: &Value) -> Result<Citation> {
    let tag = v.as_str().ok_or_else(|| schema("citation must be a string"))?;
    Citation::from_tag(tag).ok_or_else(|| schema(format!("unknown citation {tag:?}")))
}

fn step_to_json(sig: &Signature, step: &Step) -> Value {
    let args = match step {
        Step::PowerExtract { exponent, .. } => json!({ "exponent": exponent.to_string() }),
        Step::ConjugateBy { base, by, .. } => json!({ "base": term_to_json(base), "by": terms_to_json(by) }),
        Step::ProductOf { factors, .. } => json!({ "factors": terms_to_json(factors) }),
        Step::LocalizedMember { cylinder, justification, .. } => {
            let why = match justification {
                Membership::Seed { citation, alpha, beta } => json!({
                    "kind": "seed",
                    "citation": citation.tag(),
                    "alpha": term_to_json(alpha),
                    "beta": term_to_json(beta),
                }),
                Membership::Within { seed } => json!({ "kind": "within", "seed": seed }),
                Membership::Conjugate { seed, by } => {
                    json!({ "kind": "conjugate", "seed": seed, "by": term_to_json(by) })
                }
            };
            json!({ "cylinder": word_to_json(sig, cylinder), "justification": why })
        }
        Step::CitedClosure { citation, basis, seed, links } => json!({
            "citation": citation.tag(),
            "basis": basis.iter().map(|w| word_to_json(sig, w)).collect::<Vec<_>>(),
            "seed": seed,
            "links": terms_to_json(links),
        }),
    };
    json!({
        "kind": step.kind(),
        "args": args,
        "claim": step.value().map(element_to_json).unwrap_or(Value::Null),
    })
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name).ok_or_else(|| schema(format!("missing field {name:?}")))
}

fn index_field(v: &Value, name: &str) -> Result<usize> {
    field(v, name)?
        .as_u64()
        .map(|i| i as usize)
        .ok_or_else(|| schema(format!("{name:?} must be a step index")))
}

fn step_from_json(sig: &Signature, v: &Value) -> Result<Step> {
    let kind = field(v, "kind")?.as_str().ok_or_else(|| schema("kind must be a string"))?;
    let args = field(v, "args")?;
    let claim = || element_from_json(field(v, "claim")?);
    Ok(match kind {
        "PowerExtract" => {
            let e = field(args, "exponent")?;
            let exponent = match e {
                Value::String(s) => s.parse::<BigUint>().map_err(|_| schema("bad exponent"))?,
                Value::Number(n) => BigUint::from(n.as_u64().ok_or_else(|| schema("bad exponent"))?),
                _ => return Err(schema("bad exponent")),
            };
            Step::PowerExtract { exponent, claim: claim()? }
        }
        "ConjugateBy" => Step::ConjugateBy {
            base: term_from_json(field(args, "base")?)?,
            by: terms_from_json(field(args, "by")?)?,
            claim: claim()?,
        },
        "ProductOf" => Step::ProductOf {
            factors: terms_from_json(field(args, "factors")?)?,
            claim: claim()?,
        },
        "LocalizedMember" => {
            let why = field(args, "justification")?;
            let justification = match field(why, "kind")?.as_str() {
                Some("seed") => Membership::Seed {
                    citation: citation_from_json(field(why, "citation")?)?,
                    alpha: term_from_json(field(why, "alpha")?)?,
                    beta: term_from_json(field(why, "beta")?)?,
                },
                Some("within") => Membership::Within { seed: index_field(why, "seed")? },
                Some("conjugate") => Membership::Conjugate {
                    seed: index_field(why, "seed")?,
                    by: term_from_json(field(why, "by")?)?,
                },
                _ => return Err(schema("unknown justification")),
            };
            Step::LocalizedMember {
                element: claim()?,
                cylinder: word_from_json(sig, field(args, "cylinder")?)?,
                justification,
            }
        }
        "CitedClosure" => Step::CitedClosure {
            citation: citation_from_json(field(args, "citation")?)?,
            basis: field(args, "basis")?
                .as_array()
                .ok_or_else(|| schema("basis must be a list"))?
                .iter()
                .map(|w| word_from_json(sig, w))
                .collect::<Result<_>>()?,
            seed: index_field(args, "seed")?,
            links: terms_from_json(field(args, "links")?)?,
        },
        other => return Err(schema(format!("unknown step kind {other:?}"))),
    })
}

pub fn certificate_to_json(cert: &Certificate) -> Value {
    let sig = cert.signature;
    json!({
        "family": sig.family().name(),
        "arity": sig.arity(),
        "g": element_to_json(&cert.g),
        "h": element_to_json(&cert.h),
        "steps": cert.steps.iter().map(|s| step_to_json(&sig, s)).collect::<Vec<_>>(),
        "conclusion": cert.conclusion.tag(),
    })
}

pub fn certificate_from_json(v: &Value) -> Result<Certificate> {
    let g = element_from_json(field(v, "g")?)?;
    let signature = match (v.get("family"), v.get("arity")) {
        (Some(_), Some(_)) => signature_from_json(v)?,
        _ => g.signature(),
    };
    let h = element_from_json(field(v, "h")?)?;
    let steps = field(v, "steps")?
        .as_array()
        .ok_or_else(|| schema("steps must be a list"))?
        .iter()
        .map(|s| step_from_json(&signature, s))
        .collect::<Result<_>>()?;
    Ok(Certificate {
        signature,
        g: g.with_signature(signature)?,
        h: h.with_signature(signature)?,
        steps,
        conclusion: citation_from_json(field(v, "conclusion")?)?,
    })
}
