//! Matrix-set documents and report rendering.
//!
//! Input documents are JSON with entries given as exact rational literals:
//! strings like `"3"` or `"1/2"`, or JSON integers. Floating-point literals
//! are rejected with a pointed error; exactness is non-negotiable. Parsers
//! here are total over arbitrary bytes: they return positioned errors and
//! never panic, which the fuzz targets exercise directly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::bounds::BoundsReport;
use crate::census::{bits_string, CensusRecord, CensusSummary};
use crate::error::{Error, Result};
use crate::finiteness::{StabilityVerdict, StabilityWitness};
use crate::matrix::{ExactMatrix, MatrixSet, ProductWord};
use crate::reductions::{BinaryExpansion, PairLift, ScaleResult};
use crate::value::AlgebraicValue;

/// Hard caps keeping adversarial documents from allocating unboundedly.
/// The toolkit targets exhaustive enumeration, which is hopeless past
/// dimension 32 anyway.
pub const MAX_DIMENSION: usize = 32;
pub const MAX_MEMBERS: usize = 256;

/// Parsed matrix-set file: a dimension, a list of square entry grids, and
/// optional metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixSetDocument {
    pub name: Option<String>,
    pub provenance: Option<String>,
    pub dimension: usize,
    pub matrices: Vec<Vec<Vec<BigRational>>>,
}

/// Strict rational literal: optional minus, digits, optionally `/digits`
/// with a positive denominator. No floats, no exponents, no whitespace.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    fn err(s: &str, message: &str) -> Error {
        Error::parse(format!("rational literal {:?}", s), message.to_string())
    }
    let (num_str, den_str) = match s.split_once('/') {
        None => (s, None),
        Some((n, d)) => (n, Some(d)),
    };
    let parse_int = |part: &str, allow_sign: bool| -> Result<BigInt> {
        let digits = match part.strip_prefix('-') {
            Some(rest) if allow_sign => rest,
            Some(_) => return Err(err(s, "denominator must be a positive integer")),
            None => part,
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err(s, "expected an integer or p/q rational (floats are not accepted)"));
        }
        if digits.len() > 10_000 {
            return Err(err(s, "literal is unreasonably long"));
        }
        digits
            .parse::<BigInt>()
            .map(|v| if part.starts_with('-') { -v } else { v })
            .map_err(|_| err(s, "invalid integer"))
    };
    let numer = parse_int(num_str, true)?;
    match den_str {
        None => Ok(BigRational::from(numer)),
        Some(d) => {
            let denom = parse_int(d, false)?;
            if denom.is_zero() {
                return Err(err(s, "zero denominator"));
            }
            Ok(BigRational::new(numer, denom))
        }
    }
}

pub fn format_rational(q: &BigRational) -> String {
    q.to_string()
}

/// Comma-separated word literal, leftmost factor first: `"1,1,1,0"`.
pub fn parse_word(s: &str) -> Result<ProductWord> {
    let mut indices = Vec::new();
    for (k, tok) in s.split(',').enumerate() {
        let tok = tok.trim();
        if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) || tok.len() > 6 {
            return Err(Error::parse(
                format!("word position {}", k),
                format!("invalid index {:?}; words look like \"0,1,1\"", tok),
            ));
        }
        let idx: usize = tok
            .parse()
            .map_err(|_| Error::parse(format!("word position {}", k), "index out of range"))?;
        indices.push(idx);
    }
    if indices.is_empty() {
        return Err(Error::EmptyWord);
    }
    ProductWord::new(indices)
}

pub fn format_word(w: &ProductWord) -> String {
    w.to_string()
}

impl MatrixSetDocument {
    /// Strict parse with positioned errors; total over arbitrary bytes.
    pub fn parse_json(bytes: &[u8]) -> Result<Self> {
        let root: Value = serde_json::from_slice(bytes)
            .map_err(|e| Error::parse("document", e.to_string()))?;
        let obj = root
            .as_object()
            .ok_or_else(|| Error::parse("document", "expected a JSON object"))?;
        let name = match obj.get("name") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(s.clone()),
            Some(_) => return Err(Error::parse("name", "expected a string")),
        };
        let provenance = match obj.get("provenance") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(s.clone()),
            Some(_) => return Err(Error::parse("provenance", "expected a string")),
        };
        let dimension = obj
            .get("dimension")
            .ok_or_else(|| Error::parse("dimension", "missing field"))?
            .as_u64()
            .ok_or_else(|| Error::parse("dimension", "expected a positive integer"))?;
        if dimension < 1 || dimension as usize > MAX_DIMENSION {
            return Err(Error::parse(
                "dimension",
                format!("must be between 1 and {}", MAX_DIMENSION),
            ));
        }
        let n = dimension as usize;
        let matrices_value = obj
            .get("matrices")
            .ok_or_else(|| Error::parse("matrices", "missing field"))?
            .as_array()
            .ok_or_else(|| Error::parse("matrices", "expected an array of matrices"))?;
        if matrices_value.is_empty() {
            return Err(Error::parse("matrices", "at least one matrix is required"));
        }
        if matrices_value.len() > MAX_MEMBERS {
            return Err(Error::parse(
                "matrices",
                format!("at most {} matrices are supported", MAX_MEMBERS),
            ));
        }
        let mut matrices = Vec::with_capacity(matrices_value.len());
        for (mi, mat) in matrices_value.iter().enumerate() {
            let rows = mat.as_array().ok_or_else(|| {
                Error::parse(format!("matrices[{}]", mi), "expected an array of rows")
            })?;
            if rows.len() != n {
                return Err(Error::parse(
                    format!("matrices[{}]", mi),
                    format!("expected {} rows, found {}", n, rows.len()),
                ));
            }
            let mut grid = Vec::with_capacity(n);
            for (ri, row) in rows.iter().enumerate() {
                let cells = row.as_array().ok_or_else(|| {
                    Error::parse(format!("matrices[{}][{}]", mi, ri), "expected an array")
                })?;
                if cells.len() != n {
                    return Err(Error::parse(
                        format!("matrices[{}][{}]", mi, ri),
                        format!("expected {} entries, found {}", n, cells.len()),
                    ));
                }
                let mut out_row = Vec::with_capacity(n);
                for (ci, cell) in cells.iter().enumerate() {
                    let path = format!("matrices[{}][{}][{}]", mi, ri, ci);
                    let q = parse_entry(cell, &path)?;
                    out_row.push(q);
                }
                grid.push(out_row);
            }
            matrices.push(grid);
        }
        Ok(MatrixSetDocument { name, provenance, dimension: n, matrices })
    }

    pub fn from_set(set: &MatrixSet, name: Option<&str>) -> Self {
        let n = set.dim();
        let matrices = set
            .members()
            .iter()
            .map(|m| {
                (0..n)
                    .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
                    .collect()
            })
            .collect();
        MatrixSetDocument {
            name: name.map(str::to_string),
            provenance: None,
            dimension: n,
            matrices,
        }
    }

    fn from_raw_members(members: &[ExactMatrix], name: Option<&str>) -> Self {
        let n = members[0].dim();
        let matrices = members
            .iter()
            .map(|m| {
                (0..n)
                    .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
                    .collect()
            })
            .collect();
        MatrixSetDocument {
            name: name.map(str::to_string),
            provenance: None,
            dimension: n,
            matrices,
        }
    }

    pub fn to_set(&self) -> Result<MatrixSet> {
        let members = self
            .matrices
            .iter()
            .map(|grid| ExactMatrix::from_rows(grid.clone()))
            .collect::<Result<Vec<_>>>()?;
        MatrixSet::new(members)
    }

    pub fn to_json_value(&self) -> Value {
        let matrices: Vec<Value> = self
            .matrices
            .iter()
            .map(|grid| {
                Value::Array(
                    grid.iter()
                        .map(|row| {
                            Value::Array(
                                row.iter().map(|q| Value::String(format_rational(q))).collect(),
                            )
                        })
                        .collect(),
                )
            })
            .collect();
        let mut obj = serde_json::Map::new();
        if let Some(name) = &self.name {
            obj.insert("name".into(), Value::String(name.clone()));
        }
        if let Some(p) = &self.provenance {
            obj.insert("provenance".into(), Value::String(p.clone()));
        }
        obj.insert("dimension".into(), json!(self.dimension));
        obj.insert("matrices".into(), Value::Array(matrices));
        Value::Object(obj)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("valid JSON value")
    }
}

fn parse_entry(cell: &Value, path: &str) -> Result<BigRational> {
    match cell {
        Value::String(s) => {
            parse_rational(s).map_err(|e| Error::parse(path, e.to_string()))
        }
        Value::Number(num) => {
            if let Some(v) = num.as_i64() {
                Ok(BigRational::from(BigInt::from(v)))
            } else if let Some(v) = num.as_u64() {
                Ok(BigRational::from(BigInt::from(v)))
            } else {
                Err(Error::parse(
                    path,
                    format!(
                        "floating-point entry {} is not accepted; write it as a rational string like \"1/2\"",
                        num
                    ),
                ))
            }
        }
        other => Err(Error::parse(
            path,
            format!("expected a rational string or integer, found {}", type_name(other)),
        )),
    }
}

fn type_name(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

/// `{"exact": ..., "decimal": ...}` with 12 decimal digits.
pub fn value_json(v: &AlgebraicValue) -> Value {
    json!({ "exact": v.exact_str(), "decimal": v.decimal(12) })
}

fn rational_decimal(q: &BigRational, digits: u32) -> String {
    AlgebraicValue::from_rational(q.clone()).decimal(digits)
}

pub fn bounds_report_json(report: &BoundsReport, set_name: Option<&str>) -> Value {
    let lower: Vec<Value> = report
        .lower_per_t
        .iter()
        .map(|l| {
            let mut v = value_json(&l.value);
            let obj = v.as_object_mut().expect("object");
            obj.insert("t".into(), json!(l.t));
            obj.insert("witness".into(), json!(format_word(&l.witness)));
            v
        })
        .collect();
    let upper: Vec<Value> = report
        .upper_per_t
        .iter()
        .map(|u| {
            let mut v = value_json(&u.value);
            let obj = v.as_object_mut().expect("object");
            obj.insert("t".into(), json!(u.t));
            obj.insert("norm_max".into(), json!(format_rational(&u.norm_max)));
            v
        })
        .collect();
    let mut best_lower = value_json(&report.best_lower.value);
    {
        let obj = best_lower.as_object_mut().expect("object");
        obj.insert("t".into(), json!(report.best_lower.t));
        obj.insert("witness".into(), json!(format_word(&report.best_lower.witness)));
    }
    let mut best_upper = value_json(&report.best_upper.value);
    best_upper
        .as_object_mut()
        .expect("object")
        .insert("t".into(), json!(report.best_upper.t));
    json!({
        "set": set_name,
        "set_digest": report.set_digest,
        "depth": report.depth,
        "norm": report.norm_used.to_string(),
        "pruned": report.pruned,
        "products_evaluated": report.products_evaluated,
        "lower_per_t": lower,
        "upper_per_t": upper,
        "best_lower": best_lower,
        "best_upper": best_upper,
    })
}

pub fn stability_json(verdict: &StabilityVerdict) -> Value {
    let witness = match &verdict.witness {
        StabilityWitness::UpperBound { t, value } => json!({
            "kind": "upper-bound",
            "t": t,
            "value": value_json(value),
        }),
        StabilityWitness::Lower(cert) => json!({
            "kind": "lower-witness",
            "word": format_word(&cert.word),
            "value": value_json(&cert.value),
        }),
        StabilityWitness::Bracket { lower, upper } => json!({
            "kind": "bracket",
            "lower": value_json(lower),
            "upper": value_json(upper),
        }),
    };
    json!({
        "outcome": verdict.outcome.to_string(),
        "depth_reached": verdict.depth_reached,
        "witness": witness,
    })
}

pub fn scale_result_json(r: &ScaleResult, name: Option<&str>) -> Value {
    json!({
        "alpha": r.alpha.to_string(),
        "scaled": MatrixSetDocument::from_set(&r.scaled, name).to_json_value(),
    })
}

pub fn binary_expansion_json(exp: &BinaryExpansion, name: Option<&str>) -> Value {
    json!({
        "m_max": exp.m_max,
        "signed": exp.signed,
        "expanded": MatrixSetDocument::from_set(&exp.expanded, name).to_json_value(),
    })
}

pub fn pair_lift_json(lift: &PairLift, name: Option<&str>) -> Value {
    let edges = |es: &[(usize, usize)]| -> Vec<Value> {
        es.iter().map(|(a, b)| json!([a, b])).collect()
    };
    json!({
        "m_count": lift.m_count,
        "block_dim": lift.block_dim,
        "g0_edges": edges(&lift.g0_edges),
        "g1_edges": edges(&lift.g1_edges),
        "lifted": MatrixSetDocument::from_raw_members(
            &[lift.a0.clone(), lift.a1.clone()],
            name
        ).to_json_value(),
    })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// CSV rendering of census records, one row per pair.
pub fn census_csv(records: &[CensusRecord]) -> String {
    let mut out = String::from(
        "canonical_class,member0,member1,rule_chain,certificate_word,exact_value,decimal_value,bounds_gap\n",
    );
    for r in records {
        let row = [
            r.canonical_key.clone(),
            bits_string(r.pair.member(0)).unwrap_or_default(),
            bits_string(r.pair.member(1)).unwrap_or_default(),
            r.rule_chain.join(";"),
            format_word(&r.certificate.word),
            r.exact_value.exact_str(),
            r.exact_value.decimal(12),
            rational_decimal(&r.bounds_gap, 12),
        ];
        let line: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// One bracketing-only CSV row for the exploratory dim-3 census.
pub fn dim3_bracket_row(pair: &MatrixSet, report: &BoundsReport) -> String {
    let eps = BigRational::new(BigInt::from(1), num_traits::pow(BigInt::from(10), 14));
    let lower = &report.best_lower.value;
    let upper = &report.upper_per_t.last().expect("depth >= 1").value;
    let gap = {
        let g = &upper.enclosure(&eps).hi - &lower.enclosure(&eps).lo;
        if g < BigRational::from(BigInt::from(0)) {
            BigRational::from(BigInt::from(0))
        } else {
            g
        }
    };
    let fields = [
        crate::census::binary_string(pair.member(0)).unwrap_or_default(),
        crate::census::binary_string(pair.member(1)).unwrap_or_default(),
        lower.exact_str(),
        lower.decimal(12),
        upper.decimal(12),
        rational_decimal(&gap, 12),
    ];
    fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",")
}

pub fn census_summary_json(summary: &CensusSummary) -> Value {
    json!({
        "total": summary.total,
        "per_rule": summary.per_rule,
        "candidate_only": summary.candidate_only,
        "max_certificate_len": summary.max_certificate_len,
    })
}
