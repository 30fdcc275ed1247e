//! Instance loading: algebra presets and JSON descriptions, generator
//! files, and the canonical instance record echoed into every report.

use std::path::Path;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::field::{ExtField, FieldElem, UniPoly};
use crate::findim::presets::{
    cyclic_group_algebra, dual_numbers, extension_as_algebra, matrix_algebra, upper_triangular,
};
use crate::findim::{AlgElem, FinDimAlgebra};
use crate::leftideal::{parse_alg_poly, AlgPoly};

const AT: &str = "cli::instance";

/// A fully described problem instance: where the algebra came from, the
/// variable count, the generators in canonical rendering, and the options
/// that affect the run.
#[derive(Debug, Clone)]
pub struct InstanceSpec {
    pub algebra: String,
    pub nvars: usize,
    pub generators: Vec<String>,
    pub dmax: Option<u32>,
    pub seed: u64,
}

impl InstanceSpec {
    /// The canonical JSON form; loading and re-serializing is idempotent.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("algebra".into(), Value::String(self.algebra.clone()));
        m.insert("nvars".into(), Value::from(self.nvars));
        m.insert(
            "generators".into(),
            Value::Array(self.generators.iter().cloned().map(Value::String).collect()),
        );
        m.insert(
            "dmax".into(),
            self.dmax.map_or(Value::Null, |d| Value::from(d)),
        );
        m.insert("seed".into(), Value::from(self.seed));
        Value::Object(m)
    }
}

fn parse_err(offset: usize, why: impl Into<String>) -> Error {
    Error::Parse { offset, why: why.into() }
}

fn field_from_arg(src: &str, arg: &str) -> Result<ExtField> {
    if arg == "Q" {
        return Ok(ExtField::rationals());
    }
    let p: u64 = arg
        .parse()
        .map_err(|_| parse_err(src.find(arg).unwrap_or(0), format!("bad field size `{arg}`")))?;
    ExtField::prime(p)
}

fn is_preset(src: &str) -> bool {
    let starters = ["M", "dual_numbers(", "group:C", "upper_triangular:"];
    (src.starts_with('F') && src.contains("[u]/"))
        || starters.iter().any(|s| src.starts_with(s) && src.ends_with(')'))
}

fn preset_algebra(src: &str) -> Result<FinDimAlgebra> {
    if let Some(rest) = src.strip_prefix("dual_numbers(") {
        let arg = rest
            .strip_suffix(')')
            .ok_or_else(|| parse_err(src.len(), "missing `)`"))?;
        return dual_numbers(&field_from_arg(src, arg)?);
    }
    if let Some(rest) = src.strip_prefix("group:C") {
        let open = rest.find('(').ok_or_else(|| parse_err(src.len(), "missing `(`"))?;
        let n: u64 = rest[..open]
            .parse()
            .map_err(|_| parse_err(7, format!("bad cyclic order `{}`", &rest[..open])))?;
        let arg = rest[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| parse_err(src.len(), "missing `)`"))?;
        return cyclic_group_algebra(&field_from_arg(src, arg)?, n as usize);
    }
    if let Some(rest) = src.strip_prefix("upper_triangular:") {
        let open = rest.find('(').ok_or_else(|| parse_err(src.len(), "missing `(`"))?;
        let k: usize = rest[..open]
            .parse()
            .map_err(|_| parse_err(17, format!("bad size `{}`", &rest[..open])))?;
        let arg = rest[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| parse_err(src.len(), "missing `)`"))?;
        return upper_triangular(&field_from_arg(src, arg)?, k);
    }
    if src.starts_with('F') && src.contains("[u]/") {
        let (head, modulus) = src.split_once("[u]/").unwrap();
        let q: u64 = head[1..]
            .parse()
            .map_err(|_| parse_err(1, format!("bad field size `{}`", &head[1..])))?;
        let f = ExtField::prime(q)?;
        let poly = crate::polymod::parse_poly(&f, 1, &modulus.replace('u', "x")).map_err(
            |e| match e {
                Error::Parse { offset, why } => {
                    parse_err(head.len() + 4 + offset, why.replace('x', "u"))
                }
                other => other,
            },
        )?;
        let deg = poly
            .terms()
            .map(|(e, _)| e[0])
            .max()
            .ok_or_else(|| parse_err(head.len() + 4, "zero modulus"))?;
        let mut coeffs: UniPoly = vec![f.zero(); deg as usize + 1];
        for (e, c) in poly.terms() {
            coeffs[e[0] as usize] = c.clone();
        }
        return extension_as_algebra(&f, &coeffs);
    }
    if let Some(rest) = src.strip_prefix('M') {
        let open = rest.find('(').ok_or_else(|| parse_err(src.len(), "missing `(`"))?;
        let k: usize = rest[..open]
            .parse()
            .map_err(|_| parse_err(1, format!("bad matrix size `{}`", &rest[..open])))?;
        let arg = rest[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| parse_err(src.len(), "missing `)`"))?;
        return matrix_algebra(&field_from_arg(src, arg)?, k);
    }
    Err(parse_err(0, format!("unrecognized preset `{src}`")))
}

fn json_field(v: &Value) -> Result<ExtField> {
    match v {
        Value::String(s) if s == "Q" => Ok(ExtField::rationals()),
        Value::Number(n) => {
            let p = n
                .as_u64()
                .ok_or_else(|| parse_err(0, format!("bad field characteristic {n}")))?;
            ExtField::prime(p)
        }
        other => Err(parse_err(0, format!("bad `field` entry {other}"))),
    }
}

fn json_scalar(f: &ExtField, v: &Value) -> Result<FieldElem> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|k| f.from_int(k))
            .ok_or_else(|| parse_err(0, format!("non-integer coefficient {n}"))),
        Value::String(s) => {
            let (num, den) = match s.split_once('/') {
                None => (s.as_str(), "1"),
                Some(pair) => pair,
            };
            let n: i64 = num
                .parse()
                .map_err(|_| parse_err(0, format!("bad coefficient `{s}`")))?;
            let d: i64 = den
                .parse()
                .map_err(|_| parse_err(0, format!("bad coefficient `{s}`")))?;
            f.from_rational(n, d)
        }
        other => Err(parse_err(0, format!("bad coefficient entry {other}"))),
    }
}

fn json_vector(f: &ExtField, v: &Value, what: &str) -> Result<AlgElem> {
    let arr = v
        .as_array()
        .ok_or_else(|| parse_err(0, format!("`{what}` must be an array")))?;
    arr.iter().map(|c| json_scalar(f, c)).collect()
}

fn json_algebra(path: &str) -> Result<FinDimAlgebra> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io { path: path.into(), why: e.to_string() })?;
    let doc: Value = serde_json::from_str(&text)
        .map_err(|e| parse_err(0, format!("invalid JSON in {path}: {e}")))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| parse_err(0, "the algebra description must be a JSON object"))?;
    let field = json_field(
        obj.get("field")
            .ok_or_else(|| parse_err(0, "missing `field`"))?,
    )?;
    let unit = json_vector(
        &field,
        obj.get("unit").ok_or_else(|| parse_err(0, "missing `unit`"))?,
        "unit",
    )?;
    let table = obj
        .get("structure")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err(0, "missing `structure` array"))?;
    let mut structure = Vec::with_capacity(table.len());
    for row in table {
        let row = row
            .as_array()
            .ok_or_else(|| parse_err(0, "`structure` rows must be arrays"))?;
        let mut out = Vec::with_capacity(row.len());
        for cell in row {
            out.push(json_vector(&field, cell, "structure")?);
        }
        structure.push(out);
    }
    let names = match obj.get("names") {
        None | Some(Value::Null) => None,
        Some(Value::Array(items)) => Some(
            items
                .iter()
                .map(|n| {
                    n.as_str()
                        .map(str::to_owned)
                        .ok_or_else(|| parse_err(0, "`names` must be strings"))
                })
                .collect::<Result<Vec<_>>>()?,
        ),
        Some(other) => return Err(parse_err(0, format!("bad `names` entry {other}"))),
    };
    FinDimAlgebra::new(field, structure, unit, names)
}

/// Build the algebra named by a preset string, or load it from a JSON file
/// when the string is not a preset.
pub fn algebra_from_source(src: &str) -> Result<FinDimAlgebra> {
    if is_preset(src) {
        preset_algebra(src)
    } else if Path::new(src).exists() {
        json_algebra(src)
    } else {
        Err(Error::Io {
            path: src.into(),
            why: "not a preset name and no such file".into(),
        })
    }
}

/// Read generators from a text file: one polynomial per line, blank lines
/// and `#` comments skipped.
pub fn ideal_from_file(
    alg: &FinDimAlgebra,
    nvars: usize,
    path: &str,
) -> Result<Vec<AlgPoly>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io { path: path.into(), why: e.to_string() })?;
    parse_generator_lines(alg, nvars, &text)
}

/// Parse a newline-separated generator list.
pub fn parse_generator_lines(
    alg: &FinDimAlgebra,
    nvars: usize,
    text: &str,
) -> Result<Vec<AlgPoly>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let p = parse_alg_poly(alg, nvars, trimmed).map_err(|e| match e {
            Error::Parse { offset, why } => Error::Parse {
                offset,
                why: format!("line {}: {}", lineno + 1, why),
            },
            other => other,
        })?;
        out.push(p);
    }
    if out.is_empty() {
        return Err(Error::NotSupported {
            at: AT,
            why: "the generator list is empty".into(),
        });
    }
    Ok(out)
}
