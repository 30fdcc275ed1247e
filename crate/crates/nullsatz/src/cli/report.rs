//! Canonical report assembly: JSON objects with a fixed key order, a
//! plain-text rendering for human eyes, and certificate serialization.

use serde_json::{Map, Value};

use crate::field::ExtField;
use crate::findim::{FinDimAlgebra, WedderburnData};
use crate::leftideal::{DirectionalPoint, LeftIdeal};

/// The reduced basis of a left ideal as canonical strings.
pub fn ideal_strings(alg: &FinDimAlgebra, ideal: &LeftIdeal) -> Vec<String> {
    ideal.basis_polys(alg).iter().map(|p| p.render(alg)).collect()
}

pub fn string_array(items: &[String]) -> Value {
    Value::Array(items.iter().cloned().map(Value::String).collect())
}

/// Structural summary of the coefficient algebra.
pub fn algebra_block(alg: &FinDimAlgebra, w: &WedderburnData) -> Value {
    let mut m = Map::new();
    m.insert("dim".into(), Value::from(alg.dim()));
    m.insert("radical_dim".into(), Value::from(w.rad_basis.len()));
    let factors: Vec<Value> = w
        .factors
        .iter()
        .map(|f| {
            let mut fm = Map::new();
            fm.insert("k".into(), Value::from(f.k));
            fm.insert("center_degree".into(), Value::from(f.center_dim));
            Value::Object(fm)
        })
        .collect();
    m.insert("factors".into(), Value::Array(factors));
    Value::Object(m)
}

/// Serialize certificate points; coordinates are rendered in the point's
/// field of definition, together with the defining polynomial of its
/// extension step over the coefficient field when there is one.
pub fn certificate_value(base: &ExtField, points: &[DirectionalPoint]) -> Value {
    let rendered: Vec<Value> = points
        .iter()
        .map(|p| {
            let mut m = Map::new();
            m.insert("factor".into(), Value::from(p.factor));
            let rel = p.field.absolute_degree() / base.absolute_degree();
            m.insert("extension_degree".into(), Value::from(rel));
            if p.field.tower().len() > base.tower().len() {
                let step = p.field.tower().last().unwrap();
                m.insert("extension_variable".into(), Value::String(step.var.clone()));
                let coeffs: Vec<Value> = step
                    .minpoly
                    .iter()
                    .map(|c| Value::String(base.elem_to_string(c)))
                    .collect();
                m.insert("extension_minpoly".into(), Value::Array(coeffs));
            }
            let render =
                |v: &[crate::field::FieldElem]| -> Value {
                    Value::Array(
                        v.iter().map(|c| Value::String(p.field.elem_to_string(c))).collect(),
                    )
                };
            m.insert("xi".into(), render(&p.xi));
            m.insert("v".into(), render(&p.v));
            Value::Object(m)
        })
        .collect();
    let mut top = Map::new();
    top.insert("points".into(), Value::Array(rendered));
    Value::Object(top)
}

/// One `key: value` line per entry, with list values indented below.
pub fn pretty_lines(sections: &[(&str, Vec<String>)]) -> String {
    let mut out = String::new();
    for (title, items) in sections {
        if items.len() == 1 {
            out.push_str(&format!("{title}: {}\n", items[0]));
        } else {
            out.push_str(&format!("{title}:\n"));
            for item in items {
                out.push_str(&format!("  {item}\n"));
            }
        }
    }
    out
}
