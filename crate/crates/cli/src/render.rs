use serde_json::{json, Value};

use schubert_core::poly::{to_json_value, to_latex, to_text, Polynomial};

use crate::args::Format;

pub fn poly(p: &Polynomial, format: Format) -> String {
    match format {
        Format::Text | Format::Json => to_text(p),
        Format::Latex => to_latex(p),
    }
}

pub fn poly_json(p: &Polynomial) -> Value {
    to_json_value(p)
}

pub fn parts_json(parts: &[u32]) -> Value {
    json!(parts)
}

pub fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values built here always serialize");
    s.push('\n');
    s
}
