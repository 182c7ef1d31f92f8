//! JSON form: an array of `{"coeff": "<decimal>", "vars": [{"family", "index", "exp"}]}`
//! in canonical term order.

use serde::{Deserialize, Serialize};

use super::integer::Integer;
use super::monomial::{Family, Monomial, VarId};
use super::polynomial::Polynomial;
use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    vars: Vec<VarJson>,
}

#[derive(Serialize, Deserialize)]
struct VarJson {
    family: String,
    index: u32,
    exp: i32,
}

fn term_list(p: &Polynomial) -> Vec<TermJson> {
    p
        .terms()
        .map(|(m, c)| TermJson {
            coeff: c.to_string(),
            vars: m
                .exponents()
                .iter()
                .map(|&(v, exp)| VarJson {
                    family: v.family.symbol().to_string(),
                    index: v.index,
                    exp,
                })
                .collect(),
        })
        .collect()
}

pub fn to_json_value(p: &Polynomial) -> serde_json::Value {
    serde_json::to_value(term_list(p)).expect("term list always serializes")
}

/// Compact JSON with keys in the documented order.
pub fn to_json(p: &Polynomial) -> String {
    serde_json::to_string(&term_list(p)).expect("term list always serializes")
}

pub fn from_json_value(value: serde_json::Value) -> Result<Polynomial> {
    let terms: Vec<TermJson> =
        serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
    let mut out = Vec::with_capacity(terms.len());
    for term in terms {
        let coeff: Integer = term
            .coeff
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient {:?}", term.coeff)))?;
        let mut pairs = Vec::with_capacity(term.vars.len());
        for var in term.vars {
            let family = Family::from_symbol(&var.family)
                .ok_or_else(|| Error::Parse(format!("unknown family {:?}", var.family)))?;
            if var.index == 0 {
                return Err(Error::Parse("variable indices start at 1".into()));
            }
            if var.exp < 0 && !family.is_laurent() {
                return Err(Error::Parse(format!(
                    "negative exponent on {}{}",
                    var.family, var.index
                )));
            }
            pairs.push((VarId::new(family, var.index), var.exp));
        }
        out.push((Monomial::from_pairs(pairs), coeff));
    }
    Ok(Polynomial::from_terms(out))
}

pub fn from_json(s: &str) -> Result<Polynomial> {
    let value: serde_json::Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    from_json_value(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let p = Polynomial::x(1).scale(&Integer::from(-2)) + Polynomial::var_pow(VarId::e(3), -1);
        assert_eq!(
            to_json(&p),
            r#"[{"coeff":"1","vars":[{"family":"E","index":3,"exp":-1}]},{"coeff":"-2","vars":[{"family":"x","index":1,"exp":1}]}]"#
        );
        assert_eq!(from_json(&to_json(&p)).unwrap(), p);
    }

    #[test]
    fn rejects_negative_exponent_outside_laurent_family() {
        let bad = r#"[{"coeff":"1","vars":[{"family":"t","index":1,"exp":-1}]}]"#;
        assert!(matches!(from_json(bad), Err(Error::Parse(_))));
    }
}
