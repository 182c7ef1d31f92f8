//! Exact sparse multivariate polynomials over the four variable families
//! `x`, `t`, `T` and the Laurent family `E`.

mod integer;
mod json;
mod monomial;
mod polynomial;
mod print;
mod rational;

pub use integer::Integer;
pub use json::{from_json, from_json_value, to_json, to_json_value};
pub use monomial::{Family, Monomial, VarId};
pub use polynomial::Polynomial;
pub use print::{to_latex, to_text};
pub use rational::{Assignment, RationalValue};
