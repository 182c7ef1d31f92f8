//! Text and LaTeX printers. Both list terms in canonical order.

use super::integer::Integer;
use super::monomial::Monomial;
use super::polynomial::Polynomial;

/// Plain text, e.g. `x1 + T1 - x1*T1` or `2*x1^2*E3^-1`.
pub fn to_text(p: &Polynomial) -> String {
    render(p, |m| {
        m.exponents()
            .iter()
            .map(|&(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }, "*")
}

/// LaTeX math-mode body, e.g. `x_{1} + T_{1} - x_{1} T_{1}`.
pub fn to_latex(p: &Polynomial) -> String {
    render(p, |m| {
        m.exponents()
            .iter()
            .map(|&(v, e)| {
                let base = format!("{}_{{{}}}", v.family.symbol(), v.index);
                if e == 1 { base } else { format!("{base}^{{{e}}}") }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }, " ")
}

fn render(p: &Polynomial, monomial: impl Fn(&Monomial) -> String, times: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().enumerate() {
        let negative = c.is_negative();
        let magnitude = c.abs();
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&magnitude.to_string());
        } else if magnitude == Integer::ONE {
            out.push_str(&monomial(m));
        } else {
            out.push_str(&magnitude.to_string());
            out.push_str(times);
            out.push_str(&monomial(m));
        }
    }
    out
}
