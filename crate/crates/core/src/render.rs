//! Plain-text and LaTeX rendering of scalars and monomials.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::multi_index::MultiIndex;
use crate::scalar::Scalar;

/// `f_1^2 f_3`; the empty monomial renders as the empty string.
pub fn monomial_text(symbol: &str, index: &MultiIndex) -> String {
    index
        .iter()
        .map(|(m, e)| if e == 1 { format!("{symbol}_{m}") } else { format!("{symbol}_{m}^{e}") })
        .collect::<Vec<_>>()
        .join(" ")
}

/// `f_{1}^{2} f_{3}`.
pub fn monomial_latex(symbol: &str, index: &MultiIndex) -> String {
    index
        .iter()
        .map(|(m, e)| if e == 1 { format!("{symbol}_{{{m}}}") } else { format!("{symbol}_{{{m}}}^{{{e}}}") })
        .collect::<Vec<_>>()
        .join(" ")
}

fn rational_latex(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

pub fn scalar_latex(s: &Scalar) -> String {
    match (s.re.is_zero(), s.im.is_zero()) {
        (_, true) => rational_latex(&s.re),
        (true, false) => format!("{} i", rational_latex(&s.im)),
        (false, false) => {
            let sign = if s.im.is_negative() { "-" } else { "+" };
            format!("\\left({} {sign} {} i\\right)", rational_latex(&s.re), rational_latex(&s.im.abs()))
        }
    }
}

/// Splits a coefficient into a leading sign and its magnitude when it is a
/// real number; complex coefficients keep an explicit `+`.
fn split_sign(c: &Scalar) -> (bool, Scalar) {
    if c.is_real() && c.re.is_negative() {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

/// Joins `(coefficient, body)` pairs into `a + b - c`. An empty body stands
/// for the unit monomial. The zero sum renders as `0`.
pub fn join_terms<I>(terms: I, latex: bool) -> String
where
    I: IntoIterator<Item = (Scalar, String)>,
{
    let mut out = String::new();
    for (i, (coeff, body)) in terms.into_iter().enumerate() {
        let (neg, mag) = split_sign(&coeff);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag_str = if latex { scalar_latex(&mag) } else { mag.to_string() };
        match (mag.is_one(), body.is_empty()) {
            (true, true) => out.push('1'),
            (true, false) => out.push_str(&body),
            (false, true) => out.push_str(&mag_str),
            (false, false) => {
                out.push_str(&mag_str);
                out.push(' ');
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
