use super::laurent::LaurentBi;
use super::ratq::RatQ;
use super::spoly::SPoly;
use super::t0t1::{to_t0t1, T0T1Poly};
use super::Ring;
use num_rational::BigRational;
use num_traits::{One, Signed};
use std::fmt::Write;

/// Output style for [`render`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    /// Grouped by powers of q^α, coefficients in q.
    Qqa,
    /// Integer polynomial in t0, t1 (falls back to `Qqa` off-lattice).
    T0T1,
    /// Raw monomials in s = q^{1/2}, u = q^{α/2}.
    Su,
}

impl std::str::FromStr for Style {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "qqa" => Ok(Style::Qqa),
            "t0t1" => Ok(Style::T0T1),
            "su" => Ok(Style::Su),
            _ => Err(format!("unknown style {s}")),
        }
    }
}

fn fmt_exp(num: i32, den: i32) -> String {
    let g = num_integer::gcd(num, den);
    let (n, d) = (num / g, den / g);
    if d == 1 {
        format!("{n}")
    } else {
        format!("({n}/{d})")
    }
}

fn var_pow(var: &str, num: i32, den: i32) -> Option<String> {
    if num == 0 {
        None
    } else if num == den {
        Some(var.to_string())
    } else {
        Some(format!("{var}^{}", fmt_exp(num, den)))
    }
}

/// Join signed monomial terms: each term is (coefficient, factor string).
fn join_terms(terms: &[(BigRational, Option<String>)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (c, m)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match m {
            None => write!(out, "{a}").unwrap(),
            Some(m) if a.is_one() => out.push_str(m),
            Some(m) => write!(out, "{a}*{m}").unwrap(),
        }
    }
    out
}

fn spoly_str(p: &SPoly, var: &str, den: i32) -> String {
    let terms: Vec<(BigRational, Option<String>)> = p
        .terms()
        .rev()
        .map(|(e, c)| (BigRational::from_integer(c.clone()), var_pow(var, e, den)))
        .collect();
    join_terms(&terms)
}

fn ratq_str(c: &RatQ, var: &str, den: i32) -> (String, bool) {
    if c.denom().is_one() {
        let n = c.numer().terms().count();
        (spoly_str(c.numer(), var, den), n > 1)
    } else if c.denom().len() == 1 {
        let d = c.denom().coeff(0);
        let terms: Vec<(BigRational, Option<String>)> = c
            .numer()
            .terms()
            .rev()
            .map(|(e, v)| (BigRational::new(v.clone(), d.clone()), var_pow(var, e, den)))
            .collect();
        (join_terms(&terms), terms.len() > 1)
    } else {
        (
            format!("({})/({})", spoly_str(c.numer(), var, den), spoly_str(c.denom(), var, den)),
            true,
        )
    }
}

pub(crate) fn render_ratq_s(c: &RatQ) -> String {
    ratq_str(c, "s", 1).0
}

fn render_grouped(x: &LaurentBi, var_u: &str, uden: i32, var_s: &str, sden: i32) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (p, c) in x.terms() {
        let (cs, multi) = ratq_str(c, var_s, sden);
        let up = var_pow(var_u, p, uden);
        let mut neg = false;
        let body = match up {
            None => cs,
            Some(up) => {
                if cs == "1" {
                    up
                } else if cs == "-1" {
                    neg = true;
                    up
                } else if multi {
                    format!("{up}*({cs})")
                } else if let Some(rest) = cs.strip_prefix('-') {
                    neg = true;
                    format!("{up}*{rest}")
                } else {
                    format!("{up}*{cs}")
                }
            }
        };
        let body = if multi && var_pow(var_u, p, uden).is_none() { format!("({body})") } else { body };
        parts.push((neg, body));
    }
    let mut out = String::new();
    for (k, (neg, b)) in parts.into_iter().enumerate() {
        let (neg, b) = match b.strip_prefix('-') {
            Some(rest) if !neg => (true, rest.to_string()),
            _ => (neg, b),
        };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&b);
    }
    out
}

pub(crate) fn render_t0t1(x: &T0T1Poly) -> String {
    let mut terms: Vec<(BigRational, Option<String>)> = Vec::new();
    let mut keys: Vec<(&(i32, i32), &BigRational)> = x.terms().collect();
    keys.sort_by_key(|((a, b), _)| (a - b, *b));
    for (&(a, b), c) in keys {
        let f: Vec<String> = [var_pow("t0", a, 1), var_pow("t1", b, 1)].into_iter().flatten().collect();
        terms.push((c.clone(), if f.is_empty() { None } else { Some(f.join("*")) }));
    }
    join_terms(&terms)
}

/// Render a scalar in the requested style. The output is accepted by
/// [`super::parse_expr`].
pub fn render(x: &LaurentBi, style: Style) -> String {
    match style {
        Style::Qqa => render_grouped(x, "qa", 2, "q", 2),
        Style::Su => render_grouped(x, "u", 1, "s", 1),
        Style::T0T1 => match to_t0t1(x) {
            Ok(p) => render_t0t1(&p),
            Err(_) => render_grouped(x, "qa", 2, "q", 2),
        },
    }
}
