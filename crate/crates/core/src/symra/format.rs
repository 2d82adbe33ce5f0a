use std::collections::BTreeMap;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{parse_rational, LinearForm, Monomial, Polynomial, RatFunc, Rational, Variable};
use crate::{CsmError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Plain,
    Latex,
    Json,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    c: String,
    m: BTreeMap<String, u32>,
}

#[derive(Serialize, Deserialize)]
struct JsonForm {
    #[serde(rename = "const")]
    constant: i64,
    coef: BTreeMap<String, i64>,
}

#[derive(Serialize, Deserialize)]
struct JsonFactor {
    form: JsonForm,
    mult: u32,
}

#[derive(Serialize, Deserialize)]
struct JsonRat {
    num: Vec<JsonTerm>,
    den: Vec<JsonFactor>,
    pref: String,
}

impl std::fmt::Display for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&plain(self))
    }
}

impl RatFunc {
    pub fn serialize(&self, format: Format) -> String {
        match format {
            Format::Plain => plain(self),
            Format::Latex => latex(self),
            Format::Json => self.to_json().to_string(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = JsonRat {
            num: self
                .numerator()
                .terms()
                .rev()
                .map(|(m, c)| JsonTerm {
                    c: c.to_string(),
                    m: m.pairs().iter().map(|(v, e)| (v.to_string(), *e)).collect(),
                })
                .collect(),
            den: self
                .denominator()
                .map(|(l, mult)| JsonFactor {
                    form: JsonForm {
                        constant: l.constant(),
                        coef: l.coefficients().iter().map(|(v, c)| (v.to_string(), *c)).collect(),
                    },
                    mult,
                })
                .collect(),
            pref: self.prefactor().to_string(),
        };
        serde_json::to_value(doc).expect("plain data serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<RatFunc> {
        let doc: JsonRat =
            serde_json::from_value(value.clone()).map_err(|e| CsmError::Parse(e.to_string()))?;
        let coeff = |s: &str| {
            parse_rational(s).ok_or_else(|| CsmError::Parse(format!("bad rational `{s}`")))
        };
        let mut terms = Vec::with_capacity(doc.num.len());
        for t in &doc.num {
            let mut pairs = Vec::new();
            for (name, e) in &t.m {
                pairs.push((Variable::parse(name)?, *e));
            }
            terms.push((Monomial::from_pairs(pairs), coeff(&t.c)?));
        }
        let mut den = Vec::with_capacity(doc.den.len());
        for f in &doc.den {
            let mut coef = Vec::new();
            for (name, c) in &f.form.coef {
                coef.push((Variable::parse(name)?, *c));
            }
            den.push((LinearForm::new(f.form.constant, coef), f.mult));
        }
        RatFunc::from_parts_keep(coeff(&doc.pref)?, Polynomial::from_terms(terms), den)
    }
}

/// Parses the JSON text produced by `serialize(_, Format::Json)`.
pub fn parse_json(text: &str) -> Result<RatFunc> {
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CsmError::Parse(e.to_string()))?;
    RatFunc::from_json(&v)
}

fn plain(r: &RatFunc) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let num = r.expanded_numerator();
    if r.is_polynomial() {
        return num.to_string();
    }
    let num_s = if num.len() > 1 {
        format!("({num})")
    } else {
        num.to_string()
    };
    let factors: Vec<String> = r
        .denominator()
        .map(|(l, m)| {
            if m == 1 {
                format!("({l})")
            } else {
                format!("({l})^{m}")
            }
        })
        .collect();
    let single = factors.len() == 1 && r.denominator().next().unwrap().1 == 1;
    if single {
        format!("{num_s}/{}", factors[0])
    } else {
        format!("{num_s}/({})", factors.join("*"))
    }
}

fn latex_var(v: Variable) -> String {
    let s = v.to_string();
    format!("{}_{{{}}}", &s[..1], &s[1..])
}

fn latex_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

fn latex_monomial(m: &Monomial) -> String {
    m.pairs()
        .iter()
        .map(|(v, e)| {
            if *e > 1 {
                format!("{}^{{{e}}}", latex_var(*v))
            } else {
                latex_var(*v)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub(crate) fn latex_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if m.is_one() {
            out.push_str(&latex_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&latex_monomial(m));
        } else {
            out.push_str(&format!("{} {}", latex_rational(&mag), latex_monomial(m)));
        }
    }
    out
}

pub(crate) fn latex_linear(l: &LinearForm) -> String {
    latex_polynomial(&l.to_polynomial())
}

pub(crate) fn latex_denominator<'a>(
    factors: impl Iterator<Item = (&'a LinearForm, u32)>,
) -> String {
    factors
        .map(|(l, m)| {
            if m == 1 {
                format!("({})", latex_constant_first(l))
            } else {
                format!("({})^{{{m}}}", latex_constant_first(l))
            }
        })
        .collect::<String>()
}

fn latex_constant_first(l: &LinearForm) -> String {
    if l.constant() == 0 {
        return latex_linear(l);
    }
    let rest = LinearForm::new(0, l.coefficients().iter().copied());
    let body = latex_linear(&rest);
    match body.strip_prefix('-') {
        Some(tail) => format!("{} - {}", l.constant(), tail),
        None => format!("{} + {}", l.constant(), body),
    }
}

fn latex(r: &RatFunc) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let num = latex_polynomial(&r.expanded_numerator());
    if r.is_polynomial() {
        return num;
    }
    format!("\\frac{{{num}}}{{{}}}", latex_denominator(r.denominator()))
}
