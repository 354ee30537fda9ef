//! The output document shared by the JSON and table formats.

use std::fmt;

use hopfchar::{Polynomial, Rational};
use num::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// An integer that falls back to a decimal string once it leaves `i64`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Integer {
    Small(i64),
    Big(String),
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(n) => write!(f, "{n}"),
            Integer::Big(s) => f.write_str(s),
        }
    }
}

impl Integer {
    fn from_big(n: &num::BigInt) -> Self {
        n.to_i64().map_or_else(|| Integer::Big(n.to_string()), Integer::Small)
    }

    fn is_negative(&self) -> bool {
        match self {
            Integer::Small(n) => *n < 0,
            Integer::Big(s) => s.starts_with('-'),
        }
    }

    fn abs_text(&self) -> String {
        self.to_string().trim_start_matches('-').to_string()
    }

    fn is_one(&self) -> bool {
        matches!(self, Integer::Small(1))
    }
}

/// `[numerator, denominator]`.
pub type Coefficient = [Integer; 2];

pub fn coefficient(c: &Rational) -> Coefficient {
    [Integer::from_big(c.numer()), Integer::from_big(c.denom())]
}

fn coefficient_text(c: &Coefficient) -> String {
    if c[1].is_one() {
        c[0].to_string()
    } else {
        format!("{}/{}", c[0], c[1])
    }
}

fn abs_coefficient_text(c: &Coefficient) -> String {
    let num = c[0].abs_text();
    if c[1].is_one() {
        num
    } else {
        format!("{num}/{}", c[1])
    }
}

/// One term `[[num, den], {generator: exponent}]`; generators keep the
/// order of their alphabet.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term(pub Coefficient, pub Map<String, Value>);

/// A basis element: a list of terms.
pub type Element = Vec<Term>;

/// Converts a polynomial, naming generator `i` by `name(i)`.
pub fn element(p: &Polynomial, name: impl Fn(usize) -> String) -> Element {
    p.terms()
        .map(|(m, c)| {
            let monomial = m.support().map(|(i, e)| (name(i), Value::from(e))).collect();
            Term(coefficient(c), monomial)
        })
        .collect()
}

/// Converts a polynomial using its own generator names.
pub fn plain_element(p: &Polynomial) -> Element {
    let alphabet = p.alphabet().clone();
    element(p, |i| alphabet.generator(i).name.clone())
}

fn monomial_text(m: &Map<String, Value>) -> String {
    if m.is_empty() {
        return "1".to_string();
    }
    m.iter()
        .map(|(g, e)| match e.as_u64() {
            Some(1) => g.clone(),
            _ => format!("{g}^{e}"),
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Text of an element in the polynomial grammar.
pub fn element_text(e: &[Term]) -> String {
    if e.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, Term(c, m)) in e.iter().enumerate() {
        let negative = c[0].is_negative();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let abs = abs_coefficient_text(c);
        if m.is_empty() {
            out.push_str(&abs);
        } else if abs == "1" {
            out.push_str(&monomial_text(m));
        } else {
            out.push_str(&format!("{abs}*{}", monomial_text(m)));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// A named rational value, such as a characteristic number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Number {
    pub name: String,
    pub value: Coefficient,
}

impl Number {
    pub fn new(name: impl Into<String>, value: &Rational) -> Self {
        Number {
            name: name.into(),
            value: coefficient(value),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultBody {
    pub dimension: usize,
    pub basis: Vec<Element>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub numbers: Vec<Number>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub query: Map<String, Value>,
    pub result: ResultBody,
    pub checks: Vec<Check>,
}

impl Document {
    pub fn new(query: Map<String, Value>) -> Self {
        Document {
            query,
            result: ResultBody {
                dimension: 0,
                basis: Vec::new(),
                numbers: Vec::new(),
            },
            checks: Vec::new(),
        }
    }

    /// Sets the basis and its dimension.
    pub fn with_basis(mut self, basis: Vec<Element>) -> Self {
        self.result.dimension = basis.len();
        self.result.basis = basis;
        self
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn command(&self) -> &str {
        self.query.get("command").and_then(Value::as_str).unwrap_or("")
    }

    /// The table format.
    pub fn render_table(&self) -> String {
        let mut lines = Vec::new();
        let basis: Vec<String> = self.result.basis.iter().map(|e| element_text(e)).collect();
        match self.command() {
            "lclass" => lines.extend(basis),
            "mmm test" => {
                if let Some(verdict) = self.checks.first() {
                    lines.push(verdict.detail.clone());
                }
                lines.extend(basis.iter().map(|b| format!("  {b}")));
            }
            "nearprim verify" | "hopf check" | "bundle hirzebruch" | "bundle custom" => {
                let passed = self.checks.iter().filter(|c| c.pass).count();
                lines.push(format!("{passed}/{} checks pass", self.checks.len()));
            }
            _ => {
                if basis.is_empty() {
                    lines.push(format!("dim {}", self.result.dimension));
                } else {
                    lines.push(format!("dim {}: {}", self.result.dimension, basis.join(", ")));
                }
            }
        }
        if self.command() != "mmm test" {
            for c in &self.checks {
                let status = if c.pass { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    lines.push(format!("{status} {}", c.name));
                } else {
                    lines.push(format!("{status} {}: {}", c.name, c.detail));
                }
            }
        }
        for n in &self.result.numbers {
            lines.push(format!("{} = {}", n.name, coefficient_text(&n.value)));
        }
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

/// Renders a rational like the polynomial grammar does.
pub fn rational_text(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else if c.is_negative() {
        format!("-{}/{}", c.numer().abs(), c.denom())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfchar::gradedalg::{parse_polynomial, GeneratorAlphabet};

    #[test]
    fn element_text_matches_polynomial_display() {
        let alpha = GeneratorAlphabet::indexed("p", 4, 4).shared();
        for text in ["p1^2 - 2*p2", "-1/45*p1^2 + 7/45*p2", "3", "-p1*p3^2 + 1/2"] {
            let p = parse_polynomial(text, &alpha).unwrap();
            assert_eq!(element_text(&plain_element(&p)), p.to_string());
        }
    }

    #[test]
    fn big_coefficients_become_strings() {
        let c = Rational::new(num::BigInt::from(10).pow(30), num::BigInt::from(7));
        let coef = coefficient(&c);
        assert!(matches!(coef[0], Integer::Big(_)));
        assert_eq!(serde_json::to_string(&coef).unwrap(), "[\"1000000000000000000000000000000\",7]");
        assert_eq!(rational_text(&-c), "-1000000000000000000000000000000/7");
    }
}
