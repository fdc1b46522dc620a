//! Monomial ideals in a polynomial ring over named variables.
//!
//! Ideals are kept as minimal generating sets sorted lexicographically with
//! larger exponents of earlier variables first, e.g. `x^4, x^3*y, y^6`.

use std::fmt;

use num_bigint::BigInt;

use crate::cone::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial {
            exponents: vec![0; n],
        }
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    fn without(&self, v: usize) -> Monomial {
        let mut m = self.clone();
        m.exponents[v] = 0;
        m
    }

    pub fn display<'a>(&'a self, vars: &'a [String]) -> impl fmt::Display + 'a {
        MonomialDisplay { mono: self, vars }
    }
}

struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    vars: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .mono
            .exponents
            .iter()
            .zip(self.vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

/// A monomial ideal given by its minimal generators; no generators is the
/// zero ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: Vec<String>,
    gens: Vec<Monomial>,
}

fn valid_var(v: &str) -> bool {
    let mut chars = v.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic())
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, minimalized.
    pub fn new(vars: Vec<String>, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.exponents.len() != vars.len()) {
            return Err(Error::Dimension {
                left: g.exponents.len(),
                right: vars.len(),
            });
        }
        Ok(Self::minimalize(vars, gens))
    }

    pub fn minimalize(vars: Vec<String>, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::new();
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort_by(|a, b| b.cmp(a));
        MonomialIdeal { vars, gens: kept }
    }

    pub fn zero(vars: Vec<String>) -> Self {
        MonomialIdeal { vars, gens: Vec::new() }
    }

    pub fn unit(vars: Vec<String>) -> Self {
        let n = vars.len();
        MonomialIdeal {
            vars,
            gens: vec![Monomial::one(n)],
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Parses `x^2, x*y, y^3`, optionally preceded by a `[x,y,z]` header.
    /// Without a header, variables are declared in order of first use.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if let Some(rest) = trimmed.strip_prefix('[') {
            let (header, body) = rest
                .split_once(']')
                .ok_or_else(|| Error::parse("monomial ideal", text, "unclosed variable header"))?;
            let vars: Vec<String> = header
                .split(',')
                .map(|v| v.trim().to_string())
                .filter(|v| !v.is_empty())
                .collect();
            return Self::parse_with_vars(body, &vars);
        }
        let mut vars: Vec<String> = Vec::new();
        for token in trimmed.split([',', '*']) {
            let name = token.split('^').next().unwrap_or("").trim();
            if valid_var(name) && !vars.iter().any(|v| v == name) {
                vars.push(name.to_string());
            }
        }
        Self::parse_with_vars(trimmed, &vars)
    }

    /// Parses generators over a fixed variable list. `0` or nothing is the
    /// zero ideal; `1` is the unit ideal.
    pub fn parse_with_vars(text: &str, vars: &[String]) -> Result<Self> {
        let err = |reason: String| Error::parse("monomial ideal", text, reason);
        for (i, v) in vars.iter().enumerate() {
            if !valid_var(v) {
                return Err(err(format!("invalid variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(err(format!("variable {v} declared twice")));
            }
        }
        let n = vars.len();
        let body = text.trim();
        if body.is_empty() || body == "0" {
            return Ok(Self::zero(vars.to_vec()));
        }
        let mut gens = Vec::new();
        for term in body.split(',') {
            let term = term.trim();
            if term.is_empty() {
                return Err(err("empty generator".into()));
            }
            let mut mono = Monomial::one(n);
            if term != "1" {
                for factor in term.split('*') {
                    let factor = factor.trim();
                    let (name, exp) = match factor.split_once('^') {
                        Some((b, e)) => (
                            b.trim(),
                            e.trim()
                                .parse::<u32>()
                                .map_err(|_| err(format!("bad exponent in {factor:?}")))?,
                        ),
                        None => (factor, 1),
                    };
                    let idx = vars
                        .iter()
                        .position(|v| v == name)
                        .ok_or_else(|| err(format!("unknown variable {name:?}")))?;
                    mono.exponents[idx] += exp;
                }
            }
            gens.push(mono);
        }
        Ok(Self::minimalize(vars.to_vec(), gens))
    }

    fn compatible(&self, other: &MonomialIdeal) -> Result<()> {
        if self.vars.len() != other.vars.len() {
            return Err(Error::Dimension {
                left: self.vars.len(),
                right: other.vars.len(),
            });
        }
        if self.vars != other.vars {
            return Err(Error::Argument(format!(
                "variable lists differ: [{}] vs [{}]",
                self.vars.join(","),
                other.vars.join(",")
            )));
        }
        Ok(())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.compatible(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)))
            .collect();
        Ok(Self::minimalize(self.vars.clone(), gens))
    }

    /// `I^m`; `I^0` is the unit ideal.
    pub fn power(&self, m: u32) -> MonomialIdeal {
        let mut acc = Self::unit(self.vars.clone());
        for _ in 0..m {
            acc = acc.product(self).expect("same variables");
        }
        acc
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.compatible(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(Self::minimalize(self.vars.clone(), gens))
    }

    pub fn contains(&self, mono: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(mono))
    }

    /// Containment of ideals.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// `I : v^∞`, by deleting the variable `v` from every generator.
    pub fn saturate_variable(&self, v: usize) -> MonomialIdeal {
        Self::minimalize(self.vars.clone(), self.gens.iter().map(|g| g.without(v)).collect())
    }

    /// `I : m^∞` for the ideal `m` generated by all variables.
    pub fn saturate_irrelevant(&self) -> MonomialIdeal {
        if self.vars.is_empty() {
            return self.clone();
        }
        (0..self.vars.len())
            .map(|v| self.saturate_variable(v))
            .reduce(|a, b| a.intersect(&b).expect("same variables"))
            .expect("at least one variable")
    }

    /// `(I^m)^sat`, the symbolic power when `I` defines a zero-dimensional
    /// scheme.
    pub fn symbolic_power(&self, m: u32) -> Result<MonomialIdeal> {
        if m < 1 {
            return Err(Error::Argument("symbolic power needs m >= 1".into()));
        }
        Ok(self.power(m).saturate_irrelevant())
    }

    /// Least degree of a nonzero element.
    pub fn alpha(&self) -> Result<u32> {
        self.gens
            .iter()
            .map(Monomial::degree)
            .min()
            .ok_or_else(|| Error::Argument("alpha of the zero ideal".into()))
    }

    /// `min_{1 <= m <= max_m} alpha(I^(m)) / m`, an upper bound for the
    /// Waldschmidt constant.
    pub fn waldschmidt_estimate(&self, max_m: u32) -> Result<Rational> {
        if max_m < 1 {
            return Err(Error::Argument("estimate needs max_m >= 1".into()));
        }
        let mut best: Option<Rational> = None;
        for m in 1..=max_m {
            let a = self.symbolic_power(m)?.alpha()?;
            let q = Rational::new(BigInt::from(a), BigInt::from(m));
            if best.as_ref().is_none_or(|b| q < *b) {
                best = Some(q);
            }
        }
        Ok(best.expect("max_m >= 1"))
    }

    /// Parses one monomial over this ideal's variables.
    pub fn monomial(&self, text: &str) -> Result<Monomial> {
        let i = Self::parse_with_vars(text, &self.vars)?;
        match i.gens.as_slice() {
            [g] => Ok(g.clone()),
            _ => Err(Error::parse("monomial", text, "expected a single monomial")),
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.vars))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> Vec<String> {
        ["x", "y", "z"].map(String::from).to_vec()
    }

    fn ideal(s: &str) -> MonomialIdeal {
        MonomialIdeal::parse_with_vars(s, &xyz()).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let i = MonomialIdeal::parse("x^2, x*y, y^3").unwrap();
        assert_eq!(i.vars(), ["x", "y"]);
        assert_eq!(i.to_string(), "x^2, x*y, y^3");
        let h = MonomialIdeal::parse("[x,y,z] y*z, x").unwrap();
        assert_eq!(h.vars(), ["x", "y", "z"]);
        assert_eq!(h.to_string(), "x, y*z");
        assert!(MonomialIdeal::parse("x^a").is_err());
        assert!(MonomialIdeal::parse_with_vars("w", &xyz()).is_err());
        assert!(MonomialIdeal::parse("[x,x] x").is_err());
        assert!(ideal("0").is_zero());
        assert_eq!(ideal("1, x").to_string(), "1");
    }

    #[test]
    fn minimal_generators() {
        let i = ideal("x^4, x^3*y, x^2*y^3, x^2*y^2, x*y^4, y^6");
        assert_eq!(i.to_string(), "x^4, x^3*y, x^2*y^2, x*y^4, y^6");
    }

    #[test]
    fn powers_and_intersections() {
        assert_eq!(ideal("x, y^2").power(3).to_string(), "x^3, x^2*y^2, x*y^4, y^6");
        assert_eq!(ideal("x").intersect(&ideal("y")).unwrap().to_string(), "x*y");
        assert_eq!(ideal("x, y").power(0).to_string(), "1");
        let other = MonomialIdeal::parse("x").unwrap();
        assert!(matches!(ideal("x").product(&other), Err(Error::Dimension { .. })));
    }

    #[test]
    fn saturation() {
        let i = ideal("x^2, x*y, y^3");
        assert_eq!(
            i.power(2).saturate_irrelevant().to_string(),
            "x^4, x^3*y, x^2*y^2, x*y^4, y^6"
        );
        let j3 = ideal("x^3, x^2*y^2, x*y^4, y^6");
        assert_eq!(j3.saturate_irrelevant(), j3);
        // (x*z, y*z) = (z) ∩ (x, y) has no component supported at the origin
        let xz = ideal("x*z, y*z");
        assert_eq!(xz.saturate_irrelevant(), xz);
        assert_eq!(xz.saturate_variable(2).to_string(), "x, y");
        // an embedded origin component is removed
        let emb = ideal("x^2, x*y, x*z");
        assert_eq!(emb.saturate_irrelevant().to_string(), "x");
    }

    #[test]
    fn symbolic_powers() {
        let i = ideal("x^2, x*y, y^3");
        assert_eq!(i.symbolic_power(2).unwrap().to_string(), "x^4, x^3*y, x^2*y^2, x*y^4, y^6");
        let j = ideal("x, y^2");
        assert_eq!(j.symbolic_power(3).unwrap().to_string(), "x^3, x^2*y^2, x*y^4, y^6");
        assert_eq!(i.symbolic_power(1).unwrap(), i.saturate_irrelevant());
        assert!(i.symbolic_power(0).is_err());
    }

    #[test]
    fn strict_containment() {
        let j3 = ideal("x^3, x^2*y^2, x*y^4, y^6");
        let i2 = ideal("x^4, x^3*y, x^2*y^2, x*y^4, y^6");
        let x3 = j3.monomial("x^3").unwrap();
        assert!(j3.contains(&x3));
        assert!(!i2.contains(&x3));
        assert!(j3.contains_ideal(&i2));
    }

    #[test]
    fn initial_degrees() {
        assert_eq!(ideal("x^2, x*y, y^3").alpha().unwrap(), 2);
        assert_eq!(ideal("x^3").alpha().unwrap(), 3);
        assert!(ideal("0").alpha().is_err());
        assert_eq!(
            ideal("x, y^2").waldschmidt_estimate(6).unwrap(),
            Rational::from_integer(1.into())
        );
        assert_eq!(
            ideal("x^2, x*y, y^3").waldschmidt_estimate(4).unwrap(),
            Rational::from_integer(2.into())
        );
        assert!(ideal("x").waldschmidt_estimate(0).is_err());
    }
}
