//! The thirty types of weak del Pezzo surfaces of degree 4 obtained by
//! blowing up five essentially distinct points, with their negative curves.
//!
//! A type is labelled `(n, σ, l)`: `n` the number of points infinitely near
//! to another, `σ` the root system of the (-2)-curves, `l` the number of
//! (-1)-curves. Two types sharing a label are told apart by `(a)`/`(b)`.

mod data;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::classes::{is_exceptional, is_root};
use crate::cone::{alpha_degree, verify_certificate, waldschmidt, Certificate, Rational};
use crate::config::{Multiplicities, SurfaceConfig};
use crate::error::{Error, Result};
use crate::lattice::{format_class, parse_class, DivisorClass};

use data::{RawType, DEGENERATIONS, TYPES};

/// Number of blown-up points for every type.
pub const POINTS: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dp4Label {
    pub infinitely_near: usize,
    /// Dynkin symbols such as `2A1A3`; empty for no roots.
    pub sigma: String,
    pub lines: usize,
    pub variant: Option<char>,
}

impl fmt::Display for Dp4Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sigma = if self.sigma.is_empty() { "∅" } else { &self.sigma };
        write!(f, "({},{},{})", self.infinitely_near, sigma, self.lines)?;
        if let Some(v) = self.variant {
            write!(f, "({v})")?;
        }
        Ok(())
    }
}

impl FromStr for Dp4Label {
    type Err = Error;

    /// Accepts `(2,A4,3)(a)`, `2,A4,3,a`, subscript-free symbols, and
    /// `∅`, `0` or nothing for the empty root system.
    fn from_str(text: &str) -> Result<Self> {
        let err = |reason: &str| Error::parse("type label", text, reason);
        let cleaned: String = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '(' || c == ')' { ',' } else { c })
            .collect();
        let parts: Vec<&str> = cleaned.split(',').filter(|p| !p.is_empty()).collect();
        let (n, sigma, l, variant) = match parts.as_slice() {
            [n, s, l] => (*n, *s, *l, None),
            [n, s, l, v] => (*n, *s, *l, Some(*v)),
            [n, l] if cleaned.contains(",,") => (*n, "", *l, None),
            _ => return Err(err("expected (n,sigma,l) with an optional (a)/(b)")),
        };
        let sigma = match sigma {
            "∅" | "0" | "empty" => String::new(),
            s => s.to_ascii_uppercase(),
        };
        if !sigma.is_empty() {
            dynkin_rank(&sigma).map_err(|_| err("unknown Dynkin symbol"))?;
        }
        let variant = match variant {
            None => None,
            Some(v) => {
                let mut chars = v.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) if c.is_ascii_alphabetic() => Some(c.to_ascii_lowercase()),
                    _ => return Err(err("variant must be a single letter")),
                }
            }
        };
        Ok(Dp4Label {
            infinitely_near: n.parse().map_err(|_| err("n is not an integer"))?,
            sigma,
            lines: l.parse().map_err(|_| err("l is not an integer"))?,
            variant,
        })
    }
}

/// Sum of the ranks of the Dynkin symbols, e.g. `2A1A3 -> 5`.
pub fn dynkin_rank(sigma: &str) -> Result<usize> {
    let err = |reason: &str| Error::parse("Dynkin symbol", sigma, reason);
    let bytes = sigma.as_bytes();
    let mut total = 0;
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let mult: usize = if i == start { 1 } else { sigma[start..i].parse().map_err(|_| err("bad multiplicity"))? };
        let kind = *bytes.get(i).ok_or_else(|| err("missing A/D/E"))?;
        if !matches!(kind, b'A' | b'D' | b'E') {
            return Err(err("expected A, D or E"));
        }
        i += 1;
        let rs = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if rs == i {
            return Err(err("missing rank"));
        }
        let rank: usize = sigma[rs..i].parse().map_err(|_| err("bad rank"))?;
        total += mult * rank;
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degeneration {
    pub target: Dp4Label,
    /// The target type is uncertain; checked and reported, never asserted.
    pub flagged: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dp4Type {
    pub label: Dp4Label,
    pub roots: Vec<DivisorClass>,
    pub lines: Vec<DivisorClass>,
    /// Index pairs into `roots` followed by `lines`; `i < j`.
    pub edges: Vec<(usize, usize)>,
    pub degenerates_to: Vec<Degeneration>,
    pub expected_alpha_hat: Rational,
}

impl Dp4Type {
    /// Roots then lines.
    pub fn nodes(&self) -> Vec<&DivisorClass> {
        self.roots.iter().chain(&self.lines).collect()
    }

    /// The surface whose negative curves are the roots and lines.
    pub fn config(&self) -> SurfaceConfig {
        let neg = self.roots.iter().chain(&self.lines).cloned().collect();
        SurfaceConfig::new(POINTS, neg)
    }

    /// Differences between the listed edges and the pairing: pairs whose
    /// pairing is outside `{0, 1}` or disagrees with the adjacency.
    pub fn adjacency_mismatches(&self) -> Vec<String> {
        let nodes = self.nodes();
        let edges: BTreeSet<_> = self.edges.iter().copied().collect();
        let mut out = Vec::new();
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                let p = nodes[i].dot(nodes[j]);
                let drawn = edges.contains(&(i, j));
                if !(p == BigInt::from(0) || p == BigInt::one()) || (p == BigInt::one()) != drawn {
                    out.push(format!(
                        "{} {} - {}: pairing {p}, edge {}",
                        self.label,
                        nodes[i],
                        nodes[j],
                        if drawn { "listed" } else { "absent" }
                    ));
                }
            }
        }
        out
    }

    /// Count and class-type consistency: `|lines| = l`, the root count is
    /// the Dynkin rank, roots are roots and lines are exceptional.
    pub fn shape_mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.lines.len() != self.label.lines {
            out.push(format!("{}: {} lines listed", self.label, self.lines.len()));
        }
        let rank = dynkin_rank(&self.label.sigma).unwrap_or(usize::MAX);
        if self.roots.len() != rank {
            out.push(format!("{}: {} roots for Dynkin rank {rank}", self.label, self.roots.len()));
        }
        for c in self.roots.iter().filter(|c| !is_root(c)) {
            out.push(format!("{}: {c} is not a root", self.label));
        }
        for c in self.lines.iter().filter(|c| !is_exceptional(c)) {
            out.push(format!("{}: {c} is not exceptional", self.label));
        }
        out
    }

    pub fn to_json_value(&self) -> Value {
        let names = |v: &[DivisorClass]| v.iter().map(format_class).collect::<Vec<_>>();
        let nodes = self.nodes();
        json!({
            "label": self.label.to_string(),
            "roots": names(&self.roots),
            "lines": names(&self.lines),
            "edges": self.edges.iter().map(|&(i, j)| [format_class(nodes[i]), format_class(nodes[j])]).collect::<Vec<_>>(),
            "degenerates_to": self.degenerates_to.iter().map(|d| json!({
                "label": d.target.to_string(),
                "flagged": d.flagged,
            })).collect::<Vec<_>>(),
            "expected_alpha_hat": self.expected_alpha_hat.to_string(),
        })
    }
}

fn build(raw: &RawType) -> Dp4Type {
    let parse_all = |s: &str| -> Vec<DivisorClass> {
        s.split_whitespace()
            .map(|t| parse_class(t, POINTS).expect("catalog class"))
            .collect()
    };
    let label: Dp4Label = raw.label.parse().expect("catalog label");
    let roots = parse_all(raw.roots);
    let lines = parse_all(raw.lines);
    let nodes: Vec<DivisorClass> = roots.iter().chain(&lines).cloned().collect();
    let index = |name: &str| {
        let c = parse_class(name, POINTS).expect("catalog edge");
        nodes.iter().position(|n| *n == c).expect("edge endpoint is listed")
    };
    let mut edges: Vec<(usize, usize)> = if raw.edges.is_empty() {
        let mut e = Vec::new();
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                if nodes[i].dot(&nodes[j]) == BigInt::one() {
                    e.push((i, j));
                }
            }
        }
        e
    } else {
        raw.edges
            .split_whitespace()
            .map(|e| {
                let (a, b) = e.split_once('-').expect("edge a-b");
                let (i, j) = (index(a), index(b));
                (i.min(j), i.max(j))
            })
            .collect()
    };
    edges.sort_unstable();
    edges.dedup();
    let degenerates_to = DEGENERATIONS
        .iter()
        .filter(|(g, _, _)| *g == raw.label)
        .map(|(_, s, flagged)| Degeneration {
            target: s.parse().expect("catalog label"),
            flagged: *flagged,
        })
        .collect();
    Dp4Type {
        label,
        roots,
        lines,
        edges,
        degenerates_to,
        expected_alpha_hat: Rational::new(raw.alpha_hat.0.into(), raw.alpha_hat.1.into()),
    }
}

/// All types in the order `(1,D5,1)`, ..., `(5,A1,12)`, `(5,∅,16)`.
pub fn catalog() -> Vec<Dp4Type> {
    TYPES.iter().map(build).collect()
}

/// Looks a type up by label.
pub fn find(label: &str) -> Result<Dp4Type> {
    let want: Dp4Label = label.parse()?;
    catalog()
        .into_iter()
        .find(|t| t.label == want)
        .ok_or_else(|| Error::Argument(format!("unknown type {want}")))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub label: Dp4Label,
    pub alpha_hat: Rational,
    pub expected: Rational,
    pub certificate: Certificate,
    pub verified: bool,
}

impl TableRow {
    pub fn matches(&self) -> bool {
        self.alpha_hat == self.expected
    }
}

/// `m = (1,1,1,1,1)` on every type.
pub fn compute_table() -> Result<Vec<TableRow>> {
    catalog().iter().map(compute_row).collect()
}

pub fn compute_row(t: &Dp4Type) -> Result<TableRow> {
    let cfg = t.config();
    let w = waldschmidt(&cfg, &Multiplicities::uniform(POINTS, 1))?;
    let certificate = w.certificate.expect("nonzero multiplicities carry a certificate");
    Ok(TableRow {
        label: t.label.clone(),
        verified: verify_certificate(&certificate, &cfg),
        alpha_hat: w.value,
        expected: t.expected_alpha_hat.clone(),
        certificate,
    })
}

/// Types whose computed value differs from the recorded one.
pub fn reproduction_failures(table: &[TableRow]) -> Vec<String> {
    table
        .iter()
        .filter(|r| !r.matches() || !r.verified)
        .map(|r| {
            format!(
                "{}: computed {}, recorded {}{}",
                r.label,
                r.alpha_hat,
                r.expected,
                if r.verified { "" } else { ", certificate rejected" }
            )
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerationCheck {
    pub general: Dp4Label,
    pub special: Dp4Label,
    pub general_value: Rational,
    pub special_value: Rational,
    pub flagged: bool,
}

impl DegenerationCheck {
    /// The value can only drop under specialization.
    pub fn passes(&self) -> bool {
        self.special_value <= self.general_value
    }
}

pub fn check_degenerations() -> Result<Vec<DegenerationCheck>> {
    check_degenerations_with(&compute_table()?)
}

pub fn check_degenerations_with(table: &[TableRow]) -> Result<Vec<DegenerationCheck>> {
    let value = |l: &Dp4Label| {
        table
            .iter()
            .find(|r| &r.label == l)
            .map(|r| r.alpha_hat.clone())
            .ok_or_else(|| Error::Argument(format!("type {l} missing from table")))
    };
    let mut out = Vec::new();
    for t in catalog() {
        for d in &t.degenerates_to {
            out.push(DegenerationCheck {
                general_value: value(&t.label)?,
                special_value: value(&d.target)?,
                general: t.label.clone(),
                special: d.target.clone(),
                flagged: d.flagged,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub lower: Rational,
    pub upper: Rational,
    /// Labels whose value leaves `[lower, upper]`.
    pub outside: Vec<Dp4Label>,
    pub values: BTreeSet<Rational>,
}

impl BoundsReport {
    pub fn passes(&self) -> bool {
        self.outside.is_empty()
    }
}

/// `r/3 = 5/3 <= alpha_hat <= 2`, the upper end being the value of the
/// general type `(5,∅,16)`.
pub fn check_bounds() -> Result<BoundsReport> {
    Ok(check_bounds_with(&compute_table()?))
}

pub fn check_bounds_with(table: &[TableRow]) -> BoundsReport {
    let lower = Rational::new(BigInt::from(POINTS), BigInt::from(3));
    let upper = Rational::from_integer(BigInt::from(2));
    let outside = table
        .iter()
        .filter(|r| r.alpha_hat < lower || r.alpha_hat > upper)
        .map(|r| r.label.clone())
        .collect();
    BoundsReport {
        lower,
        upper,
        outside,
        values: table.iter().map(|r| r.alpha_hat.clone()).collect(),
    }
}

/// `alpha_hat >= (alpha + 1) / 2` for the reduced scheme of each type.
pub fn chudnovsky_table() -> Result<Vec<(Dp4Label, u64, bool)>> {
    catalog()
        .iter()
        .map(|t| {
            let cfg = t.config();
            let m = Multiplicities::uniform(POINTS, 1);
            let alpha = alpha_degree(&cfg, &m)?;
            let hat = waldschmidt(&cfg, &m)?.value;
            let ok = hat * Rational::from_integer(2.into()) >= Rational::from_integer((alpha + 1).into());
            Ok((t.label.clone(), alpha, ok))
        })
        .collect()
}

/// The whole catalog as a JSON array.
pub fn export_json() -> Value {
    Value::Array(catalog().iter().map(Dp4Type::to_json_value).collect())
}
