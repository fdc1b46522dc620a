//! Surface configurations: proximity among essentially distinct points, the
//! list of negative curves, validation and effective-cone generators.
//!
//! A [`SurfaceConfig`] is a formal lattice object. Validation checks the
//! necessary conditions only (negative square, membership in the candidate
//! classes, pairwise nonnegativity); realizability by actual points is never
//! decided.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::classes::candidate_union;
use crate::error::{Error, Result};
use crate::lattice::{canonical_class, format_class, parse_class, DivisorClass, MAX_RANK};

/// `prox[j][i]` (0-based) means point `j+1` lies on the strict transform of
/// the exceptional curve over point `i+1`. Always `j > i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProximityMatrix {
    r: usize,
    prox: Vec<Vec<bool>>,
}

impl ProximityMatrix {
    /// No proximities: `r` distinct points of the plane.
    pub fn empty(r: usize) -> Self {
        ProximityMatrix {
            r,
            prox: vec![vec![false; r]; r],
        }
    }

    /// Builds the matrix from 1-based `(j, i)` pairs meaning "`p_j` is
    /// proximate to `p_i`".
    pub fn from_pairs(r: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut m = Self::empty(r);
        for &(j, i) in pairs {
            if i == 0 || j > r {
                return Err(Error::Argument(format!(
                    "proximity pair [{j},{i}] out of range 1..={r}"
                )));
            }
            if j <= i {
                return Err(Error::Argument(format!(
                    "proximity pair [{j},{i}]: a point is only proximate to earlier points"
                )));
            }
            m.prox[j - 1][i - 1] = true;
        }
        Ok(m)
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    /// Whether `p_j` is proximate to `p_i` (1-based).
    pub fn is_proximate(&self, j: usize, i: usize) -> bool {
        self.prox[j - 1][i - 1]
    }

    /// 1-based `(j, i)` pairs, ordered by `j` then `i`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.r {
            for i in 0..self.r {
                if self.prox[j][i] {
                    out.push((j + 1, i + 1));
                }
            }
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.prox.iter().flatten().all(|p| !p)
    }

    /// 1-based indices of points proximate to more than two earlier points.
    pub fn overfull_rows(&self) -> Vec<usize> {
        (0..self.r)
            .filter(|&j| self.prox[j].iter().filter(|p| **p).count() > 2)
            .map(|j| j + 1)
            .collect()
    }
}

/// Nonnegative multiplicities `m_1..m_r` of a fat point scheme.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multiplicities(pub Vec<u64>);

impl Multiplicities {
    pub fn uniform(r: usize, m: u64) -> Self {
        Multiplicities(vec![m; r])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|m| *m == 0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn scaled(&self, c: u64) -> Self {
        Multiplicities(self.0.iter().map(|m| m * c).collect())
    }

    /// The class `E_Z = sum m_i e_i`.
    pub fn exceptional_class(&self) -> DivisorClass {
        let mut v = vec![BigInt::from(0)];
        v.extend(self.0.iter().map(|&m| BigInt::from(m)));
        DivisorClass::from_vec_unchecked(v)
    }

    /// `d L - E_Z`.
    pub fn divisor(&self, d: &BigInt) -> DivisorClass {
        let mut v = vec![d.clone()];
        v.extend(self.0.iter().map(|&m| -BigInt::from(m)));
        DivisorClass::from_vec_unchecked(v)
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = vec![0; self.0.len()];
        for (i, &m) in self.0.iter().enumerate() {
            out[perm[i]] = m;
        }
        Multiplicities(out)
    }
}

impl FromStr for Multiplicities {
    type Err = Error;

    /// Comma-separated integers, e.g. `1,1,2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Multiplicities(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::parse("multiplicities", s, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Multiplicities)
    }
}

impl fmt::Display for Multiplicities {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceConfig {
    pub r: usize,
    pub proximity: Option<ProximityMatrix>,
    pub neg_curves: Vec<DivisorClass>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub class: Option<DivisorClass>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.class {
            Some(c) => write!(f, "{c}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

/// Empty `violations` means the configuration is valid; warnings never
/// invalidate it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn violation(&mut self, class: Option<&DivisorClass>, message: impl Into<String>) {
        self.violations.push(Violation {
            class: class.cloned(),
            message: message.into(),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            f.write_str("valid")?;
        }
        for (n, v) in self.violations.iter().enumerate() {
            if n > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl SurfaceConfig {
    /// A configuration with no proximities.
    pub fn new(r: usize, neg_curves: Vec<DivisorClass>) -> Self {
        SurfaceConfig {
            r,
            proximity: None,
            neg_curves,
        }
    }

    /// Parses each class with the lattice grammar.
    pub fn from_strs(r: usize, classes: &[&str]) -> Result<Self> {
        let neg = classes
            .iter()
            .map(|s| parse_class(s, r))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(r, neg))
    }

    pub fn with_proximity(mut self, p: ProximityMatrix) -> Self {
        self.proximity = Some(p);
        self
    }

    /// Relabels point `i` as `perm[i-1] + 1` in every class, the proximity
    /// pairs and nothing else.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let proximity = match &self.proximity {
            None => None,
            Some(p) => {
                let pairs: Vec<_> = p
                    .pairs()
                    .into_iter()
                    .map(|(j, i)| (perm[j - 1] + 1, perm[i - 1] + 1))
                    .collect();
                Some(ProximityMatrix::from_pairs(self.r, &pairs)?)
            }
        };
        Ok(SurfaceConfig {
            r: self.r,
            proximity,
            neg_curves: self.neg_curves.iter().map(|c| c.permuted(perm)).collect(),
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ConfigJson = serde_json::from_str(text)
            .map_err(|e| Error::parse("surface configuration", text, e.to_string()))?;
        raw.into_config()
    }

    pub fn to_json(&self) -> String {
        let raw = ConfigJson {
            r: self.r,
            proximity: self
                .proximity
                .as_ref()
                .map(|p| p.pairs().into_iter().map(|(j, i)| [j, i]).collect()),
            negative_curves: self
                .neg_curves
                .iter()
                .map(|c| ClassJson::Named(format_class(c)))
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("configuration serializes")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigJson {
    r: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    proximity: Option<Vec<[usize; 2]>>,
    negative_curves: Vec<ClassJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ClassJson {
    Named(String),
    Raw(Vec<i64>),
}

impl ConfigJson {
    fn into_config(self) -> Result<SurfaceConfig> {
        let r = self.r;
        if r > MAX_RANK {
            return Err(Error::UnsupportedRank {
                rank: r,
                expected: "0..=8",
            });
        }
        let mut neg = Vec::with_capacity(self.negative_curves.len());
        for c in self.negative_curves {
            let class = match c {
                ClassJson::Named(s) => parse_class(&s, r)?,
                ClassJson::Raw(v) => {
                    let class = DivisorClass::from_i64s(&v)?;
                    if class.rank() != r {
                        return Err(Error::Dimension {
                            left: class.rank(),
                            right: r,
                        });
                    }
                    class
                }
            };
            neg.push(class);
        }
        let proximity = match self.proximity {
            None => None,
            Some(pairs) => {
                let pairs: Vec<_> = pairs.into_iter().map(|[j, i]| (j, i)).collect();
                Some(ProximityMatrix::from_pairs(r, &pairs)?)
            }
        };
        Ok(SurfaceConfig {
            r,
            proximity,
            neg_curves: neg,
        })
    }
}

/// Checks every configuration invariant and collects the failures.
pub fn validate_config(cfg: &SurfaceConfig) -> ValidationReport {
    let mut report = ValidationReport::default();
    let r = cfg.r;
    if r > MAX_RANK {
        report.violation(None, format!("rank {r} outside 0..=8"));
        return report;
    }
    if let Some(p) = &cfg.proximity {
        if p.rank() != r {
            report.violation(
                None,
                format!("proximity matrix has rank {} but configuration has rank {r}", p.rank()),
            );
        }
        for j in p.overfull_rows() {
            report
                .warnings
                .push(format!("point {j} is proximate to more than two earlier points"));
        }
    }

    let candidates = if r >= 2 {
        Some(candidate_union(r).expect("rank in 2..=8"))
    } else {
        None
    };
    let mut seen = BTreeSet::new();
    let mut well_formed = Vec::new();
    for c in &cfg.neg_curves {
        if c.rank() != r {
            report.violation(Some(c), format!("class has rank {} instead of {r}", c.rank()));
            continue;
        }
        if !seen.insert(c.clone()) {
            report.violation(Some(c), "duplicate negative curve");
            continue;
        }
        if !c.self_intersection().is_negative() {
            report.violation(
                Some(c),
                format!("nonnegative square {}", c.self_intersection()),
            );
        } else if let Some(cands) = &candidates {
            if !cands.contains(c) {
                report.violation(Some(c), "not a candidate negative class");
            }
        }
        well_formed.push(c);
    }
    for (a, c) in well_formed.iter().enumerate() {
        for d in &well_formed[a + 1..] {
            let p = c.dot(d);
            if p.is_negative() {
                report.violation(
                    Some(c),
                    format!("pairs to {p} with {d}; distinct negative curves pair nonnegatively"),
                );
            }
        }
    }
    report
}

/// `Ê_i = e_i - sum_{j proximate to i} e_j`, for `i = 1..r`.
pub fn strict_transform_components(p: &ProximityMatrix) -> Vec<DivisorClass> {
    let r = p.rank();
    (1..=r)
        .map(|i| {
            let mut v = vec![0i64; r + 1];
            v[i] = 1;
            for (j, slot) in v.iter_mut().enumerate().skip(i + 1) {
                if p.is_proximate(j, i) {
                    *slot = -1;
                }
            }
            DivisorClass::from_i64s_unchecked(&v)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProximityCheck {
    /// `n_i = m_i - sum_{j proximate to i} m_j`.
    pub slack: Vec<i128>,
    pub passes: bool,
}

pub fn proximity_check(m: &Multiplicities, p: &ProximityMatrix) -> Result<ProximityCheck> {
    if m.len() != p.rank() {
        return Err(Error::Dimension {
            left: m.len(),
            right: p.rank(),
        });
    }
    let r = p.rank();
    let slack: Vec<i128> = (1..=r)
        .map(|i| {
            let later: i128 = (i + 1..=r)
                .filter(|&j| p.is_proximate(j, i))
                .map(|j| m.0[j - 1] as i128)
                .sum();
            m.0[i - 1] as i128 - later
        })
        .collect();
    let passes = slack.iter().all(|s| *s >= 0);
    Ok(ProximityCheck { slack, passes })
}

/// Generators of the effective cone.
///
/// `r = 0`: `L`; `r = 1`: `L - E_1, E_1`; `2..=7`: the negative curves;
/// `r = 8`: the negative curves and `-K`.
pub fn effective_generators(cfg: &SurfaceConfig) -> Result<Vec<DivisorClass>> {
    let report = validate_config(cfg);
    if !report.is_valid() {
        return Err(Error::Configuration(report));
    }
    let r = cfg.r;
    Ok(match r {
        0 => vec![DivisorClass::line(0)?],
        1 => vec![
            DivisorClass::from_i64s_unchecked(&[1, -1]),
            DivisorClass::basis(1, 1)?,
        ],
        8 => {
            let mut g = cfg.neg_curves.clone();
            g.push(-&canonical_class(8)?);
            g
        }
        _ => cfg.neg_curves.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d5() -> SurfaceConfig {
        SurfaceConfig::from_strs(5, &["E_12", "E_23", "E_34", "E_45", "L_123", "E_5"]).unwrap()
    }

    #[test]
    fn catalog_config_is_valid() {
        let rep = validate_config(&d5());
        assert!(rep.is_valid(), "{rep}");
    }

    #[test]
    fn rejects_nonnegative_square() {
        let cfg = SurfaceConfig::new(3, vec![DivisorClass::line(3).unwrap()]);
        let rep = validate_config(&cfg);
        assert!(!rep.is_valid());
        assert!(rep.violations[0].message.contains("nonnegative square"));
        assert_eq!(rep.violations[0].class, Some(DivisorClass::line(3).unwrap()));
    }

    #[test]
    fn rejects_negative_pairing() {
        let a = DivisorClass::from_i64s(&[0, 1, -1]).unwrap();
        let b = DivisorClass::from_i64s(&[0, -1, 1]).unwrap();
        // a . (-a) = 2, so the pair is rejected by membership, not by pairing
        let rep = validate_config(&SurfaceConfig::new(2, vec![a.clone(), b.clone()]));
        assert!(!rep.is_valid());
        assert_eq!(rep.violations.len(), 1);
        assert_eq!(rep.violations[0].class, Some(b));
        assert!(rep.violations[0].message.contains("not a candidate"));

        let rep = validate_config(&SurfaceConfig::from_strs(3, &["E_1", "E_12"]).unwrap());
        assert_eq!(rep.violations.len(), 1);
        assert!(rep.violations[0].message.contains("pairs to -1"), "{rep}");
    }

    #[test]
    fn rejects_duplicates_and_noncandidates() {
        let cfg = SurfaceConfig::from_strs(4, &["E_1", "E_1"]).unwrap();
        assert!(validate_config(&cfg).violations[0].message.contains("duplicate"));
        // -2 curve that is not in any family
        let odd = DivisorClass::from_i64s(&[0, 1, 1, -2, 0]).unwrap();
        let rep = validate_config(&SurfaceConfig::new(4, vec![odd]));
        assert!(rep.violations[0].message.contains("not a candidate"));
    }

    #[test]
    fn overfull_proximity_is_a_warning() {
        let p = ProximityMatrix::from_pairs(4, &[(4, 1), (4, 2), (4, 3)]).unwrap();
        let cfg = SurfaceConfig::new(4, vec![]).with_proximity(p);
        let rep = validate_config(&cfg);
        assert!(rep.is_valid());
        assert_eq!(rep.warnings.len(), 1);
    }

    #[test]
    fn proximity_pairs_must_point_backwards() {
        assert!(ProximityMatrix::from_pairs(3, &[(1, 2)]).is_err());
        assert!(ProximityMatrix::from_pairs(3, &[(4, 1)]).is_err());
    }

    #[test]
    fn strict_transforms() {
        let none = ProximityMatrix::empty(2);
        assert_eq!(
            strict_transform_components(&none),
            vec![DivisorClass::basis(2, 1).unwrap(), DivisorClass::basis(2, 2).unwrap()]
        );
        let chain = ProximityMatrix::from_pairs(2, &[(2, 1)]).unwrap();
        assert_eq!(
            strict_transform_components(&chain),
            vec![
                DivisorClass::from_i64s(&[0, 1, -1]).unwrap(),
                DivisorClass::basis(2, 2).unwrap()
            ]
        );
        let two = ProximityMatrix::from_pairs(3, &[(2, 1), (3, 1)]).unwrap();
        assert_eq!(
            strict_transform_components(&two)[0],
            DivisorClass::from_i64s(&[0, 1, -1, -1]).unwrap()
        );
    }

    #[test]
    fn proximity_inequalities() {
        let chain = ProximityMatrix::from_pairs(2, &[(2, 1)]).unwrap();
        let bad = proximity_check(&Multiplicities(vec![1, 2]), &chain).unwrap();
        assert_eq!(bad.slack, vec![-1, 2]);
        assert!(!bad.passes);
        let good = proximity_check(&Multiplicities(vec![1, 1]), &chain).unwrap();
        assert_eq!(good.slack, vec![0, 1]);
        assert!(good.passes);
        let zero = proximity_check(&Multiplicities(vec![0, 0]), &chain).unwrap();
        assert_eq!(zero.slack, vec![0, 0]);
        assert!(zero.passes);
        assert!(proximity_check(&Multiplicities(vec![1]), &chain).is_err());
    }

    #[test]
    fn generators_by_rank() {
        let g0 = effective_generators(&SurfaceConfig::new(0, vec![])).unwrap();
        assert_eq!(g0, vec![DivisorClass::line(0).unwrap()]);
        let g1 = effective_generators(&SurfaceConfig::new(1, vec![])).unwrap();
        assert_eq!(g1.len(), 2);
        assert_eq!(g1[0].to_string(), "L_1");
        assert_eq!(effective_generators(&d5()).unwrap().len(), 6);
        let g8 = effective_generators(&SurfaceConfig::from_strs(8, &["E_1"]).unwrap()).unwrap();
        assert_eq!(g8.last().unwrap(), &DivisorClass::from_i64s(&[3, -1, -1, -1, -1, -1, -1, -1, -1]).unwrap());
        let bad = SurfaceConfig::new(3, vec![DivisorClass::line(3).unwrap()]);
        assert!(matches!(effective_generators(&bad), Err(Error::Configuration(_))));
    }

    #[test]
    fn json_roundtrip() {
        let text = r#"{"r": 2, "proximity": [[2,1]], "negative_curves": ["E_12", [0,0,1], "L_12"]}"#;
        let cfg = SurfaceConfig::from_json(text).unwrap();
        assert_eq!(cfg.neg_curves.len(), 3);
        assert!(cfg.proximity.as_ref().unwrap().is_proximate(2, 1));
        let back = SurfaceConfig::from_json(&cfg.to_json()).unwrap();
        assert_eq!(back, cfg);
        assert!(SurfaceConfig::from_json(r#"{"r": 2, "negative_curves": [[0,1]]}"#).is_err());
        assert!(SurfaceConfig::from_json(r#"{"r": 9, "negative_curves": []}"#).is_err());
    }

    #[test]
    fn multiplicities_parse() {
        let m: Multiplicities = "1, 2,3".parse().unwrap();
        assert_eq!(m, Multiplicities(vec![1, 2, 3]));
        assert_eq!(m.to_string(), "1,2,3");
        assert!("1,-2".parse::<Multiplicities>().is_err());
        assert_eq!(m.divisor(&BigInt::from(4)).to_string(), "[4,-1,-2,-3]");
    }
}
