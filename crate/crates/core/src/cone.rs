//! Exact linear programming over the effective cone.
//!
//! The Waldschmidt constant of `Z = sum m_i p_i` is
//! `min { t : t L - E_Z in Eff(X) }`, computed as the LP
//!
//! ```text
//! minimize  sum_g lambda_g deg(g)
//! subject   sum_g lambda_g g_i = -m_i   (i = 1..r),   lambda >= 0
//! ```
//!
//! over the effective generators `g`. The dual multipliers `y` give a nef
//! class `F = L - sum y_i E_i` with `F . (t* L - E_Z) = 0`, which together
//! with the primal decomposition certifies `t*` exactly.

mod lp;

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

pub use lp::{minimize, LpOutcome, LpSolution, Rational};

use crate::config::{effective_generators, proximity_check, Multiplicities, SurfaceConfig};
use crate::error::{Error, Result};
use crate::lattice::{canonical_class, format_class, parse_class, DivisorClass};

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn check_ranks(d: &DivisorClass, gens: &[DivisorClass]) -> Result<()> {
    for g in gens {
        if g.rank() != d.rank() {
            return Err(Error::Dimension {
                left: g.rank(),
                right: d.rank(),
            });
        }
    }
    Ok(())
}

/// Nonnegative rational `lambda` with `sum lambda_g g = d`, if one exists.
pub fn cone_membership(d: &DivisorClass, gens: &[DivisorClass]) -> Result<Option<Vec<Rational>>> {
    check_ranks(d, gens)?;
    let rows: Vec<Vec<Rational>> = (0..=d.rank())
        .map(|i| gens.iter().map(|g| int(g.coeff(i).clone())).collect())
        .collect();
    let b: Vec<Rational> = d.coeffs().iter().map(|v| int(v.clone())).collect();
    let cost = vec![Rational::zero(); gens.len()];
    Ok(match minimize(&cost, &rows, &b) {
        LpOutcome::Optimal(sol) => Some(sol.x),
        _ => None,
    })
}

/// The class `A = 3*2^r L - sum 2^(r-i) E_i`, positive on every candidate
/// negative class and on `-K`.
pub fn bounding_class(r: usize) -> DivisorClass {
    let mut v = vec![BigInt::from(3) << r];
    v.extend((1..=r).map(|i| -(BigInt::one() << (r - i))));
    DivisorClass::from_vec_unchecked(v)
}

/// Nonnegative integer `lambda` with `sum lambda_g g = d`, if one exists.
///
/// Exhaustive depth-first search. Each `lambda_g` is bounded by
/// `W . residual / W . g` for a class `W` nonnegative on every generator and
/// positive on `g`; the bounding class [`bounding_class`] serves when it is
/// positive on all generators, otherwise `L` and `-K` are tried per
/// generator. A generator with no such witness is a [`Error::BoundingFailure`].
pub fn monoid_membership(d: &DivisorClass, gens: &[DivisorClass]) -> Result<Option<Vec<BigInt>>> {
    check_ranks(d, gens)?;
    let r = d.rank();
    let mut witnesses = vec![bounding_class(r), DivisorClass::line(r)?];
    if let Ok(k) = canonical_class(r) {
        witnesses.push(-&k);
    }
    witnesses.retain(|w| gens.iter().all(|g| !w.dot(g).is_negative()));

    let to_i64 = |c: &DivisorClass| -> Result<Vec<i64>> {
        c.coeffs()
            .iter()
            .map(|v| {
                v.to_i64()
                    .ok_or_else(|| Error::Argument(format!("coefficient of {c} too large for search")))
            })
            .collect()
    };
    let target = to_i64(d)?;
    let mut search_gens = Vec::with_capacity(gens.len());
    for (idx, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let w = witnesses
            .iter()
            .position(|w| w.dot(g).is_positive())
            .ok_or_else(|| Error::BoundingFailure(g.clone()))?;
        search_gens.push(SearchGen {
            idx,
            coeffs: to_i64(g)?,
            witness: w,
        });
    }
    let witness_vals: Vec<Vec<i64>> = witnesses.iter().map(to_i64).collect::<Result<_>>()?;
    let mut search = MonoidSearch::new(search_gens, witness_vals, r + 1);
    Ok(search.run(&target).map(|sol| {
        let mut out = vec![BigInt::zero(); gens.len()];
        for (g, l) in search.gens.iter().zip(sol) {
            out[g.idx] = BigInt::from(l);
        }
        out
    }))
}

struct SearchGen {
    idx: usize,
    coeffs: Vec<i64>,
    witness: usize,
}

struct MonoidSearch {
    gens: Vec<SearchGen>,
    witnesses: Vec<Vec<i64>>,
    /// Coordinates whose last touching generator is `gens[k]`.
    completes: Vec<Vec<usize>>,
    /// Coordinates touched by no generator.
    untouched: Vec<usize>,
    /// `pos[k][c]`, `neg[k][c]`: some generator at index `>= k` has a
    /// positive (negative) entry in coordinate `c`.
    pos: Vec<Vec<bool>>,
    neg: Vec<Vec<bool>>,
    failed: HashSet<(usize, Vec<i64>)>,
}

fn dot(w: &[i64], v: &[i64]) -> i64 {
    w[0] * v[0] - w[1..].iter().zip(&v[1..]).map(|(a, b)| a * b).sum::<i64>()
}

impl MonoidSearch {
    fn new(mut gens: Vec<SearchGen>, witnesses: Vec<Vec<i64>>, dim: usize) -> Self {
        // Generators with many nonzero entries first, so coordinates tied to
        // sparse generators complete late and force their multipliers.
        gens.sort_by_key(|g| std::cmp::Reverse(g.coeffs.iter().filter(|a| **a != 0).count()));
        let n = gens.len();
        let mut last = vec![None; dim];
        for (k, g) in gens.iter().enumerate() {
            for (slot, a) in last.iter_mut().zip(&g.coeffs) {
                if *a != 0 {
                    *slot = Some(k);
                }
            }
        }
        let mut completes = vec![Vec::new(); n];
        let mut untouched = Vec::new();
        for (c, l) in last.iter().enumerate() {
            match l {
                Some(k) => completes[*k].push(c),
                None => untouched.push(c),
            }
        }
        let mut pos = vec![vec![false; dim]; n + 1];
        let mut neg = vec![vec![false; dim]; n + 1];
        for k in (0..n).rev() {
            for c in 0..dim {
                pos[k][c] = pos[k + 1][c] || gens[k].coeffs[c] > 0;
                neg[k][c] = neg[k + 1][c] || gens[k].coeffs[c] < 0;
            }
        }
        MonoidSearch {
            gens,
            witnesses,
            completes,
            untouched,
            pos,
            neg,
            failed: HashSet::new(),
        }
    }

    fn run(&mut self, target: &[i64]) -> Option<Vec<i64>> {
        if self.untouched.iter().any(|&c| target[c] != 0) {
            return None;
        }
        let mut chosen = Vec::with_capacity(self.gens.len());
        let mut residual = target.to_vec();
        if self.go(0, &mut residual, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }

    fn feasible_signs(&self, k: usize, residual: &[i64]) -> bool {
        residual.iter().enumerate().all(|(c, &v)| {
            (v <= 0 || self.pos[k][c]) && (v >= 0 || self.neg[k][c])
        }) && self.witnesses.iter().all(|w| dot(w, residual) >= 0)
    }

    fn go(&mut self, k: usize, residual: &mut Vec<i64>, chosen: &mut Vec<i64>) -> bool {
        if k == self.gens.len() {
            return residual.iter().all(|v| *v == 0);
        }
        if !self.feasible_signs(k, residual) {
            return false;
        }
        let key = (k, residual.clone());
        if self.failed.contains(&key) {
            return false;
        }
        let g = &self.gens[k];
        let w = &self.witnesses[g.witness];
        let upper = dot(w, residual) / dot(w, &g.coeffs);

        // A completed coordinate forces the multiplier.
        let mut forced: Option<i64> = None;
        for &c in &self.completes[k] {
            let (num, den) = (residual[c], g.coeffs[c]);
            if num % den != 0 {
                self.failed.insert(key);
                return false;
            }
            let l = num / den;
            if l < 0 || forced.is_some_and(|f| f != l) {
                self.failed.insert(key);
                return false;
            }
            forced = Some(l);
        }
        let range: Vec<i64> = match forced {
            Some(l) if l <= upper => vec![l],
            Some(_) => Vec::new(),
            None => (0..=upper).rev().collect(),
        };
        let coeffs = self.gens[k].coeffs.clone();
        for l in range {
            for (v, a) in residual.iter_mut().zip(&coeffs) {
                *v -= l * a;
            }
            chosen.push(l);
            if self.go(k + 1, residual, chosen) {
                return true;
            }
            chosen.pop();
            for (v, a) in residual.iter_mut().zip(&coeffs) {
                *v += l * a;
            }
        }
        self.failed.insert(key);
        false
    }
}

/// `F . g >= 0` for every effective generator of `cfg`.
pub fn is_nef(f: &DivisorClass, cfg: &SurfaceConfig) -> Result<bool> {
    let gens = effective_generators(cfg)?;
    check_ranks(f, &gens)?;
    Ok(gens.iter().all(|g| !f.dot(g).is_negative()))
}

/// Proof that `d/m` is the Waldschmidt constant: an integral decomposition of
/// `D = d L - m E_Z` over effective generators and a nonzero nef `F` with
/// `D . F = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub multiplicities: Multiplicities,
    pub d: BigInt,
    pub m: BigInt,
    pub decomposition: Vec<(DivisorClass, Rational)>,
    pub nef: DivisorClass,
}

impl Certificate {
    pub fn rank(&self) -> usize {
        self.multiplicities.len()
    }

    /// `D = d L - m E_Z`.
    pub fn divisor(&self) -> DivisorClass {
        let ez = self.multiplicities.exceptional_class();
        &DivisorClass::line(self.rank()).expect("rank checked").scale(&self.d) - &ez.scale(&self.m)
    }

    pub fn value(&self) -> Rational {
        Rational::new(self.d.clone(), self.m.clone())
    }

    pub fn to_json_value(&self) -> Value {
        let number = |n: &BigInt| match n.to_i64() {
            Some(v) => json!(v),
            None => json!(n.to_string()),
        };
        json!({
            "r": self.rank(),
            "multiplicities": self.multiplicities.0,
            "d": number(&self.d),
            "m": number(&self.m),
            "decomposition": self.decomposition.iter().map(|(g, c)| json!({
                "generator": format_class(g),
                "coefficient": c.to_string(),
            })).collect::<Vec<_>>(),
            "nef": format_class(&self.nef),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::parse("certificate", text, e.to_string()))?;
        Self::from_json_value(&v)
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let bad = |reason: &str| Error::parse("certificate", &v.to_string(), reason);
        let integer = |key: &str| -> Result<BigInt> {
            match &v[key] {
                Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| bad(&format!("{key} is not an integer"))),
                Value::String(s) => s.parse().map_err(|_| bad(&format!("{key} is not an integer"))),
                _ => Err(bad(&format!("missing {key}"))),
            }
        };
        let multiplicities: Multiplicities = serde_json::from_value(v["multiplicities"].clone())
            .map_err(|e| bad(&e.to_string()))?;
        let r = multiplicities.len();
        if let Some(rr) = v["r"].as_u64() {
            if rr as usize != r {
                return Err(bad("r disagrees with the multiplicities"));
            }
        }
        let mut decomposition = Vec::new();
        for term in v["decomposition"].as_array().ok_or_else(|| bad("missing decomposition"))? {
            let g = term["generator"].as_str().ok_or_else(|| bad("generator is not a string"))?;
            let c = term["coefficient"]
                .as_str()
                .ok_or_else(|| bad("coefficient is not a string"))?;
            let c: Rational = c.parse().map_err(|_| bad("coefficient is not p/q"))?;
            decomposition.push((parse_class(g, r)?, c));
        }
        let nef = parse_class(v["nef"].as_str().ok_or_else(|| bad("missing nef"))?, r)?;
        Ok(Certificate {
            multiplicities,
            d: integer("d")?,
            m: integer("m")?,
            decomposition,
            nef,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaldschmidtValue {
    pub value: Rational,
    /// `None` exactly when every multiplicity is zero.
    pub certificate: Option<Certificate>,
}

fn check_multiplicities(cfg: &SurfaceConfig, m: &Multiplicities) -> Result<()> {
    if m.len() != cfg.r {
        return Err(Error::Dimension {
            left: m.len(),
            right: cfg.r,
        });
    }
    if let Some(p) = &cfg.proximity {
        let check = proximity_check(m, p)?;
        if !check.passes {
            return Err(Error::ProximityViolation { slack: check.slack });
        }
    }
    Ok(())
}

fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// The Waldschmidt constant of `m` on `cfg`, with a certificate.
pub fn waldschmidt(cfg: &SurfaceConfig, m: &Multiplicities) -> Result<WaldschmidtValue> {
    let gens = effective_generators(cfg)?;
    check_multiplicities(cfg, m)?;
    waldschmidt_over(&gens, m)
}

/// The LP optimum over an explicit generator list, without validation or
/// proximity checks. The generators must all have rank `m.len()`.
pub fn waldschmidt_over(gens: &[DivisorClass], m: &Multiplicities) -> Result<WaldschmidtValue> {
    let r = m.len();
    if let Some(g) = gens.iter().find(|g| g.rank() != r) {
        return Err(Error::Dimension {
            left: g.rank(),
            right: r,
        });
    }
    if m.is_zero() {
        return Ok(WaldschmidtValue {
            value: Rational::zero(),
            certificate: None,
        });
    }
    let cost: Vec<Rational> = gens.iter().map(|g| int(g.degree().clone())).collect();
    let rows: Vec<Vec<Rational>> = (1..=r)
        .map(|i| gens.iter().map(|g| int(g.coeff(i).clone())).collect())
        .collect();
    let b: Vec<Rational> = m.0.iter().map(|&mi| -int(mi)).collect();
    let sol = match minimize(&cost, &rows, &b) {
        LpOutcome::Optimal(sol) => sol,
        LpOutcome::Infeasible => {
            return Err(Error::Infeasible(format!(
                "no t with t L - E_Z in the cone of the {} generators",
                gens.len()
            )))
        }
        LpOutcome::Unbounded => {
            return Err(Error::Infeasible("objective unbounded below".into()));
        }
    };
    let value = sol.objective.clone();

    let scale = lcm_of_denominators(std::iter::once(&value).chain(&sol.x));
    let scale_q = int(scale.clone());
    let decomposition = gens
        .iter()
        .zip(&sol.x)
        .filter(|(_, l)| !l.is_zero())
        .map(|(g, l)| (g.clone(), l * &scale_q))
        .collect();

    // F = L - sum y_i E_i, cleared of denominators.
    let f_scale = lcm_of_denominators(&sol.y);
    let f_scale_q = int(f_scale.clone());
    let mut coeffs = vec![f_scale.clone()];
    coeffs.extend(sol.y.iter().map(|y| (y * &f_scale_q).to_integer()));
    let content = coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let nef = DivisorClass::from_vec_unchecked(coeffs.into_iter().map(|c| c / &content).collect());

    let certificate = Certificate {
        multiplicities: m.clone(),
        d: (&value * &scale_q).to_integer(),
        m: scale,
        decomposition,
        nef,
    };
    Ok(WaldschmidtValue {
        value,
        certificate: Some(certificate),
    })
}

/// Rechecks a certificate from its fields alone.
///
/// True iff `d, m > 0`, every coefficient is nonnegative, every generator is
/// an effective generator of `cfg`, the decomposition sums to `d L - m E_Z`,
/// `F` is nonzero and nef, and `D . F = 0`.
pub fn verify_certificate(cert: &Certificate, cfg: &SurfaceConfig) -> bool {
    let Ok(gens) = effective_generators(cfg) else {
        return false;
    };
    let r = cfg.r;
    if cert.rank() != r || cert.nef.rank() != r || !cert.d.is_positive() || !cert.m.is_positive() {
        return false;
    }
    let allowed: BTreeSet<_> = gens.iter().collect();
    let mut sum = vec![Rational::zero(); r + 1];
    for (g, c) in &cert.decomposition {
        if c.is_negative() || g.rank() != r || !allowed.contains(g) {
            return false;
        }
        for (s, a) in sum.iter_mut().zip(g.coeffs()) {
            *s += c * int(a.clone());
        }
    }
    let d = cert.divisor();
    if sum.iter().zip(d.coeffs()).any(|(s, a)| *s != int(a.clone())) {
        return false;
    }
    if cert.nef.is_zero() {
        return false;
    }
    gens.iter().all(|g| !cert.nef.dot(g).is_negative()) && d.dot(&cert.nef).is_zero()
}

/// Least `d` with `d L - E_Z` in the integer monoid of effective generators.
///
/// Searched upward from `ceil(alpha_hat)` to `sum m_i + 1`.
pub fn alpha_degree(cfg: &SurfaceConfig, m: &Multiplicities) -> Result<u64> {
    let w = waldschmidt(cfg, m)?;
    if m.is_zero() {
        return Ok(0);
    }
    let gens = effective_generators(cfg)?;
    let start = w.value.ceil().to_integer().to_u64().unwrap_or(0);
    let stop = m.total() + 1;
    for d in start..=stop.max(start) {
        if monoid_membership(&m.divisor(&BigInt::from(d)), &gens)?.is_some() {
            return Ok(d);
        }
    }
    Err(Error::Infeasible(format!(
        "no degree in {start}..={stop} carries d L - E_Z in the monoid"
    )))
}

/// `alpha_hat >= (alpha + 1) / 2`; all-zero multiplicities pass by convention.
pub fn chudnovsky_check(cfg: &SurfaceConfig, m: &Multiplicities) -> Result<bool> {
    if m.is_zero() {
        check_multiplicities(cfg, m)?;
        effective_generators(cfg)?;
        return Ok(true);
    }
    let hat = waldschmidt(cfg, m)?.value;
    let alpha = alpha_degree(cfg, m)?;
    Ok(hat * int(2) >= int(alpha + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ProximityMatrix;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn d5() -> SurfaceConfig {
        SurfaceConfig::from_strs(5, &["E_12", "E_23", "E_34", "E_45", "L_123", "E_5"]).unwrap()
    }

    fn ones(r: usize) -> Multiplicities {
        Multiplicities::uniform(r, 1)
    }

    fn cls(s: &str, r: usize) -> DivisorClass {
        parse_class(s, r).unwrap()
    }

    #[test]
    fn cone_membership_examples() {
        let gens = effective_generators(&d5()).unwrap();
        let two = ones(5).divisor(&BigInt::from(2));
        let lam = cone_membership(&two, &gens).unwrap().unwrap();
        // generators in order E_12 E_23 E_34 E_45 L_123 E_5
        assert_eq!(lam, [1, 2, 3, 2, 2, 1].map(|n| q(n, 1)).to_vec());
        let one = ones(5).divisor(&BigInt::from(1));
        assert!(cone_membership(&one, &gens).unwrap().is_none());
        let zero = DivisorClass::zero(5).unwrap();
        let lam = cone_membership(&zero, &gens).unwrap().unwrap();
        assert!(lam.iter().all(Zero::is_zero));
        assert!(cone_membership(&DivisorClass::zero(4).unwrap(), &gens).is_err());
    }

    #[test]
    fn monoid_membership_d5() {
        let gens = effective_generators(&d5()).unwrap();
        let d = ones(5).divisor(&BigInt::from(5)).scale(&BigInt::one());
        let d = &d - &ones(5).exceptional_class().scale(&BigInt::from(2));
        let lam = monoid_membership(&d, &gens).unwrap().unwrap();
        assert_eq!(lam, [2, 4, 6, 3, 5, 0].map(BigInt::from).to_vec());
        assert!(monoid_membership(&ones(5).divisor(&BigInt::from(1)), &gens)
            .unwrap()
            .is_none());
    }

    #[test]
    fn monoid_bounding_failure() {
        // -L pairs negatively with every witness.
        let gens = vec![-&DivisorClass::line(2).unwrap()];
        let d = DivisorClass::zero(2).unwrap();
        assert!(matches!(monoid_membership(&d, &gens), Err(Error::BoundingFailure(_))));
    }

    #[test]
    fn bounding_class_is_positive_on_candidates() {
        for r in 2..=8 {
            let a = bounding_class(r);
            for c in crate::classes::candidate_union(r).unwrap() {
                assert!(a.dot(&c) >= BigInt::one(), "{c}");
            }
            assert!(a.dot(&-&canonical_class(r).unwrap()) >= BigInt::one());
        }
    }

    #[test]
    fn nef_examples() {
        let k = canonical_class(5).unwrap();
        assert!(is_nef(&-&k, &d5()).unwrap());
        assert!(is_nef(&DivisorClass::line(5).unwrap(), &d5()).unwrap());
        assert!(!is_nef(&cls("E_1", 5), &d5()).unwrap());
    }

    #[test]
    fn d5_value_and_certificate() {
        let w = waldschmidt(&d5(), &ones(5)).unwrap();
        assert_eq!(w.value, q(5, 3));
        let cert = w.certificate.unwrap();
        assert_eq!((cert.d.clone(), cert.m.clone()), (BigInt::from(5), BigInt::from(3)));
        assert!(verify_certificate(&cert, &d5()));
        let back = Certificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn zero_multiplicities() {
        let w = waldschmidt(&d5(), &Multiplicities::uniform(5, 0)).unwrap();
        assert_eq!(w.value, q(0, 1));
        assert!(w.certificate.is_none());
        assert_eq!(alpha_degree(&d5(), &Multiplicities::uniform(5, 0)).unwrap(), 0);
        assert!(chudnovsky_check(&d5(), &Multiplicities::uniform(5, 0)).unwrap());
    }

    #[test]
    fn three_general_points() {
        let cfg = SurfaceConfig::from_strs(3, &["E_1", "E_2", "E_3", "L_12", "L_13", "L_23"]).unwrap();
        let w = waldschmidt(&cfg, &ones(3)).unwrap();
        assert_eq!(w.value, q(3, 2));
        assert!(verify_certificate(w.certificate.as_ref().unwrap(), &cfg));
        assert_eq!(alpha_degree(&cfg, &ones(3)).unwrap(), 2);
    }

    #[test]
    fn two_general_points() {
        let cfg = SurfaceConfig::from_strs(2, &["E_1", "E_2", "L_12"]).unwrap();
        let w = waldschmidt(&cfg, &Multiplicities(vec![2, 1])).unwrap();
        assert_eq!(w.value, q(2, 1));
        let cert = w.certificate.unwrap();
        assert_eq!(cert.nef, DivisorClass::from_i64s(&[1, -1, 0]).unwrap());
        assert!(verify_certificate(&cert, &cfg));
    }

    #[test]
    fn small_ranks() {
        let w = waldschmidt(&SurfaceConfig::new(1, vec![]), &Multiplicities(vec![3])).unwrap();
        assert_eq!(w.value, q(3, 1));
        let w = waldschmidt(&SurfaceConfig::new(0, vec![]), &Multiplicities(vec![])).unwrap();
        assert_eq!(w.value, q(0, 1));
    }

    #[test]
    fn refusals() {
        let chain = ProximityMatrix::from_pairs(2, &[(2, 1)]).unwrap();
        let cfg = SurfaceConfig::from_strs(2, &["E_12", "E_2", "L_12"])
            .unwrap()
            .with_proximity(chain);
        assert!(matches!(
            waldschmidt(&cfg, &Multiplicities(vec![1, 2])),
            Err(Error::ProximityViolation { .. })
        ));
        assert_eq!(waldschmidt(&cfg, &Multiplicities(vec![1, 1])).unwrap().value, q(1, 1));

        let empty = SurfaceConfig::new(3, vec![]);
        assert!(matches!(waldschmidt(&empty, &ones(3)), Err(Error::Infeasible(_))));
        let bad = SurfaceConfig::new(3, vec![DivisorClass::line(3).unwrap()]);
        assert!(matches!(waldschmidt(&bad, &ones(3)), Err(Error::Configuration(_))));
        assert!(matches!(waldschmidt(&d5(), &ones(4)), Err(Error::Dimension { .. })));
    }

    #[test]
    fn tampered_certificates_fail() {
        let cert = waldschmidt(&d5(), &ones(5)).unwrap().certificate.unwrap();
        let mut zero_f = cert.clone();
        zero_f.nef = DivisorClass::zero(5).unwrap();
        assert!(!verify_certificate(&zero_f, &d5()));
        let mut wrong_d = cert.clone();
        wrong_d.d += 1;
        assert!(!verify_certificate(&wrong_d, &d5()));
        let mut foreign = cert.clone();
        foreign.decomposition[0].0 = cls("E_1", 5);
        assert!(!verify_certificate(&foreign, &d5()));
        let mut not_nef = cert;
        not_nef.nef = cls("E_5", 5);
        assert!(!verify_certificate(&not_nef, &d5()));
    }

    #[test]
    fn eight_points_uses_anticanonical() {
        let cfg = SurfaceConfig::new(8, vec![]);
        assert_eq!(waldschmidt(&cfg, &ones(8)).unwrap().value, q(3, 1));
        let cfg = SurfaceConfig::from_strs(8, &["E_1", "E_2", "E_3", "E_4", "E_5", "E_6", "E_7", "E_8"]).unwrap();
        // only -K has negative E_i coefficients: t = 3
        assert_eq!(waldschmidt(&cfg, &ones(8)).unwrap().value, q(3, 1));
    }
}
