//! The odd unimodular lattice `I^{1,r}` that models the divisor class group of
//! the plane blown up at `r` essentially distinct points.
//!
//! A class is stored by its coordinates `(a0, a1, ..., ar)` in the basis
//! `e0 = L, e1 = E1, ..., er = Er`, and the intersection form is
//! `diag(1, -1, ..., -1)`.
//!
//! Classes have a compact text notation used throughout the crate:
//!
//! | text            | class                          |
//! |-----------------|--------------------------------|
//! | `L`             | `e0`                           |
//! | `K`             | `-3e0 + e1 + ... + er`         |
//! | `E_ij..`        | `ei - ej - ...`                |
//! | `L_ij..`        | `e0 - ei - ej - ...`           |
//! | `Q_ij..`        | `2e0 - ei - ej - ...`          |
//! | `C_i;j..`       | `3e0 - 2ei - ej - ...`         |
//! | `[a0,a1,...]`   | raw coordinates                |

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest number of blown-up points handled by the crate.
pub const MAX_RANK: usize = 8;

/// An integral class `a0 e0 + a1 e1 + ... + ar er`.
///
/// Ordering is lexicographic on the coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    coeffs: Vec<BigInt>,
}

impl DivisorClass {
    /// Builds a class from its `r + 1` coordinates.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.len() > MAX_RANK + 1 {
            return Err(Error::UnsupportedRank {
                rank: coeffs.len().saturating_sub(1),
                expected: "0..=8",
            });
        }
        Ok(DivisorClass { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&a| BigInt::from(a)).collect())
    }

    pub(crate) fn from_vec_unchecked(coeffs: Vec<BigInt>) -> Self {
        debug_assert!(!coeffs.is_empty() && coeffs.len() <= MAX_RANK + 1);
        DivisorClass { coeffs }
    }

    pub(crate) fn from_i64s_unchecked(coeffs: &[i64]) -> Self {
        Self::from_vec_unchecked(coeffs.iter().map(|&a| BigInt::from(a)).collect())
    }

    pub fn zero(r: usize) -> Result<Self> {
        check_rank(r)?;
        Ok(DivisorClass {
            coeffs: vec![BigInt::zero(); r + 1],
        })
    }

    /// The basis vector `e_i`; `i = 0` is the line class.
    pub fn basis(r: usize, i: usize) -> Result<Self> {
        let mut c = Self::zero(r)?;
        if i > r {
            return Err(Error::Argument(format!("basis index {i} exceeds rank {r}")));
        }
        c.coeffs[i] = BigInt::one();
        Ok(c)
    }

    pub fn line(r: usize) -> Result<Self> {
        Self::basis(r, 0)
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    /// The coefficient of `e0`, i.e. the degree against `L`.
    pub fn degree(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn pairing(&self, other: &DivisorClass) -> Result<BigInt> {
        pairing(self, other)
    }

    pub fn self_intersection(&self) -> BigInt {
        self.dot(self)
    }

    pub fn scale(&self, c: &BigInt) -> DivisorClass {
        DivisorClass {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Relabels the points: coordinate `i` moves to `perm[i - 1] + 1`.
    ///
    /// `perm` is a permutation of `0..r`.
    pub fn permuted(&self, perm: &[usize]) -> DivisorClass {
        debug_assert_eq!(perm.len(), self.rank());
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len()];
        coeffs[0] = self.coeffs[0].clone();
        for (i, &p) in perm.iter().enumerate() {
            coeffs[p + 1] = self.coeffs[i + 1].clone();
        }
        DivisorClass { coeffs }
    }

    /// Pairing without the rank check, for callers that already know the
    /// ranks agree.
    pub(crate) fn dot(&self, other: &DivisorClass) -> BigInt {
        debug_assert_eq!(self.coeffs.len(), other.coeffs.len());
        let mut acc = &self.coeffs[0] * &other.coeffs[0];
        for (a, b) in self.coeffs[1..].iter().zip(&other.coeffs[1..]) {
            acc -= a * b;
        }
        acc
    }
}

fn check_rank(r: usize) -> Result<()> {
    if r > MAX_RANK {
        return Err(Error::UnsupportedRank {
            rank: r,
            expected: "0..=8",
        });
    }
    Ok(())
}

fn check_same_rank(u: &DivisorClass, v: &DivisorClass) -> Result<()> {
    if u.rank() != v.rank() {
        return Err(Error::Dimension {
            left: u.rank(),
            right: v.rank(),
        });
    }
    Ok(())
}

/// The intersection form `a0 b0 - sum ai bi`.
pub fn pairing(u: &DivisorClass, v: &DivisorClass) -> Result<BigInt> {
    check_same_rank(u, v)?;
    Ok(u.dot(v))
}

/// The canonical class `k = -3e0 + e1 + ... + er`.
pub fn canonical_class(r: usize) -> Result<DivisorClass> {
    check_rank(r)?;
    let mut coeffs = vec![BigInt::one(); r + 1];
    coeffs[0] = BigInt::from(-3);
    Ok(DivisorClass { coeffs })
}

impl Add for &DivisorClass {
    type Output = DivisorClass;

    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(self.rank(), rhs.rank(), "adding classes of different rank");
        DivisorClass {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;

    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(self.rank(), rhs.rank(), "subtracting classes of different rank");
        DivisorClass {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;

    fn neg(self) -> DivisorClass {
        DivisorClass {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_class(self))
    }
}

/// Parses the class notation described in the module docs.
///
/// Indices are single digits in `1..=r`; every index may appear once.
pub fn parse_class(text: &str, r: usize) -> Result<DivisorClass> {
    check_rank(r)?;
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |reason: &str| Error::parse("divisor class", text, reason);

    if compact.starts_with('[') {
        let inner = compact
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| err("unterminated raw vector"))?;
        let coeffs = inner
            .split(',')
            .map(|t| t.parse::<BigInt>().map_err(|_| err("bad integer entry")))
            .collect::<Result<Vec<_>>>()?;
        if coeffs.len() != r + 1 {
            return Err(err(&format!("expected {} entries", r + 1)));
        }
        return Ok(DivisorClass { coeffs });
    }

    match compact.as_str() {
        "L" => return DivisorClass::line(r),
        "K" => return canonical_class(r),
        _ => {}
    }

    let (head, tail) = compact
        .split_once('_')
        .ok_or_else(|| err("expected L, K, a raw vector or X_digits"))?;
    let mut c = DivisorClass::zero(r)?;
    match head {
        "E" | "L" | "Q" => {
            let idx = parse_indices(tail, r, text)?;
            if idx.is_empty() {
                return Err(err("missing indices"));
            }
            match head {
                "E" => {
                    c.coeffs[idx[0]] += 1;
                    for &i in &idx[1..] {
                        c.coeffs[i] -= 1;
                    }
                }
                _ => {
                    c.coeffs[0] = BigInt::from(if head == "L" { 1 } else { 2 });
                    for &i in &idx {
                        c.coeffs[i] -= 1;
                    }
                }
            }
        }
        "C" => {
            let (double, rest) = tail
                .split_once(';')
                .ok_or_else(|| err("cubic notation needs `;` after the double point"))?;
            let mut all = parse_indices(double, r, text)?;
            if all.len() != 1 {
                return Err(err("cubic notation needs exactly one double point"));
            }
            let rest = parse_indices(rest, r, text)?;
            if rest.is_empty() {
                return Err(err("missing indices"));
            }
            all.extend(&rest);
            ensure_distinct(&all, text)?;
            c.coeffs[0] = BigInt::from(3);
            c.coeffs[all[0]] = BigInt::from(-2);
            for &i in &rest {
                c.coeffs[i] -= 1;
            }
        }
        _ => return Err(err("unknown class prefix")),
    }
    Ok(c)
}

fn parse_indices(digits: &str, r: usize, text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(digits.len());
    for ch in digits.chars() {
        let d = ch
            .to_digit(10)
            .ok_or_else(|| Error::parse("divisor class", text, "indices must be digits"))?
            as usize;
        if d == 0 || d > r {
            return Err(Error::parse(
                "divisor class",
                text,
                format!("index {d} outside 1..={r}"),
            ));
        }
        out.push(d);
    }
    ensure_distinct(&out, text)?;
    Ok(out)
}

fn ensure_distinct(idx: &[usize], text: &str) -> Result<()> {
    let mut seen = [false; MAX_RANK + 1];
    for &i in idx {
        if seen[i] {
            return Err(Error::parse("divisor class", text, format!("index {i} repeated")));
        }
        seen[i] = true;
    }
    Ok(())
}

/// Canonical spelling of a class; the inverse of [`parse_class`].
///
/// Named forms are used where one applies, with indices ascending (after the
/// leading index for `E_` and `C_`); every other class is written raw.
pub fn format_class(c: &DivisorClass) -> String {
    named_form(c).unwrap_or_else(|| raw_form(c))
}

fn raw_form(c: &DivisorClass) -> String {
    let parts: Vec<String> = c.coeffs.iter().map(|a| a.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn named_form(c: &DivisorClass) -> Option<String> {
    let one = BigInt::one();
    let minus_one = -BigInt::one();
    let a0 = &c.coeffs[0];
    let tail = &c.coeffs[1..];

    if *a0 == one && tail.iter().all(Zero::is_zero) {
        return Some("L".into());
    }
    if *a0 == BigInt::from(-3) && tail.iter().all(|a| *a == one) {
        return Some("K".into());
    }

    let digits = |pred: &dyn Fn(&BigInt) -> bool| -> String {
        tail.iter()
            .enumerate()
            .filter(|(_, a)| pred(a))
            .map(|(i, _)| char::from_digit(i as u32 + 1, 10).unwrap())
            .collect()
    };
    let only = |allowed: &[&BigInt]| tail.iter().all(|a| allowed.contains(&a));
    let zero = BigInt::zero();
    let count = |v: &BigInt| tail.iter().filter(|a| *a == v).count();

    if a0.is_zero() && count(&one) == 1 && only(&[&zero, &one, &minus_one]) {
        let lead = digits(&|a| *a == one);
        let rest = digits(&|a| *a == minus_one);
        return Some(format!("E_{lead}{rest}"));
    }
    if (*a0 == one || *a0 == BigInt::from(2)) && count(&minus_one) >= 1 && only(&[&zero, &minus_one]) {
        let head = if *a0 == one { "L" } else { "Q" };
        return Some(format!("{head}_{}", digits(&|a| *a == minus_one)));
    }
    let minus_two = BigInt::from(-2);
    if *a0 == BigInt::from(3)
        && count(&minus_two) == 1
        && count(&minus_one) >= 1
        && only(&[&zero, &minus_one, &minus_two])
    {
        let lead = digits(&|a| *a == minus_two);
        let rest = digits(&|a| *a == minus_one);
        return Some(format!("C_{lead};{rest}"));
    }
    None
}
