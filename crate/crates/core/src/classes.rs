//! Candidate negative classes, roots, exceptional classes and the Weyl group
//! action on `I^{1,r}`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{canonical_class, DivisorClass, MAX_RANK};

/// Hard cap on the size of a Weyl orbit before closure gives up.
pub const ORBIT_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    /// Exceptional curves `e_i`.
    B,
    /// Vertical classes `e_i - e_j - ...`, components of exceptional divisors.
    V,
    /// Lines through two or more points.
    L,
    /// Conics through five or more points.
    Q,
    /// Cubics with a double point through seven or more points.
    C,
    /// The extra classes that only occur at eight points.
    M8,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 6] = [
        FamilyTag::B,
        FamilyTag::V,
        FamilyTag::L,
        FamilyTag::Q,
        FamilyTag::C,
        FamilyTag::M8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::B => "B",
            FamilyTag::V => "V",
            FamilyTag::L => "L",
            FamilyTag::Q => "Q",
            FamilyTag::C => "C",
            FamilyTag::M8 => "M8",
        }
    }

    pub fn parse(s: &str) -> Option<FamilyTag> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateFamily {
    pub tag: FamilyTag,
    pub members: Vec<DivisorClass>,
}

fn rank_error(r: usize, expected: &'static str) -> Error {
    Error::UnsupportedRank { rank: r, expected }
}

/// All `k`-element subsets of `1..=r`, each ascending.
fn subsets(r: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, r: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=r {
            if r + 1 - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, r, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, r, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn class_with(r: usize, a0: i64, entries: &[(usize, i64)]) -> DivisorClass {
    let mut v = vec![0i64; r + 1];
    v[0] = a0;
    for &(i, a) in entries {
        v[i] += a;
    }
    DivisorClass::from_i64s_unchecked(&v)
}

fn minus_all(idx: &[usize]) -> Vec<(usize, i64)> {
    idx.iter().map(|&i| (i, -1)).collect()
}

/// The families of classes that may carry a negative curve on a blowup at
/// `r` essentially distinct points, `2 <= r <= 8`.
///
/// Members are deduplicated and sorted lexicographically; empty families
/// (`Q` below five points, `C` below seven, `M8` below eight) are omitted.
pub fn candidate_sets(r: usize) -> Result<Vec<CandidateFamily>> {
    if !(2..=MAX_RANK).contains(&r) {
        return Err(rank_error(r, "2..=8"));
    }
    let mut families = Vec::new();
    let mut push = |tag, members: Vec<DivisorClass>| {
        let members: Vec<_> = members.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if !members.is_empty() {
            families.push(CandidateFamily { tag, members });
        }
    };

    push(FamilyTag::B, (1..=r).map(|i| class_with(r, 0, &[(i, 1)])).collect());

    let mut vertical = Vec::new();
    let mut lines = Vec::new();
    for s in 2..=r {
        for idx in subsets(r, s) {
            let mut ent = minus_all(&idx[1..]);
            ent.push((idx[0], 1));
            vertical.push(class_with(r, 0, &ent));
            lines.push(class_with(r, 1, &minus_all(&idx)));
        }
    }
    push(FamilyTag::V, vertical);
    push(FamilyTag::L, lines);

    let conics = (5..=r)
        .flat_map(|s| subsets(r, s))
        .map(|idx| class_with(r, 2, &minus_all(&idx)))
        .collect();
    push(FamilyTag::Q, conics);

    let mut cubics = Vec::new();
    for s in 7..=r {
        for idx in subsets(r, s) {
            for &double in &idx {
                let mut ent = minus_all(&idx);
                ent.push((double, -1));
                cubics.push(class_with(r, 3, &ent));
            }
        }
    }
    push(FamilyTag::C, cubics);

    if r == 8 {
        let anti = -&canonical_class(8)?;
        let mut m8 = Vec::new();
        for idx in subsets(8, 3) {
            m8.push(&anti + &class_with(8, 1, &minus_all(&idx)));
        }
        for idx in subsets(8, 6) {
            m8.push(&anti + &class_with(8, 2, &minus_all(&idx)));
        }
        for k in 1..=8 {
            m8.push(&(&anti + &anti) - &class_with(8, 0, &[(k, 1)]));
        }
        push(FamilyTag::M8, m8);
    }
    Ok(families)
}

/// All candidate classes of rank `r`, sorted, across every family.
pub fn candidate_union(r: usize) -> Result<BTreeSet<DivisorClass>> {
    Ok(candidate_sets(r)?
        .into_iter()
        .flat_map(|f| f.members)
        .collect())
}

/// `k . c = 0` and `c . c = -2`.
pub fn is_root(c: &DivisorClass) -> bool {
    let k = canonical_class(c.rank()).expect("rank checked on construction");
    k.dot(c).is_zero() && c.self_intersection() == BigInt::from(-2)
}

/// `k . c = c . c = -1`.
pub fn is_exceptional(c: &DivisorClass) -> bool {
    let k = canonical_class(c.rank()).expect("rank checked on construction");
    let minus_one = BigInt::from(-1);
    k.dot(c) == minus_one && c.self_intersection() == minus_one
}

/// Integer vectors `(a1..ar)` with prescribed sum and sum of squares.
///
/// Depth-first, pruned with Cauchy–Schwarz on the remaining coordinates.
fn solve_sum_and_squares(r: usize, sum: i64, squares: i64, out: &mut Vec<Vec<i64>>) {
    fn go(left: usize, sum: i64, squares: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if left == 0 {
            if sum == 0 && squares == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if squares < 0 || sum * sum > left as i64 * squares {
            return;
        }
        let bound = (squares as f64).sqrt() as i64 + 1;
        for a in -bound..=bound {
            let sq = a * a;
            if sq > squares {
                continue;
            }
            cur.push(a);
            go(left - 1, sum - a, squares - sq, cur, out);
            cur.pop();
        }
    }
    go(r, sum, squares, &mut Vec::with_capacity(r), out);
}

/// Every class with `k . c = 0` and `c . c = -2`, sorted.
///
/// Cauchy–Schwarz on `sum ai = -3 a0`, `sum ai^2 = a0^2 + 2` gives
/// `a0^2 (9 - r) <= 2r`, so `|a0| <= 4` for `r <= 8`.
pub fn enumerate_roots(r: usize) -> Result<Vec<DivisorClass>> {
    if !(3..=MAX_RANK).contains(&r) {
        return Err(rank_error(r, "3..=8"));
    }
    let mut out = Vec::new();
    for a0 in -4i64..=4 {
        let mut tails = Vec::new();
        solve_sum_and_squares(r, -3 * a0, a0 * a0 + 2, &mut tails);
        out.extend(tails.into_iter().map(|t| with_degree(a0, t)));
    }
    out.sort();
    Ok(out)
}

/// Every exceptional class of nonnegative degree, sorted.
///
/// Here `sum ai = 1 - 3 a0` and `sum ai^2 = a0^2 + 1`, which confines
/// `a0` to `-1..=7`; only `a0 >= 0` is kept since the degree of a curve
/// against `L` is nonnegative.
pub fn enumerate_exceptional(r: usize) -> Result<Vec<DivisorClass>> {
    if !(1..=MAX_RANK).contains(&r) {
        return Err(rank_error(r, "1..=8"));
    }
    let mut out = Vec::new();
    for a0 in 0i64..=7 {
        let mut tails = Vec::new();
        solve_sum_and_squares(r, 1 - 3 * a0, a0 * a0 + 1, &mut tails);
        out.extend(tails.into_iter().map(|t| with_degree(a0, t)));
    }
    out.sort();
    Ok(out)
}

fn with_degree(a0: i64, tail: Vec<i64>) -> DivisorClass {
    let mut v = Vec::with_capacity(tail.len() + 1);
    v.push(a0);
    v.extend(tail);
    DivisorClass::from_i64s_unchecked(&v)
}

/// `alpha_1 = e0 - e1 - e2 - e3` and `alpha_i = e_{i-1} - e_i`.
pub fn simple_roots(r: usize) -> Result<Vec<DivisorClass>> {
    if !(3..=MAX_RANK).contains(&r) {
        return Err(rank_error(r, "3..=8"));
    }
    let mut roots = vec![class_with(r, 1, &[(1, -1), (2, -1), (3, -1)])];
    roots.extend((2..=r).map(|i| class_with(r, 0, &[(i - 1, 1), (i, -1)])));
    Ok(roots)
}

/// The reflection `v -> v + (v . alpha) alpha` in a root.
pub fn reflect(v: &DivisorClass, alpha: &DivisorClass) -> Result<DivisorClass> {
    let p = v.pairing(alpha)?;
    if !is_root(alpha) {
        return Err(Error::InvalidRoot(alpha.clone()));
    }
    Ok(v + &alpha.scale(&p))
}

/// Breadth-first closure of `{v}` under the simple reflections.
pub fn weyl_orbit(v: &DivisorClass, r: usize) -> Result<BTreeSet<DivisorClass>> {
    weyl_orbit_capped(v, r, ORBIT_CAP)
}

pub fn weyl_orbit_capped(v: &DivisorClass, r: usize, cap: usize) -> Result<BTreeSet<DivisorClass>> {
    let simple = simple_roots(r)?;
    if v.rank() != r {
        return Err(Error::Dimension {
            left: v.rank(),
            right: r,
        });
    }
    let mut seen: HashSet<DivisorClass> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(v.clone());
    queue.push_back(v.clone());
    while let Some(u) = queue.pop_front() {
        for alpha in &simple {
            let p = u.dot(alpha);
            if p.is_zero() {
                continue;
            }
            let w = &u + &alpha.scale(&p);
            if seen.insert(w.clone()) {
                if seen.len() > cap {
                    return Err(Error::OrbitTooLarge { cap });
                }
                queue.push_back(w);
            }
        }
    }
    Ok(seen.into_iter().collect())
}
