//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Solves `min c.x` subject to `A x = b`, `x >= 0` and reports a dual
//! vector `y` with `y A <= c` and `y . b` equal to the optimum.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub x: Vec<Rational>,
    pub y: Vec<Rational>,
    pub objective: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// `rows x (n + m + 1)`; the last column is the right-hand side.
    t: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Columns allowed to enter the basis.
    enterable: usize,
    width: usize,
}

impl Tableau {
    fn rhs(&self, row: usize) -> &Rational {
        self.t[row].last().expect("nonempty row")
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.t[row][col].clone();
        for v in self.t[row].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.t[row].clone();
        for (k, other) in self.t.iter_mut().enumerate() {
            if k == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (v, pv) in other.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[row] = col;
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut red: Vec<Rational> = cost[..self.width].to_vec();
        for (row, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            for (j, r) in red.iter_mut().enumerate() {
                if !self.t[row][j].is_zero() {
                    *r -= &cost[b] * &self.t[row][j];
                }
            }
        }
        red
    }

    /// Runs Bland's rule to optimality. Returns `false` on unboundedness.
    fn optimize(&mut self, cost: &[Rational]) -> bool {
        loop {
            let red = self.reduced_costs(cost);
            let Some(col) = (0..self.enterable).find(|&j| red[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for row in 0..self.t.len() {
                let a = &self.t[row][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(row) / a;
                let better = match &best {
                    None => true,
                    Some((brow, bratio)) => {
                        ratio < *bratio || (ratio == *bratio && self.basis[row] < self.basis[*brow])
                    }
                };
                if better {
                    best = Some((row, ratio));
                }
            }
            match best {
                None => return false,
                Some((row, _)) => self.pivot(row, col),
            }
        }
    }
}

/// Minimizes `c.x` over `A x = b`, `x >= 0`.
///
/// Rows of `a` must all have length `c.len()`.
pub fn minimize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), m);

    // Normalize to b >= 0, remembering which rows were negated.
    let flipped: Vec<bool> = b.iter().map(|v| v.is_negative()).collect();
    let mut t = Vec::with_capacity(m);
    for i in 0..m {
        let sign = if flipped[i] { -Rational::one() } else { Rational::one() };
        let mut row: Vec<Rational> = a[i].iter().map(|v| v * &sign).collect();
        row.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
        row.push(&b[i] * &sign);
        t.push(row);
    }
    let mut tab = Tableau {
        t,
        basis: (n..n + m).collect(),
        enterable: n + m,
        width: n + m,
    };

    if m > 0 {
        let phase1: Vec<Rational> = (0..n + m)
            .map(|j| if j >= n { Rational::one() } else { Rational::zero() })
            .collect();
        tab.optimize(&phase1);
        let infeasibility: Rational = (0..m)
            .filter(|&row| tab.basis[row] >= n)
            .map(|row| tab.rhs(row).clone())
            .sum();
        if infeasibility.is_positive() {
            return LpOutcome::Infeasible;
        }
        // Drive zero-level artificials out where an original column allows.
        for row in 0..m {
            if tab.basis[row] >= n {
                if let Some(col) = (0..n).find(|&j| !tab.t[row][j].is_zero()) {
                    tab.pivot(row, col);
                }
            }
        }
    }

    tab.enterable = n;
    let mut cost: Vec<Rational> = c.to_vec();
    cost.extend((0..m).map(|_| Rational::zero()));
    if !tab.optimize(&cost) {
        return LpOutcome::Unbounded;
    }

    let mut x = vec![Rational::zero(); n];
    for (row, &bcol) in tab.basis.iter().enumerate() {
        if bcol < n {
            x[bcol] = tab.rhs(row).clone();
        }
    }
    let objective: Rational = c.iter().zip(&x).map(|(ci, xi)| ci * xi).sum();

    // y = c_B B^{-1}; the artificial columns hold B^{-1}.
    let mut y = vec![Rational::zero(); m];
    for (i, yi) in y.iter_mut().enumerate() {
        for (row, &bcol) in tab.basis.iter().enumerate() {
            if !cost[bcol].is_zero() {
                *yi += &cost[bcol] * &tab.t[row][n + i];
            }
        }
        if flipped[i] {
            *yi = -yi.clone();
        }
    }
    LpOutcome::Optimal(LpSolution { x, y, objective })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&n| q(n, 1)).collect()
    }

    fn check_duality(c: &[Rational], a: &[Vec<Rational>], b: &[Rational], sol: &LpSolution) {
        for (i, row) in a.iter().enumerate() {
            let lhs: Rational = row.iter().zip(&sol.x).map(|(p, q)| p * q).sum();
            assert_eq!(lhs, b[i]);
        }
        assert!(sol.x.iter().all(|v| !v.is_negative()));
        for j in 0..c.len() {
            let ya: Rational = (0..a.len()).map(|i| &sol.y[i] * &a[i][j]).sum();
            assert!(ya <= c[j]);
        }
        let yb: Rational = sol.y.iter().zip(b).map(|(p, q)| p * q).sum();
        assert_eq!(yb, sol.objective);
    }

    #[test]
    fn small_optimum() {
        // min x + 2y + 3z, x + y + z = 1, x - z = 0: x = z = 1/2 and y = 1
        // both cost 2.
        let c = ints(&[1, 2, 3]);
        let a = vec![ints(&[1, 1, 1]), ints(&[1, 0, -1])];
        let b = ints(&[1, 0]);
        let LpOutcome::Optimal(sol) = minimize(&c, &a, &b) else {
            panic!("expected optimum")
        };
        assert_eq!(sol.objective, q(2, 1));
        check_duality(&c, &a, &b, &sol);
    }

    #[test]
    fn fractional_optimum_and_negative_rhs() {
        // min x + y, -2x - y = -3, -x - 2y = -3 -> x = y = 1
        let c = ints(&[1, 1, 0, 0]);
        let a = vec![ints(&[-2, -1, 1, 0]), ints(&[-1, -2, 0, 1])];
        let b = ints(&[-3, -3]);
        let LpOutcome::Optimal(sol) = minimize(&c, &a, &b) else {
            panic!("expected optimum")
        };
        assert_eq!(sol.objective, q(2, 1));
        check_duality(&c, &a, &b, &sol);

        let c = ints(&[3, 1]);
        let a = vec![ints(&[3, 1])];
        let b = ints(&[1]);
        let LpOutcome::Optimal(sol) = minimize(&c, &a, &b) else {
            panic!("expected optimum")
        };
        assert_eq!(sol.objective, q(1, 1));
        let c = ints(&[1]);
        let a = vec![ints(&[3])];
        let LpOutcome::Optimal(sol) = minimize(&c, &a, &ints(&[1])) else {
            panic!("expected optimum")
        };
        assert_eq!(sol.x, vec![q(1, 3)]);
    }

    #[test]
    fn infeasible_and_unbounded() {
        let c = ints(&[1]);
        assert_eq!(minimize(&c, &[ints(&[1])], &ints(&[-1])), LpOutcome::Infeasible);
        let c = ints(&[-1, 0]);
        assert_eq!(minimize(&c, &[ints(&[1, -1])], &ints(&[0])), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows() {
        let c = ints(&[1, 1]);
        let a = vec![ints(&[1, 1]), ints(&[2, 2]), ints(&[0, 0])];
        let b = ints(&[2, 4, 0]);
        let LpOutcome::Optimal(sol) = minimize(&c, &a, &b) else {
            panic!("expected optimum")
        };
        assert_eq!(sol.objective, q(2, 1));
        check_duality(&c, &a, &b, &sol);
    }

    #[test]
    fn no_constraints() {
        let LpOutcome::Optimal(sol) = minimize(&ints(&[2, 0]), &[], &[]) else {
            panic!("expected optimum")
        };
        assert_eq!(sol.objective, q(0, 1));
    }
}
