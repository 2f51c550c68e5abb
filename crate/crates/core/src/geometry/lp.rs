//! Exact two-phase simplex over the rationals.
//!
//! Problems are given in equality form: minimize `c·x` subject to `A x = b`,
//! `x ≥ 0`. Pivoting follows Bland's rule, so the method terminates and the
//! returned vertex is a deterministic function of the input.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal(Vec<BigRational>),
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    // objective row: reduced costs, last entry is minus the objective value
    cost: Vec<BigRational>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x = &*x / &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for (x, y) in self.cost.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Runs Bland's rule over the columns allowed to enter. Returns false if
    /// the objective is unbounded below.
    fn optimize(&mut self, allowed: impl Fn(usize) -> bool) -> bool {
        let rhs = self.width;
        loop {
            let Some(enter) = (0..rhs).find(|&j| allowed(j) && self.cost[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, BigRational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter),
                None => return false,
            }
        }
    }
}

/// Minimizes `c·x` over `{x ≥ 0 : A x = b}`. With `c = None` only feasibility
/// is decided and the phase-one vertex is returned.
pub fn minimize(a: &[Vec<BigRational>], b: &[BigRational], c: Option<&[BigRational]>) -> LpOutcome {
    let m = a.len();
    let n = a.first().map_or_else(|| c.map_or(0, <[_]>::len), Vec::len);
    let width = n + m;

    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut t: Vec<BigRational> = row.iter().map(|x| if flip { -x } else { x.clone() }).collect();
        t.extend((0..m).map(|k| if k == i { BigRational::one() } else { BigRational::zero() }));
        t.push(if flip { -rhs } else { rhs.clone() });
        rows.push(t);
    }
    // phase one: minimize the sum of artificials
    let mut cost = vec![BigRational::zero(); width + 1];
    for row in &rows {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[width] -= &row[width];
    }
    let mut tab = Tableau { rows, cost, basis: (n..n + m).collect(), width };
    tab.optimize(|_| true);
    if !tab.cost[width].is_zero() {
        return LpOutcome::Infeasible;
    }

    // drive artificials out of the basis; drop redundant rows
    let mut r = 0;
    while r < tab.rows.len() {
        if tab.basis[r] >= n {
            if let Some(j) = (0..n).find(|&j| !tab.rows[r][j].is_zero()) {
                tab.pivot(r, j);
            } else {
                tab.rows.remove(r);
                tab.basis.remove(r);
                continue;
            }
        }
        r += 1;
    }

    if let Some(c) = c {
        let mut cost = vec![BigRational::zero(); width + 1];
        cost[..n].clone_from_slice(c);
        for (row, &bv) in tab.rows.iter().zip(&tab.basis) {
            let f = cost[bv].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in cost.iter_mut().zip(row) {
                *x -= &f * y;
            }
        }
        tab.cost = cost;
        if !tab.optimize(|j| j < n) {
            return LpOutcome::Unbounded;
        }
    }

    let mut x = vec![BigRational::zero(); n];
    for (row, &bv) in tab.rows.iter().zip(&tab.basis) {
        if bv < n {
            x[bv] = row[width].clone();
        }
    }
    LpOutcome::Optimal(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn feasibility_and_optimum() {
        // x + y = 4, x - y + s = 2 (s slack), minimize -x
        let a = vec![vec![q(1), q(1), q(0)], vec![q(1), q(-1), q(1)]];
        let b = vec![q(4), q(2)];
        let c = vec![q(-1), q(0), q(0)];
        match minimize(&a, &b, Some(&c)) {
            LpOutcome::Optimal(x) => assert_eq!(x, vec![q(3), q(1), q(0)]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn detects_infeasible() {
        let a = vec![vec![q(1), q(1)]];
        assert_eq!(minimize(&a, &[q(-1)], None), LpOutcome::Infeasible);
    }

    #[test]
    fn detects_unbounded() {
        let a = vec![vec![q(1), q(-1)]];
        assert_eq!(minimize(&a, &[q(1)], Some(&[q(0), q(-1)])), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows() {
        let a = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        match minimize(&a, &[q(1), q(2)], Some(&[q(1), q(0)])) {
            LpOutcome::Optimal(x) => assert_eq!(x, vec![q(0), q(1)]),
            other => panic!("unexpected {other:?}"),
        }
    }
}
