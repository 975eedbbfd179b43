//! Exact linear feasibility with a rational witness: phase-one simplex over
//! `BigRational` with Bland's rule, so it always terminates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `Σ a_i x_i >= b` (or `= b` for equalities).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub a: Vec<BigInt>,
    pub b: BigInt,
}

impl Constraint {
    pub fn new(a: Vec<i64>, b: i64) -> Self {
        Constraint { a: a.into_iter().map(BigInt::from).collect(), b: BigInt::from(b) }
    }

    fn eval(&self, x: &[BigRational]) -> BigRational {
        self.a
            .iter()
            .zip(x)
            .fold(BigRational::zero(), |acc, (c, v)| acc + BigRational::from_integer(c.clone()) * v)
    }
}

/// Linear system over `vars` free unknowns.
#[derive(Debug, Clone, Default)]
pub struct System {
    pub vars: usize,
    pub equalities: Vec<Constraint>,
    pub inequalities: Vec<Constraint>,
}

fn q(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

impl System {
    /// A rational point satisfying every constraint, or `None` if infeasible.
    ///
    /// Each free variable is split as `x = p - m` with `p, m >= 0`, each
    /// inequality gets a surplus column, and every row an artificial column.
    /// Phase one minimizes the sum of the artificials.
    pub fn solve(&self) -> Option<Vec<BigRational>> {
        let d = self.vars;
        let rows: Vec<(&Constraint, bool)> = self
            .equalities
            .iter()
            .map(|c| (c, false))
            .chain(self.inequalities.iter().map(|c| (c, true)))
            .collect();
        let m = rows.len();
        if m == 0 {
            return Some(vec![BigRational::zero(); d]);
        }
        let surplus = self.inequalities.len();
        // columns: p (d), m (d), surplus, artificial (m), rhs
        let cols = 2 * d + surplus + m;
        let mut t = vec![vec![BigRational::zero(); cols + 1]; m];
        let mut basis = vec![0; m];
        let mut s = 0;
        for (r, (c, ineq)) in rows.iter().enumerate() {
            let flip = c.b.is_negative();
            let sign = |v: BigRational| if flip { -v } else { v };
            for k in 0..d {
                t[r][k] = sign(q(&c.a[k]));
                t[r][d + k] = sign(-q(&c.a[k]));
            }
            if *ineq {
                t[r][2 * d + s] = sign(-BigRational::one());
                s += 1;
            }
            t[r][2 * d + surplus + r] = BigRational::one();
            t[r][cols] = sign(q(&c.b));
            basis[r] = 2 * d + surplus + r;
        }
        // reduced costs of the phase-one objective: minus the sum of the rows
        let mut cost = vec![BigRational::zero(); cols + 1];
        for row in &t {
            for (k, v) in row.iter().enumerate() {
                if k < 2 * d + surplus || k == cols {
                    cost[k] -= v;
                }
            }
        }
        loop {
            // Bland: lowest-index column with negative reduced cost
            let Some(enter) = (0..cols).find(|&k| cost[k].is_negative()) else { break };
            let mut leave: Option<(usize, BigRational)> = None;
            for (r, row) in t.iter().enumerate() {
                if row[enter].is_positive() {
                    let ratio = &row[cols] / &row[enter];
                    let better = match &leave {
                        None => true,
                        Some((lr, lv)) => ratio < *lv || (ratio == *lv && basis[r] < basis[*lr]),
                    };
                    if better {
                        leave = Some((r, ratio));
                    }
                }
            }
            // phase one is bounded below by zero, so a leaving row always exists
            let (r, _) = leave?;
            pivot(&mut t, &mut cost, r, enter);
            basis[r] = enter;
        }
        if !cost[cols].is_zero() {
            return None;
        }
        let mut x = vec![BigRational::zero(); d];
        for (r, &b) in basis.iter().enumerate() {
            if b < d {
                x[b] += &t[r][cols];
            } else if b < 2 * d {
                x[b - d] -= &t[r][cols];
            }
        }
        debug_assert!(self.satisfied_by(&x));
        Some(x)
    }

    pub fn satisfied_by(&self, x: &[BigRational]) -> bool {
        self.equalities.iter().all(|c| c.eval(x) == q(&c.b)) && self.inequalities.iter().all(|c| c.eval(x) >= q(&c.b))
    }
}

fn pivot(t: &mut [Vec<BigRational>], cost: &mut [BigRational], r: usize, col: usize) {
    let p = t[r][col].clone();
    for v in t[r].iter_mut() {
        *v /= &p;
    }
    let pivot_row = t[r].clone();
    let eliminate = |row: &mut Vec<BigRational>| {
        let f = row[col].clone();
        if !f.is_zero() {
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
    };
    for (k, row) in t.iter_mut().enumerate() {
        if k != r {
            eliminate(row);
        }
    }
    let mut c = cost.to_vec();
    eliminate(&mut c);
    cost.clone_from_slice(&c);
}
