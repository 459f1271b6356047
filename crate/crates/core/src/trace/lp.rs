//! Dense two-phase simplex over `Q` with Bland's rule.
//!
//! Problems are in standard form: maximise `c·x` subject to `A x = b`, `x ≥ 0`.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Q = BigRational;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<Q>, value: Q },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    rhs: Vec<Q>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        self.rhs[r] /= &p;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (v, pv) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        self.basis[r] = c;
    }

    fn objective(&self, cost: &[Q]) -> Q {
        self.basis
            .iter()
            .zip(&self.rhs)
            .fold(Q::zero(), |acc, (&b, r)| acc + &cost[b] * r)
    }

    /// Returns `false` when the objective is unbounded.
    fn optimize(&mut self, cost: &[Q], allowed: usize) -> bool {
        loop {
            let mut entering = None;
            for j in 0..allowed {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut d = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() {
                        d -= &cost[b] * &self.rows[i][j];
                    }
                }
                if d.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(c) = entering else {
                return true;
            };
            let mut leave: Option<(usize, Q)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][c].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][c];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

/// Maximises `c·x` subject to `A x = b`, `x ≥ 0`.
pub fn maximize(a: &[Vec<Q>], b: &[Q], c: &[Q]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        assert_eq!(row.len(), n, "constraint width");
        let flip = b[i].is_negative();
        let mut r: Vec<Q> = row.iter().map(|v| if flip { -v } else { v.clone() }).collect();
        r.extend((0..m).map(|j| if i == j { Q::from_integer(1.into()) } else { Q::zero() }));
        rows.push(r);
        rhs.push(if flip { -&b[i] } else { b[i].clone() });
    }
    let mut t = Tableau {
        rows,
        rhs,
        basis: (n..n + m).collect(),
    };

    let mut phase1 = vec![Q::zero(); n + m];
    for v in phase1.iter_mut().skip(n) {
        *v = Q::from_integer((-1).into());
    }
    t.optimize(&phase1, n + m);
    if t.objective(&phase1).is_negative() {
        return LpOutcome::Infeasible;
    }

    // Drive remaining artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.rhs.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut cost = c.to_vec();
    cost.extend((0..m).map(|_| Q::zero()));
    if !t.optimize(&cost, n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Q::zero(); n];
    for (r, &bcol) in t.basis.iter().enumerate() {
        if bcol < n {
            x[bcol] = t.rhs[r].clone();
        }
    }
    let value = x.iter().zip(c).fold(Q::zero(), |acc, (xi, ci)| acc + xi * ci);
    LpOutcome::Optimal { x, value }
}

/// Some `x ≥ 0` with `A x = b`, if one exists.
pub fn feasible_point(a: &[Vec<Q>], b: &[Q], n: usize) -> Option<Vec<Q>> {
    match maximize(a, b, &vec![Q::zero(); n]) {
        LpOutcome::Optimal { x, .. } => Some(x),
        _ => None,
    }
}
