//! Dense two-phase simplex over exact rationals.
//!
//! Problems are `minimize c·x` subject to `G x ≤ h`, `x ≥ 0`. Bland's rule
//! is used for both entering and leaving variables, so degenerate pivots
//! cannot cycle.

use crate::exactmath::Rational;

/// `coeffs · x ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

impl LinearConstraint {
    pub fn new(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        LinearConstraint { coeffs, rhs }
    }

    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        let lhs: Rational = self.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
        lhs <= self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { point: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// `m` rows of `width + 1` entries; the last entry is the right-hand side.
    rows: Vec<Vec<Rational>>,
    /// Reduced costs; the last entry holds minus the objective value.
    obj: Vec<Rational>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rational {
        &self.rows[r][self.width]
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        if p != 1 {
            let inv = p.recip().expect("pivot element is non-zero");
            for v in self.rows[r].iter_mut() {
                if !v.is_zero() {
                    *v = &*v * &inv;
                }
            }
        }
        let pivot_row = self.rows[r].clone();
        let eliminate = |target: &mut Vec<Rational>| {
            let f = target[col].clone();
            if f.is_zero() {
                return;
            }
            for (t, p) in target.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *t -= &(&f * p);
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.basis[r] = col;
    }

    fn set_objective(&mut self, cost: &[Rational]) {
        let mut obj: Vec<Rational> = cost.to_vec();
        obj.push(Rational::zero());
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (o, t) in obj.iter_mut().zip(&self.rows[r]) {
                if !t.is_zero() {
                    *o -= &(cb * t);
                }
            }
        }
        self.obj = obj;
    }

    /// Runs Bland-rule iterations; `allowed` masks which columns may enter.
    /// Returns `false` if the objective is unbounded below.
    fn optimize(&mut self, allowed: &[bool]) -> bool {
        loop {
            let entering = (0..self.width).find(|&j| allowed[j] && self.obj[j].is_negative());
            let Some(col) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r).checked_div(a).expect("positive divisor");
                let better = match &best {
                    None => true,
                    Some((br, bv)) => ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br]),
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, col),
            }
        }
    }
}

/// Solves `minimize objective·x` s.t. `constraints`, `x ≥ 0`.
pub fn solve(num_vars: usize, constraints: &[LinearConstraint], objective: &[Rational]) -> LpOutcome {
    assert_eq!(objective.len(), num_vars, "objective length must equal the variable count");
    for c in constraints {
        assert_eq!(c.coeffs.len(), num_vars, "constraint width must equal the variable count");
    }
    let m = constraints.len();
    // Columns: originals, one slack per row, then artificials for rows with negative rhs.
    let needs_art: Vec<bool> = constraints.iter().map(|c| c.rhs.is_negative()).collect();
    let num_art = needs_art.iter().filter(|&&b| b).count();
    let slack0 = num_vars;
    let art0 = num_vars + m;
    let width = num_vars + m + num_art;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut next_art = art0;
    for (i, c) in constraints.iter().enumerate() {
        let mut row = vec![Rational::zero(); width + 1];
        let flip = needs_art[i];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[j] = if flip { -a } else { a.clone() };
        }
        row[slack0 + i] = if flip { Rational::from(-1) } else { Rational::one() };
        row[width] = if flip { -&c.rhs } else { c.rhs.clone() };
        if flip {
            row[next_art] = Rational::one();
            basis.push(next_art);
            next_art += 1;
        } else {
            basis.push(slack0 + i);
        }
        rows.push(row);
    }
    let mut t = Tableau { rows, obj: Vec::new(), basis, width };

    if num_art > 0 {
        let mut phase1 = vec![Rational::zero(); width];
        for v in phase1.iter_mut().skip(art0) {
            *v = Rational::one();
        }
        t.set_objective(&phase1);
        let all = vec![true; width];
        t.optimize(&all);
        if !t.obj[width].is_zero() {
            return LpOutcome::Infeasible;
        }
        // Drive remaining (zero-valued) artificials out of the basis.
        let mut r = 0;
        while r < t.rows.len() {
            if t.basis[r] >= art0 {
                match (0..art0).find(|&j| !t.rows[r][j].is_zero()) {
                    Some(col) => t.pivot(r, col),
                    None => {
                        // Redundant row.
                        t.rows.remove(r);
                        t.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
    }

    let mut cost = objective.to_vec();
    cost.resize(width, Rational::zero());
    t.set_objective(&cost);
    let allowed: Vec<bool> = (0..width).map(|j| j < art0).collect();
    if !t.optimize(&allowed) {
        return LpOutcome::Unbounded;
    }
    let mut point = vec![Rational::zero(); num_vars];
    for (r, &b) in t.basis.iter().enumerate() {
        if b < num_vars {
            point[b] = t.rhs(r).clone();
        }
    }
    let value = -&t.obj[width];
    LpOutcome::Optimal { point, value }
}

/// A non-negative point satisfying every constraint, if one exists.
pub fn lp_feasible(num_vars: usize, constraints: &[LinearConstraint]) -> Option<Vec<Rational>> {
    match solve(num_vars, constraints, &vec![Rational::zero(); num_vars]) {
        LpOutcome::Optimal { point, .. } => Some(point),
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("zero objective is bounded"),
    }
}
