//! Non-trivial non-negative integer solutions of homogeneous systems `A y = 0`.
//!
//! Because the system is homogeneous, a rational solution of the relaxed
//! program `A y = 0, y ≥ 0, Σ y ≥ 1` can be scaled by the common denominator
//! to an integer one, and any solution with `y_i > 0` can be scaled until
//! `y_i ≥ 1`. Feasibility is decided exactly by [`simplex`].

pub mod simplex;

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{QMatrix, Rational};
pub use simplex::{lp_feasible, LinearConstraint, LpOutcome};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiophantineSystem {
    coefficients: QMatrix,
    forced: BTreeSet<usize>,
}

impl DiophantineSystem {
    /// `forced` holds 0-based variable indices that must be at least 1.
    pub fn new(coefficients: QMatrix, forced: impl IntoIterator<Item = usize>) -> Result<Self> {
        let n = coefficients.cols();
        if n == 0 {
            return Err(Error::Malformed("system has no variables".into()));
        }
        let forced: BTreeSet<usize> = forced.into_iter().collect();
        if let Some(&bad) = forced.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, len: n });
        }
        Ok(DiophantineSystem { coefficients, forced })
    }

    pub fn coefficients(&self) -> &QMatrix {
        &self.coefficients
    }

    pub fn forced(&self) -> &BTreeSet<usize> {
        &self.forced
    }

    pub fn num_vars(&self) -> usize {
        self.coefficients.cols()
    }

    /// Equations as paired `≤` rows, then `−Σy ≤ −1`, then `−y_i ≤ −1` per forced index.
    pub fn lp_constraints(&self) -> Vec<LinearConstraint> {
        let n = self.num_vars();
        let mut out = Vec::with_capacity(2 * self.coefficients.rows() + 1 + self.forced.len());
        for r in 0..self.coefficients.rows() {
            let row = self.coefficients.row(r).to_vec();
            let neg = row.iter().map(|x| -x).collect();
            out.push(LinearConstraint::new(row, Rational::zero()));
            out.push(LinearConstraint::new(neg, Rational::zero()));
        }
        out.push(LinearConstraint::new(vec![Rational::from(-1); n], Rational::from(-1)));
        for &i in &self.forced {
            let mut row = vec![Rational::zero(); n];
            row[i] = Rational::from(-1);
            out.push(LinearConstraint::new(row, Rational::from(-1)));
        }
        out
    }

    /// Checks `A y = 0`, `Σ y ≥ 1` and the forced lower bounds exactly.
    pub fn is_solution(&self, y: &[BigUint]) -> bool {
        if y.len() != self.num_vars() {
            return false;
        }
        if y.iter().all(Zero::is_zero) {
            return false;
        }
        if self.forced.iter().any(|&i| y[i].is_zero()) {
            return false;
        }
        (0..self.coefficients.rows()).all(|r| {
            let s: Rational = self.coefficients.row(r).iter().zip(y).map(|(a, v)| a * Rational::from(v.clone())).sum();
            s.is_zero()
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSolution {
    pub y: Vec<BigUint>,
}

/// Clears denominators with their lcm.
fn clear_denominators(point: &[Rational]) -> Vec<BigUint> {
    let lcm = point.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    point
        .iter()
        .map(|x| {
            let scaled = x.numer() * (&lcm / x.denom());
            scaled.to_biguint().expect("LP point is non-negative")
        })
        .collect()
}

pub fn solve_homogeneous(sys: &DiophantineSystem) -> Option<IntSolution> {
    let point = lp_feasible(sys.num_vars(), &sys.lp_constraints())?;
    let y = clear_denominators(&point);
    debug_assert!(sys.is_solution(&y), "denominator clearing lost a constraint");
    Some(IntSolution { y })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn system(rows: &[&[i64]], forced: &[usize]) -> DiophantineSystem {
        DiophantineSystem::new(QMatrix::from_i64_rows(rows), forced.iter().copied()).unwrap()
    }

    #[test]
    fn balanced_pair() {
        let sys = system(&[&[1, -1]], &[]);
        let sol = solve_homogeneous(&sys).unwrap();
        assert!(sys.is_solution(&sol.y));
        assert_eq!(sol.y[0], sol.y[1]);
    }

    #[test]
    fn same_sign_has_no_solution() {
        assert_eq!(solve_homogeneous(&system(&[&[1, 1]], &[])), None);
    }

    #[test]
    fn superdiagonal_sums_of_example() {
        let sys = system(&[&[2, 3, -4, -1], &[7, -2, -6, 1]], &[0, 2]);
        let ones = vec![BigUint::one(); 4];
        assert!(sys.is_solution(&ones));
        let sol = solve_homogeneous(&sys).unwrap();
        assert!(sys.is_solution(&sol.y));
    }

    #[test]
    fn rational_coefficients_are_cleared() {
        // y1/2 - y2/3 = 0 -> (2, 3) up to scaling.
        let a = QMatrix::from_rows(vec![vec!["1/2".parse().unwrap(), "-1/3".parse().unwrap()]]).unwrap();
        let sys = DiophantineSystem::new(a, []).unwrap();
        let sol = solve_homogeneous(&sys).unwrap();
        assert!(sys.is_solution(&sol.y));
        assert_eq!(&sol.y[0] * 3u32, &sol.y[1] * 2u32);
    }

    #[test]
    fn forced_index_can_make_it_infeasible() {
        // y1 = 0 is forced by the first row; forcing y1 >= 1 kills it.
        let sys = system(&[&[1, 0]], &[]);
        assert!(solve_homogeneous(&sys).is_some());
        let sys = system(&[&[1, 0]], &[0]);
        assert!(solve_homogeneous(&sys).is_none());
    }

    #[test]
    fn forced_out_of_range() {
        let err = DiophantineSystem::new(QMatrix::from_i64_rows(&[&[1, 1]]), [2]).unwrap_err();
        assert_eq!(err, Error::IndexOutOfRange { index: 2, len: 2 });
    }

    #[test]
    fn lcm_not_product() {
        let pts = ["1/6", "1/4", "0"].map(|s| s.parse::<Rational>().unwrap());
        let y = clear_denominators(&pts);
        assert_eq!(y, vec![BigUint::from(2u32), BigUint::from(3u32), BigUint::zero()]);
    }
}
