use std::fmt;

use super::Rational;
use crate::error::{Error, Result};

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: "matrix construction",
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(QMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { context: "ragged matrix rows", expected: c, found: row.len() });
            }
            data.extend(row);
        }
        QMatrix::from_vec(r, c, data)
    }

    /// Panics on ragged input; meant for literals.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect())
            .expect("ragged literal matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        *v == 1
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(Rational::is_integer)
    }

    pub fn mul(&self, rhs: &QMatrix) -> Result<QMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { context: "matrix product", expected: self.cols, found: rhs.rows });
        }
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product of a non-empty chain of square matrices of equal size.
    pub fn product<'a, I>(mut iter: I) -> Result<QMatrix>
    where
        I: Iterator<Item = &'a QMatrix>,
    {
        let first = iter.next().ok_or(Error::EmptySequence)?.clone();
        iter.try_fold(first, |acc, m| acc.mul(m))
    }

    /// Fraction-carrying Gaussian elimination.
    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                context: "determinant of non-square matrix",
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Ok(Rational::zero());
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det = det * &p;
            for r in col + 1..n {
                let factor = a[r * n + col].checked_div(&p)?;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let delta = &factor * &a[col * n + j];
                    a[r * n + j] -= &delta;
                }
            }
        }
        Ok(det)
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for (c, v) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let m = QMatrix::from_i64_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        assert_eq!(QMatrix::identity(3).mul(&m).unwrap(), m);
        assert_eq!(m.mul(&QMatrix::identity(3)).unwrap(), m);
    }

    #[test]
    fn sl2_generator_times_its_inverse() {
        let fa = QMatrix::from_i64_rows(&[&[1, 2], &[0, 1]]);
        let fa_bar = QMatrix::from_i64_rows(&[&[1, -2], &[0, 1]]);
        assert!(fa.mul(&fa_bar).unwrap().is_identity());
    }

    #[test]
    fn hand_multiplied_product() {
        let x = QMatrix::from_i64_rows(&[&[1, 2], &[0, 1]]);
        let y = QMatrix::from_i64_rows(&[&[1, 0], &[2, 1]]);
        assert_eq!(x.mul(&y).unwrap(), QMatrix::from_i64_rows(&[&[5, 2], &[2, 1]]));
    }

    #[test]
    fn product_dimension_mismatch() {
        let err = QMatrix::zeros(2, 3).mul(&QMatrix::zeros(2, 3)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { expected: 3, found: 2, .. }));
    }

    #[test]
    fn determinants() {
        assert_eq!(QMatrix::identity(4).determinant().unwrap(), Rational::one());
        let m = QMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.determinant().unwrap(), Rational::from(-1));
        let m = QMatrix::from_i64_rows(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        // 2(3-2) - 0 + 1(1-3) = 0
        assert!(m.determinant().unwrap().is_zero());
        let m = QMatrix::from_i64_rows(&[&[0, 0, 1, 2], &[0, 0, 0, 1], &[1, 0, 0, 0], &[2, 1, 0, 0]]);
        assert_eq!(m.determinant().unwrap(), Rational::one());
    }
}
