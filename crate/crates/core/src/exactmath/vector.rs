use std::fmt;
use std::ops::{Index, Neg};

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// Dense vector of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QVector(Vec<Rational>);

impl QVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        QVector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        QVector(vec![Rational::zero(); dim])
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        QVector(entries.iter().map(|&x| Rational::from(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    fn check_dim(&self, other: &QVector, context: &'static str) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { context, expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }

    pub fn dot(&self, other: &QVector) -> Result<Rational> {
        self.check_dim(other, "dot product")?;
        Ok(self.0.iter().zip(&other.0).map(|(x, y)| x * y).sum())
    }

    pub fn add(&self, other: &QVector) -> Result<QVector> {
        self.check_dim(other, "vector addition")?;
        Ok(QVector(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect()))
    }

    pub fn sub(&self, other: &QVector) -> Result<QVector> {
        self.check_dim(other, "vector subtraction")?;
        Ok(QVector(self.0.iter().zip(&other.0).map(|(x, y)| x - y).collect()))
    }

    pub fn scale(&self, k: &Rational) -> QVector {
        QVector(self.0.iter().map(|x| x * k).collect())
    }
}

impl Neg for &QVector {
    type Output = QVector;
    fn neg(self) -> QVector {
        QVector(self.0.iter().map(|x| -x).collect())
    }
}

impl Index<usize> for QVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl FromIterator<Rational> for QVector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        QVector(iter.into_iter().collect())
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}
