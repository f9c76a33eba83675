//! The Heisenberg group `H(n, Q)` in coordinates.
//!
//! An element is the upper unitriangular matrix
//!
//! ```text
//! | 1  aᵀ       c |
//! | 0  I_{n-2}  b |
//! | 0  0        1 |
//! ```
//!
//! stored as the triple `(a, b, c)`. Multiplication is
//! `(a₁,b₁,c₁)(a₂,b₂,c₂) = (a₁+a₂, b₁+b₂, c₁+c₂+a₁·b₂)`, so powers have a
//! closed form and products never need the full matrix.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{QMatrix, QVector, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HeisTriple {
    a: QVector,
    b: QVector,
    c: Rational,
}

impl HeisTriple {
    pub fn new(a: QVector, b: QVector, c: Rational) -> Result<Self> {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch {
                context: "Heisenberg triple a/b vectors",
                expected: a.dim(),
                found: b.dim(),
            });
        }
        if a.dim() == 0 {
            return Err(Error::DimensionTooSmall(a.dim() + 2));
        }
        Ok(HeisTriple { a, b, c })
    }

    /// `H(3)` element from integer coordinates.
    pub fn h3(a: i64, b: i64, c: i64) -> Self {
        HeisTriple { a: QVector::from_i64(&[a]), b: QVector::from_i64(&[b]), c: Rational::from(c) }
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::DimensionTooSmall(n));
        }
        Ok(HeisTriple { a: QVector::zeros(n - 2), b: QVector::zeros(n - 2), c: Rational::zero() })
    }

    /// Matrix dimension `n`; the vectors have length `n - 2`.
    pub fn n(&self) -> usize {
        self.a.dim() + 2
    }

    pub fn a(&self) -> &QVector {
        &self.a
    }

    pub fn b(&self) -> &QVector {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// Zero superdiagonal part, i.e. the element lies in the centre.
    pub fn is_central(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn check_same_n(&self, other: &HeisTriple, context: &'static str) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch { context, expected: self.n(), found: other.n() });
        }
        Ok(())
    }

    pub fn compose(&self, other: &HeisTriple) -> Result<HeisTriple> {
        self.check_same_n(other, "Heisenberg product")?;
        let cross = self.a.dot(&other.b)?;
        Ok(HeisTriple { a: self.a.add(&other.a)?, b: self.b.add(&other.b)?, c: &self.c + &other.c + cross })
    }

    pub fn inverse(&self) -> HeisTriple {
        let ab = self.a.dot(&self.b).expect("a and b share a dimension");
        HeisTriple { a: -&self.a, b: -&self.b, c: ab - &self.c }
    }

    /// `a₁·b₂ = a₂·b₁`, which holds exactly when the two elements commute.
    pub fn commutes(&self, other: &HeisTriple) -> Result<bool> {
        self.check_same_n(other, "commutation test")?;
        Ok(self.a.dot(&other.b)? == other.a.dot(&self.b)?)
    }

    /// `a₁·b₂ − a₂·b₁`; zero iff the elements commute.
    pub fn commutator_form(&self, other: &HeisTriple) -> Result<Rational> {
        self.check_same_n(other, "commutator form")?;
        Ok(self.a.dot(&other.b)? - other.a.dot(&self.b)?)
    }

    /// Closed form `x^m = (m·a, m·b, m·c + (a·b)·m(m−1)/2)`.
    pub fn pow(&self, m: &BigUint) -> Result<HeisTriple> {
        if m.is_zero() {
            return Err(Error::NonPositiveExponent);
        }
        let mq = Rational::from(m.clone());
        let tri = BigInt::from(m * (m - BigUint::one())) / 2;
        let ab = self.a.dot(&self.b)?;
        Ok(HeisTriple { a: self.a.scale(&mq), b: self.b.scale(&mq), c: &self.c * &mq + ab * Rational::from(tri) })
    }

    pub fn pow_u64(&self, m: u64) -> Result<HeisTriple> {
        self.pow(&BigUint::from(m))
    }

    pub fn to_matrix(&self) -> QMatrix {
        let n = self.n();
        let k = n - 2;
        let mut m = QMatrix::identity(n);
        for i in 0..k {
            m.set(0, i + 1, self.a[i].clone());
            m.set(i + 1, n - 1, self.b[i].clone());
        }
        m.set(0, n - 1, self.c.clone());
        m
    }

    pub fn from_matrix(m: &QMatrix) -> Result<HeisTriple> {
        if !m.is_square() {
            return Err(Error::NotHeisenberg(format!("{}x{} is not square", m.rows(), m.cols())));
        }
        let n = m.rows();
        if n < 3 {
            return Err(Error::DimensionTooSmall(n));
        }
        for r in 0..n {
            for c in 0..n {
                let v = m.get(r, c);
                let top_row = r == 0 && c > 0;
                let last_col = c == n - 1 && r < n - 1;
                let ok = if r == c {
                    *v == 1
                } else if top_row || last_col {
                    true
                } else {
                    v.is_zero()
                };
                if !ok {
                    return Err(Error::NotHeisenberg(format!("unexpected entry {v} at ({r}, {c})")));
                }
            }
        }
        let a = (1..n - 1).map(|j| m.get(0, j).clone()).collect();
        let b = (1..n - 1).map(|i| m.get(i, n - 1).clone()).collect();
        HeisTriple::new(a, b, m.get(0, n - 1).clone())
    }
}

impl fmt::Debug for HeisTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}, {})", self.a, self.b, self.c)
    }
}

/// A run-length encoded word over generator indices: `g_{i₁}^{e₁} g_{i₂}^{e₂} ⋯`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ProductSequence {
    runs: Vec<(usize, BigUint)>,
}

impl ProductSequence {
    /// Adjacent runs of the same generator are merged; zero exponents are dropped.
    pub fn from_runs(runs: impl IntoIterator<Item = (usize, BigUint)>) -> Self {
        let mut out: Vec<(usize, BigUint)> = Vec::new();
        for (g, e) in runs {
            if e.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some((last, acc)) if *last == g => *acc += e,
                _ => out.push((g, e)),
            }
        }
        ProductSequence { runs: out }
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        ProductSequence::from_runs(indices.iter().map(|&i| (i, BigUint::one())))
    }

    pub fn runs(&self) -> &[(usize, BigUint)] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Total number of factors once expanded.
    pub fn len(&self) -> BigUint {
        self.runs.iter().map(|(_, e)| e).sum()
    }

    /// Expanded index list; `None` if it would exceed `limit` factors.
    pub fn expand(&self, limit: usize) -> Option<Vec<usize>> {
        if self.len() > BigUint::from(limit) {
            return None;
        }
        let mut out = Vec::new();
        for (g, e) in &self.runs {
            let k: usize = e.try_into().ok()?;
            out.extend(std::iter::repeat_n(*g, k));
        }
        Some(out)
    }

    /// Multiplicity of each generator, indexed by generator.
    pub fn multiplicities(&self, num_generators: usize) -> Vec<BigUint> {
        let mut m = vec![BigUint::zero(); num_generators];
        for (g, e) in &self.runs {
            if *g < num_generators {
                m[*g] += e;
            }
        }
        m
    }
}

/// Evaluates a run-length product left to right.
pub fn product_corner(gens: &[HeisTriple], seq: &ProductSequence) -> Result<HeisTriple> {
    let mut acc: Option<HeisTriple> = None;
    for (g, e) in seq.runs() {
        let x = gens.get(*g).ok_or(Error::IndexOutOfRange { index: *g, len: gens.len() })?;
        let p = x.pow(e)?;
        acc = Some(match acc {
            None => p,
            Some(a) => a.compose(&p)?,
        });
    }
    acc.ok_or(Error::EmptySequence)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::q;

    /// Generators in the order (+,+), (+,−), (−,−), (−,+).
    fn example() -> Vec<HeisTriple> {
        vec![HeisTriple::h3(2, 7, 20), HeisTriple::h3(3, -2, 20), HeisTriple::h3(-4, -6, 20), HeisTriple::h3(-1, 1, 20)]
    }

    fn mat_product(gens: &[HeisTriple], idx: &[usize]) -> QMatrix {
        let ms: Vec<QMatrix> = idx.iter().map(|&i| gens[i].to_matrix()).collect();
        QMatrix::product(ms.iter()).unwrap()
    }

    #[test]
    fn compose_examples() {
        let x = HeisTriple::h3(2, 7, 20);
        let e = HeisTriple::identity(3).unwrap();
        assert_eq!(e.compose(&x).unwrap(), x);
        assert_eq!(x.compose(&HeisTriple::h3(3, -2, 20)).unwrap(), HeisTriple::h3(5, 5, 36));
        // Independent check through matrices.
        let m = x.to_matrix().mul(&HeisTriple::h3(3, -2, 20).to_matrix()).unwrap();
        assert_eq!(HeisTriple::from_matrix(&m).unwrap(), HeisTriple::h3(5, 5, 36));
        assert!(x.compose(&x.inverse()).unwrap().is_identity());
        assert!(x.inverse().compose(&x).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_mixed_dimensions() {
        let x = HeisTriple::h3(1, 1, 1);
        let y = HeisTriple::identity(4).unwrap();
        assert!(matches!(x.compose(&y), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(x.commutes(&y), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn commutes_examples() {
        let x = HeisTriple::h3(2, 7, 0);
        assert!(!x.commutes(&HeisTriple::h3(-4, -6, 0)).unwrap());
        assert_eq!(x.commutator_form(&HeisTriple::h3(-4, -6, 0)).unwrap(), q("16"));
        assert!(HeisTriple::h3(1, 2, 5).commutes(&HeisTriple::h3(2, 4, -1)).unwrap());
        assert!(x.commutes(&HeisTriple::h3(0, 0, 9)).unwrap());
    }

    #[test]
    fn power_examples() {
        assert_eq!(HeisTriple::h3(1, 1, 0).pow_u64(3).unwrap(), HeisTriple::h3(3, 3, 3));
        let x = HeisTriple::h3(2, 7, 20);
        assert_eq!(x.pow_u64(1).unwrap(), x);
        assert_eq!(x.pow_u64(4).unwrap(), HeisTriple::h3(8, 28, 164));
        assert_eq!(x.pow_u64(0), Err(Error::NonPositiveExponent));
    }

    #[test]
    fn example_products() {
        let gens = example();
        let n1 = product_corner(&gens, &ProductSequence::from_indices(&[0, 1, 2, 3])).unwrap();
        assert_eq!(n1, HeisTriple::h3(0, 0, 47));
        let four = BigUint::from(4u32);
        let grouped = ProductSequence::from_runs((0..4).map(|i| (i, four.clone())));
        let n2 = product_corner(&gens, &grouped).unwrap();
        assert_eq!(n2, HeisTriple::h3(0, 0, -22));
        // Oracle: the 16 explicit 3x3 matrices multiplied out.
        let idx = grouped.expand(100).unwrap();
        assert_eq!(HeisTriple::from_matrix(&mat_product(&gens, &idx)).unwrap(), n2);
        let single = ProductSequence::from_indices(&[2]);
        assert_eq!(product_corner(&gens, &single).unwrap(), gens[2]);
        assert_eq!(product_corner(&gens, &ProductSequence::default()), Err(Error::EmptySequence));
        assert!(matches!(
            product_corner(&gens, &ProductSequence::from_indices(&[4])),
            Err(Error::IndexOutOfRange { index: 4, len: 4 })
        ));
    }

    #[test]
    fn matrix_form() {
        assert!(HeisTriple::identity(5).unwrap().to_matrix().is_identity());
        let m = HeisTriple::h3(2, 7, 20).to_matrix();
        assert_eq!(m, QMatrix::from_i64_rows(&[&[1, 2, 20], &[0, 1, 7], &[0, 0, 1]]));
        let bad = QMatrix::from_i64_rows(&[&[1, 2, 20], &[1, 1, 7], &[0, 0, 1]]);
        assert!(matches!(HeisTriple::from_matrix(&bad), Err(Error::NotHeisenberg(_))));
        let bad = QMatrix::from_i64_rows(&[&[1, 0, 0, 0], &[0, 1, 3, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert!(matches!(HeisTriple::from_matrix(&bad), Err(Error::NotHeisenberg(_))));
        let bad = QMatrix::from_i64_rows(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(HeisTriple::from_matrix(&bad).is_err());
    }

    #[test]
    fn sequence_runs_merge() {
        let s = ProductSequence::from_indices(&[1, 1, 0, 0, 0, 1]);
        assert_eq!(s.runs().len(), 3);
        assert_eq!(s.len(), BigUint::from(6u32));
        assert_eq!(s.expand(6).unwrap(), vec![1, 1, 0, 0, 0, 1]);
        assert!(s.expand(5).is_none());
        assert_eq!(s.multiplicities(2), vec![BigUint::from(3u32), BigUint::from(3u32)]);
    }
}
