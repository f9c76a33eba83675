//! Exact scalars, vectors and dense matrices over `Q`.

mod matrix;
mod rational;
mod vector;

pub use matrix::QMatrix;
pub use rational::{q, Rational};
pub use vector::QVector;

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(p, d)| Rational::new(p, d).unwrap())
    }

    fn matrix(r: usize, c: usize) -> impl Strategy<Value = QMatrix> {
        proptest::collection::vec(rational(), r * c).prop_map(move |d| QMatrix::from_vec(r, c, d).unwrap())
    }

    fn vector(n: usize) -> impl Strategy<Value = QVector> {
        proptest::collection::vec(rational(), n).prop_map(QVector::new)
    }

    proptest! {
        #[test]
        fn field_laws(p in rational(), q in rational(), r in rational()) {
            prop_assert_eq!((&p + &q) + &r, &p + (&q + &r));
            prop_assert_eq!(&p * (&q + &r), &p * &q + &p * &r);
            let s = &p * &q;
            prop_assert!(s.denom() > &0.into());
            prop_assert!(num_integer::Integer::gcd(s.numer(), s.denom()) == 1.into() || s.is_zero());
        }

        #[test]
        fn matmul_associative(a in matrix(2, 3), b in matrix(3, 2), c in matrix(2, 4)) {
            let left = a.mul(&b).unwrap().mul(&c).unwrap();
            let right = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn dot_bilinear_symmetric(u in vector(3), v in vector(3), w in vector(3), k in rational()) {
            prop_assert_eq!(u.dot(&v).unwrap(), v.dot(&u).unwrap());
            let lhs = u.add(&w).unwrap().dot(&v).unwrap();
            prop_assert_eq!(lhs, u.dot(&v).unwrap() + w.dot(&v).unwrap());
            prop_assert_eq!(u.scale(&k).dot(&v).unwrap(), &k * u.dot(&v).unwrap());
        }
    }
}
