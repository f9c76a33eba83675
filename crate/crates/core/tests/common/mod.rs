#![allow(dead_code)]

use heisid::exactmath::{QVector, Rational};
use heisid::heisenberg::HeisTriple;
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> + Clone {
    (-5i64..=5, 1i64..=4).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

pub fn small_int() -> impl Strategy<Value = Rational> + Clone {
    (-3i64..=3).prop_map(Rational::from)
}

pub fn triple_with(n: usize, entry: impl Strategy<Value = Rational> + Clone) -> impl Strategy<Value = HeisTriple> {
    (prop::collection::vec(entry.clone(), n - 2), prop::collection::vec(entry.clone(), n - 2), entry)
        .prop_map(|(a, b, c)| HeisTriple::new(QVector::new(a), QVector::new(b), c).unwrap())
}

pub fn triple(n: usize) -> impl Strategy<Value = HeisTriple> {
    triple_with(n, rational())
}

/// A dimension in `3..=5` together with `count` triples of that dimension.
pub fn triples(count: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<HeisTriple>> {
    (3usize..=5).prop_flat_map(move |n| prop::collection::vec(triple(n), count.clone()))
}

pub fn h3_ints(count: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<HeisTriple>> {
    prop::collection::vec(triple_with(3, small_int()), count)
}
