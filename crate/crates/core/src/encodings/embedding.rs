//! Exact check of an embedding of `{0,1}* × {0,1}*` into `SL(3, Q)`.
//!
//! `A, B` encode the first component and `C, D` the second. The images of
//! the two components must commute with each other, each pair must not
//! commute internally, and `{A, B}` (likewise `{C, D}`) must generate a free
//! semigroup. Freeness follows from the top-left blocks scaled to
//! `diag(8, 1)` and `[[27, 1], [0, 1]]`, for which `1/8 + 1/27 ≤ 1` suffices.

use crate::exactmath::{q, QMatrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub checks: Vec<Check>,
}

impl EmbeddingReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn m3(rows: [[&str; 3]; 3]) -> QMatrix {
    QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| q(s)).collect()).collect()).expect("3x3 literal")
}

/// `(A, B, C, D)`: images of `(0, ε)`, `(1, ε)`, `(ε, 0)`, `(ε, 1)`.
pub fn embedding_matrices() -> [QMatrix; 4] {
    [
        m3([["4", "0", "0"], ["0", "1/2", "0"], ["0", "0", "1/2"]]),
        m3([["9", "1/3", "0"], ["0", "1/3", "0"], ["0", "0", "1/3"]]),
        m3([["1/2", "0", "0"], ["0", "1/2", "0"], ["0", "0", "4"]]),
        m3([["1/3", "0", "0"], ["0", "1/3", "0"], ["0", "1/3", "9"]]),
    ]
}

const NAMES: [&str; 4] = ["A", "B", "C", "D"];

pub fn verify_sl3q_embedding() -> EmbeddingReport {
    let ms = embedding_matrices();
    let mut checks = Vec::new();
    let prod = |i: usize, j: usize| ms[i].mul(&ms[j]).expect("3x3");

    for (i, j) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
        let (x, y) = (prod(i, j), prod(j, i));
        checks.push(Check {
            name: format!("{0}{1} = {1}{0}", NAMES[i], NAMES[j]),
            passed: x == y,
            detail: format!("{}{} = {x:?}", NAMES[i], NAMES[j]),
        });
    }
    for (i, j) in [(0, 1), (2, 3)] {
        let (x, y) = (prod(i, j), prod(j, i));
        checks.push(Check {
            name: format!("{0}{1} != {1}{0}", NAMES[i], NAMES[j]),
            passed: x != y,
            detail: format!("{}{} = {x:?}, {}{} = {y:?}", NAMES[i], NAMES[j], NAMES[j], NAMES[i]),
        });
    }
    for (m, name) in ms.iter().zip(NAMES) {
        let det = m.determinant().expect("square");
        checks.push(Check { name: format!("det {name} = 1"), passed: det == 1, detail: format!("det = {det}") });
    }
    // Freeness of both pairs via the scaled top-left (resp. bottom-right) blocks.
    let sum = q("1/8") + q("1/27");
    checks.push(Check {
        name: "1/8 + 1/27 < 1".into(),
        passed: sum < Rational::one(),
        detail: format!("1/8 + 1/27 = {sum}"),
    });
    EmbeddingReport { checks }
}
