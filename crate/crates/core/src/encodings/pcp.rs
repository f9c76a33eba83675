//! PCP instances encoded as generators of a sub-semigroup of `SL(4, Z)`.
//!
//! Word pairs over the group alphabet `{a, b, q₀, q₁, p₀, p₁}^{±1}` are mapped
//! to block-diagonal matrices `diag(β(u), β(v))`. The `W₁` pairs spell an
//! arbitrary word `w` between `q₀ … q̄₀` (resp. `p₀ … p̄₀`), the `W₂` pairs
//! erase `g(a_i)` (resp. `h(a_i)`) letter by letter, and the anti-diagonal
//! matrix `B` closes the border letters. The identity is reachable through
//! these pairs exactly when the instance has a solution starting with its
//! first letter.

use std::fmt;

use super::sl2::beta;
use super::words::{reduce, GroupWord, Letter};
use crate::error::{Error, Result};
use crate::exactmath::QMatrix;

pub const SYM_A: u32 = 1;
pub const SYM_B: u32 = 2;
pub const SYM_Q0: u32 = 3;
pub const SYM_Q1: u32 = 4;
pub const SYM_P0: u32 = 5;
pub const SYM_P1: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Binary {
    A,
    B,
}

impl Binary {
    fn symbol(self) -> u32 {
        match self {
            Binary::A => SYM_A,
            Binary::B => SYM_B,
        }
    }

    fn name(self) -> char {
        match self {
            Binary::A => 'a',
            Binary::B => 'b',
        }
    }
}

pub fn parse_binary_word(s: &str) -> Result<Vec<Binary>> {
    s.chars()
        .map(|ch| match ch {
            'a' => Ok(Binary::A),
            'b' => Ok(Binary::B),
            other => Err(Error::Malformed(format!("letter {other:?} in {s:?} is not in {{a, b}}"))),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcpInstance {
    letters: Vec<String>,
    g: Vec<Vec<Binary>>,
    h: Vec<Vec<Binary>>,
}

impl PcpInstance {
    pub fn new(letters: Vec<String>, g: Vec<Vec<Binary>>, h: Vec<Vec<Binary>>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Malformed("PCP instance has no letters".into()));
        }
        if g.len() != letters.len() || h.len() != letters.len() {
            return Err(Error::Malformed(format!(
                "{} letters but {} g-images and {} h-images",
                letters.len(),
                g.len(),
                h.len()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = letters.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(Error::Malformed(format!("duplicate letter {dup:?}")));
        }
        Ok(PcpInstance { letters, g, h })
    }

    /// Images given as strings over `{a, b}`.
    pub fn from_strings(letters: &[&str], g: &[&str], h: &[&str]) -> Result<Self> {
        let parse = |v: &[&str]| v.iter().map(|s| parse_binary_word(s)).collect::<Result<Vec<_>>>();
        PcpInstance::new(letters.iter().map(|s| s.to_string()).collect(), parse(g)?, parse(h)?)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn letter_index(&self, name: &str) -> Option<usize> {
        self.letters.iter().position(|l| l == name)
    }

    pub fn g_image(&self, word: &[usize]) -> Vec<Binary> {
        word.iter().flat_map(|&i| self.g[i].iter().copied()).collect()
    }

    pub fn h_image(&self, word: &[usize]) -> Vec<Binary> {
        word.iter().flat_map(|&i| self.h[i].iter().copied()).collect()
    }

    pub fn is_solution(&self, word: &[usize]) -> bool {
        !word.is_empty() && word.iter().all(|&i| i < self.len()) && self.g_image(word) == self.h_image(word)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorLabel {
    /// Pair `(q₀ x q̄₀, p₀ x p̄₀)` for a letter `x ∈ {a, b}`.
    W1(Binary),
    /// Pair erasing the images of the PCP letter with this index.
    W2(usize),
    /// The anti-diagonal closing matrix.
    B,
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorLabel::W1(x) => write!(f, "W1({})", x.name()),
            GeneratorLabel::W2(i) => write!(f, "W2({i})"),
            GeneratorLabel::B => write!(f, "B"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl4Generator {
    pub label: GeneratorLabel,
    pub matrix: QMatrix,
    /// The encoded word pair for block-diagonal generators.
    pub words: Option<(GroupWord, GroupWord)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl4GeneratorSet {
    pub generators: Vec<Sl4Generator>,
}

impl Sl4GeneratorSet {
    pub fn index_of(&self, label: GeneratorLabel) -> Option<usize> {
        self.generators.iter().position(|g| g.label == label)
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Product of the generators at `indices`, left to right.
    pub fn multiply(&self, indices: &[usize]) -> Result<QMatrix> {
        let ms = indices
            .iter()
            .map(|&i| {
                self.generators
                    .get(i)
                    .map(|g| &g.matrix)
                    .ok_or(Error::IndexOutOfRange { index: i, len: self.generators.len() })
            })
            .collect::<Result<Vec<_>>>()?;
        QMatrix::product(ms.into_iter())
    }
}

fn sym(s: u32) -> Letter {
    Letter::new(s)
}

fn bar(s: u32) -> Letter {
    Letter::inv(s)
}

/// Inverse letters in the original order: `x₁⋯x_m ↦ x̄₁⋯x̄_m`.
fn letterwise_bar(w: &[Binary]) -> impl Iterator<Item = Letter> + '_ {
    w.iter().map(|x| bar(x.symbol()))
}

fn block_diag(top: &QMatrix, bottom: &QMatrix) -> QMatrix {
    let mut m = QMatrix::zeros(4, 4);
    for r in 0..2 {
        for c in 0..2 {
            m.set(r, c, top.get(r, c).clone());
            m.set(r + 2, c + 2, bottom.get(r, c).clone());
        }
    }
    m
}

fn anti_diag(upper_right: &QMatrix, lower_left: &QMatrix) -> QMatrix {
    let mut m = QMatrix::zeros(4, 4);
    for r in 0..2 {
        for c in 0..2 {
            m.set(r, c + 2, upper_right.get(r, c).clone());
            m.set(r + 2, c, lower_left.get(r, c).clone());
        }
    }
    m
}

fn pair_generator(label: GeneratorLabel, u: GroupWord, v: GroupWord) -> Sl4Generator {
    let matrix = block_diag(&beta(&u), &beta(&v));
    Sl4Generator { label, matrix, words: Some((u, v)) }
}

/// `W₁` (one per letter of `{a, b}`), then `W₂` (one per PCP letter), then `B`.
pub fn pcp_to_generators(inst: &PcpInstance) -> Sl4GeneratorSet {
    let mut generators = Vec::with_capacity(inst.len() + 3);
    for x in [Binary::A, Binary::B] {
        let u = reduce([sym(SYM_Q0), sym(x.symbol()), bar(SYM_Q0)]);
        let v = reduce([sym(SYM_P0), sym(x.symbol()), bar(SYM_P0)]);
        generators.push(pair_generator(GeneratorLabel::W1(x), u, v));
    }
    for i in 0..inst.len() {
        let (q_start, p_start) = if i == 0 { (SYM_Q0, SYM_P0) } else { (SYM_Q1, SYM_P1) };
        let u =
            reduce(std::iter::once(sym(q_start)).chain(letterwise_bar(&inst.g[i])).chain(std::iter::once(bar(SYM_Q1))));
        let v =
            reduce(std::iter::once(sym(p_start)).chain(letterwise_bar(&inst.h[i])).chain(std::iter::once(bar(SYM_P1))));
        generators.push(pair_generator(GeneratorLabel::W2(i), u, v));
    }
    let top = beta(&reduce([sym(SYM_Q1), bar(SYM_Q0)]));
    let bottom = beta(&reduce([sym(SYM_P1), bar(SYM_P0)]));
    generators.push(Sl4Generator { label: GeneratorLabel::B, matrix: anti_diag(&top, &bottom), words: None });
    Sl4GeneratorSet { generators }
}

fn pair_product(set: &Sl4GeneratorSet, indices: &[usize]) -> (GroupWord, GroupWord) {
    indices.iter().fold((GroupWord::empty(), GroupWord::empty()), |(u, v), &i| {
        let (x, y) = set.generators[i].words.as_ref().expect("block-diagonal generator");
        (u.concat(x), v.concat(y))
    })
}

/// Reads `border · w · border̄` with `w ∈ {a, b}*`.
fn strip_border(word: &GroupWord, border: u32) -> Option<Vec<Binary>> {
    let ls = word.letters();
    if ls.is_empty() {
        return Some(Vec::new());
    }
    if ls.len() < 3 || ls[0] != sym(border) || ls[ls.len() - 1] != bar(border) {
        return None;
    }
    ls[1..ls.len() - 1]
        .iter()
        .map(|l| match (l.symbol, l.inverse) {
            (SYM_A, false) => Some(Binary::A),
            (SYM_B, false) => Some(Binary::B),
            _ => None,
        })
        .collect()
}

/// A label sequence whose matrix product is `I₄`, built from a PCP solution.
///
/// The solution fixes the `W₂` block. The `W₁` word is solved for by free
/// reduction against the target pair `(q₀q̄₁, p₀p̄₁)`, trying the `W₁` block on
/// either side of the `W₂` block; `B` then closes, and the whole block is used
/// twice. The result is re-multiplied and only returned if it is `I₄`.
pub fn pcp_witness(inst: &PcpInstance, set: &Sl4GeneratorSet, solution: &[usize]) -> Result<Vec<usize>> {
    if solution.is_empty() {
        return Err(Error::NotAPcpSolution("empty word".into()));
    }
    if let Some(&bad) = solution.iter().find(|&&i| i >= inst.len()) {
        return Err(Error::IndexOutOfRange { index: bad, len: inst.len() });
    }
    if !inst.is_solution(solution) {
        return Err(Error::NotAPcpSolution("g(u) differs from h(u)".into()));
    }
    if solution[0] != 0 || solution[1..].contains(&0) {
        return Err(Error::Precondition(format!(
            "the solution must start with {:?} and use it exactly once",
            inst.letters[0]
        )));
    }
    let w2: Vec<usize> =
        solution.iter().map(|&i| set.index_of(GeneratorLabel::W2(i)).expect("one W2 generator per letter")).collect();
    let b = set.index_of(GeneratorLabel::B).expect("B generator present");
    let (u2, v2) = pair_product(set, &w2);
    let target_u = reduce([sym(SYM_Q0), bar(SYM_Q1)]);
    let target_v = reduce([sym(SYM_P0), bar(SYM_P1)]);

    for w1_first in [true, false] {
        let (need_u, need_v) = if w1_first {
            (target_u.concat(&u2.inverse()), target_v.concat(&v2.inverse()))
        } else {
            (u2.inverse().concat(&target_u), v2.inverse().concat(&target_v))
        };
        let (Some(wu), Some(wv)) = (strip_border(&need_u, SYM_Q0), strip_border(&need_v, SYM_P0)) else {
            continue;
        };
        if wu != wv {
            continue;
        }
        let w1: Vec<usize> =
            wu.iter().map(|&x| set.index_of(GeneratorLabel::W1(x)).expect("W1 generators present")).collect();
        let mut half = Vec::with_capacity(w1.len() + w2.len() + 1);
        if w1_first {
            half.extend(&w1);
            half.extend(&w2);
        } else {
            half.extend(&w2);
            half.extend(&w1);
        }
        half.push(b);
        let seq: Vec<usize> = half.iter().chain(&half).copied().collect();
        if set.multiply(&seq)?.is_identity() {
            return Ok(seq);
        }
    }
    Err(Error::Precondition("no arrangement of the W1 and W2 blocks reaches the identity".into()))
}
