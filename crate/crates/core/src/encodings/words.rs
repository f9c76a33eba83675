use std::fmt;

/// A letter of a group alphabet: symbol `symbol` (1-based) or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub symbol: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn new(symbol: u32) -> Self {
        Letter { symbol, inverse: false }
    }

    pub fn inv(symbol: u32) -> Self {
        Letter { symbol, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Letter { symbol: self.symbol, inverse: !self.inverse }
    }

    fn cancels(self, other: Letter) -> bool {
        self.symbol == other.symbol && self.inverse != other.inverse
    }
}

/// A freely reduced word.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GroupWord(Vec<Letter>);

/// Free reduction with a stack; the result is unique.
pub fn reduce(letters: impl IntoIterator<Item = Letter>) -> GroupWord {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        match out.last() {
            Some(&top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    GroupWord(out)
}

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        reduce(self.0.iter().chain(&other.0).copied())
    }

    /// Group inverse: reversed order, every letter inverted.
    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    /// `s^k` for `k ≥ 0`, or `s̄^{-k}` for `k < 0`.
    pub fn power_of(symbol: u32, k: i64) -> GroupWord {
        let l = if k >= 0 { Letter::new(symbol) } else { Letter::inv(symbol) };
        GroupWord(vec![l; k.unsigned_abs() as usize])
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        for l in &self.0 {
            if l.inverse {
                write!(f, "~{}", l.symbol)?;
            } else {
                write!(f, "{}", l.symbol)?;
            }
        }
        Ok(())
    }
}

/// Symbol of `c` (and of `a` when the image is read over `{a, b}`).
pub const C: u32 = 1;
/// Symbol of `d` (respectively `b`).
pub const D: u32 = 2;

/// `z_i ↦ cⁱ d c̄ⁱ`, `z̄_i ↦ cⁱ d̄ c̄ⁱ`, extended to words and reduced.
///
/// Injective on reduced words over any number of symbols, so it compresses
/// an arbitrary group alphabet into a binary one.
pub fn alpha(w: &GroupWord) -> GroupWord {
    let mut out = Vec::new();
    for l in w.letters() {
        let i = l.symbol as usize;
        out.extend(std::iter::repeat_n(Letter::new(C), i));
        out.push(if l.inverse { Letter::inv(D) } else { Letter::new(D) });
        out.extend(std::iter::repeat_n(Letter::inv(C), i));
    }
    reduce(out)
}
