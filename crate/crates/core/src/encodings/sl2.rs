use super::words::{alpha, GroupWord, C, D};
use crate::error::{Error, Result};
use crate::exactmath::QMatrix;

/// Images of `a`, `ā`, `b`, `b̄`; the first two and the last two generate a
/// free subgroup of `SL(2, Z)`.
fn letter_image(symbol: u32, inverse: bool) -> Result<QMatrix> {
    let s = if inverse { -2 } else { 2 };
    match symbol {
        C => Ok(QMatrix::from_i64_rows(&[&[1, s], &[0, 1]])),
        D => Ok(QMatrix::from_i64_rows(&[&[1, 0], &[s, 1]])),
        other => Err(Error::Precondition(format!("symbol {other} is outside the binary alphabet {{a, b}}"))),
    }
}

/// `f: FG({a, b}) → SL(2, Z)`; `f(ε) = I₂`.
pub fn f_sl2(w: &GroupWord) -> Result<QMatrix> {
    let mut acc = QMatrix::identity(2);
    for l in w.letters() {
        acc = acc.mul(&letter_image(l.symbol, l.inverse)?)?;
    }
    Ok(acc)
}

/// `β = f ∘ α`, an injective morphism from any group alphabet into `SL(2, Z)`.
pub fn beta(w: &GroupWord) -> QMatrix {
    f_sl2(&alpha(w)).expect("α maps into the binary alphabet")
}
