//! Turning a zero-superdiagonal product into central elements of either sign,
//! and balancing two of opposite sign into the identity.
//!
//! Given a product `P` with `ψ(P) = (0, 0, y)` that contains two
//! non-commuting generators `g_i, g_j`, let `X` be `P` with one occurrence of
//! each removed. Then `g_i^ℓ g_j^ℓ X^ℓ` is central with corner
//! `z(ℓ) = Qℓ² + Lℓ`, where `Q = ½(a_i·b_j − a_j·b_i)`. Swapping `i` and `j`
//! negates `Q`, so a large enough `ℓ` reaches either sign.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::witness::{Factor, Product, Witness};
use super::GeneratorSet;
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::heisenberg::{product_corner, ProductSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    fn matches(self, x: &Rational) -> bool {
        match self {
            Sign::Positive => x.is_positive(),
            Sign::Negative => x.is_negative(),
        }
    }

    fn of(x: &Rational) -> Option<Sign> {
        match x.signum() {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }
}

/// Which shape produced a [`SignFragment`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    /// The input product already had corner zero.
    Base,
    /// `g_i^ℓ g_j^ℓ ∏ g_k^{ℓ m_k}`: every run of the rest scaled by `ℓ`.
    Grouped,
    /// `g_first^ℓ g_second^ℓ (X)^ℓ`, the form whose leading coefficient is known.
    Block,
}

/// A product `P` with `ψ(P) = (0, 0, corner)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignFragment {
    pub product: Product,
    pub corner: Rational,
    pub ell: BigUint,
    pub construction: Construction,
    /// Doubling steps taken (1 for `ℓ = 1`).
    pub steps: u32,
}

/// Quadratic `z(ℓ) = Qℓ² + Lℓ` of the block form for the requested sign,
/// together with the number of doubling steps that always suffices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockQuadratic {
    pub leading: Rational,
    pub linear: Rational,
    pub step_bound: u32,
}

struct Setup {
    first: usize,
    second: usize,
    i: usize,
    j: usize,
    rest: Vec<(usize, BigUint)>,
}

fn setup(gens: &GeneratorSet, seq: &ProductSequence, i: usize, j: usize, sign: Sign) -> Result<Setup> {
    let g = gens.generators();
    for &k in &[i, j] {
        if k >= g.len() {
            return Err(Error::IndexOutOfRange { index: k, len: g.len() });
        }
    }
    let kappa = g[i].commutator_form(&g[j])?;
    if kappa.is_zero() {
        return Err(Error::Precondition(format!("generators {i} and {j} commute")));
    }
    let total = product_corner(g, seq)?;
    if !total.is_central() {
        return Err(Error::Precondition("product has a non-zero superdiagonal sum".into()));
    }
    let mut rest: Vec<(usize, BigUint)> = seq.runs().to_vec();
    for &k in &[i, j] {
        let pos = rest
            .iter()
            .position(|(gk, _)| *gk == k)
            .ok_or_else(|| Error::Precondition(format!("generator {k} does not occur in the product")))?;
        rest[pos].1 -= BigUint::one();
        if rest[pos].1.is_zero() {
            rest.remove(pos);
        }
    }
    let (first, second) = if sign.matches(&kappa) { (i, j) } else { (j, i) };
    Ok(Setup { first, second, i, j, rest })
}

fn grouped(s: &Setup, ell: &BigUint) -> Result<Product> {
    let mut fs = vec![Factor::run(s.i, ell.clone()), Factor::run(s.j, ell.clone())];
    fs.extend(s.rest.iter().map(|(g, e)| Factor::run(*g, e * ell)));
    Product::new(fs)
}

fn block(s: &Setup, ell: &BigUint) -> Result<Product> {
    let mut fs = vec![Factor::run(s.first, ell.clone()), Factor::run(s.second, ell.clone())];
    if !s.rest.is_empty() {
        let body = s.rest.iter().map(|(g, e)| Factor::run(*g, e.clone())).collect();
        fs.push(Factor::repeat(body, ell.clone()));
    }
    Product::new(fs)
}

/// Coefficients of the block form's corner polynomial for the requested sign.
pub fn block_quadratic(
    gens: &GeneratorSet,
    seq: &ProductSequence,
    i: usize,
    j: usize,
    sign: Sign,
) -> Result<BlockQuadratic> {
    let s = setup(gens, seq, i, j, sign)?;
    let g = gens.generators();
    let leading = g[s.first].commutator_form(&g[s.second])? * Rational::half();
    let z1 = block(&s, &BigUint::one())?.evaluate(g)?;
    let linear = z1.c() - &leading;
    let ratio = linear.abs().checked_div(&leading.abs())?;
    // Smallest k with 2^k > |L/Q|; sign(z) = sign(Q) from there on.
    let mut k = 0u32;
    let mut pow = BigInt::one();
    while Rational::from(pow.clone()) <= ratio {
        pow <<= 1;
        k += 1;
    }
    Ok(BlockQuadratic { leading, linear, step_bound: k + 1 })
}

/// Builds a central product whose corner has the requested sign (or is zero).
///
/// For `ℓ = 1, 2, 4, …` the grouped form is tried first, then the block form;
/// the first one whose corner has the right sign (or vanishes) is returned.
pub fn build_sign_witness(
    gens: &GeneratorSet,
    seq: &ProductSequence,
    i: usize,
    j: usize,
    sign: Sign,
) -> Result<SignFragment> {
    let s = setup(gens, seq, i, j, sign)?;
    let g = gens.generators();
    let base = product_corner(g, seq)?;
    if base.c().is_zero() {
        return Ok(SignFragment {
            product: Product::from_sequence(seq)?,
            corner: Rational::zero(),
            ell: BigUint::one(),
            construction: Construction::Base,
            steps: 0,
        });
    }
    let bound = block_quadratic(gens, seq, i, j, sign)?.step_bound;
    let mut ell = BigUint::one();
    for step in 1..=bound {
        for (construction, product) in
            [(Construction::Grouped, grouped(&s, &ell)?), (Construction::Block, block(&s, &ell)?)]
        {
            let t = product.evaluate(g)?;
            debug_assert!(t.is_central());
            let corner = t.c().clone();
            if corner.is_zero() || sign.matches(&corner) {
                return Ok(SignFragment { product, corner, ell, construction, steps: step });
            }
        }
        ell <<= 1;
    }
    unreachable!("block form reaches the requested sign within {bound} doubling steps")
}

/// `P₁^{q₁·(−p₂)} P₂^{q₂·p₁}` for corners `p₁/q₁ > 0 > p₂/q₂`, checked to be the identity.
pub fn combine_signs(gens: &GeneratorSet, positive: &SignFragment, negative: &SignFragment) -> Result<Witness> {
    if Sign::of(&positive.corner) != Some(Sign::Positive) || Sign::of(&negative.corner) != Some(Sign::Negative) {
        return Err(Error::Precondition(format!(
            "need corners of opposite sign, got {} and {}",
            positive.corner, negative.corner
        )));
    }
    let (e1, e2) = balancing_exponents(&positive.corner, &negative.corner);
    let product = positive.product.pow(e1).concat(&negative.product.pow(e2));
    Witness::verify(product, gens.generators())
}

/// Exponents `(q₁·(−p₂), q₂·p₁)` with `c₁·e₁ + c₂·e₂ = 0`.
pub fn balancing_exponents(c1: &Rational, c2: &Rational) -> (BigUint, BigUint) {
    let e1 = c1.denom() * -c2.numer();
    let e2 = c2.denom() * c1.numer();
    (e1.to_biguint().expect("c2 < 0"), e2.to_biguint().expect("c1 > 0"))
}
