//! Compressed products of generators and identity witnesses.
//!
//! Exponents produced by the sign-balancing step can be astronomically
//! large, so products are kept as a small tree of runs (`g^e`) and repeated
//! blocks (`(⋯)^t`) and evaluated with the closed-form power in
//! [`HeisTriple::pow`].

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::heisenberg::{HeisTriple, ProductSequence};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `g_generator ^ exponent`
    Run { generator: usize, exponent: BigUint },
    /// `(body) ^ times`
    Repeat { body: Vec<Factor>, times: BigUint },
}

impl Factor {
    pub fn run(generator: usize, exponent: impl Into<BigUint>) -> Factor {
        Factor::Run { generator, exponent: exponent.into() }
    }

    pub fn repeat(body: Vec<Factor>, times: impl Into<BigUint>) -> Factor {
        Factor::Repeat { body, times: times.into() }
    }

    fn evaluate(&self, gens: &[HeisTriple]) -> Result<HeisTriple> {
        match self {
            Factor::Run { generator, exponent } => {
                gens.get(*generator).ok_or(Error::IndexOutOfRange { index: *generator, len: gens.len() })?.pow(exponent)
            }
            Factor::Repeat { body, times } => evaluate_factors(body, gens)?.pow(times),
        }
    }

    fn expanded_len(&self) -> BigUint {
        match self {
            Factor::Run { exponent, .. } => exponent.clone(),
            Factor::Repeat { body, times } => body.iter().map(Factor::expanded_len).sum::<BigUint>() * times,
        }
    }

    fn expand_into(&self, out: &mut Vec<usize>) {
        match self {
            Factor::Run { generator, exponent } => {
                let k: usize = exponent.try_into().expect("checked by caller");
                out.extend(std::iter::repeat_n(*generator, k));
            }
            Factor::Repeat { body, times } => {
                let t: usize = times.try_into().expect("checked by caller");
                for _ in 0..t {
                    for f in body {
                        f.expand_into(out);
                    }
                }
            }
        }
    }

    fn multiplicities_into(&self, scale: &BigUint, out: &mut [BigUint]) {
        match self {
            Factor::Run { generator, exponent } => {
                if let Some(slot) = out.get_mut(*generator) {
                    *slot += exponent * scale;
                }
            }
            Factor::Repeat { body, times } => {
                let s = scale * times;
                for f in body {
                    f.multiplicities_into(&s, out);
                }
            }
        }
    }
}

fn evaluate_factors(factors: &[Factor], gens: &[HeisTriple]) -> Result<HeisTriple> {
    let mut acc: Option<HeisTriple> = None;
    for f in factors {
        let x = f.evaluate(gens)?;
        acc = Some(match acc {
            None => x,
            Some(a) => a.compose(&x)?,
        });
    }
    acc.ok_or(Error::EmptySequence)
}

/// A non-empty product of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    factors: Vec<Factor>,
}

impl Product {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        let p = Product { factors }.normalized();
        if p.factors.is_empty() {
            return Err(Error::EmptySequence);
        }
        if p.has_zero_exponent() {
            return Err(Error::NonPositiveExponent);
        }
        Ok(p)
    }

    pub fn from_sequence(seq: &ProductSequence) -> Result<Self> {
        Product::new(seq.runs().iter().map(|(g, e)| Factor::run(*g, e.clone())).collect())
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn evaluate(&self, gens: &[HeisTriple]) -> Result<HeisTriple> {
        evaluate_factors(&self.factors, gens)
    }

    /// Number of generator factors after full expansion.
    pub fn expanded_len(&self) -> BigUint {
        self.factors.iter().map(Factor::expanded_len).sum()
    }

    /// Fully expanded index list, or `None` beyond `limit` factors.
    pub fn expand(&self, limit: usize) -> Option<Vec<usize>> {
        if self.expanded_len() > BigUint::from(limit) {
            return None;
        }
        let mut out = Vec::new();
        for f in &self.factors {
            f.expand_into(&mut out);
        }
        Some(out)
    }

    /// How many times each generator occurs in the expanded product.
    pub fn multiplicities(&self, num_generators: usize) -> Vec<BigUint> {
        let mut out = vec![BigUint::zero(); num_generators];
        for f in &self.factors {
            f.multiplicities_into(&BigUint::one(), &mut out);
        }
        out
    }

    /// `Some` when the product is a plain run list with no repeated blocks.
    pub fn as_runs(&self) -> Option<ProductSequence> {
        self.factors
            .iter()
            .map(|f| match f {
                Factor::Run { generator, exponent } => Some((*generator, exponent.clone())),
                Factor::Repeat { .. } => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(ProductSequence::from_runs)
    }

    pub fn pow(&self, times: impl Into<BigUint>) -> Product {
        Product { factors: vec![Factor::repeat(self.factors.clone(), times)] }.normalized()
    }

    pub fn concat(&self, other: &Product) -> Product {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Product { factors }.normalized()
    }

    fn has_zero_exponent(&self) -> bool {
        fn walk(fs: &[Factor]) -> bool {
            fs.iter().any(|f| match f {
                Factor::Run { exponent, .. } => exponent.is_zero(),
                Factor::Repeat { body, times } => times.is_zero() || body.is_empty() || walk(body),
            })
        }
        walk(&self.factors)
    }

    /// Inlines `(⋯)^1`, turns `(g^e)^t` into `g^{et}` and merges adjacent runs.
    fn normalized(self) -> Product {
        fn norm(fs: Vec<Factor>) -> Vec<Factor> {
            let mut out: Vec<Factor> = Vec::new();
            let push = |f: Factor, out: &mut Vec<Factor>| {
                if let (Some(Factor::Run { generator: g0, exponent: e0 }), Factor::Run { generator, exponent }) =
                    (out.last_mut(), &f)
                {
                    if g0 == generator {
                        *e0 += exponent;
                        return;
                    }
                }
                out.push(f);
            };
            for f in fs {
                match f {
                    Factor::Run { .. } => push(f, &mut out),
                    Factor::Repeat { body, times } => {
                        let body = norm(body);
                        if times.is_one() {
                            for b in body {
                                push(b, &mut out);
                            }
                        } else if let [Factor::Run { generator, exponent }] = body.as_slice() {
                            push(Factor::run(*generator, exponent * &times), &mut out);
                        } else {
                            push(Factor::Repeat { body, times }, &mut out);
                        }
                    }
                }
            }
            out
        }
        Product { factors: norm(self.factors) }
    }
}

/// A product that has been checked to evaluate to the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    product: Product,
}

impl Witness {
    pub fn verify(product: Product, gens: &[HeisTriple]) -> Result<Witness> {
        if product.evaluate(gens)?.is_identity() {
            Ok(Witness { product })
        } else {
            Err(Error::WitnessRejected)
        }
    }

    pub fn product(&self) -> &Product {
        &self.product
    }

    pub fn into_product(self) -> Product {
        self.product
    }

    /// Re-evaluates against a generator list.
    pub fn check(&self, gens: &[HeisTriple]) -> bool {
        matches!(self.product.evaluate(gens), Ok(t) if t.is_identity())
    }
}
