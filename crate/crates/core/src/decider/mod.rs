//! Decision procedure for the identity problem in sub-semigroups of `H(n, Q)`.
//!
//! The identity is a product of generators exactly when one of two things
//! happens:
//!
//! * some set of pairwise commuting generators has a non-trivial
//!   non-negative combination with zero superdiagonal sums and zero value of
//!   `Σ (c − ½ a·b)` (the corner of any ordering of such a product), or
//! * some product with zero superdiagonal sums uses two non-commuting
//!   generators; then its corner can be pushed to either sign and two such
//!   central elements balance each other out.
//!
//! Both cases reduce to homogeneous Diophantine systems. A `YES` verdict
//! always carries a [`Witness`] that has been evaluated to the identity.

mod cliques;
mod sign;
mod witness;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::diophantine::{solve_homogeneous, DiophantineSystem};
use crate::error::{Error, Result};
use crate::exactmath::{QMatrix, Rational};
use crate::heisenberg::{product_corner, HeisTriple, ProductSequence};

pub use cliques::{commutation_graph, maximal_cliques};
pub use sign::{
    balancing_exponents, block_quadratic, build_sign_witness, combine_signs, BlockQuadratic, Construction, Sign,
    SignFragment,
};
pub use witness::{Factor, Product, Witness};

/// Non-empty list of generators of a common dimension `n ≥ 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    n: usize,
    gens: Vec<HeisTriple>,
}

impl GeneratorSet {
    pub fn new(gens: Vec<HeisTriple>) -> Result<Self> {
        let first = gens.first().ok_or_else(|| Error::Malformed("generator set is empty".into()))?;
        let n = first.n();
        if let Some(bad) = gens.iter().find(|g| g.n() != n) {
            return Err(Error::DimensionMismatch { context: "generator set", expected: n, found: bad.n() });
        }
        Ok(GeneratorSet { n, gens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[HeisTriple] {
        &self.gens
    }

    pub fn get(&self, i: usize) -> Result<&HeisTriple> {
        self.gens.get(i).ok_or(Error::IndexOutOfRange { index: i, len: self.gens.len() })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
}

/// How a `YES` was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Route {
    Commuting { clique: Vec<usize> },
    NonCommuting { i: usize, j: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub answer: Answer,
    pub witness: Option<Witness>,
    pub route: Option<Route>,
}

impl Verdict {
    fn yes(witness: Witness, route: Route) -> Self {
        Verdict { answer: Answer::Yes, witness: Some(witness), route: Some(route) }
    }

    fn no() -> Self {
        Verdict { answer: Answer::No, witness: None, route: None }
    }

    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecideOptions {
    /// Worker threads for independent subproblems; `1` runs inline.
    pub jobs: usize,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions { jobs: 1 }
    }
}

/// Maximal sets of pairwise commuting generators.
pub fn commuting_cliques(gens: &GeneratorSet) -> Result<Vec<Vec<usize>>> {
    Ok(maximal_cliques(&commutation_graph(gens.generators())?))
}

fn column_matrix(rows: Vec<Vec<Rational>>) -> Result<QMatrix> {
    QMatrix::from_rows(rows)
}

/// Rows `Σa = 0` and `Σb = 0`, componentwise, over the given generators.
fn superdiagonal_rows(gens: &GeneratorSet, members: &[usize]) -> Vec<Vec<Rational>> {
    let k = gens.n() - 2;
    let g = gens.generators();
    let mut rows = Vec::with_capacity(2 * k + 1);
    for comp in 0..k {
        rows.push(members.iter().map(|&m| g[m].a()[comp].clone()).collect());
    }
    for comp in 0..k {
        rows.push(members.iter().map(|&m| g[m].b()[comp].clone()).collect());
    }
    rows
}

/// Solves the commuting case on one clique. Any ordering of the resulting
/// multiset is a witness; members are emitted in clique order.
pub fn decide_commuting(gens: &GeneratorSet, clique: &[usize]) -> Result<Option<Witness>> {
    let g = gens.generators();
    for (x, &i) in clique.iter().enumerate() {
        gens.get(i)?;
        for &j in &clique[x + 1..] {
            if !g[i].commutes(gens.get(j)?)? {
                return Err(Error::Precondition(format!("generators {i} and {j} do not commute")));
            }
        }
    }
    if clique.is_empty() {
        return Ok(None);
    }
    let mut rows = superdiagonal_rows(gens, clique);
    let corner_row: Vec<Rational> = clique
        .iter()
        .map(|&m| {
            let ab = g[m].a().dot(g[m].b()).expect("uniform dimension");
            g[m].c() - ab * Rational::half()
        })
        .collect();
    rows.push(corner_row);
    let sys = DiophantineSystem::new(column_matrix(rows)?, [])?;
    let Some(sol) = solve_homogeneous(&sys) else {
        return Ok(None);
    };
    let seq = ProductSequence::from_runs(clique.iter().copied().zip(sol.y));
    Witness::verify(Product::from_sequence(&seq)?, g).map(Some)
}

fn pair_system(gens: &GeneratorSet, forced: impl IntoIterator<Item = usize>) -> Result<DiophantineSystem> {
    let all: Vec<usize> = (0..gens.len()).collect();
    DiophantineSystem::new(column_matrix(superdiagonal_rows(gens, &all))?, forced)
}

/// Product with zero superdiagonal sums that uses both `g_i` and `g_j`,
/// as runs in generator order.
pub fn decide_noncommuting_pair(gens: &GeneratorSet, i: usize, j: usize) -> Result<Option<ProductSequence>> {
    if gens.get(i)?.commutes(gens.get(j)?)? {
        return Err(Error::Precondition(format!("generators {i} and {j} commute")));
    }
    let sys = pair_system(gens, [i, j])?;
    Ok(solve_homogeneous(&sys).map(|sol| ProductSequence::from_runs(sol.y.into_iter().enumerate())))
}

/// Generators that occur in some non-trivial product with zero superdiagonal sums.
///
/// Solutions of the homogeneous system form a cone, so the union of supports
/// is itself the support of a single solution; a pair `(i, j)` is solvable
/// with both forced iff both lie in this set.
fn zero_sum_support(gens: &GeneratorSet, pool: Option<&rayon::ThreadPool>) -> Result<BTreeSet<usize>> {
    let r = gens.len();
    match pool {
        Some(pool) => {
            let hits: Vec<bool> = pool.install(|| {
                (0..r)
                    .into_par_iter()
                    .map(|k| pair_system(gens, [k]).map(|s| solve_homogeneous(&s).is_some()))
                    .collect::<Result<Vec<bool>>>()
            })?;
            Ok((0..r).filter(|&k| hits[k]).collect())
        }
        None => {
            let mut support = BTreeSet::new();
            for k in 0..r {
                if support.contains(&k) {
                    continue;
                }
                if let Some(sol) = solve_homogeneous(&pair_system(gens, [k])?) {
                    support.extend(sol.y.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, _)| i));
                }
            }
            Ok(support)
        }
    }
}

fn noncommuting_witness(gens: &GeneratorSet, i: usize, j: usize, seq: &ProductSequence) -> Result<Witness> {
    let g = gens.generators();
    let base = product_corner(g, seq)?;
    if base.is_identity() {
        return Witness::verify(Product::from_sequence(seq)?, g);
    }
    let pos = build_sign_witness(gens, seq, i, j, Sign::Positive)?;
    if pos.corner.is_zero() {
        return Witness::verify(pos.product, g);
    }
    let neg = build_sign_witness(gens, seq, i, j, Sign::Negative)?;
    if neg.corner.is_zero() {
        return Witness::verify(neg.product, g);
    }
    combine_signs(gens, &pos, &neg)
}

pub fn decide(gens: &GeneratorSet) -> Result<Verdict> {
    decide_with(gens, &DecideOptions::default())
}

/// The verdict and witness do not depend on `opts.jobs`.
pub fn decide_with(gens: &GeneratorSet, opts: &DecideOptions) -> Result<Verdict> {
    let pool = if opts.jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.jobs)
                .build()
                .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?,
        )
    } else {
        None
    };

    let cliques = commuting_cliques(gens)?;
    let found = match &pool {
        Some(pool) => pool.install(|| {
            cliques
                .par_iter()
                .map(|c| decide_commuting(gens, c).map(|w| w.map(|w| (c.clone(), w))))
                .collect::<Result<Vec<_>>>()
                .map(|v| v.into_iter().flatten().next())
        })?,
        None => {
            let mut hit = None;
            for c in &cliques {
                if let Some(w) = decide_commuting(gens, c)? {
                    hit = Some((c.clone(), w));
                    break;
                }
            }
            hit
        }
    };
    if let Some((clique, w)) = found {
        return Ok(Verdict::yes(w, Route::Commuting { clique }));
    }

    let support = zero_sum_support(gens, pool.as_ref())?;
    let g = gens.generators();
    let members: Vec<usize> = support.into_iter().collect();
    for (x, &i) in members.iter().enumerate() {
        for &j in &members[x + 1..] {
            if g[i].commutes(&g[j])? {
                continue;
            }
            let seq = decide_noncommuting_pair(gens, i, j)?
                .ok_or_else(|| Error::Precondition(format!("pair ({i}, {j}) lies in the support but is unsolvable")))?;
            let w = noncommuting_witness(gens, i, j, &seq)?;
            return Ok(Verdict::yes(w, Route::NonCommuting { i, j }));
        }
    }
    Ok(Verdict::no())
}

/// Expanded length of a witness, for reporting.
pub fn witness_length(w: &Witness) -> BigUint {
    w.product().expanded_len()
}
