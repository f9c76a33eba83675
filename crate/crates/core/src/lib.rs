//! Exact decision procedure for the identity problem in finitely generated
//! sub-semigroups of the Heisenberg group `H(n, Q)`, together with the
//! companion encodings (free-group words into `SL(2, Z)`, PCP instances into
//! `SL(4, Z)` generators) and an `SL(3, Q)` embedding checker.
//!
//! Everything is computed over exact rationals. A `YES` answer always comes
//! with a [`decider::Witness`] that has been re-multiplied to the identity
//! before it is returned.

pub mod decider;
pub mod diophantine;
pub mod encodings;
pub mod error;
pub mod exactmath;
pub mod format;
pub mod heisenberg;
pub mod oracle;

pub use decider::{decide, GeneratorSet, Verdict, Witness};
pub use error::{Error, Result};
pub use exactmath::{QMatrix, QVector, Rational};
pub use heisenberg::{HeisTriple, ProductSequence};
