//! Free-group words and the matrix encodings built on them.

pub mod embedding;
pub mod pcp;
pub mod sl2;
pub mod words;

pub use embedding::{verify_sl3q_embedding, EmbeddingReport};
pub use pcp::{pcp_to_generators, pcp_witness, GeneratorLabel, PcpInstance, Sl4GeneratorSet};
pub use sl2::{beta, f_sl2};
pub use words::{alpha, reduce, GroupWord, Letter};
