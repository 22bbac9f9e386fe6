//! Homomorphisms between scalar generalized Verma modules of `gl(n)` with
//! integral block parameters: the order `<=_Theta` on a block-permutation
//! orbit, chains of elementary embeddings, and the threshold witness plus
//! translation trace that certify non-existence.

pub mod bruhat;
pub mod cli;
pub mod error;
pub mod obstruction;
pub mod sweep;
pub mod translation;
pub mod weights;
pub mod weyl;

pub use bruhat::{
    decide_hom, factorize, hasse, leq_bruteforce, leq_theta, ElementaryStep, HomDecision, Reason,
};
pub use error::{Error, Result};
pub use obstruction::{degenerate, find_witness, DegeneratePair, Witness};
pub use translation::{degeneration_trace, TranslationTrace};
pub use weights::{BlockWeight, Composition};
pub use weyl::ThetaWeylElement;
